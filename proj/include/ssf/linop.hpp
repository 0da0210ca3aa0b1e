#ifndef SSF_LINOP_HPP
#define SSF_LINOP_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ssf/errors.hpp"
#include "ssf/rational.hpp"

namespace ssf {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace linop {

// Dense desk-scale algorithms only.
inline constexpr int kDimCap = 64;

/// Square complex matrix with finite entries, dim in [1, 64].
class ComplexMatrix {
public:
    explicit ComplexMatrix(Matrix m);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& raw() const { return m_; }

private:
    Matrix m_;
};

/// Hermitian matrix; symmetrized exactly on construction.
class HermitianMatrix {
public:
    explicit HermitianMatrix(const Matrix& m);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& raw() const { return m_; }

private:
    Matrix m_;
};

/// Positive semidefinite matrix carrying its spectral decomposition.
/// Eigenvalues are stored descending; negative round-off eigenvalues below
/// tol_psd = 1e-12*||V|| are clamped to zero and V is rebuilt from the
/// clamped decomposition so the accumulativity invariant is exact.
class PsdMatrix {
public:
    explicit PsdMatrix(const HermitianMatrix& v);

    int dim() const { return static_cast<int>(matrix_.rows()); }
    const Matrix& raw() const { return matrix_; }
    const RealVector& eigenvalues() const { return eigenvalues_; }  // descending
    const Matrix& eigenvectors() const { return eigenvectors_; }    // matching columns
    double trace() const { return trace_; }
    double norm() const { return eigenvalues_.size() ? eigenvalues_(0) : 0.0; }
    int rank(double rel_tol = 1e-12) const;

private:
    Matrix matrix_;
    RealVector eigenvalues_;
    Matrix eigenvectors_;
    double trace_ = 0.0;
};

/// Eigenvalues of H = H0 - iV, each tagged real iff |Im| <= tol_imag.
struct Spectrum {
    std::vector<Complex> eigenvalues;
    std::vector<bool> is_real;
    double tol_imag = 0.0;

    std::vector<Complex> lower_half() const;  // strictly nonreal members
};

/// The pair (H0 Hermitian, V >= 0) defining H = H0 - iV.  Immutable; all
/// spectral data needed by the determinant machinery is cached up front.
class AccumulativePair {
public:
    AccumulativePair(HermitianMatrix h0, PsdMatrix v);

    int dim() const { return static_cast<int>(h_.rows()); }
    const HermitianMatrix& h0() const { return h0_; }
    const PsdMatrix& v() const { return v_; }
    const Matrix& h() const { return h_; }              // H0 - iV
    Matrix h_adjoint() const { return h_.adjoint(); }   // H0 + iV

    const RealVector& h0_eigenvalues() const { return h0_eigs_; }  // ascending
    const Matrix& h0_basis() const { return h0_basis_; }
    const Matrix& v_in_h0_basis() const { return v_tilde_; }
    const Spectrum& h_spectrum() const { return h_spectrum_; }

    double norm_h0() const { return norm_h0_; }
    double norm_v() const { return v_.norm(); }
    double trace_v() const { return v_.trace(); }
    double trace_v2() const { return trace_v2_; }
    double scale() const { return norm_h0_ + v_.norm(); }

    /// Distance from z to spec(H0) u spec(H).
    double spectral_distance(Complex z) const;
    double distance_to_h0_spectrum(Complex z) const;

private:
    HermitianMatrix h0_;
    PsdMatrix v_;
    Matrix h_;
    RealVector h0_eigs_;
    Matrix h0_basis_;
    Matrix v_tilde_;
    Spectrum h_spectrum_;
    double norm_h0_ = 0.0;
    double trace_v2_ = 0.0;
};

struct LogDet {
    double log_modulus;
    double argument;  // per-pivot principal args summed; not branch-continuous
};

/// (M - zI)^{-1} by partial-pivot LU.  Throws SingularShift when the
/// factorization signals z too close to the spectrum.
Matrix resolvent(const ComplexMatrix& m, Complex z);
Matrix resolvent(const Matrix& m, Complex z);

/// Stable log-determinant from the pivoted triangular factorization:
/// log-modulus and argument accumulated per diagonal factor, with the
/// permutation sign folded in.  exp(log_modulus + i*argument) = det(m).
LogDet log_det(const ComplexMatrix& m);
LogDet log_det(const Matrix& m);

struct HermitianEigen {
    RealVector eigenvalues;  // ascending
    Matrix basis;            // unitary
};

HermitianEigen eig_hermitian(const HermitianMatrix& h);

Spectrum eig_general(const AccumulativePair& pair);

/// f(M) via partial fractions, f(M) = sum c_j (M - z_j I)^{-p_j}.
Matrix apply_rational(const ComplexMatrix& m, const RationalFunction& f);
Matrix apply_rational(const Matrix& m, const RationalFunction& f);

Complex trace_of_rational(const Matrix& m, const RationalFunction& f);

} // namespace linop
} // namespace ssf

#endif
