#ifndef SSF_ERRORS_HPP
#define SSF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ssf {

// Base for all failures raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SSF_DEFINE_ERROR(Name)                                      \
    struct Name : Error {                                           \
        explicit Name(const std::string& what) : Error(what) {}     \
    }

// linop
SSF_DEFINE_ERROR(SingularShift);
SSF_DEFINE_ERROR(SingularMatrix);
SSF_DEFINE_ERROR(ConvergenceFailure);
SSF_DEFINE_ERROR(PoleNearSpectrum);

// pertdet
SSF_DEFINE_ERROR(BranchStepTooLarge);
SSF_DEFINE_ERROR(ExtrapolationDiverged);
SSF_DEFINE_ERROR(GridTooClose);
SSF_DEFINE_ERROR(QuadratureBudgetExceeded);

// repr
SSF_DEFINE_ERROR(RepresentationMismatch);
SSF_DEFINE_ERROR(PoleHit);

// genint
SSF_DEFINE_ERROR(EdgeTooClose);
SSF_DEFINE_ERROR(NonUniformGrid);
SSF_DEFINE_ERROR(TailModelRequired);
SSF_DEFINE_ERROR(NotWeakL1Zero);
SSF_DEFINE_ERROR(NoConvergence);
SSF_DEFINE_ERROR(RuleNotAdmissible);

// traceform
SSF_DEFINE_ERROR(InconsistentDuality);

// lab
SSF_DEFINE_ERROR(ParseError);
SSF_DEFINE_ERROR(ValidationError);
SSF_DEFINE_ERROR(IoError);

#undef SSF_DEFINE_ERROR

} // namespace ssf

#endif
