#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twistvol {

enum class ErrorCode {
    InvalidArgument,
    NotUnimodular,
    ParabolicOrIdentity,
    DegenerateAxis,
    NotLineMatrix,
    CuspAngle,
    DegenerateDistance,
    NoConvergence,
    NoHyperbolicRoot,
    AmbiguousRoot,
    BranchFailure,
    NonRealLength,
    PoleHit,
    BranchJump,
    QuadratureFailure,
    OutOfRegime,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Numerical thresholds shared by the geometry modules. Tests refer to these
/// symbolically; callers may pass a modified copy.
struct Tolerances {
    double structural = 1e-10;   // trace-zero / parabolic / unimodular checks
    double algebraic = 1e-12;    // identities that hold up to rounding
    double root_imag = 1e-8;     // |Im| above which a root counts as non-real
    double coefficient_trim = 1e-14;
};

inline const Tolerances& default_tolerances() noexcept
{
    static const Tolerances tol{};
    return tol;
}

} // namespace twistvol
