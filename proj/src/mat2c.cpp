#include "twistvol/mat2c.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace twistvol {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::ParabolicOrIdentity: return "ParabolicOrIdentity";
    case ErrorCode::DegenerateAxis: return "DegenerateAxis";
    case ErrorCode::NotLineMatrix: return "NotLineMatrix";
    case ErrorCode::CuspAngle: return "CuspAngle";
    case ErrorCode::DegenerateDistance: return "DegenerateDistance";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NoHyperbolicRoot: return "NoHyperbolicRoot";
    case ErrorCode::AmbiguousRoot: return "AmbiguousRoot";
    case ErrorCode::BranchFailure: return "BranchFailure";
    case ErrorCode::NonRealLength: return "NonRealLength";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::BranchJump: return "BranchJump";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::OutOfRegime: return "OutOfRegime";
    }
    return "Unknown";
}

Mat2C operator*(const Mat2C& x, const Mat2C& y) noexcept
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2C operator+(const Mat2C& x, const Mat2C& y) noexcept
{
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

Mat2C operator-(const Mat2C& x, const Mat2C& y) noexcept
{
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

Mat2C operator-(const Mat2C& x) noexcept { return {-x.a, -x.b, -x.c, -x.d}; }

Mat2C operator*(Complex s, const Mat2C& x) noexcept
{
    return {s * x.a, s * x.b, s * x.c, s * x.d};
}

double max_abs(const Mat2C& x) noexcept
{
    return std::max({std::abs(x.a), std::abs(x.b), std::abs(x.c), std::abs(x.d)});
}

double max_abs_diff(const Mat2C& x, const Mat2C& y) noexcept { return max_abs(x - y); }

bool is_unimodular(const Mat2C& x, double tol) noexcept
{
    return std::abs(x.det() - 1.0) <= tol;
}

bool is_line_matrix(const Mat2C& x, const Tolerances& tol) noexcept
{
    if (std::abs(x.trace()) > tol.algebraic)
        return false;
    return max_abs_diff(x * x, -Mat2C::identity()) <= tol.structural;
}

Mat2C inverse(const Mat2C& x, const Tolerances& tol)
{
    if (!is_unimodular(x, tol.structural))
        throw Error(ErrorCode::NotUnimodular, "inverse requires det = 1");
    return {x.d, -x.b, -x.c, x.a};
}

Complex arccosh(Complex w) noexcept { return std::acosh(w); }

Complex displacement(const Mat2C& x, const Tolerances& tol)
{
    const Complex tr = x.trace();
    const Complex tr2 = tr * tr;
    if (std::abs(tr2 - 4.0) <= tol.structural)
        throw Error(ErrorCode::ParabolicOrIdentity, "tr^2 = 4, no displacement axis");
    Complex delta = arccosh(0.5 * (tr2 - 2.0));
    if (std::abs(delta.real()) <= tol.algebraic) {
        delta = {0.0, std::abs(delta.imag())};
    }
    return delta;
}

Mat2C line_matrix(const Mat2C& x, const Tolerances& tol)
{
    return line_matrix(x, displacement(x, tol), tol);
}

Mat2C line_matrix(const Mat2C& x, Complex delta, const Tolerances& tol)
{
    const Complex s = std::sinh(0.5 * delta);
    if (std::abs(s) <= tol.structural)
        throw Error(ErrorCode::DegenerateAxis, "displacement is zero");
    return (1.0 / (2.0 * kI * s)) * (x - inverse(x, tol));
}

Complex complex_distance(const Mat2C& line_a, const Mat2C& line_b, const Tolerances& tol)
{
    if (std::abs(line_a.trace()) > tol.structural || std::abs(line_b.trace()) > tol.structural)
        throw Error(ErrorCode::NotLineMatrix, "complex_distance needs trace-zero arguments");
    Complex mu = arccosh(-0.5 * (line_a * line_b).trace());
    if (mu.imag() < 0.0)
        mu += Complex{0.0, 2.0 * std::numbers::pi};
    return mu;
}

} // namespace twistvol
