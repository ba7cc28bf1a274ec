#include "twistvol/params.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "twistvol/error.hpp"

namespace twistvol {

namespace {

void check_angle(double angle, const char* name)
{
    if (!std::isfinite(angle) || angle < 0.0 || angle > std::numbers::pi)
        throw Error(ErrorCode::InvalidArgument,
                    std::string(name) + " must lie in [0, pi], got " + std::to_string(angle));
}

double cot_from(double c, double s)
{
    return s == 0.0 ? std::numeric_limits<double>::infinity() : c / s;
}

} // namespace

ConeParams::ConeParams(int p, double alpha, double beta) : p_(p), alpha_(alpha), beta_(beta)
{
    if (p < 1)
        throw Error(ErrorCode::InvalidArgument, "twist index p must be >= 1");
    check_angle(alpha, "alpha");
    check_angle(beta, "beta");
    cos_half_alpha_ = std::cos(0.5 * alpha);
    sin_half_alpha_ = std::sin(0.5 * alpha);
    cos_half_beta_ = std::cos(0.5 * beta);
    sin_half_beta_ = std::sin(0.5 * beta);
    // cos(pi/2) is 6e-17 in double; a half-turn generator should be exactly traceless.
    if (alpha == std::numbers::pi)
        cos_half_alpha_ = 0.0;
    if (beta == std::numbers::pi)
        cos_half_beta_ = 0.0;
}

double ConeParams::cot_half_alpha() const noexcept
{
    return cot_from(cos_half_alpha_, sin_half_alpha_);
}

double ConeParams::cot_half_beta() const noexcept
{
    return cot_from(cos_half_beta_, sin_half_beta_);
}

} // namespace twistvol
