#include "twistvol/lengths.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "twistvol/distance_eq.hpp"
#include "twistvol/holonomy.hpp"

namespace twistvol {

double RuleResiduals::worst() const noexcept { return std::max({tangent, sine, cosine}); }

namespace {

constexpr double kPi = std::numbers::pi;

Complex arccoth(Complex w) { return 0.5 * std::log((w + 1.0) / (w - 1.0)); }

} // namespace

Complex complex_length(const ConeParams& params, Complex u, Component which)
{
    if (params.has_cusp())
        throw Error(ErrorCode::CuspAngle, "complex lengths need alpha, beta > 0");
    if (std::abs(u.imag()) <= default_tolerances().root_imag)
        throw Error(ErrorCode::BranchFailure, "u must be non-real");

    // gamma_alpha pairs with cot(beta/2) and the s-longitude; gamma_beta with
    // cot(alpha/2) and the t-longitude, i.e. the same computation on the
    // swapped parameters.
    const ConeParams use = which == Component::Alpha ? params : params.swapped();
    const double other_cot = use.cot_half_beta();
    if (other_cot == 0.0)
        throw Error(ErrorCode::BranchFailure, "cot of the other half-angle vanishes");

    const Complex base = 4.0 * arccoth(u / (kI * other_cot));
    const Complex shift{0.0, 4.0 * kPi};
    const std::array<Complex, 6> branches{base, base - shift, base + shift,
                                          -base, -base - shift, -base + shift};

    // Swapping (alpha, beta) conjugates the generators by [[0,1],[1,0]] and
    // exchanges their roles, so tr of the swapped s-longitude is tr(L_T).
    const Complex trace = longitude_holonomy(use, u).trace();
    for (const Complex& gamma : branches) {
        if (!(gamma.real() > 0.0) || std::abs(gamma.imag()) >= 2.0 * kPi)
            continue;
        if (std::abs(u - kI * other_cot / std::tanh(0.25 * gamma)) > 1e-8 * (1.0 + std::abs(u)))
            continue;
        if (std::abs(trace + 2.0 * std::cosh(0.5 * gamma)) <= 1e-8 * (1.0 + std::abs(trace)))
            return gamma;
    }
    throw Error(ErrorCode::BranchFailure, "no branch reproduces the longitude trace");
}

std::pair<double, double> real_lengths(const ConeParams& params, Complex zeta)
{
    if (!(zeta.imag() > 0.0))
        throw Error(ErrorCode::InvalidArgument, "real_lengths needs Im zeta > 0");
    const auto one = [&](double c, double s) -> double {
        if (s == 0.0)
            return 0.0;
        const Complex w = c / (s * zeta);
        const Complex wbar = c / (s * std::conj(zeta));
        const Complex r = 2.0 * kI * (std::atan(w) - std::atan(wbar));
        if (std::abs(r.imag()) > 1e-8)
            throw Error(ErrorCode::NonRealLength, "arctan branches do not give a real length");
        return r.real();
    };
    return {one(params.cos_half_alpha(), params.sin_half_alpha()),
            one(params.cos_half_beta(), params.sin_half_beta())};
}

RuleResiduals rule_residuals(const LengthReport& report, const ConeParams& params)
{
    RuleResiduals out;
    const double ta = std::tan(0.5 * params.alpha());
    const double tb = std::tan(0.5 * params.beta());
    out.tangent = std::abs(std::tanh(0.25 * report.gamma_alpha) /
                               std::tanh(0.25 * report.gamma_beta) -
                           ta / tb);

    const double ra = report.r_alpha, rb = report.r_beta;
    const double fa = report.phi_alpha, fb = report.phi_beta;
    out.sine = std::abs(std::sin(0.5 * fa) / std::sinh(0.5 * ra) -
                        std::sin(0.5 * fb) / std::sinh(0.5 * rb));

    const double ca = std::cos(params.alpha()), cb = std::cos(params.beta());
    const double lhs = (std::cos(0.5 * fa) * std::cosh(0.5 * rb) -
                        std::cos(0.5 * fb) * std::cosh(0.5 * ra)) /
                       (std::cosh(0.5 * ra) * std::cosh(0.5 * rb) -
                        std::cos(0.5 * fa) * std::cos(0.5 * fb));
    out.cosine = std::abs(lhs - (ca - cb) / (1.0 - ca * cb));
    return out;
}

LengthReport compute_lengths(const ConeParams& params)
{
    const Complex u = distance_root(params).value;
    LengthReport rep;
    rep.gamma_alpha = complex_length(params, u, Component::Alpha);
    rep.gamma_beta = complex_length(params, u, Component::Beta);
    rep.r_alpha = rep.gamma_alpha.real();
    rep.phi_alpha = rep.gamma_alpha.imag();
    rep.r_beta = rep.gamma_beta.real();
    rep.phi_beta = rep.gamma_beta.imag();
    rep.residuals = rule_residuals(rep, params);
    return rep;
}

} // namespace twistvol
