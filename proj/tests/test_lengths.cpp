#include <cmath>
#include <numbers>

#include "support.hpp"
#include "twistvol/checks.hpp"
#include "twistvol/distance_eq.hpp"
#include "twistvol/holonomy.hpp"
#include "twistvol/lengths.hpp"

using namespace twistvol;
using std::numbers::pi;

TEST_CASE("complex length conventions")
{
    const ConeParams params(2, pi / 2, pi / 2);
    const Complex u = distance_root(params).value;
    const Complex ga = complex_length(params, u, Component::Alpha);
    const Complex gb = complex_length(params, u, Component::Beta);
    CHECK(std::abs(ga - gb) <= 1e-12);
    CHECK(ga.real() > 0.0);
    const Complex tr = longitude_holonomy(params, u).trace();
    CHECK(std::abs(std::cosh(ga / 2.0) + tr / 2.0) <= 1e-9);
    // u = i b coth(gamma_alpha / 4)
    CHECK(std::abs(u - kI * params.cot_half_beta() / std::tanh(ga / 4.0)) <= 1e-12);

    CHECK_ERROR_CODE(complex_length(params, Complex{0.5}, Component::Alpha),
                     ErrorCode::BranchFailure);
    CHECK_ERROR_CODE(complex_length(ConeParams(2, 0.0, 1.0), kI, Component::Alpha),
                     ErrorCode::CuspAngle);
}

TEST_CASE("real lengths")
{
    const ConeParams params(2, pi / 2, pi / 2);
    const Complex zeta{0.25, std::sqrt(7.0) / 4};
    const auto [ra, rb] = real_lengths(params, zeta);
    CHECK(ra > 0.0);
    CHECK(std::abs(ra - rb) <= 1e-14);
    CHECK(std::abs(ra - compute_lengths(params).r_alpha) <= 1e-9);

    // Cusped component has length 0.
    const auto [r0, r1] = real_lengths(ConeParams(2, 0.0, pi / 3), zeta_root(ConeParams(2, 0.0, pi / 3)).value);
    CHECK(r0 == 0.0);
    CHECK(r1 > 0.0);

    CHECK_ERROR_CODE(real_lengths(params, Complex{0.25, -0.5}), ErrorCode::InvalidArgument);
}

TEST_CASE("rule residual examples")
{
    const LengthReport diag = compute_lengths(ConeParams(2, 1.1, 1.1));
    CHECK(diag.residuals.worst() <= 1e-12);

    for (const ConeParams& params : {ConeParams(2, pi / 2, pi / 3), ConeParams(3, pi / 2, 2 * pi / 5),
                                     ConeParams(1, 0.7, 1.9)}) {
        const LengthReport rep = compute_lengths(params);
        CAPTURE(params.p());
        CHECK(rep.residuals.tangent <= 1e-9);
        CHECK(rep.residuals.sine <= 1e-9);
        CHECK(rep.residuals.cosine <= 1e-9);
        CHECK(rep.r_alpha > 0.0);
        CHECK(rep.r_beta > 0.0);
        CHECK(rep.r_alpha == rep.gamma_alpha.real());
        CHECK(rep.phi_beta == rep.gamma_beta.imag());
        CHECK(std::abs(rep.phi_alpha) < 2 * pi);
    }
}

TEST_CASE("rules and trace convention on the check grid")
{
    for (int p = 1; p <= 3; ++p)
        for (double al : check_grid_angles())
            for (double be : check_grid_angles()) {
                const ConeParams params(p, al, be);
                CAPTURE(p);
                CAPTURE(al);
                CAPTURE(be);
                const LengthReport rep = compute_lengths(params);
                CHECK(rep.residuals.worst() <= 1e-9);
                const Complex u = distance_root(params).value;
                const Complex tr = longitude_holonomy(params, u).trace();
                CHECK(std::abs(tr + 2.0 * std::cosh(rep.gamma_alpha / 2.0)) <= 1e-8);
            }
}

TEST_CASE("real lengths from both routes agree")
{
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> angle(0.2, 2.3);
    for (int p = 1; p <= 2; ++p)
        for (int k = 0; k < 20; ++k) {
            const ConeParams params(p, angle(rng), angle(rng));
            const LengthReport rep = compute_lengths(params);
            const auto [ra, rb] = real_lengths(params, zeta_root(params).value);
            CAPTURE(p);
            CAPTURE(params.alpha());
            CAPTURE(params.beta());
            CHECK(std::abs(ra - rep.r_alpha) <= 1e-9);
            CHECK(std::abs(rb - rep.r_beta) <= 1e-9);
        }
}

TEST_CASE("diagonal lengths stay positive up to the Euclidean angle")
{
    const double a0 = euclidean_alpha0();
    for (double al = 0.05; al < a0; al += 0.05) {
        const ConeParams params(2, al, al);
        const LengthReport rep = compute_lengths(params);
        CAPTURE(al);
        CHECK(std::isfinite(rep.r_alpha));
        CHECK(rep.r_alpha > 0.0);
    }
    for (double al : {a0 + 1e-6, 2.8, 3.0})
        CHECK_ERROR_CODE(compute_lengths(ConeParams(2, al, al)), ErrorCode::NoHyperbolicRoot);
}
