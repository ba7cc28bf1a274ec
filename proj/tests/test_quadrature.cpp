#include <cmath>
#include <numbers>

#include "support.hpp"
#include "twistvol/quadrature.hpp"

using namespace twistvol;
using std::numbers::pi;

TEST_CASE("polynomials are exact")
{
    // K15 integrates degree 22 exactly on each panel.
    const auto r = integrate_adaptive<double>([](double x) { return std::pow(x, 10) - 3 * x; }, 0.0, 2.0);
    CHECK(r.value == doctest::Approx(std::pow(2.0, 11) / 11 - 6.0).epsilon(1e-14));
    CHECK(r.panels == QuadratureOptions{}.initial_panels);
}

TEST_CASE("smooth and peaked integrands")
{
    const auto e = integrate_adaptive<double>([](double x) { return std::exp(-x * x); }, -3.0, 3.0);
    CHECK(std::abs(e.value - std::sqrt(pi) * std::erf(3.0)) <= 1e-13);

    const auto lorentz = integrate_adaptive<double>(
        [](double x) { return 1e-3 / (x * x + 1e-6); }, -1.0, 1.0);
    CHECK(std::abs(lorentz.value - 2.0 * std::atan(1e3)) <= 1e-11);
    CHECK(lorentz.panels > 8);

    const auto root = integrate_adaptive<double>([](double x) { return std::sqrt(x); }, 0.0, 1.0);
    CHECK(std::abs(root.value - 2.0 / 3.0) <= 1e-12);
}

TEST_CASE("complex integrands")
{
    // int_0^1 exp(i pi t) dt = 2i / pi
    const auto r = integrate_adaptive<std::complex<double>>(
        [](double t) { return std::exp(std::complex<double>(0.0, pi * t)); }, 0.0, 1.0);
    CHECK(std::abs(r.value - std::complex<double>(0.0, 2.0 / pi)) <= 1e-14);
}

TEST_CASE("doubling the initial panels does not move converged results")
{
    QuadratureOptions fine;
    fine.initial_panels = 16;
    const auto f = [](double x) { return std::log(1.0 + x) / (1.0 + x * x); };
    const double coarse = integrate_adaptive<double>(f, 0.0, 1.0).value;
    const double doubled = integrate_adaptive<double>(f, 0.0, 1.0, fine).value;
    CHECK(std::abs(coarse - doubled) <= 1e-14);
    CHECK(coarse == doctest::Approx(pi / 8 * std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("failures")
{
    QuadratureOptions tight;
    tight.max_panels = 10;
    tight.failure_threshold = 1e-12;
    CHECK_ERROR_CODE(integrate_adaptive<double>([](double x) { return 1.0 / std::sqrt(x + 1e-12); },
                                                0.0, 1.0, tight),
                     ErrorCode::QuadratureFailure);
    QuadratureOptions none;
    none.initial_panels = 0;
    CHECK_ERROR_CODE(integrate_adaptive<double>([](double) { return 1.0; }, 0.0, 1.0, none),
                     ErrorCode::InvalidArgument);
    CHECK(integrate_adaptive<double>([](double) { return 1.0; }, 1.0, 1.0).value == 0.0);
}
