#include <algorithm>
#include <cmath>
#include <numbers>

#include "support.hpp"
#include "twistvol/distance_eq.hpp"
#include "twistvol/holonomy.hpp"

using namespace twistvol;
using std::numbers::pi;

namespace {

Complex max_imag(const std::vector<Complex>& roots)
{
    return *std::max_element(roots.begin(), roots.end(),
                             [](Complex x, Complex y) { return x.imag() < y.imag(); });
}

} // namespace

TEST_CASE("endpoint quartic examples")
{
    // alpha = beta = pi/2: (z + 1)(2z^2 - z + 1) = 1 + 0z + z^2 + 2z^3.
    const PolySpec q = zeta_quartic(ConeParams(2, pi / 2, pi / 2));
    REQUIRE(q.degree() == 3);
    const std::vector<Complex> want{1.0, 0.0, 1.0, 2.0};
    for (int k = 0; k <= 3; ++k)
        CHECK(std::abs(q.coeffs()[k] - want[k]) <= 1e-14);

    // alpha = beta = 0: 4 - (z - z^2)^2.
    const PolySpec cusp = zeta_quartic(ConeParams(2, 0.0, 0.0));
    const std::vector<Complex> want_cusp{4.0, 0.0, -1.0, 2.0, -1.0};
    for (int k = 0; k <= 4; ++k)
        CHECK(std::abs(cusp.coeffs()[k] - want_cusp[k]) <= 1e-14);

    // alpha = 0, beta = pi/3: -(1 + z)(z^3 - 3z^2 + 3z - 3) = 3 + 2z^3 - z^4.
    const PolySpec mixed = zeta_quartic(ConeParams(2, 0.0, pi / 3));
    const std::vector<Complex> want_mixed{3.0, 0.0, 0.0, 2.0, -1.0};
    for (int k = 0; k <= 4; ++k)
        CHECK(std::abs(mixed.coeffs()[k] - want_mixed[k]) <= 1e-14);
}

TEST_CASE("endpoint quartic matches the untrimmed form times sin^2 sin^2")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> angle(0.1, 3.0);
    for (int k = 0; k < 100; ++k) {
        const ConeParams params(2, angle(rng), angle(rng));
        const double a = params.cot_half_alpha(), b = params.cot_half_beta();
        const double sa = params.sin_half_alpha(), sb = params.sin_half_beta();
        const Complex z = testing::random_complex(rng, 2.0);
        const Complex raw = 4.0 * (z * z + a * a) * (z * z + b * b) -
                            (1 + a * a) * (1 + b * b) * (z - z * z) * (z - z * z);
        CHECK(testing::rel_diff(zeta_quartic(params)(z), raw * sa * sa * sb * sb) <= 1e-10);

        const Complex raw1 =
            2.0 * (z * z + a * a) * (z * z + b * b) - (1 + a * a) * (1 + b * b) * (z * z - z * z * z);
        CHECK(testing::rel_diff(zeta_quartic_w1(ConeParams(1, params.alpha(), params.beta()))(z),
                                raw1 * sa * sa * sb * sb) <= 1e-10);
    }
}

TEST_CASE("(z + 1) Q(z) identity")
{
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int k = 0; k < 100; ++k) {
        const double a = d(rng), b = d(rng);
        const double A = a * a, B = b * b;
        const Complex z = testing::random_complex(rng, 2.0);
        const Complex q = (A * B + A + B - 3.0) * z * z * z -
                          (3.0 * A * B + 3.0 * A + 3.0 * B - 1.0) * z * z + 4.0 * A * B * z -
                          4.0 * A * B;
        const Complex rhs = -4.0 * (z * z + A) * (z * z + B) +
                            (1.0 + A) * (1.0 + B) * (z - z * z) * (z - z * z);
        CHECK(testing::rel_diff((z + 1.0) * q, rhs) <= 1e-10);
    }
}

TEST_CASE("root selection examples")
{
    const RootSelection half = zeta_root(ConeParams(2, pi / 2, pi / 2));
    CHECK(std::abs(half.value - Complex{0.25, std::sqrt(7.0) / 4}) <= 1e-12);
    CHECK(half.kind == PolyKind::ZetaQuartic);
    CHECK(half.residual <= 1e-9);

    const RootSelection cusp = zeta_root(ConeParams(2, 0.0, 0.0));
    CHECK(std::abs(cusp.value - Complex{0.5, std::sqrt(7.0) / 2}) <= 1e-12);

    const RootSelection mixed = zeta_root(ConeParams(2, 0.0, pi / 3));
    const double q = std::cbrt(4.0);
    CHECK(std::abs(mixed.value - (1.0 - Complex{1.0, -std::sqrt(3.0)} / q)) <= 1e-12);

    CHECK(std::abs(zeta_root(ConeParams(1, 0.0, 0.0)).value - Complex{1.0, 1.0}) <= 1e-12);

    CHECK_ERROR_CODE(zeta_root(ConeParams(2, euclidean_alpha0(), euclidean_alpha0())),
                     ErrorCode::NoHyperbolicRoot);
    CHECK_ERROR_CODE(distance_root(ConeParams(2, 3.0, 3.0)), ErrorCode::NoHyperbolicRoot);
    CHECK_ERROR_CODE(distance_root(ConeParams(2, 0.0, 1.0)), ErrorCode::CuspAngle);
    CHECK_ERROR_CODE(distance_root(ConeParams(4, 1.0, 1.0)), ErrorCode::InvalidArgument);
}

TEST_CASE("regime on the diagonal")
{
    CHECK(euclidean_a0() == doctest::Approx(0.2116).epsilon(5e-4));
    CHECK(euclidean_alpha0() == doctest::Approx(2.7243).epsilon(4e-5));
    CHECK(diagonal_discriminant(pi / 2) == doctest::Approx(-28.0));
    CHECK(classify_regime_diagonal(pi / 2) == Regime::Hyperbolic);
    CHECK(classify_regime_diagonal(euclidean_alpha0()) == Regime::Euclidean);
    CHECK(classify_regime_diagonal(3.0) == Regime::Spherical);
    CHECK(classify_regime_diagonal(0.0) == Regime::Hyperbolic);
    CHECK(classify_regime_diagonal(euclidean_alpha0() - 1e-6) == Regime::Hyperbolic);
    CHECK(classify_regime_diagonal(euclidean_alpha0() + 1e-6) == Regime::Spherical);
    CHECK(classify_regime(ConeParams(2, 2.0, 2.0)) == Regime::Hyperbolic);
    CHECK(classify_regime(ConeParams(1, 3.0, 3.0)) == Regime::NonHyperbolic);
    CHECK(to_string(Regime::Spherical) == "spherical");
}

TEST_CASE("endpoint and distance roots are linked")
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> angle(0.2, 2.4);
    for (int p = 1; p <= 2; ++p)
        for (int k = 0; k < 30; ++k) {
            const ConeParams params(p, angle(rng), angle(rng));
            CAPTURE(p);
            CAPTURE(params.alpha());
            CAPTURE(params.beta());
            const Complex u = distance_root(params).value;
            const Complex zeta = zeta_root(params).value;
            const double ab = params.cot_half_alpha() * params.cot_half_beta();
            if (p == 2)
                CHECK(std::abs(zeta * std::conj(u) - ab) <= 1e-8);
            else
                CHECK(std::abs(zeta * u + ab) <= 1e-8);
        }
}

TEST_CASE("diagonal quartic splits into two quadratics")
{
    for (double alpha : {0.4, 1.0, 1.7, 2.5}) {
        const double a = 1.0 / std::tan(alpha / 2);
        const double A = a * a;
        // (1 + a^2)(z - z^2) +- 2(z^2 + a^2), ascending coefficients.
        const PolySpec plus({2.0 * A, 1.0 + A, 2.0 - (1.0 + A)}, PolyKind::Custom);
        const PolySpec minus({-2.0 * A, 1.0 + A, -2.0 - (1.0 + A)}, PolyKind::Custom);
        std::vector<Complex> joint = solve_poly(plus);
        for (const Complex& r : solve_poly(minus))
            joint.push_back(r);
        const std::vector<Complex> quartic = solve_poly(zeta_quartic(ConeParams(2, alpha, alpha)));
        REQUIRE(quartic.size() == joint.size());
        for (const Complex& r : quartic) {
            double best = INFINITY;
            for (const Complex& s : joint)
                best = std::min(best, std::abs(r - s));
            CHECK(best <= 1e-9);
        }
        // Closed form of the upper root of the minus factor.
        const Complex disc = std::sqrt(Complex{diagonal_discriminant(alpha)});
        const Complex closed = (1.0 + A + disc) / (2.0 * (3.0 + A));
        CHECK(std::abs(zeta_root(ConeParams(2, alpha, alpha)).value - closed) <= 1e-10);
    }
}

TEST_CASE("distance roots satisfy the holonomy criterion on a grid")
{
    for (int p = 1; p <= 3; ++p)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                const double al = 0.3 + i * (pi - 0.6) / 4, be = 0.3 + j * (pi - 0.6) / 4;
                const ConeParams params(p, al, be);
                CAPTURE(p);
                CAPTURE(al);
                CAPTURE(be);
                RootSelection sel;
                try {
                    sel = distance_root(params);
                } catch (const Error& e) {
                    // Corners beyond the hyperbolic region have only real roots.
                    CHECK(e.code() == ErrorCode::NoHyperbolicRoot);
                    continue;
                }
                CHECK(sel.value.imag() > 0.0);
                CHECK(sel.residual <= 1e-9);
                CHECK(std::abs(commutation_residual(params, sel.value)) <= 1e-9);
            }
}

// Where several upper roots solve the criterion, continuation from the
// diagonal picks the one with the largest imaginary part.
TEST_CASE("continuation agrees with the largest imaginary part for the quintic")
{
    int ambiguous = 0;
    for (int i = 1; i <= 12; ++i)
        for (int j = 1; j <= 12; ++j) {
            const ConeParams params(3, i * 0.22, j * 0.22);
            const PolySpec poly = distance_polynomial(params);
            const auto roots = solve_poly(poly);
            int upper = 0;
            for (const Complex& r : roots)
                upper += r.imag() > 1e-8;
            if (upper < 2)
                continue;
            ++ambiguous;
            CAPTURE(params.alpha());
            CAPTURE(params.beta());
            CHECK(std::abs(distance_root(params).value - max_imag(roots)) <= 1e-9);
        }
    CHECK(ambiguous > 0);
}
