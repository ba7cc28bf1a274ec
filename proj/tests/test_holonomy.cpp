#include <cmath>
#include <numbers>

#include "support.hpp"
#include "twistvol/distance_eq.hpp"
#include "twistvol/holonomy.hpp"

using namespace twistvol;
using std::numbers::pi;

TEST_CASE("cone parameters")
{
    const ConeParams p(2, pi / 2, pi / 3);
    CHECK(p.cot_half_alpha() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.cot_half_beta() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(ConeParams(1, pi, pi).cot_half_alpha() == 0.0);
    CHECK(std::isinf(ConeParams(1, 0.0, 1.0).cot_half_alpha()));
    CHECK(ConeParams(1, 0.0, 1.0).has_cusp());
    CHECK(p.swapped().alpha() == p.beta());

    CHECK_ERROR_CODE(ConeParams(0, 1.0, 1.0), ErrorCode::InvalidArgument);
    CHECK_ERROR_CODE(ConeParams(1, -0.1, 1.0), ErrorCode::InvalidArgument);
    CHECK_ERROR_CODE(ConeParams(1, 1.0, 3.5), ErrorCode::InvalidArgument);
}

TEST_CASE("group words reduce freely")
{
    CHECK(GroupWord::parse("sStT").empty());
    CHECK(GroupWord::parse("stTs").compact() == "ss");
    const GroupWord w = GroupWord::parse("sTt s");
    CHECK(w.compact() == "ss");
    CHECK(GroupWord::parse("st").inverse().compact() == "TS");
    CHECK(GroupWord::parse("sT").swap_generators().compact() == "tS");
    CHECK(commutator(GroupWord::parse("s"), GroupWord::parse("t")).compact() == "stST");
    CHECK(GroupWord::parse("st").power(2).compact() == "stst");
    CHECK(GroupWord::parse("sT").to_string() == "s t^-1");
    CHECK_ERROR_CODE(GroupWord::parse("sx"), ErrorCode::InvalidArgument);
}

TEST_CASE("longitude words")
{
    CHECK(longitude_word(1).compact() == "stSTsTSt");
    CHECK(longitude_word(2).compact() == "StsTStstSTst");
    CHECK(longitude_word(3).compact() == "stSTstSTsTStsTSt");
    for (int p = 1; p <= 6; ++p) {
        const GroupWord word = longitude_word(p);
        const auto& letters = word.letters();
        for (std::size_t i = 1; i < letters.size(); ++i)
            CHECK(letters[i] != inverse(letters[i - 1]));
    }
}

TEST_CASE("generators")
{
    const Generators g = build_generators(ConeParams(2, pi, pi), Complex{1.0});
    CHECK(std::abs(g.s.a) <= 1e-15);
    CHECK(std::abs(g.s.b - kI * std::exp(0.5)) <= 1e-15);
    CHECK(std::abs(g.s.c - kI * std::exp(-0.5)) <= 1e-15);

    const Complex rho{0.8, 0.6};
    const Generators h = build_generators(ConeParams(2, pi / 2, pi / 3), rho);
    CHECK(std::abs(h.s.trace() - std::sqrt(2.0)) <= 1e-12);
    CHECK(std::abs(h.t.trace() - 2.0 * std::cos(pi / 6)) <= 1e-12);
    CHECK(std::abs(h.s.det() - 1.0) <= 1e-12);
    CHECK(std::abs(h.t.det() - 1.0) <= 1e-12);
    CHECK(std::abs(complex_distance(line_matrix(h.s), line_matrix(h.t)) - rho) <= 1e-9);

    // N reverses both generators.
    const Mat2C n = common_normal();
    CHECK(max_abs_diff(n * h.s * inverse(n), inverse(h.s)) <= 1e-12);
    CHECK(max_abs_diff(n * h.t * inverse(n), inverse(h.t)) <= 1e-12);

    CHECK_ERROR_CODE(build_generators(ConeParams(2, 0.0, 1.0), rho), ErrorCode::CuspAngle);
}

TEST_CASE("word evaluation")
{
    const Generators g = build_generators(ConeParams(2, 1.0, 2.0), Complex{0.3, 0.9});
    CHECK(max_abs_diff(evaluate_word(GroupWord{}, g.s, g.t), Mat2C::identity()) == 0.0);
    CHECK(max_abs_diff(evaluate_word(GroupWord::parse("sS"), g.s, g.t), Mat2C::identity()) == 0.0);
    const Mat2C w = evaluate_word(GroupWord::parse("stT"), g.s, g.t);
    CHECK(max_abs_diff(w, g.s) <= 1e-15);
    CHECK(std::abs(evaluate_word(longitude_word(3), g.s, g.t).det() - 1.0) <= 1e-10);
}

TEST_CASE("commutation residual at roots and away from them")
{
    const ConeParams w2(2, pi / 2, pi / 2);
    const Complex u = distance_root(w2).value;
    CHECK(std::abs(commutation_residual(w2, u)) <= 1e-9);
    const Mat2C l = longitude_holonomy(w2, u);
    const Generators g = build_generators(w2, std::acosh(u));
    CHECK(max_abs_diff(g.s * l, l * g.s) <= 1e-9);

    CHECK(std::abs(commutation_residual(w2, Complex{5.0})) > 0.1);

    const ConeParams w3(3, 2 * pi / 5, 2 * pi / 5);
    CHECK(std::abs(commutation_residual(w3, distance_root(w3).value)) <= 1e-9);

    CHECK_ERROR_CODE(commutation_residual(w2, Complex{1.0}), ErrorCode::DegenerateDistance);
    CHECK_ERROR_CODE(commutation_residual(w2, Complex{-1.0}), ErrorCode::DegenerateDistance);
    CHECK_ERROR_CODE(commutation_residual(ConeParams(2, 0.0, 1.0), Complex{0.0, 1.0}),
                     ErrorCode::CuspAngle);
}

TEST_CASE("lemma criteria agree")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> angle(0.3, 2.5);
    for (int p = 1; p <= 3; ++p) {
        for (int k = 0; k < 10; ++k) {
            const ConeParams params(p, angle(rng), angle(rng));
            CAPTURE(p);
            CAPTURE(params.alpha());
            CAPTURE(params.beta());
            const Complex u = distance_root(params).value;
            const LemmaResiduals at_root = lemma_residuals(params, u);
            REQUIRE(at_root.trace_nl <= 1e-10);
            CHECK(at_root.commutator <= 1e-8);
            CHECK(at_root.reflection <= 1e-8);

            const Complex off = u + testing::random_complex(rng, 0.5) + Complex{0.3, 0.2};
            const LemmaResiduals away = lemma_residuals(params, off);
            CHECK(away.trace_nl > 1e-3);
            CHECK(away.commutator > 1e-3);
            CHECK(away.reflection > 1e-3);
        }
    }
}

TEST_CASE("the other longitude commutes with T")
{
    for (int p = 1; p <= 3; ++p) {
        const ConeParams params(p, 0.9, 1.7);
        const Complex u = distance_root(params).value;
        const Generators g = build_generators(params, std::acosh(u));
        // l_t is l_s with s and t exchanged; evaluate with (T, S) in their roles.
        const Mat2C lt = evaluate_word(longitude_word(p).swap_generators(), g.s, g.t);
        CAPTURE(p);
        CHECK(max_abs_diff(g.t * lt, lt * g.t) <= 1e-9 * (1.0 + max_abs(lt)));
    }
}

TEST_CASE("trace identities")
{
    std::mt19937_64 rng(19);
    for (int k = 0; k < 100; ++k) {
        const Mat2C x = testing::random_sl2(rng), y = testing::random_sl2(rng);
        const Mat2C xi = inverse(x), yi = inverse(y);
        CHECK(testing::rel_diff((x * y).trace(), x.trace() * y.trace() - (xi * y).trace()) <= 1e-10);
        CHECK(testing::rel_diff(xi.trace(), x.trace()) <= 1e-10);
        CHECK(testing::rel_diff((x * y).trace(), (xi * yi).trace()) <= 1e-10);
    }
}
