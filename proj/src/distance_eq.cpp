#include "twistvol/distance_eq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "twistvol/holonomy.hpp"

namespace twistvol {

std::string_view to_string(Regime regime) noexcept
{
    switch (regime) {
    case Regime::Hyperbolic: return "hyperbolic";
    case Regime::Euclidean: return "euclidean";
    case Regime::Spherical: return "spherical";
    case Regime::NonHyperbolic: return "non-hyperbolic";
    }
    return "unknown";
}

PolySpec cubic_w1(double a, double b)
{
    const double ab = a * b;
    const double s = a * a * b * b + a * a + b * b;
    return PolySpec({-2.0 * ab, s - 1.0, 2.0 * ab, 2.0}, PolyKind::W1Cubic);
}

PolySpec cubic_w2(double a, double b)
{
    const double ab = a * b;
    const double a2 = a * a, b2 = b * b;
    return PolySpec({-ab * (a2 * b2 + a2 + b2 - 3.0), 3.0 * a2 * b2 + 3.0 * a2 + 3.0 * b2 - 1.0,
                     -4.0 * ab, 4.0},
                    PolyKind::W2Cubic);
}

PolySpec quintic_w3(double a, double b)
{
    const double ab = a * b;
    const double a2 = a * a, b2 = b * b;
    const double a4 = a2 * a2, b4 = b2 * b2;
    const double s = a2 * b2 + a2 + b2;
    const double linear = a4 * b4 + 2.0 * a4 * b2 + 2.0 * a2 * b4 - 4.0 * a2 * b2 + a4 + b4 -
                          6.0 * a2 - 6.0 * b2 + 1.0;
    return PolySpec({-4.0 * ab * (s - 1.0), linear, 4.0 * ab * (s - 3.0), 8.0 * (s - 1.0),
                     8.0 * ab, 8.0},
                    PolyKind::W3Quintic);
}

PolySpec distance_polynomial(const ConeParams& params)
{
    if (params.has_cusp())
        throw Error(ErrorCode::CuspAngle, "distance equation needs finite cot(alpha/2), cot(beta/2)");
    const double a = params.cot_half_alpha();
    const double b = params.cot_half_beta();
    switch (params.p()) {
    case 1: return cubic_w1(a, b);
    case 2: return cubic_w2(a, b);
    case 3: return quintic_w3(a, b);
    default:
        throw Error(ErrorCode::InvalidArgument, "distance equation available for p = 1, 2, 3 only");
    }
}

namespace {

// Ascending coefficients of z^2 sin^2(x/2) + cos^2(x/2), as (c0, c2).
struct HalfAngleQuadratic {
    double constant;
    double square;
};

HalfAngleQuadratic half_angle_quadratic(double c, double s) { return {c * c, s * s}; }

// (z^2 qa + ca)(z^2 qb + cb) in ascending coefficients, degree 4.
std::vector<double> product_quadratics(HalfAngleQuadratic x, HalfAngleQuadratic y)
{
    return {x.constant * y.constant, 0.0, x.constant * y.square + x.square * y.constant, 0.0,
            x.square * y.square};
}

std::vector<Complex> to_complex(const std::vector<double>& v)
{
    return {v.begin(), v.end()};
}

} // namespace

PolySpec zeta_quartic(const ConeParams& params)
{
    const auto qa = half_angle_quadratic(params.cos_half_alpha(), params.sin_half_alpha());
    const auto qb = half_angle_quadratic(params.cos_half_beta(), params.sin_half_beta());
    std::vector<double> c = product_quadratics(qa, qb);
    for (double& x : c)
        x *= 4.0;
    // (z - z^2)^2 = z^2 - 2z^3 + z^4
    c[2] -= 1.0;
    c[3] += 2.0;
    c[4] -= 1.0;
    return PolySpec(to_complex(c), PolyKind::ZetaQuartic);
}

PolySpec zeta_quartic_w1(const ConeParams& params)
{
    const auto qa = half_angle_quadratic(params.cos_half_alpha(), params.sin_half_alpha());
    const auto qb = half_angle_quadratic(params.cos_half_beta(), params.sin_half_beta());
    std::vector<double> c = product_quadratics(qa, qb);
    for (double& x : c)
        x *= 2.0;
    // z^2 - z^3
    c[2] -= 1.0;
    c[3] += 1.0;
    return PolySpec(to_complex(c), PolyKind::ZetaQuarticW1);
}

PolySpec zeta_polynomial(const ConeParams& params)
{
    switch (params.p()) {
    case 1: return zeta_quartic_w1(params);
    case 2: return zeta_quartic(params);
    default:
        throw Error(ErrorCode::InvalidArgument, "endpoint equation available for p = 1, 2 only");
    }
}

Complex zeta_from_u(const ConeParams& params, Complex u)
{
    if (params.has_cusp())
        throw Error(ErrorCode::CuspAngle, "zeta from u needs finite cot(alpha/2), cot(beta/2)");
    const double ab = params.cot_half_alpha() * params.cot_half_beta();
    return params.p() % 2 == 0 ? ab / std::conj(u) : -ab / u;
}

double diagonal_discriminant(double alpha)
{
    const double a = 1.0 / std::tan(0.5 * alpha);
    const double a2 = a * a;
    return 1.0 - 22.0 * a2 - 7.0 * a2 * a2;
}

Regime classify_regime_diagonal(double alpha)
{
    if (!(alpha >= 0.0 && alpha <= std::numbers::pi))
        throw Error(ErrorCode::InvalidArgument, "alpha must lie in [0, pi]");
    if (alpha == 0.0)
        return Regime::Hyperbolic;
    const double delta = diagonal_discriminant(alpha);
    if (std::abs(delta) <= 1e-12)
        return Regime::Euclidean;
    return delta < 0.0 ? Regime::Hyperbolic : Regime::Spherical;
}

double euclidean_a0() noexcept { return std::sqrt((std::sqrt(128.0) - 11.0) / 7.0); }

double euclidean_alpha0() noexcept { return 2.0 * std::atan(1.0 / euclidean_a0()); }

namespace {

std::vector<Complex> upper_candidates(const std::vector<Complex>& roots, double tol)
{
    std::vector<Complex> out;
    for (const Complex& r : roots)
        if (r.imag() > tol)
            out.push_back(r);
    return out;
}

std::vector<Complex> distance_candidates(const ConeParams& params, double tol)
{
    return upper_candidates(solve_poly(distance_polynomial(params)), tol);
}

// Index of the smallest score if it beats the runner-up by a factor of 10.
std::optional<std::size_t> clear_winner(const std::vector<double>& score)
{
    std::vector<std::size_t> order(score.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return score[x] < score[y]; });
    if (10.0 * score[order[0]] < score[order[1]])
        return order[0];
    return std::nullopt;
}

// Diagonal angles of the form 0.02k where the distance equation has exactly
// one root in the upper half plane.
const std::vector<double>& unique_diagonal_angles(int p, double tol)
{
    static const auto build = [](int pp, double t) {
        std::vector<double> out;
        for (int k = 1; 0.02 * k < std::numbers::pi; ++k) {
            const double m = 0.02 * k;
            if (distance_candidates(ConeParams(pp, m, m), t).size() == 1)
                out.push_back(m);
        }
        return out;
    };
    static const std::vector<double> table[3] = {build(1, tol), build(2, tol), build(3, tol)};
    return table[p - 1];
}

std::optional<Complex> track_along_path(const ConeParams& target, double start, int steps,
                                        double tol)
{
    const int p = target.p();
    auto cands = distance_candidates(ConeParams(p, start, start), tol);
    if (cands.size() != 1)
        return std::nullopt;
    Complex u = cands.front();
    for (int k = 1; k <= steps; ++k) {
        const double t = static_cast<double>(k) / steps;
        const ConeParams here(p, start + t * (target.alpha() - start),
                              start + t * (target.beta() - start));
        cands = distance_candidates(here, tol);
        if (cands.empty())
            return std::nullopt;
        std::sort(cands.begin(), cands.end(),
                  [&](Complex x, Complex y) { return std::abs(x - u) < std::abs(y - u); });
        if (cands.size() > 1 && std::abs(cands[1] - u) < 2.0 * std::abs(cands[0] - u))
            return std::nullopt;
        u = cands.front();
    }
    return u;
}

Complex continue_distance_root(const std::vector<Complex>& candidates, const ConeParams& params,
                               double tol)
{
    const auto& starts = unique_diagonal_angles(params.p(), tol);
    if (starts.empty())
        throw Error(ErrorCode::AmbiguousRoot, "no diagonal point with a unique distance root");
    const double mid = 0.5 * (params.alpha() + params.beta());
    const double start = *std::min_element(starts.begin(), starts.end(), [&](double x, double y) {
        return std::abs(x - mid) < std::abs(y - mid);
    });
    for (int steps : {200, 2000}) {
        if (auto u = track_along_path(params, start, steps, tol)) {
            const auto best = std::min_element(
                candidates.begin(), candidates.end(),
                [&](Complex x, Complex y) { return std::abs(x - *u) < std::abs(y - *u); });
            if (std::abs(*best - *u) <= 1e-6 * (1.0 + std::abs(*u)))
                return *best;
        }
    }
    throw Error(ErrorCode::AmbiguousRoot, "continuation from the diagonal did not resolve the root");
}

std::string angles_message(const ConeParams& params)
{
    return "p=" + std::to_string(params.p()) + " alpha=" + std::to_string(params.alpha()) +
           " beta=" + std::to_string(params.beta());
}

} // namespace

RootSelection select_root(const std::vector<Complex>& roots, const ConeParams& params,
                          PolyKind kind, const Tolerances& tol)
{
    const std::vector<Complex> cands = upper_candidates(roots, tol.root_imag);
    if (cands.empty()) {
        Regime regime = Regime::NonHyperbolic;
        if (params.p() == 2 && params.alpha() == params.beta())
            regime = classify_regime_diagonal(params.alpha());
        throw Error(ErrorCode::NoHyperbolicRoot,
                    "all roots real (" + std::string(to_string(regime)) + ") at " +
                        angles_message(params));
    }

    Complex chosen = cands.front();
    if (cands.size() > 1) {
        std::vector<double> score;
        if (is_distance_kind(kind)) {
            // Residuals at rounding level cannot rank candidates; every root the
            // criterion accepts goes to continuation instead.
            int exact = 0;
            for (const Complex& u : cands) {
                const double scale = 1.0 + max_abs(longitude_holonomy(params, u));
                score.push_back(std::abs(commutation_residual(params, u)) / scale);
                exact += score.back() <= tol.structural;
            }
            std::optional<std::size_t> winner;
            if (exact == 1)
                winner = std::min_element(score.begin(), score.end()) - score.begin();
            else if (exact == 0)
                winner = clear_winner(score);
            chosen = winner ? cands[*winner] : continue_distance_root(cands, params, tol.root_imag);
        } else {
            if (params.has_cusp())
                throw Error(ErrorCode::AmbiguousRoot,
                            "several endpoint roots and no distance root at a cusp");
            const Complex u = distance_root(params).value;
            const Complex expected = zeta_from_u(params, u);
            for (const Complex& z : cands)
                score.push_back(std::abs(z - expected));
            const auto winner = clear_winner(score);
            if (!winner)
                throw Error(ErrorCode::AmbiguousRoot, "endpoint roots not separated by ab/conj(u)");
            chosen = cands[*winner];
        }
    }

    RootSelection sel;
    sel.value = chosen;
    sel.all_roots = roots;
    sel.kind = kind;
    sel.regime_hint = Regime::Hyperbolic;
    double cmax = 0.0;
    // The residual is reported against the polynomial the roots came from
    // when it is one of ours; custom lists only get the candidate filter.
    if (kind != PolyKind::Custom) {
        const PolySpec poly = is_distance_kind(kind)         ? distance_polynomial(params)
                              : kind == PolyKind::ZetaQuarticW1 ? zeta_quartic_w1(params)
                                                                : zeta_quartic(params);
        cmax = poly.max_coefficient();
        sel.residual = std::abs(poly(chosen)) / cmax;
    }
    return sel;
}

Regime classify_regime(const ConeParams& params)
{
    if (params.p() == 2 && params.alpha() == params.beta())
        return classify_regime_diagonal(params.alpha());
    try {
        if (params.p() <= 2)
            (void)zeta_root(params);
        else
            (void)distance_root(params);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NoHyperbolicRoot)
            return Regime::NonHyperbolic;
        throw;
    }
    return Regime::Hyperbolic;
}

RootSelection distance_root(const ConeParams& params)
{
    const PolySpec poly = distance_polynomial(params);
    return select_root(solve_poly(poly), params, poly.kind());
}

RootSelection zeta_root(const ConeParams& params)
{
    const PolySpec poly = zeta_polynomial(params);
    return select_root(solve_poly(poly), params, poly.kind());
}

} // namespace twistvol
