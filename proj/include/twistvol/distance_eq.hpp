#pragma once

#include <string_view>
#include <vector>

#include "twistvol/params.hpp"
#include "twistvol/polynomial.hpp"

namespace twistvol {

enum class Regime { Hyperbolic, Euclidean, Spherical, NonHyperbolic };

std::string_view to_string(Regime regime) noexcept;

/// W_1 distance equation 2u^3 + 2ab u^2 + (a^2b^2 + a^2 + b^2 - 1)u - 2ab,
/// obtained from tr(N L_S) for the Whitehead longitude.
PolySpec cubic_w1(double a, double b);
/// W_2: 4z^3 - 4ab z^2 + (3a^2b^2 + 3a^2 + 3b^2 - 1) z - ab(a^2b^2 + a^2 + b^2 - 3).
PolySpec cubic_w2(double a, double b);
/// W_3 quintic in u.
PolySpec quintic_w3(double a, double b);

/// Distance equation for p in {1, 2, 3} at a = cot(alpha/2), b = cot(beta/2).
/// Needs finite a, b (CuspAngle otherwise).
PolySpec distance_polynomial(const ConeParams& params);

/// 4(z^2 sin^2(a/2) + cos^2(a/2))(z^2 sin^2(b/2) + cos^2(b/2)) - (z - z^2)^2:
/// the W_2 endpoint quartic scaled by sin^2(alpha/2) sin^2(beta/2), finite at
/// cusps. Degree drops when the leading coefficient cancels.
PolySpec zeta_quartic(const ConeParams& params);
/// W_1 analogue: 2(...)(...) - (z^2 - z^3).
PolySpec zeta_quartic_w1(const ConeParams& params);
/// zeta_quartic_w1 for p = 1, zeta_quartic for p = 2.
PolySpec zeta_polynomial(const ConeParams& params);

struct RootSelection {
    Complex value;
    std::vector<Complex> all_roots;
    double residual = 0.0;   // |P(value)| / max|coefficient|
    Regime regime_hint = Regime::Hyperbolic;
    PolyKind kind = PolyKind::Custom;
};

/// Pick the geometric root: the one with Im > tol.root_imag. Several
/// candidates are separated by the commutation residual (distance equations)
/// or by zeta = ab/conj(u) (W_2 endpoint), then by continuation from the
/// diagonal. Throws NoHyperbolicRoot or AmbiguousRoot.
RootSelection select_root(const std::vector<Complex>& roots, const ConeParams& params,
                          PolyKind kind, const Tolerances& tol = default_tolerances());

/// Solve and select in one step.
RootSelection distance_root(const ConeParams& params);
RootSelection zeta_root(const ConeParams& params);

/// Endpoint zeta implied by a distance root: ab/conj(u) for even p, -ab/u for odd p.
Complex zeta_from_u(const ConeParams& params, Complex u);

/// Discriminant 1 - 22a^2 - 7a^4 of the W_2 diagonal, a = cot(alpha/2).
double diagonal_discriminant(double alpha);
/// Sign of the discriminant, |Delta| <= 1e-12 mapping to Euclidean.
Regime classify_regime_diagonal(double alpha);

/// Regime of an arbitrary point: the diagonal classifier for W_2(alpha, alpha),
/// otherwise Hyperbolic when a root with Im > 0 is selected and NonHyperbolic
/// when every root is real. Other selection errors propagate.
Regime classify_regime(const ConeParams& params);

/// a0 = cot(alpha0/2) with a0^2 = (sqrt(128) - 11)/7.
double euclidean_a0() noexcept;
/// Diagonal angle where W_2(alpha, alpha) becomes Euclidean.
double euclidean_alpha0() noexcept;

} // namespace twistvol
