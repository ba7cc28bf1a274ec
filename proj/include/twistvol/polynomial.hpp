#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "twistvol/mat2c.hpp"

namespace twistvol {

/// Which equation a coefficient list came from.
enum class PolyKind {
    W1Cubic,        // complex distance equation of W_1 (u = cosh rho)
    W2Cubic,        // complex distance equation of W_2
    W3Quintic,      // complex distance equation of W_3
    ZetaQuartic,    // W_2 volume endpoint equation, sin^2-normalized
    ZetaQuarticW1,  // W_1 volume endpoint equation, sin^2-normalized
    Custom,
};

std::string_view to_string(PolyKind kind) noexcept;

/// Polynomials in u = cosh(rho) as opposed to the endpoint variable zeta.
constexpr bool is_distance_kind(PolyKind kind) noexcept
{
    return kind == PolyKind::W1Cubic || kind == PolyKind::W2Cubic || kind == PolyKind::W3Quintic;
}

/// Complex polynomial, coefficients in ascending degree. Leading coefficients
/// with modulus <= trim are dropped on construction, so degree() is exact.
class PolySpec {
public:
    PolySpec(std::vector<Complex> coeffs, PolyKind kind,
             double trim = default_tolerances().coefficient_trim);

    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
    PolyKind kind() const noexcept { return kind_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    Complex operator()(Complex z) const noexcept;
    Complex derivative(Complex z) const noexcept;
    /// sum |c_k| |z|^k, the natural size of P(z) for residual tests.
    double scale(Complex z) const noexcept;
    double max_coefficient() const noexcept;

private:
    std::vector<Complex> coeffs_;
    PolyKind kind_;
};

struct SolveOptions {
    int max_iterations = 200;
    int polish_steps = 2;
};

/// All roots with multiplicity (Aberth-Ehrlich simultaneous iteration followed
/// by Newton polishing on the original polynomial). Throws NoConvergence when
/// the iteration cap is reached, InvalidArgument for degree < 1.
std::vector<Complex> solve_poly(const PolySpec& poly, const SolveOptions& opts = {});

} // namespace twistvol
