#include "twistvol/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace twistvol {

std::string_view to_string(PolyKind kind) noexcept
{
    switch (kind) {
    case PolyKind::W1Cubic: return "W1Cubic";
    case PolyKind::W2Cubic: return "W2Cubic";
    case PolyKind::W3Quintic: return "W3Quintic";
    case PolyKind::ZetaQuartic: return "ZetaQuartic";
    case PolyKind::ZetaQuarticW1: return "ZetaQuarticW1";
    case PolyKind::Custom: return "Custom";
    }
    return "Unknown";
}

PolySpec::PolySpec(std::vector<Complex> coeffs, PolyKind kind, double trim)
    : coeffs_(std::move(coeffs)), kind_(kind)
{
    while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= trim)
        coeffs_.pop_back();
    if (coeffs_.empty())
        coeffs_.push_back(0.0);
    for (const Complex& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw Error(ErrorCode::InvalidArgument, "polynomial coefficient is not finite");
}

Complex PolySpec::operator()(Complex z) const noexcept
{
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

Complex PolySpec::derivative(Complex z) const noexcept
{
    Complex acc{};
    for (std::size_t k = coeffs_.size(); k-- > 1;)
        acc = acc * z + static_cast<double>(k) * coeffs_[k];
    return acc;
}

double PolySpec::scale(Complex z) const noexcept
{
    const double r = std::abs(z);
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * r + std::abs(*it);
    return acc;
}

double PolySpec::max_coefficient() const noexcept
{
    double m = 0.0;
    for (const Complex& c : coeffs_)
        m = std::max(m, std::abs(c));
    return m;
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool at_noise_floor(const PolySpec& poly, Complex z)
{
    return std::abs(poly(z)) <= 16.0 * kEps * poly.scale(z);
}

std::vector<Complex> initial_guesses(const PolySpec& poly)
{
    const auto& c = poly.coeffs();
    const int n = poly.degree();
    // Fujiwara-type bound on the root moduli, and the geometric mean as a
    // lower anchor; start on a circle between the two.
    double upper = 0.0;
    for (int k = 0; k < n; ++k) {
        const double ratio = std::abs(c[k] / c[n]);
        if (ratio > 0.0)
            upper = std::max(upper, std::pow(ratio, 1.0 / (n - k)));
    }
    double radius = upper > 0.0 ? upper : 1.0;
    const double mean = std::abs(c[0]) > 0.0 ? std::pow(std::abs(c[0] / c[n]), 1.0 / n) : 0.0;
    if (mean > 0.0)
        radius = 0.5 * (radius + mean);

    std::vector<Complex> z(n);
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / n + 0.4;
        z[k] = std::polar(radius, theta);
    }
    return z;
}

} // namespace

std::vector<Complex> solve_poly(const PolySpec& poly, const SolveOptions& opts)
{
    const int n = poly.degree();
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "solve_poly needs degree >= 1");
    const auto& c = poly.coeffs();
    if (n == 1)
        return {-c[0] / c[1]};

    std::vector<Complex> z = initial_guesses(poly);
    std::vector<bool> done(n, false);
    int iterations = 0;
    while (true) {
        bool all_done = true;
        for (int i = 0; i < n; ++i) {
            if (done[i])
                continue;
            const Complex pz = poly(z[i]);
            if (at_noise_floor(poly, z[i])) {
                done[i] = true;
                continue;
            }
            all_done = false;
            const Complex ratio = pz / poly.derivative(z[i]);
            Complex repel{};
            for (int j = 0; j < n; ++j)
                if (j != i)
                    repel += 1.0 / (z[i] - z[j]);
            const Complex step = ratio / (1.0 - ratio * repel);
            z[i] -= step;
            if (std::abs(step) <= 4.0 * kEps * std::abs(z[i]))
                done[i] = true;
        }
        if (all_done)
            break;
        if (++iterations >= opts.max_iterations)
            throw Error(ErrorCode::NoConvergence, "Aberth iteration cap reached");
    }

    for (Complex& root : z) {
        for (int k = 0; k < opts.polish_steps; ++k) {
            const Complex d = poly.derivative(root);
            if (d == Complex{})
                break;
            const Complex candidate = root - poly(root) / d;
            if (std::abs(poly(candidate)) < std::abs(poly(root)))
                root = candidate;
        }
    }
    return z;
}

} // namespace twistvol
