#pragma once

#include <string_view>
#include <utility>

#include "twistvol/mat2c.hpp"
#include "twistvol/params.hpp"
#include "twistvol/quadrature.hpp"

namespace twistvol {

enum class VolumeMethod { ContourW2, ContourW1, DiagonalReal };

std::string_view to_string(VolumeMethod method) noexcept;

struct VolumeResult {
    double volume = 0.0;
    /// |Im| of the raw contour integral; zero for the real diagonal form.
    double imag_residual = 0.0;
    double quadrature_error_estimate = 0.0;
    Complex zeta;
    VolumeMethod method = VolumeMethod::ContourW2;
    int panels = 0;
};

/// Argument of the logarithm in the W_2 integrand,
/// 4(z^2 sin^2(a/2) + cos^2(a/2))(z^2 sin^2(b/2) + cos^2(b/2)) / (z - z^2)^2.
Complex log_argument_w2(Complex z, const ConeParams& params);
/// W_1 analogue, 2(...)(...) / (z^2 - z^3).
Complex log_argument_w1(Complex z, const ConeParams& params);

/// i log(g(z)) / (z^2 - 1) with the principal logarithm. PoleHit within
/// 1e-12 of z = 1 or z = -1.
Complex integrand_w2(Complex z, const ConeParams& params);
Complex integrand_w1(Complex z, const ConeParams& params);

/// Contour volume of W_2(alpha, beta) from conj(zeta) to zeta, with the
/// logarithm continued from the value 0 at conj(zeta).
VolumeResult volume_w2(const ConeParams& params, const QuadratureOptions& opts = {});
/// Contour volume of W_1(alpha, beta).
VolumeResult volume_w1(const ConeParams& params, const QuadratureOptions& opts = {});
/// volume_w1 or volume_w2 by params.p(); InvalidArgument for other p.
VolumeResult volume(const ConeParams& params, const QuadratureOptions& opts = {});

/// 4 int_{a0}^{a} arctanh(sqrt(7t^4 + 22t^2 - 1) / (t(5 + t^2))) dt / (t^2 + 1)
/// with a = cot(alpha/2). OutOfRegime for alpha >= alpha0.
VolumeResult volume_w2_diagonal(double alpha, const QuadratureOptions& opts = {});

/// Central-difference Schlafli check: |dV/dalpha + r_alpha/2| and
/// |dV/dbeta + r_beta/2| at step h > 0.
std::pair<double, double> schlafli_residual(const ConeParams& params, double h,
                                            const QuadratureOptions& opts = {});

} // namespace twistvol
