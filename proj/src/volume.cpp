#include "twistvol/volume.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "twistvol/distance_eq.hpp"
#include "twistvol/lengths.hpp"

namespace twistvol {

namespace {

constexpr double kPoleRadius = 1e-12;
constexpr double kMaxNodeTurn = std::numbers::pi / 4;
constexpr double kMaxEvalTurn = 3 * std::numbers::pi / 4;
constexpr int kMaxBisectDepth = 40;
constexpr std::size_t kMaxTrackerNodes = 200000;
constexpr double kEndpointLogTolerance = 1e-6;

void check_poles(Complex z)
{
    if (std::abs(z - 1.0) <= kPoleRadius || std::abs(z + 1.0) <= kPoleRadius)
        throw Error(ErrorCode::PoleHit, "integrand evaluated at z = +-1");
}

Complex half_angle_factor(Complex z, double c, double s) { return z * z * (s * s) + c * c; }

using LogArgument = Complex (*)(Complex, const ConeParams&);

// Continuous logarithm of g along the straight leg z0 -> z1, starting from
// log0 at t = 0. Nodes are refined until g turns by less than pi/4 between
// neighbours; in between, log g = log g_k + Log(g / g_k).
class BranchTracker {
public:
    BranchTracker(LogArgument g, const ConeParams& params, Complex z0, Complex z1, Complex log0)
        : g_(g), params_(params), z0_(z0), dz_(z1 - z0)
    {
        push(0.0, log0);
        constexpr int kSeed = 16;
        for (int k = 1; k <= kSeed; ++k)
            refine(static_cast<double>(k - 1) / kSeed, static_cast<double>(k) / kSeed, 0);
    }

    Complex point(double t) const { return z0_ + t * dz_; }
    Complex direction() const { return dz_; }
    Complex end_log() const { return logs_.back(); }

    Complex log_at(double t) const
    {
        auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t);
        std::size_t k = it == nodes_.begin() ? 0 : static_cast<std::size_t>(it - nodes_.begin()) - 1;
        if (k + 1 == nodes_.size() && k > 0)
            --k;
        const Complex step = std::log(eval(t) / values_[k]);
        if (std::abs(step.imag()) > kMaxEvalTurn)
            throw Error(ErrorCode::BranchJump, "logarithm turns too fast between tracker nodes");
        return logs_[k] + step;
    }

private:
    Complex eval(double t) const
    {
        const Complex v = g_(point(t), params_);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || v == Complex{})
            throw Error(ErrorCode::PoleHit, "log argument is zero or infinite on the contour");
        return v;
    }

    void push(double t, Complex log_value)
    {
        nodes_.push_back(t);
        values_.push_back(eval(t));
        logs_.push_back(log_value);
    }

    // Appends nodes on (t0, t1]; the node at t0 is already the last one.
    void refine(double t0, double t1, int depth)
    {
        const Complex g0 = values_.back();
        const double tm = 0.5 * (t0 + t1);
        const Complex gm = eval(tm);
        const Complex g1 = eval(t1);
        const Complex first = std::log(gm / g0);
        const Complex second = std::log(g1 / gm);
        if (std::abs(first.imag()) < kMaxNodeTurn && std::abs(second.imag()) < kMaxNodeTurn) {
            push(t1, logs_.back() + first + second);
            return;
        }
        if (depth >= kMaxBisectDepth || nodes_.size() >= kMaxTrackerNodes)
            throw Error(ErrorCode::BranchJump,
                        "cannot resolve the winding of the log argument near t = " +
                            std::to_string(tm));
        refine(t0, tm, depth + 1);
        refine(tm, t1, depth + 1);
    }

    LogArgument g_;
    const ConeParams& params_;
    Complex z0_, dz_;
    std::vector<double> nodes_;
    std::vector<Complex> values_;
    std::vector<Complex> logs_;
};

// Real-axis crossing of the contour: Re zeta, kept away from the real
// singular points -1, 0, 1 by a fifth of the gap it lies in.
double crossing_point(double x)
{
    constexpr std::array<double, 3> singular{-1.0, 0.0, 1.0};
    double lo = -HUGE_VAL, hi = HUGE_VAL;
    for (double s : singular) {
        if (s < x)
            lo = s;
        else if (hi == HUGE_VAL)
            hi = s;
    }
    const bool bounded = std::isfinite(lo) && std::isfinite(hi);
    const double margin = 0.2 * (bounded ? hi - lo : 1.0);
    if (std::isfinite(lo))
        x = std::max(x, lo + margin);
    if (std::isfinite(hi))
        x = std::min(x, hi - margin);
    return x;
}

VolumeResult contour_volume(const ConeParams& params, LogArgument g, VolumeMethod method,
                            const QuadratureOptions& opts)
{
    const Complex zeta = zeta_root(params).value;
    const Complex zbar = std::conj(zeta);
    const Complex cross{crossing_point(zeta.real()), 0.0};

    const Complex start_log = std::log(g(zbar, params));
    BranchTracker lower(g, params, zbar, cross, start_log);
    BranchTracker upper(g, params, cross, zeta, lower.end_log());
    if (std::abs(upper.end_log()) > kEndpointLogTolerance)
        throw Error(ErrorCode::BranchJump,
                    "continued logarithm does not return to 0 at zeta (|log| = " +
                        std::to_string(std::abs(upper.end_log())) + ")");

    VolumeResult out;
    out.zeta = zeta;
    out.method = method;
    Complex raw{};
    for (const BranchTracker* leg : {&lower, &upper}) {
        const auto f = [leg](double t) {
            const Complex z = leg->point(t);
            check_poles(z);
            return kI * leg->log_at(t) / (z * z - 1.0) * leg->direction();
        };
        const auto part = integrate_adaptive<Complex>(f, 0.0, 1.0, opts);
        raw += part.value;
        out.quadrature_error_estimate += part.error;
        out.panels += part.panels;
    }
    out.volume = raw.real();
    out.imag_residual = std::abs(raw.imag());
    return out;
}

} // namespace

std::string_view to_string(VolumeMethod method) noexcept
{
    switch (method) {
    case VolumeMethod::ContourW2: return "contour_w2";
    case VolumeMethod::ContourW1: return "contour_w1";
    case VolumeMethod::DiagonalReal: return "diagonal_real";
    }
    return "unknown";
}

Complex log_argument_w2(Complex z, const ConeParams& params)
{
    const Complex fa = half_angle_factor(z, params.cos_half_alpha(), params.sin_half_alpha());
    const Complex fb = half_angle_factor(z, params.cos_half_beta(), params.sin_half_beta());
    const Complex d = z - z * z;
    return 4.0 * fa * fb / (d * d);
}

Complex log_argument_w1(Complex z, const ConeParams& params)
{
    const Complex fa = half_angle_factor(z, params.cos_half_alpha(), params.sin_half_alpha());
    const Complex fb = half_angle_factor(z, params.cos_half_beta(), params.sin_half_beta());
    return 2.0 * fa * fb / (z * z * (1.0 - z));
}

Complex integrand_w2(Complex z, const ConeParams& params)
{
    check_poles(z);
    return kI * std::log(log_argument_w2(z, params)) / (z * z - 1.0);
}

Complex integrand_w1(Complex z, const ConeParams& params)
{
    check_poles(z);
    return kI * std::log(log_argument_w1(z, params)) / (z * z - 1.0);
}

VolumeResult volume_w2(const ConeParams& params, const QuadratureOptions& opts)
{
    if (params.p() != 2)
        throw Error(ErrorCode::InvalidArgument, "volume_w2 needs p = 2");
    return contour_volume(params, &log_argument_w2, VolumeMethod::ContourW2, opts);
}

VolumeResult volume_w1(const ConeParams& params, const QuadratureOptions& opts)
{
    if (params.p() != 1)
        throw Error(ErrorCode::InvalidArgument, "volume_w1 needs p = 1");
    return contour_volume(params, &log_argument_w1, VolumeMethod::ContourW1, opts);
}

VolumeResult volume(const ConeParams& params, const QuadratureOptions& opts)
{
    switch (params.p()) {
    case 1: return volume_w1(params, opts);
    case 2: return volume_w2(params, opts);
    default:
        throw Error(ErrorCode::InvalidArgument,
                    "volume is available for p = 1, 2 only (got p = " +
                        std::to_string(params.p()) + ")");
    }
}

VolumeResult volume_w2_diagonal(double alpha, const QuadratureOptions& opts)
{
    if (!(alpha > 0.0 && alpha <= std::numbers::pi))
        throw Error(ErrorCode::InvalidArgument, "diagonal volume needs 0 < alpha <= pi");
    if (alpha >= euclidean_alpha0())
        throw Error(ErrorCode::OutOfRegime, "W2(alpha, alpha) is not hyperbolic for alpha >= alpha0");

    const double a0 = euclidean_a0();
    const double r2 = (11.0 + std::sqrt(128.0)) / 7.0;
    const double a = 1.0 / std::tan(0.5 * alpha);

    // t = a0 + w^2 removes the square-root zero at the lower limit:
    // 7t^4 + 22t^2 - 1 = 7 w^2 (2 a0 + w^2)(t^2 + r2).
    const auto f = [a0, r2](double w) {
        if (w == 0.0)
            return 0.0;
        const double t = a0 + w * w;
        const double t2 = t * t;
        const double q = t * (5.0 + t2);
        const double x = w * std::sqrt(7.0 * (2.0 * a0 + w * w) * (t2 + r2)) / q;
        // 1 - x^2 = (t^2 + 1)^3 / (t^2 (5 + t^2)^2), exact and cancellation free.
        const double one_minus_x = (t2 + 1.0) * (t2 + 1.0) * (t2 + 1.0) / (q * q) / (1.0 + x);
        const double artanh = 0.5 * std::log1p(2.0 * x / one_minus_x);
        return 4.0 * artanh * 2.0 * w / (t2 + 1.0);
    };
    const auto res = integrate_adaptive<double>(f, 0.0, std::sqrt(a - a0), opts);

    VolumeResult out;
    out.volume = res.value;
    out.quadrature_error_estimate = res.error;
    out.method = VolumeMethod::DiagonalReal;
    out.panels = res.panels;
    out.zeta = zeta_root(ConeParams(2, alpha, alpha)).value;
    return out;
}

std::pair<double, double> schlafli_residual(const ConeParams& params, double h,
                                            const QuadratureOptions& opts)
{
    if (!(h > 0.0))
        throw Error(ErrorCode::InvalidArgument, "Schlafli step h must be positive");
    if (params.p() != 1 && params.p() != 2)
        throw Error(ErrorCode::InvalidArgument, "Schlafli residual needs p = 1 or 2");
    const double al = params.alpha(), be = params.beta();
    const double dva = (volume(params.with_angles(al + h, be), opts).volume -
                        volume(params.with_angles(al - h, be), opts).volume) / (2.0 * h);
    const double dvb = (volume(params.with_angles(al, be + h), opts).volume -
                        volume(params.with_angles(al, be - h), opts).volume) / (2.0 * h);
    const auto [ra, rb] = real_lengths(params, zeta_root(params).value);
    return {std::abs(dva + 0.5 * ra), std::abs(dvb + 0.5 * rb)};
}

} // namespace twistvol
