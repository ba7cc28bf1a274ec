#include "twistvol/sweep.hpp"

#include <numbers>

#include "twistvol/volume.hpp"

namespace twistvol {

PointRecord evaluate_point(int p, double alpha, double beta, const Quantities& quantities,
                           const QuadratureOptions& opts)
{
    PointRecord rec;
    rec.p = p;
    rec.alpha = alpha;
    rec.beta = beta;
    try {
        const ConeParams params(p, alpha, beta);
        rec.regime = classify_regime(params);
        if (rec.regime != Regime::Hyperbolic)
            return rec;

        if (p <= 2) {
            const Complex zeta = zeta_root(params).value;
            if (quantities.zeta)
                rec.zeta = zeta;
            if (quantities.volume) {
                const VolumeResult v = volume(params, opts);
                rec.volume = v.volume;
                rec.imag_residual = v.imag_residual;
                rec.quadrature_error = v.quadrature_error_estimate;
            }
            if (quantities.lengths) {
                const auto [ra, rb] = real_lengths(params, zeta);
                rec.r_alpha = ra;
                rec.r_beta = rb;
            }
        }
        if (!params.has_cusp() && (quantities.residuals || (p > 2 && quantities.lengths))) {
            const LengthReport report = compute_lengths(params);
            if (quantities.residuals)
                rec.residuals = report.residuals;
            if (p > 2 && quantities.lengths) {
                rec.r_alpha = report.r_alpha;
                rec.r_beta = report.r_beta;
            }
        }
    } catch (const Error& e) {
        rec.error = e.code();
        rec.error_message = e.what();
    }
    return rec;
}

double AngleRange::value(int i) const noexcept
{
    if (steps <= 1)
        return start;
    if (i == steps - 1)
        return stop;
    return start + (stop - start) * static_cast<double>(i) / (steps - 1);
}

std::vector<GridPoint> grid_points(const SweepSpec& spec)
{
    const auto check = [](const AngleRange& r, const char* name) {
        if (r.steps < 1)
            throw Error(ErrorCode::InvalidArgument, std::string(name) + " steps must be >= 1");
        for (double x : {r.start, r.stop})
            if (!(x >= 0.0 && x <= std::numbers::pi))
                throw Error(ErrorCode::InvalidArgument,
                            std::string(name) + " range must lie in [0, pi]");
    };
    check(spec.alpha, "alpha");
    std::vector<GridPoint> pts;
    if (spec.diagonal) {
        for (int i = 0; i < spec.alpha.steps; ++i)
            pts.push_back({spec.alpha.value(i), spec.alpha.value(i)});
        return pts;
    }
    check(spec.beta, "beta");
    pts.reserve(static_cast<std::size_t>(spec.alpha.steps) * spec.beta.steps);
    for (int i = 0; i < spec.alpha.steps; ++i)
        for (int j = 0; j < spec.beta.steps; ++j)
            pts.push_back({spec.alpha.value(i), spec.beta.value(j)});
    return pts;
}

std::vector<PointRecord> sweep_serial(const SweepSpec& spec)
{
    const auto pts = grid_points(spec);
    std::vector<PointRecord> out;
    out.reserve(pts.size());
    for (const GridPoint& g : pts)
        out.push_back(evaluate_point(spec.p, g.alpha, g.beta, spec.quantities, spec.quadrature));
    return out;
}

std::vector<PointRecord> sweep_parallel(const SweepSpec& spec)
{
    const auto pts = grid_points(spec);
    std::vector<PointRecord> out(pts.size());
    const long n = static_cast<long>(pts.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k)
        out[k] = evaluate_point(spec.p, pts[k].alpha, pts[k].beta, spec.quantities, spec.quadrature);
    return out;
}

} // namespace twistvol
