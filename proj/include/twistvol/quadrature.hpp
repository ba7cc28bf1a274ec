#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "twistvol/error.hpp"

namespace twistvol {

struct QuadratureOptions {
    double abs_tol = 1e-14;
    double rel_tol = 1e-13;
    /// Uniform panels before adaptive bisection starts.
    int initial_panels = 8;
    int max_panels = 20000;
    /// Error estimate above which the result is rejected (QuadratureFailure).
    double failure_threshold = 1e-9;
};

template <class T>
struct QuadratureResult {
    T value{};
    double error = 0.0;
    int panels = 0;
    int evaluations = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule; nodes on [-1, 1], in
// decreasing order with the centre last. Gauss nodes are the odd entries.
inline constexpr std::array<double, 8> kKronrodNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct Panel {
    double lo, hi;
    T value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class T, class F>
Panel<T> gauss_kronrod_15(F& f, double lo, double hi)
{
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const T fc = f(centre);
    T kronrod = kKronrodWeights[7] * fc;
    T gauss = kGaussWeights[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const T pair = f(centre - dx) + f(centre + dx);
        kronrod += kKronrodWeights[j] * pair;
        if (j % 2 == 1)
            gauss += kGaussWeights[j / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

} // namespace detail

/// Globally adaptive G7/K15 integration of f over [lo, hi]. T may be real or
/// complex; the error estimate is |K15 - G7| summed over panels.
template <class T, class F>
QuadratureResult<T> integrate_adaptive(F&& f, double lo, double hi,
                                       const QuadratureOptions& opts = {})
{
    using Panel = detail::Panel<T>;
    if (opts.initial_panels < 1)
        throw Error(ErrorCode::InvalidArgument, "initial_panels must be >= 1");
    QuadratureResult<T> out;
    if (lo == hi)
        return out;

    std::vector<Panel> heap;
    heap.reserve(static_cast<std::size_t>(opts.max_panels) + 1);
    const double width = (hi - lo) / opts.initial_panels;
    for (int k = 0; k < opts.initial_panels; ++k) {
        const double a = lo + k * width;
        const double b = k + 1 == opts.initial_panels ? hi : a + width;
        heap.push_back(detail::gauss_kronrod_15<T>(f, a, b));
    }
    std::make_heap(heap.begin(), heap.end());
    out.evaluations = 15 * opts.initial_panels;

    const auto totals = [&heap] {
        T value{};
        double error = 0.0;
        for (const Panel& p : heap) {
            value += p.value;
            error += p.error;
        }
        return std::pair<T, double>{value, error};
    };

    auto [value, error] = totals();
    while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(value)) &&
           static_cast<int>(heap.size()) < opts.max_panels) {
        std::pop_heap(heap.begin(), heap.end());
        const Panel worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end());
            break;
        }
        for (const Panel& half : {detail::gauss_kronrod_15<T>(f, worst.lo, mid),
                                  detail::gauss_kronrod_15<T>(f, mid, worst.hi)}) {
            value += half.value;
            error += half.error;
            heap.push_back(half);
            std::push_heap(heap.begin(), heap.end());
        }
        value -= worst.value;
        error -= worst.error;
        out.evaluations += 30;
    }
    // Re-sum to drop the drift of the running updates.
    std::tie(value, error) = totals();
    out.value = value;
    out.error = error;
    out.panels = static_cast<int>(heap.size());
    if (!(error <= opts.failure_threshold))
        throw Error(ErrorCode::QuadratureFailure,
                    "error estimate " + std::to_string(error) + " after " +
                        std::to_string(out.panels) + " panels");
    return out;
}

} // namespace twistvol
