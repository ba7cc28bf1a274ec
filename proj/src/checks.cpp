#include "twistvol/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "twistvol/distance_eq.hpp"
#include "twistvol/holonomy.hpp"
#include "twistvol/lengths.hpp"
#include "twistvol/volume.hpp"

namespace twistvol {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<int> ps_for(std::optional<int> p, std::initializer_list<int> allowed)
{
    std::vector<int> out;
    for (int q : allowed)
        if (!p || *p == q)
            out.push_back(q);
    return out;
}

std::string where(int p, double alpha, double beta)
{
    std::ostringstream os;
    os << "p=" << p << " alpha=" << alpha << " beta=" << beta;
    return os.str();
}

// Accumulates residuals; the first failing case (or error) becomes the detail.
class Tally {
public:
    Tally(std::string name, double threshold)
    {
        res_.name = std::move(name);
        res_.threshold = threshold;
        res_.passed = true;
    }

    void add(double value, const std::string& label)
    {
        ++res_.cases;
        if (!(value <= res_.worst))
            res_.worst = std::isnan(value) ? INFINITY : std::max(res_.worst, value);
        if (!(value <= res_.threshold) && res_.passed) {
            res_.passed = false;
            std::ostringstream os;
            os << label << ": residual " << value;
            res_.detail = os.str();
        }
    }

    void fail(const std::string& label, const std::exception& e)
    {
        ++res_.cases;
        res_.worst = INFINITY;
        if (res_.passed) {
            res_.passed = false;
            res_.detail = label + ": " + e.what();
        }
    }

    // Runs body, recording an exception as a failed case.
    void guarded(const std::string& label, const std::function<void()>& body)
    {
        try {
            body();
        } catch (const std::exception& e) {
            fail(label, e);
        }
    }

    SuiteResult finish() { return std::move(res_); }

private:
    SuiteResult res_;
};

SuiteResult rule_suite(std::string_view name, double RuleResiduals::*field, std::optional<int> p)
{
    Tally tally(std::string(name), 1e-9);
    for (int q : ps_for(p, {1, 2, 3}))
        for (double al : check_grid_angles())
            for (double be : check_grid_angles()) {
                const std::string label = where(q, al, be);
                tally.guarded(label, [&] {
                    const LengthReport rep = compute_lengths(ConeParams(q, al, be));
                    tally.add(rep.residuals.*field, label);
                });
            }
    return tally.finish();
}

SuiteResult oracle_suite(std::optional<int> p)
{
    // Lemma criterion at 1e-9 and the trace convention at 1e-8, reported as
    // a single ratio against the respective bound.
    Tally tally("oracle", 1.0);
    for (int q : ps_for(p, {1, 2, 3}))
        for (double al : check_grid_angles())
            for (double be : check_grid_angles()) {
                const std::string label = where(q, al, be);
                tally.guarded(label, [&] {
                    const ConeParams params(q, al, be);
                    const Complex u = distance_root(params).value;
                    const double lemma = lemma_residuals(params, u).trace_nl;
                    const Complex gamma = complex_length(params, u, Component::Alpha);
                    const Complex tr = longitude_holonomy(params, u).trace();
                    const double sign = std::abs(tr + 2.0 * std::cosh(0.5 * gamma));
                    tally.add(std::max(lemma / 1e-9, sign / 1e-8), label);
                });
            }
    return tally.finish();
}

SuiteResult schlafli_suite(std::optional<int> p, const QuadratureOptions& opts)
{
    Tally tally("schlafli", 1e-5);
    for (int q : ps_for(p, {1, 2})) {
        std::mt19937_64 rng(20240611u + static_cast<unsigned>(q));
        std::uniform_real_distribution<double> angle(0.2, 2.2);
        for (int k = 0; k < 10; ++k) {
            const double al = angle(rng), be = angle(rng);
            const std::string label = where(q, al, be);
            tally.guarded(label, [&] {
                const auto [ra, rb] = schlafli_residual(ConeParams(q, al, be), 1e-4, opts);
                tally.add(std::max(ra, rb), label);
            });
        }
    }
    return tally.finish();
}

SuiteResult halving_suite(std::optional<int> p, const QuadratureOptions& opts)
{
    Tally tally("halving", 1e-6);
    if (!p || *p == 2)
        tally.guarded("p=2", [&] {
            const double full = volume_w2(ConeParams(2, 0.0, 0.0), opts).volume;
            const double half = volume_w2(ConeParams(2, kPi / 2, kPi / 2), opts).volume;
            tally.add(std::abs(full - 2.0 * half), "p=2 V(0,0) - 2V(pi/2,pi/2)");
        });
    return tally.finish();
}

SuiteResult diagonal_suite(std::optional<int> p, const QuadratureOptions& opts)
{
    Tally tally("diagonal", 1e-8);
    if (!p || *p == 2)
        for (double al : {0.5, 1.0, 1.5, 2.0, 2.5}) {
            const std::string label = where(2, al, al);
            tally.guarded(label, [&] {
                const double real_form = volume_w2_diagonal(al, opts).volume;
                const double contour = volume_w2(ConeParams(2, al, al), opts).volume;
                tally.add(std::abs(real_form - contour), label);
            });
        }
    return tally.finish();
}

SuiteResult realness_suite(std::optional<int> p, const QuadratureOptions& opts)
{
    // |Im| / (1 + V) of the raw contour integral.
    Tally tally("realness", 1e-8);
    for (int q : ps_for(p, {1, 2}))
        for (double al : check_grid_angles())
            for (double be : check_grid_angles()) {
                const std::string label = where(q, al, be);
                tally.guarded(label, [&] {
                    const VolumeResult v = volume(ConeParams(q, al, be), opts);
                    tally.add(v.imag_residual / (1.0 + v.volume), label);
                });
            }
    return tally.finish();
}

} // namespace

const std::vector<double>& check_grid_angles()
{
    static const std::vector<double> grid{0.3, 0.8, 1.3, 1.8, 2.3};
    return grid;
}

const std::vector<std::string_view>& suite_names()
{
    static const std::vector<std::string_view> names{
        "tangent-rule", "sine-rule", "cosine-rule", "oracle",
        "schlafli",     "halving",   "diagonal",    "realness"};
    return names;
}

SuiteResult run_suite(std::string_view name, std::optional<int> p, const QuadratureOptions& opts)
{
    if (name == "tangent-rule")
        return rule_suite(name, &RuleResiduals::tangent, p);
    if (name == "sine-rule")
        return rule_suite(name, &RuleResiduals::sine, p);
    if (name == "cosine-rule")
        return rule_suite(name, &RuleResiduals::cosine, p);
    if (name == "oracle")
        return oracle_suite(p);
    if (name == "schlafli")
        return schlafli_suite(p, opts);
    if (name == "halving")
        return halving_suite(p, opts);
    if (name == "diagonal")
        return diagonal_suite(p, opts);
    if (name == "realness")
        return realness_suite(p, opts);
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

std::vector<SuiteResult> run_all_suites(std::optional<int> p, const QuadratureOptions& opts)
{
    std::vector<SuiteResult> out;
    for (std::string_view name : suite_names())
        out.push_back(run_suite(name, p, opts));
    return out;
}

} // namespace twistvol
