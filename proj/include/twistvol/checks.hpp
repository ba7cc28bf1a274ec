#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistvol/quadrature.hpp"

namespace twistvol {

struct SuiteResult {
    std::string name;
    bool passed = false;
    /// Largest residual seen, compared against threshold.
    double worst = 0.0;
    double threshold = 0.0;
    int cases = 0;
    std::string detail;
};

/// tangent-rule, sine-rule, cosine-rule, oracle, schlafli, halving, diagonal, realness.
const std::vector<std::string_view>& suite_names();

/// Run one suite, restricted to a single p when given. InvalidArgument for an
/// unknown name. A suite with no applicable p passes vacuously with 0 cases.
SuiteResult run_suite(std::string_view name, std::optional<int> p = std::nullopt,
                      const QuadratureOptions& opts = {});

std::vector<SuiteResult> run_all_suites(std::optional<int> p = std::nullopt,
                                        const QuadratureOptions& opts = {});

/// The 5 x 5 grid of strictly positive angles used by the rule and oracle suites.
const std::vector<double>& check_grid_angles();

} // namespace twistvol
