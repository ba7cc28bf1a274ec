#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistvol/distance_eq.hpp"
#include "twistvol/error.hpp"
#include "twistvol/lengths.hpp"
#include "twistvol/quadrature.hpp"

namespace twistvol {

struct Quantities {
    bool volume = true;
    bool lengths = true;
    bool zeta = true;
    bool regime = true;
    bool residuals = true;
};

/// One evaluated grid point. Fields stay empty when not requested, not
/// defined for this p, or when the point is outside the hyperbolic regime.
struct PointRecord {
    int p = 0;
    double alpha = 0.0, beta = 0.0;
    Regime regime = Regime::Hyperbolic;
    std::optional<double> volume, imag_residual, quadrature_error;
    std::optional<double> r_alpha, r_beta;
    std::optional<Complex> zeta;
    std::optional<RuleResiduals> residuals;
    std::optional<ErrorCode> error;
    std::string error_message;
};

PointRecord evaluate_point(int p, double alpha, double beta, const Quantities& quantities = {},
                           const QuadratureOptions& opts = {});

struct AngleRange {
    double start = 0.0, stop = 0.0;
    int steps = 1;

    /// start for steps = 1, otherwise evenly spaced with both ends included.
    double value(int i) const noexcept;
};

struct SweepSpec {
    int p = 2;
    AngleRange alpha, beta;
    /// alpha = beta along alpha; beta is ignored.
    bool diagonal = false;
    Quantities quantities;
    QuadratureOptions quadrature;
};

struct GridPoint {
    double alpha, beta;
};

/// Row-major, alpha outer. InvalidArgument for steps < 1 or angles outside [0, pi].
std::vector<GridPoint> grid_points(const SweepSpec& spec);

std::vector<PointRecord> sweep_serial(const SweepSpec& spec);
/// Same records and order as sweep_serial, evaluated with OpenMP when available.
std::vector<PointRecord> sweep_parallel(const SweepSpec& spec);

} // namespace twistvol
