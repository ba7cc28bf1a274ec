#pragma once

#include <utility>

#include "twistvol/params.hpp"
#include "twistvol/mat2c.hpp"

namespace twistvol {

enum class Component { Alpha, Beta };

struct RuleResiduals {
    double tangent = 0.0;
    double sine = 0.0;
    double cosine = 0.0;

    double worst() const noexcept;
};

/// Complex and real lengths of the two singular geodesics, gamma = r + i phi.
struct LengthReport {
    Complex gamma_alpha, gamma_beta;
    double r_alpha = 0.0, r_beta = 0.0;
    double phi_alpha = 0.0, phi_beta = 0.0;
    RuleResiduals residuals;
};

/// gamma from u = i cot(beta/2) coth(gamma_alpha/4) (and the mirrored relation
/// for Beta). Among the 4*pi*i translates and the sign flip, the first branch
/// with Re gamma > 0, Im gamma in (-2pi, 2pi) and cosh(gamma/2) = -tr(L)/2
/// against the holonomy longitude is returned; BranchFailure otherwise.
Complex complex_length(const ConeParams& params, Complex u, Component which);

/// Real lengths r = 2i arctan(a/zeta) - 2i arctan(a/conj(zeta)) for both
/// components. A cusped component has length 0. Throws NonRealLength if the
/// expression is not real to 1e-8, InvalidArgument if Im zeta <= 0.
std::pair<double, double> real_lengths(const ConeParams& params, Complex zeta);

/// |lhs - rhs| of the Tangent, Sine and Cosine rules.
RuleResiduals rule_residuals(const LengthReport& report, const ConeParams& params);

/// Full pipeline for p in {1, 2, 3} and strictly positive angles: distance
/// root, both complex lengths, rule residuals.
LengthReport compute_lengths(const ConeParams& params);

} // namespace twistvol
