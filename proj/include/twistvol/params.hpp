#pragma once

namespace twistvol {

/// Twist index p and cone angles (alpha, beta) in [0, pi], with the half-angle
/// sines and cosines cached. cot(alpha/2) is +inf at a cusp (alpha = 0).
class ConeParams {
public:
    /// Throws InvalidArgument unless p >= 1 and 0 <= alpha, beta <= pi.
    ConeParams(int p, double alpha, double beta);

    int p() const noexcept { return p_; }
    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }

    double cos_half_alpha() const noexcept { return cos_half_alpha_; }
    double sin_half_alpha() const noexcept { return sin_half_alpha_; }
    double cos_half_beta() const noexcept { return cos_half_beta_; }
    double sin_half_beta() const noexcept { return sin_half_beta_; }

    double cot_half_alpha() const noexcept;
    double cot_half_beta() const noexcept;

    bool alpha_is_cusp() const noexcept { return alpha_ == 0.0; }
    bool beta_is_cusp() const noexcept { return beta_ == 0.0; }
    bool has_cusp() const noexcept { return alpha_is_cusp() || beta_is_cusp(); }

    ConeParams with_angles(double alpha, double beta) const { return {p_, alpha, beta}; }
    ConeParams swapped() const { return {p_, beta_, alpha_}; }

private:
    int p_;
    double alpha_, beta_;
    double cos_half_alpha_, sin_half_alpha_;
    double cos_half_beta_, sin_half_beta_;
};

} // namespace twistvol
