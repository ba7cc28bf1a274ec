#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twistvol/mat2c.hpp"
#include "twistvol/params.hpp"

namespace twistvol {

enum class Letter : std::uint8_t { S, SInv, T, TInv };

Letter inverse(Letter x) noexcept;

/// Freely reduced word in the meridians s, t and their inverses.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(std::vector<Letter> letters);

    /// Compact form: lowercase s/t are generators, uppercase S/T their inverses.
    static GroupWord parse(std::string_view compact);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    GroupWord inverse() const;
    /// Exchange s and t (the longitude of the other component).
    GroupWord swap_generators() const;
    GroupWord power(int n) const;

    std::string compact() const;
    /// Human form, e.g. "s t s^-1 t^-1".
    std::string to_string() const;

    friend GroupWord operator*(const GroupWord& x, const GroupWord& y);
    friend bool operator==(const GroupWord&, const GroupWord&) = default;

private:
    std::vector<Letter> letters_;
};

/// [x, y] = x y x^-1 y^-1
GroupWord commutator(const GroupWord& x, const GroupWord& y);

/// Longitude l_s of the s-component of W_p, expanded from the commutator
/// powers and freely reduced. p >= 1.
GroupWord longitude_word(int p);

struct Generators {
    Mat2C s;
    Mat2C t;
};

/// Meridian holonomies with traces 2cos(alpha/2), 2cos(beta/2) whose axes are
/// at complex distance rho. Cusp angles give the identity, so they are
/// rejected with CuspAngle.
Generators build_generators(const ConeParams& params, Complex rho);

Mat2C evaluate_word(const GroupWord& word, const Mat2C& s, const Mat2C& t);

/// Line matrix of the common perpendicular of the generator axes.
inline Mat2C common_normal() noexcept { return Mat2C::diag(kI, -kI); }

/// tr(N L_S) at u = cosh(rho); zero exactly when S and L_S commute.
Complex commutation_residual(const ConeParams& params, Complex u);

struct LemmaResiduals {
    double trace_nl;         // |tr(N L)|
    double commutator;       // |S L - L S|
    double reflection;       // |N L N^-1 - L^-1|
};

/// All three equivalent commutation criteria at u = cosh(rho).
LemmaResiduals lemma_residuals(const ConeParams& params, Complex u);

/// Holonomy of l_s at u = cosh(rho).
Mat2C longitude_holonomy(const ConeParams& params, Complex u);

} // namespace twistvol
