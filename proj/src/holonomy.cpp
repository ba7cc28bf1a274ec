#include "twistvol/holonomy.hpp"

#include <cmath>

namespace twistvol {

Letter inverse(Letter x) noexcept
{
    switch (x) {
    case Letter::S: return Letter::SInv;
    case Letter::SInv: return Letter::S;
    case Letter::T: return Letter::TInv;
    case Letter::TInv: return Letter::T;
    }
    return x;
}

namespace {

Letter swap_letter(Letter x) noexcept
{
    switch (x) {
    case Letter::S: return Letter::T;
    case Letter::SInv: return Letter::TInv;
    case Letter::T: return Letter::S;
    case Letter::TInv: return Letter::SInv;
    }
    return x;
}

char compact_char(Letter x) noexcept
{
    switch (x) {
    case Letter::S: return 's';
    case Letter::SInv: return 'S';
    case Letter::T: return 't';
    case Letter::TInv: return 'T';
    }
    return '?';
}

} // namespace

GroupWord::GroupWord(std::vector<Letter> letters)
{
    letters_.reserve(letters.size());
    for (Letter x : letters) {
        if (!letters_.empty() && letters_.back() == twistvol::inverse(x))
            letters_.pop_back();
        else
            letters_.push_back(x);
    }
}

GroupWord GroupWord::parse(std::string_view compact)
{
    std::vector<Letter> out;
    out.reserve(compact.size());
    for (char ch : compact) {
        switch (ch) {
        case 's': out.push_back(Letter::S); break;
        case 'S': out.push_back(Letter::SInv); break;
        case 't': out.push_back(Letter::T); break;
        case 'T': out.push_back(Letter::TInv); break;
        case ' ': break;
        default:
            throw Error(ErrorCode::InvalidArgument,
                        std::string("unknown generator '") + ch + "' in word");
        }
    }
    return GroupWord(std::move(out));
}

GroupWord GroupWord::inverse() const
{
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (Letter& x : out)
        x = twistvol::inverse(x);
    return GroupWord(std::move(out));
}

GroupWord GroupWord::swap_generators() const
{
    std::vector<Letter> out = letters_;
    for (Letter& x : out)
        x = swap_letter(x);
    return GroupWord(std::move(out));
}

GroupWord GroupWord::power(int n) const
{
    const GroupWord base = n < 0 ? inverse() : *this;
    GroupWord out;
    for (int k = 0; k < std::abs(n); ++k)
        out = out * base;
    return out;
}

std::string GroupWord::compact() const
{
    std::string out;
    out.reserve(letters_.size());
    for (Letter x : letters_)
        out.push_back(compact_char(x));
    return out;
}

std::string GroupWord::to_string() const
{
    std::string out;
    for (Letter x : letters_) {
        if (!out.empty())
            out.push_back(' ');
        switch (x) {
        case Letter::S: out += "s"; break;
        case Letter::SInv: out += "s^-1"; break;
        case Letter::T: out += "t"; break;
        case Letter::TInv: out += "t^-1"; break;
        }
    }
    return out;
}

GroupWord operator*(const GroupWord& x, const GroupWord& y)
{
    std::vector<Letter> joined = x.letters_;
    joined.insert(joined.end(), y.letters_.begin(), y.letters_.end());
    return GroupWord(std::move(joined));
}

GroupWord commutator(const GroupWord& x, const GroupWord& y)
{
    return x * y * x.inverse() * y.inverse();
}

GroupWord longitude_word(int p)
{
    if (p < 1)
        throw Error(ErrorCode::InvalidArgument, "longitude_word needs p >= 1");
    const GroupWord s = GroupWord::parse("s");
    const GroupWord t = GroupWord::parse("t");
    if (p % 2 == 1) {
        const int k = (p + 1) / 2;
        return commutator(s, t).power(k) * commutator(s, t.inverse()).power(k);
    }
    const int k = p / 2;
    return s.inverse() * commutator(t, s).power(k) * t * s * t *
           commutator(s.inverse(), t.inverse()).power(k);
}

Generators build_generators(const ConeParams& params, Complex rho)
{
    if (params.has_cusp())
        throw Error(ErrorCode::CuspAngle, "holonomy generators need alpha, beta > 0");
    const Complex e = std::exp(0.5 * rho);
    const Complex ei = 1.0 / e;
    const double ca = params.cos_half_alpha(), sa = params.sin_half_alpha();
    const double cb = params.cos_half_beta(), sb = params.sin_half_beta();
    return {Mat2C{ca, kI * e * sa, kI * ei * sa, ca},
            Mat2C{cb, kI * ei * sb, kI * e * sb, cb}};
}

Mat2C evaluate_word(const GroupWord& word, const Mat2C& s, const Mat2C& t)
{
    // Generators are unimodular, so the adjugate is the inverse.
    const Mat2C s_inv{s.d, -s.b, -s.c, s.a};
    const Mat2C t_inv{t.d, -t.b, -t.c, t.a};
    Mat2C out = Mat2C::identity();
    for (Letter x : word.letters()) {
        switch (x) {
        case Letter::S: out = out * s; break;
        case Letter::SInv: out = out * s_inv; break;
        case Letter::T: out = out * t; break;
        case Letter::TInv: out = out * t_inv; break;
        }
    }
    return out;
}

namespace {

Complex distance_from_u(Complex u)
{
    const Tolerances& tol = default_tolerances();
    if (std::abs(u - 1.0) <= tol.structural || std::abs(u + 1.0) <= tol.structural)
        throw Error(ErrorCode::DegenerateDistance, "u = +-1 makes the generator axes coincide");
    return arccosh(u);
}

} // namespace

Mat2C longitude_holonomy(const ConeParams& params, Complex u)
{
    const Generators g = build_generators(params, distance_from_u(u));
    return evaluate_word(longitude_word(params.p()), g.s, g.t);
}

Complex commutation_residual(const ConeParams& params, Complex u)
{
    const Complex rho = distance_from_u(u);
    const GroupWord word = longitude_word(params.p());
    const Mat2C n = common_normal();
    Complex best{};
    double best_abs = INFINITY;
    // The axis orientation is only fixed up to rho -> -rho; keep the better one.
    for (Complex r : {rho, -rho}) {
        const Generators g = build_generators(params, r);
        const Complex res = (n * evaluate_word(word, g.s, g.t)).trace();
        if (std::abs(res) < best_abs) {
            best = res;
            best_abs = std::abs(res);
        }
    }
    return best;
}

LemmaResiduals lemma_residuals(const ConeParams& params, Complex u)
{
    const Generators g = build_generators(params, distance_from_u(u));
    const Mat2C l = evaluate_word(longitude_word(params.p()), g.s, g.t);
    const Mat2C n = common_normal();
    const Mat2C n_inv = -n;
    const Mat2C l_inv{l.d, -l.b, -l.c, l.a};
    return {std::abs((n * l).trace()), max_abs_diff(g.s * l, l * g.s),
            max_abs_diff(n * l * n_inv, l_inv)};
}

} // namespace twistvol
