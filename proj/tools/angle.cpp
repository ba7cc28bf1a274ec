#include "angle.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "twistvol/error.hpp"

namespace twistvol::cli {

namespace {

[[noreturn]] void bad(std::string_view text)
{
    throw Error(ErrorCode::InvalidArgument, "cannot parse angle '" + std::string(text) + "'");
}

double number(std::string_view s, std::string_view whole)
{
    if (s.empty())
        bad(whole);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(v))
        bad(whole);
    return v;
}

// Product of factors separated by '*', a bare "pi" counting as one factor
// and "2pi" as two.
double product(std::string_view s, std::string_view whole, bool& has_pi)
{
    double v = 1.0;
    while (true) {
        const std::size_t star = s.find('*');
        std::string_view f = s.substr(0, star);
        if (f.size() >= 2 && f.substr(f.size() - 2) == "pi") {
            has_pi = true;
            v *= std::numbers::pi;
            f.remove_suffix(2);
            if (!f.empty())
                v *= number(f, whole);
        } else {
            v *= number(f, whole);
        }
        if (star == std::string_view::npos)
            return v;
        s.remove_prefix(star + 1);
    }
}

} // namespace

double parse_angle(std::string_view text, bool in_degrees)
{
    std::string compact;
    for (char c : text)
        if (c != ' ')
            compact.push_back(static_cast<char>(c == 'P' || c == 'I' ? c + ('a' - 'A') : c));
    const std::string_view s = compact;
    if (s.empty())
        bad(text);

    bool has_pi = false;
    double value = 0.0;
    if (const std::size_t slash = s.find('/'); slash == std::string_view::npos) {
        value = product(s, text, has_pi);
    } else {
        // "a/b*pi" divides before multiplying; "a*pi/b" divides the whole product.
        const std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        double tail = 1.0;
        if (const std::size_t star = den.find('*'); star != std::string_view::npos) {
            tail = product(den.substr(star + 1), text, has_pi);
            den = den.substr(0, star);
        }
        const double d = product(den, text, has_pi);
        if (d == 0.0)
            bad(text);
        value = product(num, text, has_pi) / d * tail;
    }
    if (in_degrees && !has_pi)
        value *= std::numbers::pi / 180.0;
    return value;
}

} // namespace twistvol::cli
