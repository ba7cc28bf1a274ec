#pragma once

#include <complex>
#include <random>

#include <doctest.h>

#include "twistvol/error.hpp"
#include "twistvol/mat2c.hpp"

// Evaluates expr and checks that it throws twistvol::Error with the given code.
#define CHECK_ERROR_CODE(expr, expected)                                                   \
    do {                                                                                   \
        bool thrown_ = false;                                                              \
        try {                                                                              \
            (void)(expr);                                                                  \
        } catch (const twistvol::Error& e_) {                                              \
            thrown_ = true;                                                                \
            CHECK_MESSAGE(e_.code() == (expected), e_.what());                             \
        }                                                                                  \
        CHECK_MESSAGE(thrown_, "expected an Error from " #expr);                           \
    } while (0)

namespace testing {

inline twistvol::Complex random_complex(std::mt19937_64& rng, double scale = 1.0)
{
    std::uniform_real_distribution<double> d(-scale, scale);
    return {d(rng), d(rng)};
}

// Random SL(2,C) element with entries of order 1.
inline twistvol::Mat2C random_sl2(std::mt19937_64& rng)
{
    using twistvol::Complex;
    while (true) {
        const Complex a = random_complex(rng), b = random_complex(rng), c = random_complex(rng);
        if (std::abs(a) < 0.3)
            continue;
        const Complex d = (1.0 + b * c) / a;
        return {a, b, c, d};
    }
}

inline double rel_diff(twistvol::Complex x, twistvol::Complex y)
{
    return std::abs(x - y) / (1.0 + std::abs(y));
}

} // namespace testing
