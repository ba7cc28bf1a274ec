#pragma once

#include <complex>

#include "twistvol/error.hpp"

namespace twistvol {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Dense 2x2 complex matrix, row-major entries [[a, b], [c, d]].
struct Mat2C {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    static constexpr Mat2C identity() noexcept { return {}; }
    static constexpr Mat2C diag(Complex x, Complex y) noexcept { return {x, 0.0, 0.0, y}; }

    Complex trace() const noexcept { return a + d; }
    Complex det() const noexcept { return a * d - b * c; }

    friend bool operator==(const Mat2C&, const Mat2C&) = default;
};

Mat2C operator*(const Mat2C& x, const Mat2C& y) noexcept;
Mat2C operator+(const Mat2C& x, const Mat2C& y) noexcept;
Mat2C operator-(const Mat2C& x, const Mat2C& y) noexcept;
Mat2C operator-(const Mat2C& x) noexcept;
Mat2C operator*(Complex s, const Mat2C& x) noexcept;

inline Mat2C mul(const Mat2C& x, const Mat2C& y) noexcept { return x * y; }

/// Largest entrywise modulus of x - y.
double max_abs_diff(const Mat2C& x, const Mat2C& y) noexcept;
/// Largest entrywise modulus.
double max_abs(const Mat2C& x) noexcept;

bool is_unimodular(const Mat2C& x, double tol = default_tolerances().algebraic) noexcept;
/// Trace zero and squares to -I.
bool is_line_matrix(const Mat2C& x, const Tolerances& tol = default_tolerances()) noexcept;

/// Adjugate inverse; requires det = 1 within tol.structural (NotUnimodular otherwise).
Mat2C inverse(const Mat2C& x, const Tolerances& tol = default_tolerances());

/// Principal complex arccosh: Re >= 0, Im in [-pi, pi].
Complex arccosh(Complex w) noexcept;

/// Complex displacement delta with 2 cosh(delta) = tr^2 - 2, normalized to
/// Re delta >= 0 and, for Re delta = 0, Im delta in [0, pi]. Throws
/// ParabolicOrIdentity when tr^2 = 4.
Complex displacement(const Mat2C& x, const Tolerances& tol = default_tolerances());

/// Line matrix of the axis of x, (x - x^{-1}) / (2i sinh(delta/2)), with the
/// normalized displacement.
Mat2C line_matrix(const Mat2C& x, const Tolerances& tol = default_tolerances());

/// Same, with an explicitly signed displacement. Passing -delta for x^{-1}
/// reproduces the line matrix of x.
Mat2C line_matrix(const Mat2C& x, Complex delta, const Tolerances& tol = default_tolerances());

/// Complex distance between oriented lines: cosh(mu) = -tr(AB)/2, with
/// Re mu >= 0 and Im mu in [0, 2 pi).
Complex complex_distance(const Mat2C& line_a, const Mat2C& line_b,
                         const Tolerances& tol = default_tolerances());

} // namespace twistvol
