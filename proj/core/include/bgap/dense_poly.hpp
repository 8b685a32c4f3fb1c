#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "bgap/rational.hpp"

namespace bgap {

/// Dense univariate polynomial over Rational, coefficient of z^i at index i.
/// Held normalized: no trailing zero coefficients, so structural equality is
/// polynomial equality. The zero polynomial stores no coefficients and
/// reports degree -1.
class DensePoly {
public:
    DensePoly() = default;
    DensePoly(std::initializer_list<Rational> coeffs);
    explicit DensePoly(std::vector<Rational> coeffs);

    static DensePoly constant(const Rational& c);
    /// The generating-function factor 1 + c*z.
    static DensePoly one_plus(const Rational& c);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of z^i; exact zero beyond the degree.
    const Rational& coeff(std::size_t i) const;

    Rational eval(const Rational& at) const;

    /// p^m by square-and-multiply; p^0 is the constant 1.
    DensePoly pow(unsigned exponent) const;

    /// Coefficients of the re-expansion around `at`: entry k is p^(k)(at)/k!,
    /// one entry per k = 0..degree. Computed by repeated Horner passes
    /// (synthetic division by z - at), one exact pass per coefficient.
    std::vector<Rational> taylor_coeffs_at(const Rational& at) const;

    /// Exact q with p == z^2 * q. Throws NonDivisible when the coefficient
    /// of z^0 or z^1 is nonzero.
    DensePoly divide_by_z_squared() const;

    DensePoly& operator+=(const DensePoly& o);
    DensePoly& operator-=(const DensePoly& o);
    DensePoly operator-() const;

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator*(const Rational& s, const DensePoly& p);

    friend bool operator==(const DensePoly&, const DensePoly&) = default;

private:
    std::vector<Rational> coeffs_;

    void normalize();
};

/// C(n, k) as an exact integer; zero when k > n.
Integer binomial(unsigned long n, unsigned long k);

}  // namespace bgap
