#pragma once

#include <span>
#include <vector>

#include "bgap/bernstein.hpp"

namespace bgap {

// The gap polynomial ties the midpoint Bernstein value to the bivariate
// tensor sum. For fixed n and x, y in [0,1] it is
//
//   g(z) = z^-2 * ( (1 + (x+y)/2 z)^(2n)  -  (1+xz)^n (1+yz)^n ),
//
// a polynomial of degree at most 2n-2. Its Taylor coefficients at z = -1
// are nonnegative and satisfy, for any samples a_0..a_2n,
//
//   B_2n a((x+y)/2) - sum_{i,j} p_{n,i}(x) p_{n,j}(y) a_{i+j}
//       = sum_{k=0}^{2n-2} (D2 a_k) * g^(k)(-1)/k!
//
// where D2 a_k = a_{k+2} - 2 a_{k+1} + a_k. Everything here is exact.

/// g built from its definition: expand both products, subtract, divide by z^2.
DensePoly build_g_definition(unsigned n, const Rational& x, const Rational& y);

/// g built from the telescoped factorization
///   (x-y)^2/4 * sum_{k=0}^{n-1} (1 + (x+y)/2 z)^(2(n-1-k)) ((1+xz)(1+yz))^k,
/// which exposes the nonnegativity of the derivatives at z = -1. Must agree
/// with the definition route coefficient-for-coefficient.
DensePoly build_g_closedform(unsigned n, const Rational& x, const Rational& y);

/// Taylor coefficients of g at z = -1, zero-padded to the fixed length 2n-1:
/// entry k is g^(k)(-1)/k!, and every entry is >= 0 on the unit square.
struct GapCoefficients {
    unsigned n = 0;
    Rational x, y;
    std::vector<Rational> c;  // length 2n-1

    friend bool operator==(const GapCoefficients&, const GapCoefficients&) = default;
};
GapCoefficients gap_coefficients(unsigned n, const Rational& x, const Rational& y);

/// Forward second difference a_{k+2} - 2 a_{k+1} + a_k; output two shorter
/// than the input. Throws TooShort below three values.
std::vector<Rational> delta2(std::span<const Rational> values);
std::vector<double> delta2(std::span<const double> values);

/// Left side of the coefficient identity: B_2n a((x+y)/2) minus the tensor
/// sum at (x,y), evaluated through the operators.
Rational identity_lhs(unsigned n, std::span<const Rational> samples,
                      const Rational& x, const Rational& y);

/// Right side: dot product of the second differences with the gap
/// coefficients.
Rational identity_rhs(const GapCoefficients& coeffs, std::span<const Rational> samples);

/// The four inequality gaps at one (x,y) cell. With T the tensor sum and
/// B the degree-2n Bernstein value over the same samples a_0..a_2n:
///
///   gap1 = sum_{i,j} [p_i(x)p_j(x) + p_i(y)p_j(y) - 2 p_i(x)p_j(y)] a_{i+j}
///   gap2 = B(x) + B(y) - 2 T(x,y)
///   gap3 = B(x) + B(y) - 2 B((x+y)/2)
///   gap4 = B((x+y)/2) - T(x,y)
///
/// gap1 and gap2 are the same value reached by different routes, and
/// gap2 = gap3 + 2*gap4 exactly. identity_residual is gap4 minus the
/// coefficient-identity value and must always be 0.
struct GapReport {
    unsigned n = 0;
    Rational x, y;
    Rational gap1, gap2, gap3, gap4;
    Rational identity_residual;
    bool xy_equal = false;
    bool affine_samples = false;

    friend bool operator==(const GapReport&, const GapReport&) = default;
};
GapReport gap_report(unsigned n, std::span<const Rational> samples,
                     const Rational& x, const Rational& y);

/// Float lane for plot data: the same quantities in double arithmetic, plus
/// the operator surface values themselves.
struct GapReportFloat {
    unsigned n = 0;
    double x = 0, y = 0;
    double gap1 = 0, gap2 = 0, gap3 = 0, gap4 = 0;
    double residual = 0;
    double b2n_x = 0, b2n_y = 0, b2n_mid = 0, tensor_xy = 0;
};
GapReportFloat gap_report_float(unsigned n, std::span<const double> samples,
                                double x, double y);

}  // namespace bgap
