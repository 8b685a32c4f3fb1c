#pragma once

#include <span>
#include <vector>

#include "bgap/dense_poly.hpp"

namespace bgap {

/// One row of Bernstein basis weights of degree n at a fixed point:
/// weights[v] = C(n,v) x^v (1-x)^(n-v), with the convention 0^0 = 1 at the
/// endpoints. Weights are nonnegative on [0,1] and sum exactly to 1.
struct BasisRow {
    unsigned degree = 0;
    Rational x;
    std::vector<Rational> weights;  // size degree + 1
};

/// Exact basis weights. n must be positive; x must lie in [0,1].
BasisRow basis_row(unsigned n, const Rational& x);

/// Floating-point fast path for plot data. Each weight stays within 1e-12
/// relative of the exact value for n <= 64.
std::vector<double> basis_row_float(unsigned n, double x);

/// Sampled function values a_k = f(k/grid) for k = 0..grid on the uniform
/// grid; entries are exact rationals or plain doubles depending on how the
/// function was sampled.
class SampleVector {
public:
    static SampleVector exact(unsigned grid, std::vector<Rational> values);
    static SampleVector approx(unsigned grid, std::vector<double> values);

    /// Grid size 2n (even, at least 2). Sample count is grid()+1.
    unsigned grid() const noexcept { return grid_; }
    bool is_exact() const noexcept { return exact_; }

    /// Exact entries; only valid when is_exact().
    std::span<const Rational> values() const;
    /// Double entries; only valid when !is_exact().
    std::span<const double> approx_values() const;
    /// Entries as doubles in either mode (exact entries correctly rounded).
    std::vector<double> to_doubles() const;

private:
    SampleVector() = default;

    unsigned grid_ = 0;
    bool exact_ = false;
    std::vector<Rational> exact_values_;
    std::vector<double> approx_values_;
};

/// (B_n f)(x) = sum_v p_{n,v}(x) f(v/n); the operator degree n is
/// samples.size() - 1 and must be at least 1.
Rational bernstein_apply(std::span<const Rational> samples, const Rational& x);
double bernstein_apply_float(std::span<const double> samples, double x);

/// The bivariate tensor sum sum_{i,j} p_{n,i}(x) p_{n,j}(y) a_{i+j} over
/// samples a_0..a_{2n}.
Rational tensor_apply(unsigned n, std::span<const Rational> samples,
                      const Rational& x, const Rational& y);
double tensor_apply_float(unsigned n, std::span<const double> samples,
                          double x, double y);

/// Both sides of the diagonal collapse: the tensor sum at (x,x) equals
/// B_{2n} applied to the same samples at x. `equal` must always be true;
/// a false value signals an arithmetic bug.
struct DiagonalCheck {
    Rational tensor_value;
    Rational bernstein_value;
    bool equal = false;
};
DiagonalCheck diagonal_check(unsigned n, std::span<const Rational> samples,
                             const Rational& x);

/// Weighted sums against precomputed rows; the grid-scan hot path.
Rational row_apply(const BasisRow& row, std::span<const Rational> samples);
Rational tensor_apply_rows(const BasisRow& row_x, const BasisRow& row_y,
                           std::span<const Rational> samples);
double row_apply_float(std::span<const double> row, std::span<const double> samples);
double tensor_apply_rows_float(std::span<const double> row_x,
                               std::span<const double> row_y,
                               std::span<const double> samples);

}  // namespace bgap
