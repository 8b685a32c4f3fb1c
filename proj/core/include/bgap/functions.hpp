#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bgap/bernstein.hpp"

namespace bgap {

enum class EvalMode { exact, floating };

/// Catalog of test functions on [0,1], sampled on the uniform grid k/(2n).
/// Canonical textual forms:
///   e<p>                   monomial t^p, integer p >= 1
///   abs:<c>                |t - c|, rational c in [0,1]
///   hat:<c>                piecewise-linear peak at c, 0 at the endpoints
///                          (the non-convex control)
///   pwl:t0,v0;t1,v1;...    piecewise linear through the given points,
///                          t ascending from 0 to 1
///   exp                    e^t, float-only
class FunctionSpec {
public:
    struct Monomial {
        unsigned power;
    };
    struct AbsShift {
        Rational center;
    };
    struct Hat {
        Rational peak;
    };
    struct PiecewiseLinear {
        std::vector<std::pair<Rational, Rational>> points;
    };
    struct ExpLike {};

    static FunctionSpec monomial(unsigned power);
    static FunctionSpec abs_shift(Rational center);
    static FunctionSpec hat(Rational peak);
    static FunctionSpec piecewise_linear(std::vector<std::pair<Rational, Rational>> points);
    static FunctionSpec exp_like();

    static FunctionSpec parse(std::string_view text);
    /// Canonical textual form; parse(text()) round-trips.
    std::string text() const;

    /// False for float-only kinds (exp); such specs are excluded from exact
    /// verdicts.
    bool exact_capable() const;

    Rational eval_exact(const Rational& t) const;  // UnsupportedExact for exp
    double eval_float(double t) const;

    /// Samples f(k/grid), k = 0..grid. Exact mode demands exact_capable().
    SampleVector sample(unsigned grid, EvalMode mode) const;

private:
    using Kind = std::variant<Monomial, AbsShift, Hat, PiecewiseLinear, ExpLike>;
    explicit FunctionSpec(Kind kind) : kind_(std::move(kind)) {}
    Kind kind_;
};

/// Discrete convexity test: true iff every forward second difference of the
/// samples is >= 0. This is exactly the hypothesis the gap inequality
/// consumes; no analytic convexity is checked.
bool is_convex_samples(std::span<const Rational> samples);
bool is_convex_samples(std::span<const double> samples, double tol = 1e-12);

}  // namespace bgap
