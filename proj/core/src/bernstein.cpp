#include "bgap/bernstein.hpp"

#include <string>
#include <utility>

namespace bgap {

namespace {

void check_unit_interval(const Rational& v, const char* name) {
    if (v.sign() < 0 || v > Rational(1)) {
        throw DomainError(std::string(name) + " = " + v.str() + " outside [0,1]");
    }
}

void check_unit_interval(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw DomainError(std::string(name) + " = " + std::to_string(v) + " outside [0,1]");
    }
}

}  // namespace

BasisRow basis_row(unsigned n, const Rational& x) {
    if (n == 0) throw DomainError("basis row degree must be positive");
    check_unit_interval(x, "x");

    // Power tables; starting at 1 gives 0^0 = 1 at the endpoints.
    const Rational one_minus_x = Rational(1) - x;
    std::vector<Rational> xp(n + 1), omp(n + 1);
    xp[0] = Rational(1);
    omp[0] = Rational(1);
    for (unsigned v = 1; v <= n; ++v) {
        xp[v] = xp[v - 1] * x;
        omp[v] = omp[v - 1] * one_minus_x;
    }

    BasisRow row;
    row.degree = n;
    row.x = x;
    row.weights.resize(n + 1);
    for (unsigned v = 0; v <= n; ++v) {
        row.weights[v] = Rational(binomial(n, v)) * xp[v] * omp[n - v];
    }
    return row;
}

std::vector<double> basis_row_float(unsigned n, double x) {
    if (n == 0) throw DomainError("basis row degree must be positive");
    check_unit_interval(x, "x");

    std::vector<double> w(n + 1, 0.0);
    if (x == 0.0) {
        w[0] = 1.0;
        return w;
    }
    if (x == 1.0) {
        w[n] = 1.0;
        return w;
    }
    // Multiplicative recurrence w_{v+1} = w_v * ((n-v)/(v+1)) * (x/(1-x)),
    // accumulated in long double for range headroom at large n.
    const long double ratio = static_cast<long double>(x) / (1.0L - x);
    long double acc = 1.0L;
    for (unsigned i = 0; i < n; ++i) acc *= (1.0L - x);
    for (unsigned v = 0;; ++v) {
        w[v] = static_cast<double>(acc);
        if (v == n) break;
        acc *= ratio * static_cast<long double>(n - v) / static_cast<long double>(v + 1);
    }
    return w;
}

SampleVector SampleVector::exact(unsigned grid, std::vector<Rational> values) {
    if (grid < 2 || grid % 2 != 0) {
        throw LengthMismatch("grid size must be even and at least 2");
    }
    if (values.size() != grid + 1) {
        throw LengthMismatch("expected " + std::to_string(grid + 1) + " samples, got " +
                             std::to_string(values.size()));
    }
    SampleVector s;
    s.grid_ = grid;
    s.exact_ = true;
    s.exact_values_ = std::move(values);
    return s;
}

SampleVector SampleVector::approx(unsigned grid, std::vector<double> values) {
    if (grid < 2 || grid % 2 != 0) {
        throw LengthMismatch("grid size must be even and at least 2");
    }
    if (values.size() != grid + 1) {
        throw LengthMismatch("expected " + std::to_string(grid + 1) + " samples, got " +
                             std::to_string(values.size()));
    }
    SampleVector s;
    s.grid_ = grid;
    s.exact_ = false;
    s.approx_values_ = std::move(values);
    return s;
}

std::span<const Rational> SampleVector::values() const {
    if (!exact_) throw UnsupportedExact("sample vector holds float approximations");
    return exact_values_;
}

std::span<const double> SampleVector::approx_values() const {
    if (exact_) throw Error("sample vector holds exact values");
    return approx_values_;
}

std::vector<double> SampleVector::to_doubles() const {
    if (!exact_) return approx_values_;
    std::vector<double> out(exact_values_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = exact_values_[i].to_double();
    return out;
}

Rational row_apply(const BasisRow& row, std::span<const Rational> samples) {
    if (samples.size() != row.weights.size()) {
        throw LengthMismatch("sample count does not match basis row");
    }
    Rational acc;
    for (std::size_t v = 0; v < samples.size(); ++v) {
        if (row.weights[v].is_zero()) continue;
        acc += row.weights[v] * samples[v];
    }
    return acc;
}

Rational tensor_apply_rows(const BasisRow& row_x, const BasisRow& row_y,
                           std::span<const Rational> samples) {
    const std::size_t nx = row_x.weights.size();
    const std::size_t ny = row_y.weights.size();
    if (samples.size() != nx + ny - 1) {
        throw LengthMismatch("sample count does not match tensor degree");
    }
    Rational acc;
    for (std::size_t i = 0; i < nx; ++i) {
        if (row_x.weights[i].is_zero()) continue;
        Rational inner;
        for (std::size_t j = 0; j < ny; ++j) {
            if (row_y.weights[j].is_zero()) continue;
            inner += row_y.weights[j] * samples[i + j];
        }
        acc += row_x.weights[i] * inner;
    }
    return acc;
}

double row_apply_float(std::span<const double> row, std::span<const double> samples) {
    if (samples.size() != row.size()) {
        throw LengthMismatch("sample count does not match basis row");
    }
    double acc = 0.0;
    for (std::size_t v = 0; v < samples.size(); ++v) acc += row[v] * samples[v];
    return acc;
}

double tensor_apply_rows_float(std::span<const double> row_x,
                               std::span<const double> row_y,
                               std::span<const double> samples) {
    if (samples.size() != row_x.size() + row_y.size() - 1) {
        throw LengthMismatch("sample count does not match tensor degree");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < row_x.size(); ++i) {
        double inner = 0.0;
        for (std::size_t j = 0; j < row_y.size(); ++j) {
            inner += row_y[j] * samples[i + j];
        }
        acc += row_x[i] * inner;
    }
    return acc;
}

Rational bernstein_apply(std::span<const Rational> samples, const Rational& x) {
    if (samples.size() < 2) throw LengthMismatch("need at least two samples");
    const unsigned n = static_cast<unsigned>(samples.size() - 1);
    return row_apply(basis_row(n, x), samples);
}

double bernstein_apply_float(std::span<const double> samples, double x) {
    if (samples.size() < 2) throw LengthMismatch("need at least two samples");
    const unsigned n = static_cast<unsigned>(samples.size() - 1);
    return row_apply_float(basis_row_float(n, x), samples);
}

Rational tensor_apply(unsigned n, std::span<const Rational> samples,
                      const Rational& x, const Rational& y) {
    if (n == 0) throw DomainError("tensor degree must be positive");
    if (samples.size() != 2 * static_cast<std::size_t>(n) + 1) {
        throw LengthMismatch("tensor sum needs 2n+1 samples");
    }
    return tensor_apply_rows(basis_row(n, x), basis_row(n, y), samples);
}

double tensor_apply_float(unsigned n, std::span<const double> samples,
                          double x, double y) {
    if (n == 0) throw DomainError("tensor degree must be positive");
    if (samples.size() != 2 * static_cast<std::size_t>(n) + 1) {
        throw LengthMismatch("tensor sum needs 2n+1 samples");
    }
    return tensor_apply_rows_float(basis_row_float(n, x), basis_row_float(n, y), samples);
}

DiagonalCheck diagonal_check(unsigned n, std::span<const Rational> samples,
                             const Rational& x) {
    DiagonalCheck d;
    d.tensor_value = tensor_apply(n, samples, x, x);
    d.bernstein_value = bernstein_apply(samples, x);
    d.equal = d.tensor_value == d.bernstein_value;
    return d;
}

}  // namespace bgap
