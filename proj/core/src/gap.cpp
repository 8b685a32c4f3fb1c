#include "bgap/gap.hpp"

#include <string>

namespace bgap {

namespace {

void check_domain(const Rational& v, const char* name) {
    if (v.sign() < 0 || v > Rational(1)) {
        throw DomainError(std::string(name) + " = " + v.str() + " outside [0,1]");
    }
}

// Double-precision mirror of the polynomial machinery, for the plot lane.
std::vector<double> poly_mul_f(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<double> poly_pow_f(std::vector<double> base, unsigned e) {
    std::vector<double> r{1.0};
    while (e != 0) {
        if (e & 1u) r = poly_mul_f(r, base);
        e >>= 1u;
        if (e != 0) base = poly_mul_f(base, base);
    }
    return r;
}

std::vector<double> taylor_at_f(std::vector<double> t, double at) {
    const std::size_t n = t.size();
    if (n < 2) return t;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t i = n - 1; i-- > k;) t[i] += at * t[i + 1];
    }
    return t;
}

}  // namespace

DensePoly build_g_definition(unsigned n, const Rational& x, const Rational& y) {
    if (n == 0) throw DomainError("n must be positive");
    check_domain(x, "x");
    check_domain(y, "y");
    const Rational mid = (x + y) / Rational(2);
    const DensePoly midpow = DensePoly::one_plus(mid).pow(2 * n);
    const DensePoly prod = DensePoly::one_plus(x).pow(n) * DensePoly::one_plus(y).pow(n);
    return (midpow - prod).divide_by_z_squared();
}

DensePoly build_g_closedform(unsigned n, const Rational& x, const Rational& y) {
    if (n == 0) throw DomainError("n must be positive");
    check_domain(x, "x");
    check_domain(y, "y");
    const Rational mid = (x + y) / Rational(2);
    const Rational prefactor = (x - y) * (x - y) / Rational(4);
    if (prefactor.is_zero()) return {};

    const DensePoly mid_sq = DensePoly::one_plus(mid).pow(2);
    const DensePoly xy_prod = DensePoly::one_plus(x) * DensePoly::one_plus(y);

    // midpows[j] = (1 + mid*z)^(2j)
    std::vector<DensePoly> midpows(n);
    midpows[0] = DensePoly::constant(Rational(1));
    for (unsigned j = 1; j < n; ++j) midpows[j] = midpows[j - 1] * mid_sq;

    DensePoly sum;
    DensePoly xy_k = DensePoly::constant(Rational(1));  // ((1+xz)(1+yz))^k
    for (unsigned k = 0; k < n; ++k) {
        sum += midpows[n - 1 - k] * xy_k;
        if (k + 1 < n) xy_k = xy_k * xy_prod;
    }
    return prefactor * sum;
}

GapCoefficients gap_coefficients(unsigned n, const Rational& x, const Rational& y) {
    const DensePoly g = build_g_definition(n, x, y);
    if (g.degree() > 2 * static_cast<long>(n) - 2) {
        throw Error("gap polynomial exceeds degree 2n-2");
    }
    GapCoefficients out;
    out.n = n;
    out.x = x;
    out.y = y;
    out.c = g.taylor_coeffs_at(Rational(-1));
    out.c.resize(2 * n - 1);  // zero-pad degenerate cases to the fixed length
    for (std::size_t k = 0; k < out.c.size(); ++k) {
        if (out.c[k].sign() < 0) {
            throw NegativeCoefficient("coefficient " + std::to_string(k) + " negative at (" +
                                      x.str() + ", " + y.str() + ")");
        }
    }
    return out;
}

std::vector<Rational> delta2(std::span<const Rational> values) {
    if (values.size() < 3) throw TooShort("second difference needs at least 3 values");
    std::vector<Rational> out(values.size() - 2);
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = values[k + 2] - values[k + 1] - values[k + 1] + values[k];
    }
    return out;
}

std::vector<double> delta2(std::span<const double> values) {
    if (values.size() < 3) throw TooShort("second difference needs at least 3 values");
    std::vector<double> out(values.size() - 2);
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = values[k + 2] - 2.0 * values[k + 1] + values[k];
    }
    return out;
}

Rational identity_lhs(unsigned n, std::span<const Rational> samples,
                      const Rational& x, const Rational& y) {
    if (samples.size() != 2 * static_cast<std::size_t>(n) + 1) {
        throw LengthMismatch("identity needs 2n+1 samples");
    }
    const Rational mid = (x + y) / Rational(2);
    return bernstein_apply(samples, mid) - tensor_apply(n, samples, x, y);
}

Rational identity_rhs(const GapCoefficients& coeffs, std::span<const Rational> samples) {
    if (samples.size() != 2 * static_cast<std::size_t>(coeffs.n) + 1) {
        throw LengthMismatch("identity needs 2n+1 samples");
    }
    const std::vector<Rational> d2 = delta2(samples);
    if (d2.size() != coeffs.c.size()) {
        throw LengthMismatch("coefficient count does not match second differences");
    }
    Rational acc;
    for (std::size_t k = 0; k < d2.size(); ++k) {
        if (coeffs.c[k].is_zero() || d2[k].is_zero()) continue;
        acc += d2[k] * coeffs.c[k];
    }
    return acc;
}

GapReport gap_report(unsigned n, std::span<const Rational> samples,
                     const Rational& x, const Rational& y) {
    if (n == 0) throw DomainError("n must be positive");
    if (samples.size() != 2 * static_cast<std::size_t>(n) + 1) {
        throw LengthMismatch("gap report needs 2n+1 samples");
    }
    const Rational mid = (x + y) / Rational(2);

    const BasisRow row_n_x = basis_row(n, x);
    const BasisRow row_n_y = basis_row(n, y);
    const BasisRow row_2n_x = basis_row(2 * n, x);
    const BasisRow row_2n_y = basis_row(2 * n, y);
    const BasisRow row_2n_mid = basis_row(2 * n, mid);

    const Rational t_xy = tensor_apply_rows(row_n_x, row_n_y, samples);
    const Rational t_xx = tensor_apply_rows(row_n_x, row_n_x, samples);
    const Rational t_yy = tensor_apply_rows(row_n_y, row_n_y, samples);
    const Rational b_x = row_apply(row_2n_x, samples);
    const Rational b_y = row_apply(row_2n_y, samples);
    const Rational b_mid = row_apply(row_2n_mid, samples);

    GapReport r;
    r.n = n;
    r.x = x;
    r.y = y;
    // The two routes to the same value: the raw tensor form of (x,x), (y,y),
    // (x,y) and the operator form through B_2n.
    r.gap1 = t_xx + t_yy - t_xy - t_xy;
    r.gap2 = b_x + b_y - t_xy - t_xy;
    r.gap3 = b_x + b_y - b_mid - b_mid;
    r.gap4 = b_mid - t_xy;
    r.identity_residual = r.gap4 - identity_rhs(gap_coefficients(n, x, y), samples);
    r.xy_equal = x == y;
    r.affine_samples = true;
    for (const auto& d : delta2(samples)) {
        if (!d.is_zero()) {
            r.affine_samples = false;
            break;
        }
    }
    return r;
}

GapReportFloat gap_report_float(unsigned n, std::span<const double> samples,
                                double x, double y) {
    if (n == 0) throw DomainError("n must be positive");
    if (samples.size() != 2 * static_cast<std::size_t>(n) + 1) {
        throw LengthMismatch("gap report needs 2n+1 samples");
    }
    const double mid = 0.5 * (x + y);

    const std::vector<double> row_n_x = basis_row_float(n, x);
    const std::vector<double> row_n_y = basis_row_float(n, y);
    const std::vector<double> row_2n_x = basis_row_float(2 * n, x);
    const std::vector<double> row_2n_y = basis_row_float(2 * n, y);
    const std::vector<double> row_2n_mid = basis_row_float(2 * n, mid);

    GapReportFloat r;
    r.n = n;
    r.x = x;
    r.y = y;
    r.tensor_xy = tensor_apply_rows_float(row_n_x, row_n_y, samples);
    const double t_xx = tensor_apply_rows_float(row_n_x, row_n_x, samples);
    const double t_yy = tensor_apply_rows_float(row_n_y, row_n_y, samples);
    r.b2n_x = row_apply_float(row_2n_x, samples);
    r.b2n_y = row_apply_float(row_2n_y, samples);
    r.b2n_mid = row_apply_float(row_2n_mid, samples);

    r.gap1 = t_xx + t_yy - 2.0 * r.tensor_xy;
    r.gap2 = r.b2n_x + r.b2n_y - 2.0 * r.tensor_xy;
    r.gap3 = r.b2n_x + r.b2n_y - 2.0 * r.b2n_mid;
    r.gap4 = r.b2n_mid - r.tensor_xy;

    // Identity right side in doubles: g's Taylor coefficients at -1 against
    // the second differences.
    std::vector<double> g = poly_pow_f({1.0, mid}, 2 * n);
    const std::vector<double> prod =
        poly_mul_f(poly_pow_f({1.0, x}, n), poly_pow_f({1.0, y}, n));
    for (std::size_t i = 0; i < g.size(); ++i) g[i] -= prod[i];
    g.erase(g.begin(), g.begin() + 2);  // the z^-2 prefactor
    const std::vector<double> c = taylor_at_f(std::move(g), -1.0);
    const std::vector<double> d2 = delta2(samples);
    double rhs = 0.0;
    for (std::size_t k = 0; k < d2.size() && k < c.size(); ++k) rhs += d2[k] * c[k];
    r.residual = r.gap4 - rhs;
    return r;
}

}  // namespace bgap
