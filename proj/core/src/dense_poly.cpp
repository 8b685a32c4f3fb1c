#include "bgap/dense_poly.hpp"

namespace bgap {

namespace {
const Rational kZero{};
}

DensePoly::DensePoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
    normalize();
}

DensePoly::DensePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

DensePoly DensePoly::constant(const Rational& c) {
    return DensePoly{c};
}

DensePoly DensePoly::one_plus(const Rational& c) {
    return DensePoly{Rational(1), c};
}

void DensePoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& DensePoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

Rational DensePoly::eval(const Rational& at) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

DensePoly& DensePoly::operator+=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

DensePoly DensePoly::operator-() const {
    DensePoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return DensePoly(std::move(out));
}

DensePoly operator*(const Rational& s, const DensePoly& p) {
    if (s.is_zero()) return {};
    DensePoly r(p);
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

DensePoly DensePoly::pow(unsigned exponent) const {
    DensePoly result = constant(Rational(1));
    DensePoly base(*this);
    while (exponent != 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent != 0) base = base * base;
    }
    return result;
}

std::vector<Rational> DensePoly::taylor_coeffs_at(const Rational& at) const {
    std::vector<Rational> t(coeffs_);
    const std::size_t n = t.size();
    if (n < 2) return t;
    // Pass k leaves p^(k)(at)/k! in t[k]; later entries keep shifting.
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t i = n - 1; i-- > k;) {
            t[i] += at * t[i + 1];
        }
    }
    return t;
}

DensePoly DensePoly::divide_by_z_squared() const {
    if (is_zero()) return {};
    if (!coeff(0).is_zero() || !coeff(1).is_zero()) {
        throw NonDivisible("polynomial has nonzero coefficients below z^2");
    }
    return DensePoly(std::vector<Rational>(coeffs_.begin() + 2, coeffs_.end()));
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace bgap
