#pragma once

// Independent oracles for the test suites. Everything here recomputes values
// by a route different from the library's: binomials by the multiplicative
// product formula, basis weights by direct powering, operator values by raw
// summation. These stay deliberately naive.

#include <random>
#include <span>
#include <vector>

#include "bgap/rational.hpp"

namespace bgap::testing {

inline std::vector<Rational> to_vec(std::span<const Rational> s) {
    return {s.begin(), s.end()};
}

// C(n,k) via the product formula prod_{i=1..k} (n-k+i)/i; every division is
// exact along the way.
inline Integer oracle_binomial(unsigned long n, unsigned long k) {
    if (k > n) return Integer(0);
    Integer acc(1);
    for (unsigned long i = 1; i <= k; ++i) {
        acc *= Integer(n - k + i);
        acc /= Integer(i);
    }
    return acc;
}

inline Rational oracle_pow(const Rational& base, unsigned e) {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

// p_{n,v}(x) from its formula, one factor at a time.
inline Rational oracle_weight(unsigned n, unsigned v, const Rational& x) {
    return Rational(oracle_binomial(n, v)) * oracle_pow(x, v) *
           oracle_pow(Rational(1) - x, n - v);
}

inline Rational oracle_bernstein(std::span<const Rational> samples, const Rational& x) {
    const unsigned n = static_cast<unsigned>(samples.size() - 1);
    Rational acc;
    for (unsigned v = 0; v <= n; ++v) acc += oracle_weight(n, v, x) * samples[v];
    return acc;
}

inline Rational oracle_tensor(unsigned n, std::span<const Rational> samples,
                              const Rational& x, const Rational& y) {
    Rational acc;
    for (unsigned i = 0; i <= n; ++i) {
        for (unsigned j = 0; j <= n; ++j) {
            acc += oracle_weight(n, i, x) * oracle_weight(n, j, y) * samples[i + j];
        }
    }
    return acc;
}

// The raw double sum behind the coefficient identity's left side, kept as a
// guard for the operator-form rewrite in the library.
inline Rational oracle_raw_identity_lhs(unsigned n, std::span<const Rational> samples,
                                        const Rational& x, const Rational& y) {
    const Rational mid = (x + y) / Rational(2);
    Rational acc;
    for (unsigned i = 0; i <= n; ++i) {
        for (unsigned j = 0; j <= n; ++j) {
            const Rational w = oracle_weight(n, i, mid) * oracle_weight(n, j, mid) -
                               oracle_weight(n, i, x) * oracle_weight(n, j, y);
            acc += w * samples[i + j];
        }
    }
    return acc;
}

// The raw double sum of the symmetric-gap inequality's left side.
inline Rational oracle_raw_gap1(unsigned n, std::span<const Rational> samples,
                                const Rational& x, const Rational& y) {
    Rational acc;
    for (unsigned i = 0; i <= n; ++i) {
        for (unsigned j = 0; j <= n; ++j) {
            const Rational w = oracle_weight(n, i, x) * oracle_weight(n, j, x) +
                               oracle_weight(n, i, y) * oracle_weight(n, j, y) -
                               Rational(2) * oracle_weight(n, i, x) * oracle_weight(n, j, y);
            acc += w * samples[i + j];
        }
    }
    return acc;
}

// Deterministic test-value generator; raw engine words only, so sequences are
// stable across platforms.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }

    long int_between(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    Rational unit_rational(unsigned max_den = 64) {
        const long q = 1 + static_cast<long>(below(max_den));
        const long p = static_cast<long>(below(static_cast<std::uint64_t>(q) + 1));
        return Rational(p, q);
    }

    std::vector<Rational> int_samples(std::size_t count, long lo = -100, long hi = 100) {
        std::vector<Rational> out(count);
        for (auto& v : out) v = Rational(int_between(lo, hi));
        return out;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace bgap::testing
