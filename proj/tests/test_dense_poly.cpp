#include "doctest.h"

#include <vector>

#include "bgap/dense_poly.hpp"

#include "support/oracles.hpp"

using bgap::DensePoly;
using bgap::Integer;
using bgap::Rational;
using bgap::testing::Gen;
using bgap::testing::oracle_binomial;

namespace {

DensePoly random_poly(Gen& gen, unsigned max_degree) {
    const unsigned deg = static_cast<unsigned>(gen.below(max_degree + 1));
    std::vector<Rational> c(deg + 1);
    for (auto& v : c) v = Rational(gen.int_between(-9, 9));
    return DensePoly(std::move(c));
}

std::vector<Rational> convolve(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace

TEST_CASE("binomial basics") {
    CHECK(bgap::binomial(5, 2) == 10);
    CHECK(bgap::binomial(0, 0) == 1);
    for (unsigned long n : {0ul, 1ul, 7ul, 40ul}) CHECK(bgap::binomial(n, 0) == 1);
    // k > n is an empty choice, not an error.
    CHECK(bgap::binomial(3, 5) == 0);
    CHECK(bgap::binomial(52, 26) == oracle_binomial(52, 26));
    // Pascal row symmetry on a fat row.
    for (unsigned long k = 0; k <= 30; ++k) {
        CHECK(bgap::binomial(30, k) == bgap::binomial(30, 30 - k));
    }
}

TEST_CASE("poly normalization and degree") {
    CHECK(DensePoly().is_zero());
    CHECK(DensePoly().degree() == -1);
    CHECK(DensePoly{Rational(0), Rational(0)}.is_zero());
    DensePoly p{Rational(1), Rational(0), Rational(3), Rational(0)};
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == Rational(1));
    CHECK(p.coeff(1) == Rational(0));
    CHECK(p.coeff(2) == Rational(3));
    CHECK(p.coeff(99) == Rational(0));
}

TEST_CASE("poly multiplication") {
    const DensePoly one_plus_z{Rational(1), Rational(1)};
    const DensePoly one_minus_z{Rational(1), Rational(-1)};
    CHECK(one_plus_z * one_minus_z == DensePoly{Rational(1), Rational(0), Rational(-1)});

    CHECK((one_plus_z * DensePoly()).is_zero());
    CHECK((DensePoly() * one_plus_z).is_zero());

    // (1+z)^2 (1+z)^3 = (1+z)^5 with the binomial row as coefficients.
    const DensePoly p5 = one_plus_z.pow(2) * one_plus_z.pow(3);
    REQUIRE(p5.degree() == 5);
    for (unsigned k = 0; k <= 5; ++k) {
        CHECK(p5.coeff(k) == Rational(oracle_binomial(5, k)));
    }
}

TEST_CASE("poly degree adds under multiplication") {
    Gen gen(77);
    for (int iter = 0; iter < 200; ++iter) {
        const DensePoly p = random_poly(gen, 8);
        const DensePoly q = random_poly(gen, 8);
        if (p.is_zero() || q.is_zero()) {
            CHECK((p * q).is_zero());
        } else {
            CHECK((p * q).degree() == p.degree() + q.degree());
        }
    }
}

TEST_CASE("poly pow") {
    const DensePoly one_plus_z{Rational(1), Rational(1)};
    CHECK(one_plus_z.pow(0) == DensePoly::constant(Rational(1)));
    CHECK(DensePoly().pow(0) == DensePoly::constant(Rational(1)));

    CHECK(DensePoly::one_plus(Rational(1, 2)).pow(2) ==
          DensePoly{Rational(1), Rational(1), Rational(1, 4)});

    const DensePoly p10 = one_plus_z.pow(10);
    REQUIRE(p10.degree() == 10);
    for (unsigned k = 0; k <= 10; ++k) {
        CHECK(p10.coeff(k) == Rational(oracle_binomial(10, k)));
    }
}

TEST_CASE("poly evaluation") {
    const DensePoly p{Rational(2), Rational(-3), Rational(1)};  // 2 - 3z + z^2
    CHECK(p.eval(Rational(0)) == Rational(2));
    CHECK(p.eval(Rational(1)) == Rational(0));
    CHECK(p.eval(Rational(1, 2)) == Rational(3, 4));
    CHECK(DensePoly().eval(Rational(5)) == Rational(0));
}

TEST_CASE("taylor coefficients at a point") {
    // z^2 around -1 is (w-1)^2 = 1 - 2w + w^2.
    const DensePoly z2{Rational(0), Rational(0), Rational(1)};
    CHECK(z2.taylor_coeffs_at(Rational(-1)) ==
          std::vector<Rational>{Rational(1), Rational(-2), Rational(1)});

    const DensePoly c = DensePoly::constant(Rational(7, 3));
    CHECK(c.taylor_coeffs_at(Rational(-5)) == std::vector<Rational>{Rational(7, 3)});
    CHECK(DensePoly().taylor_coeffs_at(Rational(1)).empty());

    // First entry is plain evaluation: (1 + z/2)^4 at -1 gives (1/2)^4.
    const DensePoly q = DensePoly::one_plus(Rational(1, 2)).pow(4);
    const auto t = q.taylor_coeffs_at(Rational(-1));
    REQUIRE(t.size() == 5);
    CHECK(t[0] == q.eval(Rational(-1)));
    CHECK(t[0] == Rational(1, 16));
}

TEST_CASE("taylor expansion properties") {
    Gen gen(123);
    const Rational points[] = {Rational(-1), Rational(0), Rational(2, 3)};
    for (int iter = 0; iter < 60; ++iter) {
        const DensePoly p = random_poly(gen, 20);
        const DensePoly q = random_poly(gen, 20);
        for (const Rational& a : points) {
            // Re-expansion around a point is a ring homomorphism.
            const auto lhs = (p * q).taylor_coeffs_at(a);
            const auto rhs = convolve(p.taylor_coeffs_at(a), q.taylor_coeffs_at(a));
            CHECK(lhs == rhs);
        }
        // Around zero the coefficients come back unchanged.
        const auto at0 = p.taylor_coeffs_at(Rational(0));
        CHECK(std::vector<Rational>(p.coeffs().begin(), p.coeffs().end()) == at0);
    }
}

TEST_CASE("divide by z^2") {
    const DensePoly p{Rational(0), Rational(0), Rational(1), Rational(1)};  // z^2 + z^3
    CHECK(p.divide_by_z_squared() == DensePoly{Rational(1), Rational(1)});
    CHECK(DensePoly().divide_by_z_squared().is_zero());

    // (1 + z/2)^4 - (1 + z)^2 cancels through order one.
    const DensePoly diff =
        DensePoly::one_plus(Rational(1, 2)).pow(4) - DensePoly::one_plus(Rational(1)).pow(2);
    CHECK(diff.divide_by_z_squared() ==
          DensePoly{Rational(1, 2), Rational(1, 2), Rational(1, 16)});

    CHECK_THROWS_AS(DensePoly::constant(Rational(1)).divide_by_z_squared(),
                    bgap::NonDivisible);
    CHECK_THROWS_AS((DensePoly{Rational(0), Rational(1), Rational(1)}).divide_by_z_squared(),
                    bgap::NonDivisible);
}

TEST_CASE("divide by z^2 inverts multiplication by z^2") {
    Gen gen(9);
    const DensePoly z2{Rational(0), Rational(0), Rational(1)};
    for (int iter = 0; iter < 200; ++iter) {
        const DensePoly q = random_poly(gen, 12);
        CHECK((z2 * q).divide_by_z_squared() == q);
    }
}
