/*
   Copyright 2026 The sigpairs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <doctest.h>

#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <random>
#include <vector>

#include "sigpairs/cyclotomic.hpp"
#include "sigpairs/error.hpp"

using namespace sigpairs;

namespace {

namespace mp = boost::multiprecision;
using Real200 = mp::number<mp::mpfr_float_backend<61>, mp::et_off>;  // ~200 bits

Cyclotomic z(long n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

Cyclotomic random_element(std::mt19937& rng, long n) {
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<long> expo(0, n - 1);
    std::vector<std::pair<long, Rational>> coords;
    for (int i = 0; i < 3; ++i) {
        Rational r(coef(rng), den(rng));
        r.canonicalize();
        coords.emplace_back(expo(rng), r);
    }
    return Cyclotomic::from_coords(n, coords);
}

// Independent evaluation of the real part at about 200 bits.
Real200 real_value(const Cyclotomic& c) {
    const Real200 pi = 4 * atan(Real200(1));
    Real200 v = 0;
    for (const auto& [k, r] : c.coords()) {
        v += Real200(r.get_num().get_str()) / Real200(r.get_den().get_str()) * cos(2 * pi * k / c.order());
    }
    return v;
}

std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

TEST_CASE("roots of unity") {
    CHECK(z(1, 0) == Cyclotomic(1));
    CHECK(z(2, 1) == Cyclotomic(-1));
    CHECK(z(4) * z(4) == z(2).promote(4));
    CHECK(z(4) * z(4) == Cyclotomic(-1));
    CHECK(z(7, 9) == z(7, 2));
    CHECK(z(7, -1) == z(7, 6));
    CHECK(z(12, 3) == z(4, 1));
}

TEST_CASE("arithmetic examples") {
    CHECK((z(3) + z(3, 2) + Cyclotomic(1)).is_zero());
    CHECK(z(8) * z(8, 7) == Cyclotomic(1));
    Cyclotomic norm(1);
    for (long k = 1; k <= 4; ++k) norm *= Cyclotomic(1) - z(5, k);
    CHECK(norm == Cyclotomic(5));
    // Oracle: the same product in complex floating point.
    std::complex<double> prod(1.0, 0.0);
    for (long k = 1; k <= 4; ++k) prod *= 1.0 - std::polar(1.0, 2 * M_PI * k / 5);
    CHECK(prod.real() == doctest::Approx(5.0));
    CHECK(std::abs(prod.imag()) < 1e-12);
    CHECK_THROWS_AS(Cyclotomic(1) / Cyclotomic(0), Error);
}

TEST_CASE("conjugation and reality") {
    CHECK(z(8).conj() == z(8, 7));
    CHECK(Cyclotomic(Rational(3, 2)).conj() == Cyclotomic(Rational(3, 2)));
    const Cyclotomic c5 = z(5) + z(5, 4);
    CHECK(c5.conj() == c5);
    CHECK(c5.is_real());
    CHECK_FALSE(z(8).is_real());
    CHECK(Cyclotomic(0).is_real());
}

TEST_CASE("sign examples") {
    CHECK((Cyclotomic(2) * (z(5) + z(5, 4)) + Cyclotomic(1)).sign() == 1);
    CHECK(Cyclotomic(Rational(-3, 7)).sign() == -1);
    CHECK((z(3) + z(3, 2)).sign() == -1);
    CHECK(Cyclotomic(0).sign() == 0);
    CHECK_THROWS_AS(z(8).sign(), Error);
}

TEST_CASE("sign of a near-cancellation needs refinement") {
    const Cyclotomic sqrt5 = Cyclotomic(1) + Cyclotomic(2) * (z(5) + z(5, 4));
    // A 40-digit decimal truncation of sqrt(5), from the oracle.
    Real200 oracle = sqrt(Real200(5));
    const std::string digits = (oracle * mp::pow(Real200(10), 40)).str(0, std::ios_base::fixed);
    Integer truncated(digits.substr(0, digits.find('.')));
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 40);
    Rational approx(truncated, scale);
    approx.canonicalize();
    const Cyclotomic diff = sqrt5 - Cyclotomic(approx);
    CHECK(diff.sign() == 1);
    CHECK((-diff).sign() == -1);

    const unsigned saved = max_precision_bits();
    set_max_precision_bits(64);
    CHECK_THROWS_AS(diff.sign(), Error);
    try {
        diff.sign();
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PrecisionExceeded);
    }
    set_max_precision_bits(saved);
}

TEST_CASE("sign agrees with a 200-bit evaluation") {
    std::mt19937 rng(314159);
    int checked = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        const long n = std::uniform_int_distribution<long>(1, 30)(rng);
        const Cyclotomic a = random_element(rng, n);
        const Cyclotomic re = a + a.conj();
        const Real200 v = real_value(re);
        if (re.is_zero()) {
            CHECK(re.sign() == 0);
            CHECK(abs(v) < Real200("1e-50"));
            continue;
        }
        if (abs(v) < Real200("1e-50")) continue;
        CHECK(re.sign() == (v > 0 ? 1 : -1));
        ++checked;
    }
    CHECK(checked > 900);
}

TEST_CASE("interval encloses the value") {
    const Cyclotomic c = Cyclotomic(1) + Cyclotomic(2) * (Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4));
    for (unsigned bits : {32u, 64u, 256u}) {
        Interval iv(c, bits);
        CHECK(iv.lo_double() <= std::sqrt(5.0) + 1e-12);
        CHECK(iv.hi_double() >= std::sqrt(5.0) - 1e-12);
        CHECK(iv.sign() == 1);
    }
}

TEST_CASE("promotion and demotion") {
    CHECK(Cyclotomic(-1).promote(8) == z(8, 4));
    CHECK(Cyclotomic(-1).promote(8).order() == 8);
    CHECK(Cyclotomic(0).promote(12).is_zero());
    CHECK(z(3).promote(12) == z(12, 4));
    const auto d = z(12, 4).demote(3);
    REQUIRE(d.has_value());
    CHECK(*d == z(3));
    CHECK(d->order() == 3);
    CHECK_FALSE(z(12).demote(3).has_value());
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    // Oracle: the product over divisors is x^n - 1.
    for (long n = 1; n <= 30; ++n) {
        std::vector<long> prod{1};
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
        std::vector<long> expected(static_cast<std::size_t>(n + 1), 0);
        expected[0] = -1;
        expected.back() = 1;
        CHECK(prod == expected);
        CHECK(static_cast<long>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
    }
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(20260101);
    for (int iter = 0; iter < 300; ++iter) {
        const long n = std::uniform_int_distribution<long>(1, 24)(rng);
        const Cyclotomic a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.conj().conj() == a);
        const Cyclotomic n2 = a * a.conj();
        CHECK(n2.is_real());
        CHECK(n2.sign() == (a.is_zero() ? 0 : 1));
    }
}

TEST_CASE("mixed orders promote to the lcm") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        const long m = std::uniform_int_distribution<long>(1, 12)(rng);
        const long n = std::uniform_int_distribution<long>(1, 12)(rng);
        const Cyclotomic a = random_element(rng, m), b = random_element(rng, n);
        const long l = lcm(m, n);
        CHECK(a * b == a.promote(l) * b.promote(l));
        CHECK(a + b == a.promote(l) + b.promote(l));
    }
}

TEST_CASE("canonical form is unique") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
        const long n = std::uniform_int_distribution<long>(2, 24)(rng);
        const long k = std::uniform_int_distribution<long>(0, n - 1)(rng);
        // zeta^k built three ways.
        const Cyclotomic a = z(n, k);
        const Cyclotomic b = Cyclotomic::from_coords(n, {{k + 3 * n, Rational(1)}});
        Cyclotomic c(1, n);
        for (long i = 0; i < k; ++i) c *= z(n);
        CHECK(a == b);
        CHECK(a == c);
        CHECK(a.coords() == b.coords());
        CHECK(a.numerators() == c.numerators());
        CHECK(a.hash() == b.hash());
        CHECK(a.hash() == c.hash());
    }
}
