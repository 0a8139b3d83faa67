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

#include <numeric>
#include <sstream>

#include "sigpairs/fpq.hpp"
#include "sigpairs/group.hpp"
#include "sigpairs/signature.hpp"

using namespace sigpairs;

namespace {

Integer binom(unsigned n, unsigned k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// f - (x+y)^p has every coefficient divisible by p.
bool congruent_to_binomial(long p, long q) {
    const auto f = fpq(p, q);
    IntBivariatePoly diff = f;
    for (unsigned r = 0; r <= static_cast<unsigned>(p); ++r) diff.add(r, static_cast<unsigned>(p) - r, -binom(static_cast<unsigned>(p), r));
    for (const auto& [e, c] : diff.terms())
        if (mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(p)) == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("f_p4 table") {
    const char* rows[] = {
        "x+y",
        "x^2+2y-y^2",
        "x^3+3x^2y+3xy^2+y^3",
        "x^4+4y-6y^2+4y^3-y^4",
        "x^5+5xy-5x^2y^2+y^5",
        "x^6+6x^2y-3x^4y^2+2y^3+3x^2y^4-y^6",
        "x^7+7x^3y+14x^2y^3+7xy^5+y^7",
        "x^8+8x^4y+4y^2+8x^4y^3-6y^4+4y^6-y^8",
        "x^9+9x^5y+9xy^2+3x^6y^3-18x^2y^4+3x^3y^6+y^9",
    };
    for (long p = 1; p <= 9; ++p) {
        CAPTURE(p);
        CHECK(render(fpq(p, 4), p, 4) == rows[p - 1]);
    }
    const std::string text = fpq_table(4, 9, TableFormat::Text);
    CHECK(text.find("f_{9,4}(x,y) = x^9+9x^5y+9xy^2+3x^6y^3-18x^2y^4+3x^3y^6+y^9") != std::string::npos);
    const std::string latex = fpq_table(4, 3, TableFormat::Latex);
    CHECK(latex.find("$f_{2,4}(x,y)$") != std::string::npos);
    CHECK(latex.find("$x^2+2y-y^2$") != std::string::npos);
}

TEST_CASE("f_p1 is the binomial expansion") {
    for (long p = 1; p <= 12; ++p) {
        IntBivariatePoly expected;
        for (unsigned r = 0; r <= static_cast<unsigned>(p); ++r) expected.add(r, static_cast<unsigned>(p) - r, binom(static_cast<unsigned>(p), r));
        CHECK(fpq(p, 1) == expected);
    }
}

TEST_CASE("closed forms for q = p - 1") {
    CHECK(c_closed(6, 2) == 9);
    CHECK(fpq(6, 5).coeff(2, 2) == -9);
    IntBivariatePoly f3;
    f3.add(3, 0, 1);
    f3.add(0, 3, 1);
    f3.add(1, 1, 3);
    CHECK(f_closed_pminus1(3) == f3);
    CHECK(render(f_closed_pminus1(5), 5, 4) == "x^5+5xy-5x^2y^2+y^5");
    for (long p = 1; p <= 24; ++p) {
        CAPTURE(p);
        CHECK(f_closed_pminus1(p) == fpq(p, p - 1));
        CHECK(verify_exact_formula(p));
    }
    CHECK_THROWS(c_closed(6, 4));
    CHECK_THROWS(c_closed(6, 0));
}

TEST_CASE("weights and lww signs") {
    CHECK(weight(4, 2, 6, 4) == 2);
    CHECK(weight(7, 0, 7, 3) == 1);
    CHECK(weight(0, 7, 7, 3) == 3);
    CHECK_FALSE(weight(1, 1, 6, 4).has_value());
    CHECK(lww_sign(4, 2, 2) == -1);
    CHECK(lww_sign(2, 1, 1) == 1);
    for (long r = 0; r < 10; ++r)
        for (long s = 0; s < 10; ++s) CHECK(lww_sign(r, s, 3) == 1);
}

TEST_CASE("lww sign rule") {
    for (long q : {2, 3, 4, 5, 7, 8}) {
        for (long p = 1; p <= 60; ++p) {
            const auto f = fpq(p, q);
            for (const auto& [e, c] : f.terms()) {
                const auto w = weight(e.first, e.second, p, q);
                REQUIRE(w.has_value());
                const int expected = lww_sign(e.first, e.second, *w);
                if (sgn(c) != expected) {
                    CAPTURE(p);
                    CAPTURE(q);
                    FAIL("sign mismatch");
                }
            }
        }
    }
}

TEST_CASE("integrality for p up to 60") {
    // fpq asserts integrality while demoting; this sweeps every q <= p.
    for (long p = 1; p <= 60; ++p) {
        for (long q = 0; q <= p; ++q) {
            const auto f = fpq(p, q);
            for (const auto& [e, c] : f.terms()) {
                const long deg = static_cast<long>(e.first + e.second);
                if (deg <= 0 || deg > p || (e.first + q * e.second) % p != 0) {
                    CAPTURE(p);
                    CAPTURE(q);
                    FAIL("weight constraint violated");
                }
            }
        }
    }
}

TEST_CASE("power sums agree with the cyclotomic expansion") {
    for (long p = 1; p <= 30; ++p)
        for (long q = -3; q <= p + 3; ++q) {
            CAPTURE(p);
            CAPTURE(q);
            CHECK(fpq_power_sum(p, q) == fpq(p, q));
        }
}

TEST_CASE("weight census") {
    const auto r = weight_census(8, 4);
    CHECK(r.per_k == std::map<long, long>{{1, 3}, {2, 2}, {3, 1}, {4, 1}});
    CHECK(r.n_total == 7);
    CHECK(r.bounds_ok());
    CHECK(std::abs(r.n_total - 4) <= 4);
    for (long p = 1; p <= 10; ++p) {
        const auto w = weight_census(p, 1);
        CHECK(w.per_k == std::map<long, long>{{1, p + 1}});
        CHECK(w.n_odd == p + 1);
    }
    for (long p = 1; p <= 200; p += 7)
        for (long q = 2; q <= 12; ++q) {
            const auto w = weight_census(fpq_power_sum(p, q), p, q);
            CAPTURE(p);
            CAPTURE(q);
            CHECK(w.bounds_ok());
            long sum = 0;
            for (const auto& [k, n] : w.per_k) sum += n;
            CHECK(sum == w.n_total);
            CHECK(w.n_odd + w.n_even == w.n_total);
            CHECK(w.per_k.at(1) == p / q + 1);
            CHECK(w.per_k.at(q) == 1);
        }
}

TEST_CASE("cyclic signatures") {
    CHECK(signature_cyclic(5, 4) == SignaturePair{3, 1});
    CHECK(signature_cyclic(2, 1) == SignaturePair{3, 0});
    for (long p = 2; p <= 40; ++p) {
        CAPTURE(p);
        const std::size_t plus = static_cast<std::size_t>((p + 2) / 4 + 2);
        const std::size_t minus = static_cast<std::size_t>(p / 4);
        CHECK(signature_cyclic(p, p - 1) == SignaturePair{plus, minus});
    }
}

TEST_CASE("cyclic signatures agree with the engine") {
    for (long p = 1; p <= 30; ++p)
        for (long q = 0; q <= p; ++q) {
            CAPTURE(p);
            CAPTURE(q);
            CHECK(signature_cyclic(p, q) == signature_pair(cyclic_gamma(p, q)));
        }
}

TEST_CASE("prime congruence") {
    for (long p = 2; p <= 23; ++p) {
        if (!is_prime(p)) continue;
        for (long q : {2, 3, 4}) CHECK(congruent_to_binomial(p, q));
    }
    for (long p : {4, 6, 8, 9}) {
        CAPTURE(p);
        bool some_fail = false;
        for (long q : {2, 3, 4}) some_fail = some_fail || !congruent_to_binomial(p, q);
        CHECK(some_fail);
    }
}

TEST_CASE("asymptotic ratio") {
    CHECK(T_closed(1) == 1);
    CHECK(T_closed(2) == 1);
    CHECK(T_closed(3) == Rational(5, 6));
    CHECK(T_closed(7) == Rational(11, 14));
    const Rational listed[] = {1, 1, Rational(5, 6), Rational(5, 6), Rational(4, 5), Rational(4, 5), Rational(11, 14), Rational(11, 14), Rational(7, 9)};
    for (long q = 1; q <= 9; ++q) CHECK(T_closed(q) == listed[q - 1]);
    for (long r = 1; r <= 500; ++r) CHECK(T_closed(2 * r - 1) == T_closed(2 * r));
    for (long q = 1; q < 1000; ++q) CHECK(T_closed(q + 1) <= T_closed(q));
    const Rational gap = T_closed(1000000) - Rational(3, 4);
    CHECK(abs(gap) <= Rational(1, 100000));
    CHECK(even_odd_limits(4) == std::make_pair(Rational(1, 3), Rational(2, 3)));
    CHECK(even_odd_limits(5) == std::make_pair(Rational(2, 5), Rational(3, 5)));
    const std::string table = even_odd_table(6);
    CHECK(table.find("(q-1)/(2q)") != std::string::npos);
}

TEST_CASE("mirror symmetry") {
    CHECK(mirror_check(5, 2));
    CHECK(mirror_check(6, 2));
    for (long p = 2; p <= 12; ++p)
        for (long q = 1; q <= p; ++q) {
            CAPTURE(p);
            CAPTURE(q);
            const auto m = mirror_analysis(p, q);
            CHECK(m.multiset);
            CHECK(std::find(m.maps.begin(), m.maps.end(), MirrorMap::SameY) != m.maps.end());
        }
}
