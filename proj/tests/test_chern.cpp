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

#include <random>

#include "sigpairs/chern.hpp"
#include "sigpairs/error.hpp"
#include "sigpairs/fpq.hpp"
#include "sigpairs/group.hpp"
#include "sigpairs/invariant.hpp"

using namespace sigpairs;

namespace {

Cyclotomic z(long n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

const HoloPoly kSum = HoloPoly::linear(Cyclotomic(1), Cyclotomic(1));

}  // namespace

TEST_CASE("action examples") {
    const HoloPoly h = HoloPoly::monomial({2, 1}, Cyclotomic(3)) + kSum;
    CHECK(act(Matrix2::identity(), h) == h);
    CHECK(act(Matrix2::diag(Cyclotomic(-1), Cyclotomic(-1)), kSum) == -kSum);
    CHECK(act(Matrix2::diag(z(3), z(3)), kSum) == z(3, 2) * kSum);
}

TEST_CASE("action axioms") {
    std::mt19937 rng(12);
    std::uniform_int_distribution<unsigned> expo(0, 3);
    for (const auto& g : {cyclic_gamma(7, 3), dihedral(5), binary_dihedral(3), dihedral(6)}) {
        CAPTURE(g.label());
        const auto& el = g.elements();
        for (int iter = 0; iter < 10; ++iter) {
            const HoloPoly h = HoloPoly::monomial({expo(rng), expo(rng)}, Cyclotomic(2)) + kSum;
            const auto& g1 = el[rng() % el.size()];
            const auto& g2 = el[rng() % el.size()];
            CHECK(act(g1 * g2, h) == act(g1, act(g2, h)));
            CHECK(act(el.front(), h) == h);
        }
    }
}

TEST_CASE("orbit examples") {
    const auto o2 = orbit(cyclic_gamma(2, 1), kSum);
    CHECK(o2.elements.size() == 2);
    CHECK(o2.distinct == std::vector<HoloPoly>{kSum, -kSum});
    CHECK(o2.stabilizer_order == 1);

    const long p = 5, q = 2;
    const auto op = orbit(cyclic_gamma(p, q), -kSum);
    REQUIRE(op.distinct.size() == 5);
    for (long j = 0; j < p; ++j) {
        const HoloPoly expected = HoloPoly::linear(-z(p, j), -z(p, q * j));
        CHECK(std::find(op.distinct.begin(), op.distinct.end(), expected) != op.distinct.end());
    }

    const auto l2 = orbit(binary_dihedral(2), kSum);
    CHECK(l2.elements.size() == 8);
    CHECK(l2.stabilizer_order * l2.distinct.size() == 8);
    const auto d3 = orbit(dihedral(3), kSum);
    CHECK(d3.stabilizer_order == 2);
    CHECK(d3.distinct.size() == 3);
}

TEST_CASE("chern class examples") {
    const auto c2 = chern_classes(orbit(cyclic_gamma(2, 1), kSum));
    REQUIRE(c2.size() == 2);
    CHECK(c2[0].is_zero());
    CHECK(c2[1] == -kSum.pow(2));
    const HoloPoly h = HoloPoly::monomial({1, 2}, Cyclotomic(5));
    const auto trivial = chern_classes(orbit(cyclic_gamma(1, 0), h));
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0] == h);
    const auto c3 = chern_classes(orbit(cyclic_gamma(3, 1), kSum));
    REQUIRE(c3.size() == 3);
    CHECK(c3[0].is_zero());
    CHECK(c3[1].is_zero());
    CHECK(c3[2] == kSum.pow(3));
    CHECK(alternating_sum(c2) == kSum.pow(2));
    CHECK(alternating_sum(c3) == kSum.pow(3));
    const auto poly = orbit_polynomial(orbit(cyclic_gamma(2, 1), kSum));
    REQUIRE(poly.size() == 3);
    CHECK(poly[0] == HoloPoly::constant(Cyclotomic(1)));
}

TEST_CASE("chern classes are invariant") {
    for (const auto& g : {cyclic_gamma(6, 5), dihedral(4), binary_dihedral(3)}) {
        CAPTURE(g.label());
        const auto classes = chern_classes(orbit(g, kSum));
        for (const auto& c : classes)
            for (const auto& m : g.elements()) CHECK(act(m, c) == c);
    }
}

TEST_CASE("alternating sum identity for cyclic groups") {
    CHECK(verify_chern_identity(cyclic_gamma(2, 1)));
    CHECK(verify_chern_identity(cyclic_gamma(3, 1)));
    for (long p = 1; p <= 8; ++p)
        for (long q = 0; q <= p; ++q) {
            CAPTURE(p);
            CAPTURE(q);
            const auto g = cyclic_gamma(p, q);
            CHECK(verify_chern_identity(g));
            CHECK(restrict_to_xy(alternating_sum(chern_classes(orbit(g, kSum)))) == fpq(p, q));
        }
}

TEST_CASE("multiset and set conventions") {
    for (const auto& g : {dihedral(3), dihedral(4), binary_dihedral(2), binary_dihedral(3),
                          binary_polyhedral(Polyhedral::T)}) {
        CAPTURE(g.label());
        const auto report = chern_report(g);
        CHECK(report.multiset_ok);
        CHECK(report.set_power_ok);
        CHECK(report.stabilizer_order * report.distinct == g.order());
        if (report.stabilizer_order == 1) CHECK(report.set_ok);
        CHECK(set_power_matches_multiset(orbit(g, kSum)));
    }
    const auto d3 = chern_report(dihedral(3));
    CHECK(d3.stabilizer_order == 2);
    CHECK_FALSE(d3.set_ok);
}

TEST_CASE("restriction requires integer coefficients") {
    try {
        restrict_to_xy(HoloPoly::linear(z(4), Cyclotomic(1)));
        FAIL("expected NonIntegerCoefficient");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonIntegerCoefficient);
    }
    CHECK_THROWS_AS(restrict_to_xy(HoloPoly::constant(Cyclotomic(Rational(1, 2)))), Error);
}
