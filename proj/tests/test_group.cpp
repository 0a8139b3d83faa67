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

#include <cstdio>
#include <fstream>
#include <set>
#include <unordered_set>

#include "sigpairs/error.hpp"
#include "sigpairs/group.hpp"
#include "sigpairs/json_io.hpp"

using namespace sigpairs;

namespace {

Cyclotomic z(long n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

std::unordered_set<Matrix2> as_set(const FiniteMatrixGroup& g) {
    return {g.elements().begin(), g.elements().end()};
}

void check_group_axioms(const FiniteMatrixGroup& g) {
    REQUIRE(g.order() > 0);
    CHECK(g.elements().front() == Matrix2::identity(g.field_order()));
    const auto set = as_set(g);
    CHECK(set.size() == g.order());
    for (const auto& a : g.elements()) {
        CHECK(a.is_unitary());
        CHECK(set.count(a.adjoint()) == 1);
        for (const auto& b : g.elements()) {
            if (set.count(a * b) != 1) {
                FAIL("product leaves the group");
            }
        }
    }
}

Matrix2 minus_identity(long n) { return Matrix2::diag(Cyclotomic(-1, n), Cyclotomic(-1, n)); }

}  // namespace

TEST_CASE("orders of built-in groups") {
    CHECK(cyclic_gamma(5, 2).order() == 5);
    CHECK(cyclic_gamma(1, 0).order() == 1);
    CHECK(dihedral(3).order() == 6);
    CHECK(dihedral(7).order() == 14);
    CHECK(binary_dihedral(2).order() == 8);
    CHECK(binary_dihedral(5).order() == 20);
    CHECK(binary_polyhedral(Polyhedral::T).order() == 24);
    CHECK(binary_polyhedral(Polyhedral::O).order() == 48);
    CHECK(binary_polyhedral(Polyhedral::I).order() == 120);
}

TEST_CASE("group axioms") {
    for (const auto& g : {cyclic_gamma(7, 3), dihedral(5), binary_dihedral(4), binary_polyhedral(Polyhedral::T),
                          binary_polyhedral(Polyhedral::O)}) {
        CAPTURE(g.label());
        check_group_axioms(g);
    }
}

TEST_CASE("determinants") {
    for (const auto& g : {binary_dihedral(3), binary_polyhedral(Polyhedral::T), binary_polyhedral(Polyhedral::O),
                          binary_polyhedral(Polyhedral::I)}) {
        CAPTURE(g.label());
        for (const auto& m : g.elements()) CHECK(m.det() == Cyclotomic(1));
    }
    bool found = false;
    const auto d4 = dihedral(4);
    for (const auto& m : d4.elements()) found = found || m.det() != Cyclotomic(1);
    CHECK(found);
}

TEST_CASE("cyclic elements are diagonal powers") {
    const auto g = cyclic_gamma(6, 5);
    const auto set = as_set(g);
    for (long j = 0; j < 6; ++j) CHECK(set.count(Matrix2::diag(z(6, j), z(6, 5 * j)).promote(g.field_order())) == 1);
}

TEST_CASE("polyhedral relations") {
    const auto [r, s, t] = springer_generators(Polyhedral::O);
    const Matrix2 minus8 = minus_identity(8);
    {
        const auto [a, b] = polyhedral_generators(Polyhedral::T);
        CHECK(a == s * t.adjoint());
        CHECK(a.pow(3) == b.pow(3));
        CHECK(b.pow(3) == (a * b).pow(2));
    }
    CHECK((r * t).pow(4) == minus8);
    CHECK(t.pow(3) == minus8);
    CHECK((r * t * t).pow(2) == minus8);

    const auto [ri, si, ti] = springer_generators(Polyhedral::I);
    const Matrix2 minus10 = minus_identity(10);
    CHECK(ri.pow(5) == minus10);
    CHECK((ri.pow(5) * ti * si).pow(2) == minus10);
    // With the generators as written, r^4ts has order 3; its negative
    // satisfies a^5 = b^3 = (ab)^2 = -1.
    const Matrix2 b = ri.pow(4) * ti * si;
    CHECK(b.pow(3) == Matrix2::identity(10));
    const Matrix2 nb = minus10 * b;
    CHECK(nb.pow(3) == minus10);
    CHECK((ri * nb).pow(2) == minus10);
    CHECK(closure({ri, nb}).order() == 120);
}

TEST_CASE("icosahedral enumeration") {
    const auto g = binary_polyhedral(Polyhedral::I);
    const auto [r, s, t] = springer_generators(Polyhedral::I);
    std::unordered_set<Matrix2> listed;
    for (long h = 0; h < 10; ++h) {
        listed.insert(r.pow(h));
        listed.insert(s * r.pow(h));
        for (long j = 0; j < 5; ++j) {
            listed.insert(r.pow(h) * t * r.pow(j));
            listed.insert(r.pow(h) * t * s * r.pow(j));
        }
    }
    CHECK(listed == as_set(g));
}

TEST_CASE("closure properties") {
    const auto [a, b] = polyhedral_generators(Polyhedral::O);
    const auto g1 = closure({a, b});
    const auto g2 = closure({b, a});
    CHECK(as_set(g1) == as_set(g2));
    const auto g3 = closure(g1.elements());
    CHECK(as_set(g3) == as_set(g1));
    const auto g4 = closure({a, b, a * b});
    CHECK(as_set(g4) == as_set(g1));
    CHECK(closure({}).order() == 1);
}

TEST_CASE("closure rejects non-unitary and infinite generators") {
    const Matrix2 ok = Matrix2::diag(z(4), z(4, 3));
    const Matrix2 bad = Matrix2::diag(Cyclotomic(2), Cyclotomic(1));
    try {
        closure({ok, bad});
        FAIL("expected NotUnitaryError");
    } catch (const NotUnitaryError& e) {
        CHECK(e.index() == 1);
        CHECK(e.code() == ErrorCode::NotUnitary);
    }
    // A rational rotation of infinite order.
    const Matrix2 rot{{Cyclotomic(Rational(3, 5)), Cyclotomic(Rational(4, 5)), Cyclotomic(Rational(-4, 5)),
                       Cyclotomic(Rational(3, 5))}};
    REQUIRE(rot.is_unitary());
    try {
        closure({rot}, 100);
        FAIL("expected CapExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CapExceeded);
    }
}

TEST_CASE("conjugation") {
    const Matrix2 swap{{Cyclotomic(0), Cyclotomic(1), Cyclotomic(1), Cyclotomic(0)}};
    const auto g = cyclic_gamma(5, 2);
    const auto c = conjugate(g, swap);
    CHECK(c.order() == 5);
    CHECK(as_set(c) == as_set(cyclic_gamma(5, 3)));
    const auto t = binary_polyhedral(Polyhedral::T);
    const Matrix2 u = t.elements()[5];
    CHECK(as_set(conjugate(t, u)) == as_set(t));
    CHECK_THROWS_AS(conjugate(g, Matrix2::diag(Cyclotomic(2), Cyclotomic(1))), NotUnitaryError);
}

TEST_CASE("group specs") {
    CHECK(group_from_spec("cyclic:8,3").order() == 8);
    CHECK(group_from_spec("dihedral:4").order() == 8);
    CHECK(group_from_spec("binary-dihedral:3").order() == 12);
    CHECK(group_from_spec("T").order() == 24);
    CHECK(group_from_spec("O").order() == 48);
    for (const char* bad : {"", "cyclic:", "cyclic:0,1", "cyclic:3", "dihedral:x", "Q", "binary-dihedral:-2"}) {
        CAPTURE(bad);
        try {
            group_from_spec(bad);
            FAIL("expected a parse error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Parse);
        }
    }
}

TEST_CASE("json round trip and generator files") {
    const Cyclotomic c = z(12, 5) * Cyclotomic(Rational(-3, 4)) + Cyclotomic(2);
    CHECK(cyclotomic_from_json(cyclotomic_to_json(c)) == c);
    const auto [a, b] = polyhedral_generators(Polyhedral::T);
    CHECK(matrix_from_json(matrix_to_json(a)) == a);

    nlohmann::json j;
    j["generators"] = {matrix_to_json(a), matrix_to_json(b)};
    const auto g = group_from_json(j, "T-file");
    CHECK(g.order() == 24);
    CHECK(g.label() == "T-file");

    const std::string path = "sigpairs_test_generators.json";
    {
        std::ofstream out(path);
        out << R"({"generators": [[[{"order": 1, "coords": [[0, "-1"]]}, 0], [0, {"order": 1, "coords": [[0, -1]]}]]]})";
    }
    const auto h = load_generator_file(path);
    CHECK(h.order() == 2);
    CHECK(group_from_spec("file:" + path).order() == 2);
    std::remove(path.c_str());

    try {
        load_generator_file("does-not-exist.json");
        FAIL("expected an io error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Io);
    }
    nlohmann::json capped;
    capped["generators"] = {matrix_to_json(a), matrix_to_json(b)};
    capped["cap"] = 10;
    CHECK_THROWS_AS(group_from_json(capped, "capped"), Error);
}
