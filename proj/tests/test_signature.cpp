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

#include <algorithm>
#include <numeric>
#include <random>

#include "sigpairs/error.hpp"
#include "sigpairs/group.hpp"
#include "sigpairs/invariant.hpp"
#include "sigpairs/signature.hpp"

using namespace sigpairs;

namespace {

using Dense = std::vector<std::vector<Cyclotomic>>;

Cyclotomic c(long v) { return Cyclotomic(v); }

Dense to_dense(const HermitianMatrix& m) {
    Dense d(m.dimension(), std::vector<Cyclotomic>(m.dimension()));
    for (std::size_t i = 0; i < m.dimension(); ++i)
        for (std::size_t j = 0; j < m.dimension(); ++j) d[i][j] = m.at(i, j);
    return d;
}

Inertia inertia_of(const FiniteMatrixGroup& g) { return inertia_exact(coefficient_matrix(phi(g))); }

SignaturePair pair(std::size_t plus, std::size_t minus) { return {plus, minus}; }

}  // namespace

TEST_CASE("coefficient matrix examples") {
    const auto trivial = coefficient_matrix(phi(cyclic_gamma(1, 0)));
    REQUIRE(trivial.dimension() == 2);
    CHECK(trivial.basis[0] == MultiIndex{1, 0});
    CHECK(trivial.basis[1] == MultiIndex{0, 1});
    CHECK(to_dense(trivial) == Dense{{c(1), c(0)}, {c(0), c(1)}});

    const auto g24 = coefficient_matrix(phi(cyclic_gamma(2, 4)));
    REQUIRE(g24.dimension() == 3);
    CHECK(g24.basis == std::vector<MultiIndex>{{2, 0}, {0, 1}, {0, 2}});
    CHECK(to_dense(g24) == Dense{{c(1), c(0), c(0)}, {c(0), c(2), c(0)}, {c(0), c(0), c(-1)}});

    const auto d3 = coefficient_matrix(phi(dihedral(3)));
    REQUIRE(d3.dimension() == 9);
    CHECK(d3.is_hermitian());
    auto idx = [&](MultiIndex m) {
        return static_cast<std::size_t>(std::find(d3.basis.begin(), d3.basis.end(), m) - d3.basis.begin());
    };
    CHECK(d3.at(idx({3, 0}), idx({3, 0})) == c(1));
    CHECK(d3.at(idx({3, 0}), idx({0, 3})) == c(1));
    CHECK(d3.at(idx({4, 1}), idx({4, 1})) == c(-3));
    CHECK(d3.at(idx({1, 1}), idx({1, 1})) == c(6));
    CHECK(d3.at(idx({2, 2}), idx({2, 2})) == c(-9));
    CHECK(d3.at(idx({3, 3}), idx({6, 0})) == c(-1));
    CHECK(d3.at(idx({3, 3}), idx({3, 3})).is_zero());
    CHECK(inertia_exact(d3) == Inertia{3, 3, 3});
    CHECK(rank_exact(d3) == 6);
}

TEST_CASE("inertia examples") {
    CHECK(inertia_exact(matrix_from_dense({{c(0), c(-1)}, {c(-1), c(0)}})) == Inertia{1, 1, 0});
    CHECK(inertia_exact(matrix_from_dense({{c(1), c(0), c(0)}, {c(0), c(2), c(0)}, {c(0), c(0), c(-1)}})) ==
          Inertia{2, 1, 0});
    const Dense ones(3, std::vector<Cyclotomic>(3, c(1)));
    CHECK(inertia_exact(matrix_from_dense(ones)) == Inertia{1, 0, 2});
    CHECK(inertia_numeric(matrix_from_dense(ones)) == Inertia{1, 0, 2});
    CHECK(inertia_numeric(matrix_from_dense({{c(1), c(0), c(0)}, {c(0), c(2), c(0)}, {c(0), c(0), c(-1)}})) ==
          Inertia{2, 1, 0});
    // Complex off-diagonal entries: [[1, i], [-i, 1]] is singular.
    const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    CHECK(inertia_exact(matrix_from_dense({{c(1), i}, {-i, c(1)}})) == Inertia{1, 0, 1});
    CHECK(inertia_exact(matrix_from_dense({{c(0), i}, {-i, c(0)}})) == Inertia{1, 1, 0});
    try {
        inertia_exact(matrix_from_dense({{c(0), c(1)}, {c(2), c(0)}}));
        FAIL("expected NotHermitian");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotHermitian);
    }
}

TEST_CASE("signature pairs and ratios") {
    CHECK(signature_pair(binary_dihedral(2)) == pair(5, 1));
    CHECK(signature_pair(dihedral(3)) == pair(3, 3));
    CHECK(signature_pair(binary_polyhedral(Polyhedral::T)) == pair(9, 5));
    CHECK(positivity_ratio(dihedral(3)) == Rational(1, 2));
    CHECK(positivity_ratio(binary_polyhedral(Polyhedral::T)) == Rational(9, 14));
    CHECK(positivity_ratio(cyclic_gamma(1, 0)) == Rational(1));
    try {
        positivity_ratio(SignaturePair{0, 0});
        FAIL("expected EmptySpectrum");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptySpectrum);
    }
}

TEST_CASE("octahedral rank") {
    const auto m = coefficient_matrix(phi(binary_polyhedral(Polyhedral::O)));
    CHECK(m.dimension() == 135);
    const auto exact = inertia_exact(m);
    CHECK(exact == Inertia{17, 9, 109});
    CHECK(inertia_numeric(m).rank() == 26);
    CHECK(rank_exact(m) == 26);
}

TEST_CASE("numeric oracle agrees for groups up to order 48") {
    std::vector<FiniteMatrixGroup> groups;
    for (long p = 2; p <= 12; ++p) groups.push_back(cyclic_gamma(p, p - 1));
    for (long p = 3; p <= 24; p += 3) groups.push_back(dihedral(p));
    for (long p = 2; p <= 12; p += 2) groups.push_back(binary_dihedral(p));
    groups.push_back(binary_polyhedral(Polyhedral::T));
    groups.push_back(binary_polyhedral(Polyhedral::O));
    for (const auto& g : groups) {
        CAPTURE(g.label());
        const auto m = coefficient_matrix(phi(g));
        CHECK(inertia_exact(m) == inertia_numeric(m, 256, "1e-30"));
    }
}

TEST_CASE("rank agrees with plain elimination") {
    for (const auto& g : {dihedral(5), dihedral(8), binary_dihedral(3), binary_dihedral(6), cyclic_gamma(9, 2),
                          binary_polyhedral(Polyhedral::T)}) {
        CAPTURE(g.label());
        const auto m = coefficient_matrix(phi(g));
        CHECK(inertia_exact(m).rank() == rank_exact(m));
    }
}

TEST_CASE("diagonal census for cyclic groups") {
    for (long p = 2; p <= 14; ++p) {
        for (long q = 0; q <= p; ++q) {
            const auto poly = phi(cyclic_gamma(p, q));
            std::size_t plus = 0, minus = 0;
            for (const auto& [key, value] : poly.terms()) (value.sign() > 0 ? plus : minus)++;
            CHECK(inertia_of(cyclic_gamma(p, q)) == Inertia{plus, minus, 0});
        }
    }
}

TEST_CASE("basis permutation invariance") {
    std::mt19937 rng(2026);
    for (const auto& g : {dihedral(5), binary_dihedral(3), binary_polyhedral(Polyhedral::T)}) {
        CAPTURE(g.label());
        const Dense d = to_dense(coefficient_matrix(phi(g)));
        const Inertia expected = inertia_exact(matrix_from_dense(d));
        for (int iter = 0; iter < 5; ++iter) {
            std::vector<std::size_t> perm(d.size());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            Dense permuted(d.size(), std::vector<Cyclotomic>(d.size()));
            for (std::size_t i = 0; i < d.size(); ++i)
                for (std::size_t j = 0; j < d.size(); ++j) permuted[i][j] = d[perm[i]][perm[j]];
            CHECK(inertia_exact(matrix_from_dense(permuted)) == expected);
        }
    }
}

TEST_CASE("congruence by random invertible matrices") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> coef(-2, 2);
    const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    const Dense d = to_dense(coefficient_matrix(phi(binary_dihedral(2))));
    const std::size_t n = d.size();
    const Inertia expected = inertia_exact(matrix_from_dense(d));
    for (int iter = 0; iter < 5; ++iter) {
        // Unit upper triangular with Gaussian-integer entries, so invertible.
        Dense p(n, std::vector<Cyclotomic>(n, Cyclotomic(0, 4)));
        for (std::size_t r = 0; r < n; ++r) {
            p[r][r] = Cyclotomic(1, 4);
            for (std::size_t s = r + 1; s < n; ++s) p[r][s] = Cyclotomic(coef(rng), 4) + Cyclotomic(coef(rng), 4) * i;
        }
        std::shuffle(p.begin(), p.end(), rng);
        Dense out(n, std::vector<Cyclotomic>(n, Cyclotomic(0, 4)));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s) {
                Cyclotomic sum(0, 4);
                for (std::size_t a = 0; a < n; ++a) {
                    if (p[a][r].is_zero()) continue;
                    for (std::size_t b = 0; b < n; ++b) {
                        if (p[b][s].is_zero() || d[a][b].is_zero()) continue;
                        sum += p[a][r].conj() * d[a][b] * p[b][s];
                    }
                }
                out[r][s] = sum;
            }
        CHECK(inertia_exact(matrix_from_dense(out)) == expected);
    }
}

TEST_CASE("conjugate groups have the same signature") {
    const auto t = binary_polyhedral(Polyhedral::T);
    const auto o = binary_polyhedral(Polyhedral::O);
    const auto bd = binary_dihedral(3);
    const std::vector<Matrix2> conjugators{t.elements()[7], t.elements()[13], o.elements()[30], bd.elements()[7],
                                           o.elements()[41]};
    for (const auto& g : {cyclic_gamma(5, 2), cyclic_gamma(8, 3), dihedral(3), dihedral(6), binary_dihedral(2),
                          binary_dihedral(5), t}) {
        CAPTURE(g.label());
        const auto expected = signature_pair(g);
        for (const auto& u : conjugators) CHECK(signature_pair(conjugate(g, u)) == expected);
    }
}

TEST_CASE("json record") {
    const auto rec = compute_signature(binary_dihedral(2), Method::Exact);
    const auto j = to_json(rec, true);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"group", "order", "N", "N_plus", "N_minus", "rank", "ratio", "method",
                                           "elapsed_ms"});
    CHECK(j["group"] == "binary-dihedral:2");
    CHECK(j["order"] == 8);
    CHECK(j["N"] == 6);
    CHECK(j["N_plus"] == 5);
    CHECK(j["N_minus"] == 1);
    CHECK(j["rank"] == 6);
    CHECK(j["ratio"] == "5/6");
    CHECK(j["method"] == "exact");
    CHECK(j["elapsed_ms"] == 0);
    const auto num = compute_signature(binary_dihedral(2), Method::Numeric);
    CHECK(num.inertia == rec.inertia);
    CHECK(to_json(num, true)["method"] == "numeric");
}
