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

#ifndef SIGPAIRS_POLY_HPP
#define SIGPAIRS_POLY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sigpairs/cyclotomic.hpp"

namespace sigpairs {

/// Exponent pair for the monomial z1^a z2^b.
struct MultiIndex {
    unsigned a = 0;
    unsigned b = 0;

    unsigned degree() const noexcept { return a + b; }
    auto operator<=>(const MultiIndex&) const = default;
};

std::string to_string(const MultiIndex& m);

/// Sparse polynomial in z1, z2 with cyclotomic coefficients.
class HoloPoly {
   public:
    HoloPoly() = default;
    static HoloPoly constant(const Cyclotomic& c);
    static HoloPoly monomial(MultiIndex m, const Cyclotomic& c = Cyclotomic(1));
    /// c1 z1 + c2 z2
    static HoloPoly linear(const Cyclotomic& c1, const Cyclotomic& c2);

    const std::map<MultiIndex, Cyclotomic>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Cyclotomic coeff(MultiIndex m) const;
    void add(MultiIndex m, const Cyclotomic& c);

    HoloPoly operator-() const;
    HoloPoly& operator+=(const HoloPoly& rhs);
    HoloPoly& operator-=(const HoloPoly& rhs);
    friend HoloPoly operator+(HoloPoly a, const HoloPoly& b) { return a += b; }
    friend HoloPoly operator-(HoloPoly a, const HoloPoly& b) { return a -= b; }
    friend HoloPoly operator*(const HoloPoly& a, const HoloPoly& b);
    friend HoloPoly operator*(const Cyclotomic& c, const HoloPoly& p);
    HoloPoly pow(unsigned k) const;
    /// Coefficient-wise complex conjugate.
    HoloPoly conj_coeffs() const;

    friend bool operator==(const HoloPoly& a, const HoloPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const HoloPoly& a, const HoloPoly& b) { return !(a == b); }
    /// Key ordering for use in sets; not a mathematical order.
    friend bool operator<(const HoloPoly& a, const HoloPoly& b) { return a.terms_ < b.terms_; }

    std::string to_string() const;

   private:
    std::map<MultiIndex, Cyclotomic> terms_;
};

/// Sparse polynomial in (z, conj z) stored as terms z^alpha conj(z)^beta.
/// Keys pack (a1, a2, b1, b2) with 16 bits each so iteration order is
/// lexicographic in that tuple.
class HermitianPolynomial {
   public:
    using Key = std::uint64_t;

    HermitianPolynomial() = default;
    explicit HermitianPolynomial(std::size_t group_order) : group_order_(group_order) {}

    static Key pack(MultiIndex alpha, MultiIndex beta);
    static std::pair<MultiIndex, MultiIndex> unpack(Key key);

    std::size_t group_order() const noexcept { return group_order_; }
    void set_group_order(std::size_t n) noexcept { group_order_ = n; }

    const std::map<Key, Cyclotomic>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    Cyclotomic coeff(MultiIndex alpha, MultiIndex beta) const;
    /// Accumulates c into the coefficient; zero results are erased.
    void add(MultiIndex alpha, MultiIndex beta, const Cyclotomic& c);
    /// Overwrites; assumes c is nonzero and the key is new (bulk construction).
    void insert_new(MultiIndex alpha, MultiIndex beta, Cyclotomic c);

    /// Sorted distinct monomials occurring as alpha or beta.
    std::vector<MultiIndex> support() const;
    bool is_diagonal() const;
    bool is_hermitian() const;
    /// Throws Error(NotHermitian) if the symmetry fails.
    void assert_hermitian() const;
    unsigned max_degree() const;

    HermitianPolynomial& operator+=(const HermitianPolynomial& rhs);
    HermitianPolynomial& operator-=(const HermitianPolynomial& rhs);
    friend HermitianPolynomial operator+(HermitianPolynomial a, const HermitianPolynomial& b) { return a += b; }
    friend HermitianPolynomial operator-(HermitianPolynomial a, const HermitianPolynomial& b) { return a -= b; }
    friend HermitianPolynomial operator*(const HermitianPolynomial& a, const HermitianPolynomial& b);

    /// Coefficient equality; group_order is metadata and not compared.
    friend bool operator==(const HermitianPolynomial& a, const HermitianPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    /// CSV rows "a1,a2,b1,b2,<coeff json>" in key order.
    std::string to_csv() const;

   private:
    std::map<Key, Cyclotomic> terms_;
    std::size_t group_order_ = 0;
};

}  // namespace sigpairs

#endif
