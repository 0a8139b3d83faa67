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

#ifndef SIGPAIRS_CYCLOTOMIC_HPP
#define SIGPAIRS_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sigpairs {

using Integer = mpz_class;
using Rational = mpq_class;

long euler_phi(long n);
long gcd(long a, long b);
long lcm(long a, long b);

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
/// Computed once per n and shared read-only between threads.
const std::vector<long>& cyclotomic_polynomial(long n);

/// Reduces an integer polynomial (lowest degree first) modulo the n-th
/// cyclotomic polynomial in place; the result has at most phi(n) entries.
void reduce_mod_cyclotomic(std::vector<Integer>& coeffs, long n);

/// Exact element of Q(zeta_n) in the reduced power basis
/// 1, zeta, ..., zeta^(phi(n)-1).
///
/// Stored as an integer coordinate vector over one positive denominator,
/// kept in lowest terms, with trailing zero coordinates trimmed. Canonical
/// reduction makes equality within one order a coordinate comparison.
/// Mixed-order arithmetic promotes both operands to the lcm of the orders.
class Cyclotomic {
   public:
    Cyclotomic() = default;
    Cyclotomic(long value, long order = 1);  // NOLINT(google-explicit-constructor)
    Cyclotomic(const Rational& value, long order = 1);
    Cyclotomic(std::vector<Integer> numerators, Integer denominator, long order);

    static Cyclotomic root_of_unity(long n, long k);
    /// Builds from (exponent, value) pairs; exponents may be any integer.
    static Cyclotomic from_coords(long order, const std::vector<std::pair<long, Rational>>& coords);

    long order() const noexcept { return order_; }
    bool is_zero() const noexcept { return num_.empty(); }
    bool is_rational() const noexcept { return num_.size() <= 1; }
    std::optional<Rational> to_rational() const;

    /// Nonzero coordinates sorted by exponent.
    std::vector<std::pair<long, Rational>> coords() const;
    Rational coord(long k) const;
    const std::vector<Integer>& numerators() const noexcept { return num_; }
    const Integer& denominator() const noexcept { return den_; }

    Cyclotomic promote(long m) const;
    /// Same element expressed in Q(zeta_m) for m | order(), if it lies there.
    std::optional<Cyclotomic> demote(long m) const;

    Cyclotomic conj() const;
    bool is_real() const;
    Cyclotomic inverse() const;

    /// Certified sign of a real element: -1, 0 or +1.
    int sign() const;
    /// Floating estimate of the value; not certified.
    std::complex<double> approx() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator/=(const Cyclotomic& rhs);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    /// Field equality; promotes to a common order when the orders differ.
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
    /// Total order on (order, denominator, numerators); only meaningful as a
    /// container key among elements of one order.
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

    std::size_t hash() const noexcept;
    std::string to_string() const;

   private:
    void normalize();

    long order_ = 1;
    std::vector<Integer> num_;
    Integer den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

/// Hard cap for sign certification, in bits. Defaults to 65536.
unsigned max_precision_bits() noexcept;
void set_max_precision_bits(unsigned bits) noexcept;

/// Enclosure [lo, hi] of the real part of a cyclotomic number with dyadic
/// endpoints, obtained with outward rounding at the given working precision.
class Interval {
   public:
    Interval(const Cyclotomic& value, unsigned precision_bits);
    ~Interval();
    Interval(const Interval&) = delete;
    Interval& operator=(const Interval&) = delete;

    unsigned precision() const noexcept { return precision_; }
    bool contains_zero() const;
    /// Sign of the interval when it excludes zero, otherwise 0.
    int sign() const;
    double lo_double() const;
    double hi_double() const;
    /// Endpoint as mantissa * 2^exponent.
    std::pair<Integer, long> lo_dyadic() const;
    std::pair<Integer, long> hi_dyadic() const;

   private:
    struct Impl;
    Impl* impl_;
    unsigned precision_;
};

}  // namespace sigpairs

template <>
struct std::hash<sigpairs::Cyclotomic> {
    std::size_t operator()(const sigpairs::Cyclotomic& c) const noexcept { return c.hash(); }
};

#endif
