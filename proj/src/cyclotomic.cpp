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

#include "sigpairs/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "sigpairs/error.hpp"

namespace sigpairs {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NotReal: return "NotReal";
        case ErrorCode::PrecisionExceeded: return "PrecisionExceeded";
        case ErrorCode::IncompatibleOrder: return "IncompatibleOrder";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::EmptySpectrum: return "EmptySpectrum";
        case ErrorCode::NonIntegerCoefficient: return "NonIntegerCoefficient";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::Parse: return "ParseError";
        case ErrorCode::Io: return "IoError";
    }
    return "Unknown";
}

long gcd(long a, long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long lcm(long a, long b) { return a / gcd(a, b) * b; }

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

std::vector<long> compute_cyclotomic(long n) {
    // x^n - 1 divided by every Phi_d, d a proper divisor of n.
    std::vector<long> poly(static_cast<std::size_t>(n + 1), 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& divisor = cyclotomic_polynomial(d);
        const std::size_t dd = divisor.size() - 1;
        std::vector<long> quotient(poly.size() - dd, 0);
        for (std::size_t e = poly.size() - 1; e + 1 > dd; --e) {
            long c = poly[e];
            if (c == 0) continue;
            quotient[e - dd] = c;
            for (std::size_t i = 0; i <= dd; ++i) poly[e - dd + i] -= c * divisor[i];
        }
        poly = std::move(quotient);
    }
    return poly;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(long n) {
    static std::mutex mutex;
    static std::map<long, std::vector<long>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // Computed outside the lock since it recurses into smaller orders.
    std::vector<long> poly = compute_cyclotomic(n);
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(poly)).first->second;
}

void reduce_mod_cyclotomic(std::vector<Integer>& coeffs, long n) {
    const auto& modulus = cyclotomic_polynomial(n);
    const std::size_t phi = modulus.size() - 1;
    for (std::size_t e = coeffs.size(); e-- > phi;) {
        if (sgn(coeffs[e]) == 0) continue;
        const std::size_t base = e - phi;
        for (std::size_t i = 0; i < phi; ++i) {
            long m = modulus[i];
            if (m > 0)
                mpz_submul_ui(coeffs[base + i].get_mpz_t(), coeffs[e].get_mpz_t(),
                              static_cast<unsigned long>(m));
            else if (m < 0)
                mpz_addmul_ui(coeffs[base + i].get_mpz_t(), coeffs[e].get_mpz_t(),
                              static_cast<unsigned long>(-m));
        }
        coeffs[e] = 0;
    }
    if (coeffs.size() > phi) coeffs.resize(phi);
}

namespace {

void throw_if_bad_order(long n) {
    if (n < 1) throw Error(ErrorCode::IncompatibleOrder, "cyclotomic order must be positive");
}

// Solves A x = b over Q; A is rows x cols. Returns nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> a,
                                                    std::vector<Rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(a[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (sgn(b[i]) != 0) return std::nullopt;
    std::vector<Rational> x(cols, 0);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    return x;
}

std::atomic<unsigned> g_max_precision_bits{65536};

}  // namespace

unsigned max_precision_bits() noexcept { return g_max_precision_bits.load(); }
void set_max_precision_bits(unsigned bits) noexcept { g_max_precision_bits.store(bits); }

Cyclotomic::Cyclotomic(long value, long order) : order_(order) {
    throw_if_bad_order(order);
    if (value != 0) num_.emplace_back(value);
}

Cyclotomic::Cyclotomic(const Rational& value, long order) : order_(order) {
    throw_if_bad_order(order);
    if (sgn(value) != 0) {
        num_.emplace_back(value.get_num());
        den_ = value.get_den();
    }
}

Cyclotomic::Cyclotomic(std::vector<Integer> numerators, Integer denominator, long order)
    : order_(order), num_(std::move(numerators)), den_(std::move(denominator)) {
    throw_if_bad_order(order);
    if (sgn(den_) == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    reduce_mod_cyclotomic(num_, order_);
    normalize();
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
    throw_if_bad_order(n);
    long e = ((k % n) + n) % n;
    std::vector<Integer> v(static_cast<std::size_t>(e + 1), 0);
    v[static_cast<std::size_t>(e)] = 1;
    return Cyclotomic(std::move(v), 1, n);
}

Cyclotomic Cyclotomic::from_coords(long order, const std::vector<std::pair<long, Rational>>& coords) {
    throw_if_bad_order(order);
    Integer common = 1;
    for (const auto& [k, v] : coords) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> v(static_cast<std::size_t>(order), 0);
    for (const auto& [k, r] : coords) {
        long e = ((k % order) + order) % order;
        v[static_cast<std::size_t>(e)] += r.get_num() * (common / r.get_den());
    }
    return Cyclotomic(std::move(v), common, order);
}

void Cyclotomic::normalize() {
    while (!num_.empty() && sgn(num_.back()) == 0) num_.pop_back();
    if (num_.empty()) {
        den_ = 1;
        return;
    }
    if (sgn(den_) < 0) {
        den_ = -den_;
        for (auto& x : num_) x = -x;
    }
    if (den_ == 1) return;
    Integer g = den_;
    for (const auto& x : num_) {
        if (g == 1) break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g != 1) {
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
        for (auto& x : num_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
}

std::optional<Rational> Cyclotomic::to_rational() const {
    if (!is_rational()) return std::nullopt;
    if (num_.empty()) return Rational(0);
    Rational r(num_[0], den_);
    r.canonicalize();
    return r;
}

std::vector<std::pair<long, Rational>> Cyclotomic::coords() const {
    std::vector<std::pair<long, Rational>> out;
    for (std::size_t k = 0; k < num_.size(); ++k) {
        if (sgn(num_[k]) == 0) continue;
        Rational r(num_[k], den_);
        r.canonicalize();
        out.emplace_back(static_cast<long>(k), r);
    }
    return out;
}

Rational Cyclotomic::coord(long k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= num_.size()) return 0;
    Rational r(num_[static_cast<std::size_t>(k)], den_);
    r.canonicalize();
    return r;
}

Cyclotomic Cyclotomic::promote(long m) const {
    if (m < 1 || m % order_ != 0)
        throw Error(ErrorCode::IncompatibleOrder, "cannot promote order " + std::to_string(order_) +
                                                      " to " + std::to_string(m));
    if (m == order_) return *this;
    Cyclotomic out;
    out.order_ = m;
    if (num_.empty()) return out;
    const std::size_t step = static_cast<std::size_t>(m / order_);
    out.num_.assign((num_.size() - 1) * step + 1, 0);
    for (std::size_t k = 0; k < num_.size(); ++k) out.num_[k * step] = num_[k];
    out.den_ = den_;
    reduce_mod_cyclotomic(out.num_, m);
    out.normalize();
    return out;
}

std::optional<Cyclotomic> Cyclotomic::demote(long m) const {
    if (m < 1 || order_ % m != 0) return std::nullopt;
    if (m == order_) return *this;
    if (num_.empty()) return Cyclotomic(0, m);
    const std::size_t phi_n = static_cast<std::size_t>(euler_phi(order_));
    const std::size_t phi_m = static_cast<std::size_t>(euler_phi(m));
    std::vector<std::vector<Rational>> a(phi_n, std::vector<Rational>(phi_m, 0));
    for (std::size_t j = 0; j < phi_m; ++j) {
        Cyclotomic basis = root_of_unity(m, static_cast<long>(j)).promote(order_);
        for (std::size_t i = 0; i < basis.num_.size(); ++i) a[i][j] = basis.num_[i];
    }
    std::vector<Rational> b(phi_n, 0);
    for (std::size_t i = 0; i < num_.size(); ++i) b[i] = num_[i];
    auto x = solve_rational(std::move(a), std::move(b));
    if (!x) return std::nullopt;
    std::vector<std::pair<long, Rational>> coords;
    for (std::size_t j = 0; j < phi_m; ++j)
        if (sgn((*x)[j]) != 0) coords.emplace_back(static_cast<long>(j), (*x)[j] / den_);
    return from_coords(m, coords);
}

Cyclotomic Cyclotomic::conj() const {
    if (num_.size() <= 1) return *this;
    std::vector<Integer> v(static_cast<std::size_t>(order_), 0);
    for (std::size_t k = 0; k < num_.size(); ++k) {
        std::size_t e = k == 0 ? 0 : static_cast<std::size_t>(order_) - k;
        v[e] = num_[k];
    }
    return Cyclotomic(std::move(v), den_, order_);
}

bool Cyclotomic::is_real() const { return num_.size() <= 1 || conj() == *this; }

Cyclotomic Cyclotomic::inverse() const {
    if (num_.empty()) throw Error(ErrorCode::DivisionByZero, "division by zero cyclotomic");
    if (num_.size() == 1) {
        Rational r(den_, num_[0]);
        r.canonicalize();
        return Cyclotomic(r, order_);
    }
    // Column j of the multiplication matrix holds the coordinates of num * zeta^j.
    const std::size_t phi = static_cast<std::size_t>(euler_phi(order_));
    std::vector<std::vector<Rational>> a(phi, std::vector<Rational>(phi, 0));
    for (std::size_t j = 0; j < phi; ++j) {
        std::vector<Integer> shifted(num_.size() + j, 0);
        for (std::size_t k = 0; k < num_.size(); ++k) shifted[k + j] = num_[k];
        reduce_mod_cyclotomic(shifted, order_);
        for (std::size_t i = 0; i < shifted.size(); ++i) a[i][j] = shifted[i];
    }
    std::vector<Rational> b(phi, 0);
    b[0] = 1;
    auto x = solve_rational(std::move(a), std::move(b));
    if (!x) throw Error(ErrorCode::DivisionByZero, "singular multiplication matrix");
    std::vector<std::pair<long, Rational>> coords;
    for (std::size_t j = 0; j < phi; ++j)
        if (sgn((*x)[j]) != 0) coords.emplace_back(static_cast<long>(j), (*x)[j] * den_);
    return from_coords(order_, coords);
}

int Cyclotomic::sign() const {
    if (!is_real()) throw Error(ErrorCode::NotReal, "sign of a non-real cyclotomic number");
    if (num_.empty()) return 0;
    if (num_.size() == 1) return sgn(num_[0]);
    const unsigned cap = max_precision_bits();
    for (unsigned bits = 64; bits <= cap; bits *= 2) {
        Interval enclosure(*this, bits);
        if (int s = enclosure.sign(); s != 0) return s;
    }
    throw Error(ErrorCode::PrecisionExceeded,
                "sign undecided at " + std::to_string(cap) + " bits for " + to_string());
}

std::complex<double> Cyclotomic::approx() const {
    std::complex<double> sum = 0;
    const double den = den_.get_d();
    for (std::size_t k = 0; k < num_.size(); ++k) {
        if (sgn(num_[k]) == 0) continue;
        double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order_);
        double scale = std::isfinite(den) ? num_[k].get_d() / den : Rational(num_[k], den_).get_d();
        sum += scale * std::polar(1.0, angle);
    }
    return sum;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& x : out.num_) x = -x;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    if (rhs.order_ != order_) {
        long m = lcm(order_, rhs.order_);
        Cyclotomic a = promote(m);
        a += rhs.promote(m);
        return *this = std::move(a);
    }
    if (rhs.num_.empty()) return *this;
    if (num_.empty()) return *this = rhs;
    if (num_.size() < rhs.num_.size()) num_.resize(rhs.num_.size(), 0);
    if (den_ == rhs.den_) {
        for (std::size_t k = 0; k < rhs.num_.size(); ++k) num_[k] += rhs.num_[k];
    } else {
        for (auto& x : num_) x *= rhs.den_;
        for (std::size_t k = 0; k < rhs.num_.size(); ++k) num_[k] += rhs.num_[k] * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) {
        long m = lcm(a.order_, b.order_);
        return a.promote(m) * b.promote(m);
    }
    Cyclotomic out;
    out.order_ = a.order_;
    if (a.num_.empty() || b.num_.empty()) return out;
    out.num_.assign(a.num_.size() + b.num_.size() - 1, 0);
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
        if (sgn(a.num_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.num_.size(); ++j)
            mpz_addmul(out.num_[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
    reduce_mod_cyclotomic(out.num_, out.order_);
    out.den_ = a.den_ * b.den_;
    out.normalize();
    return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) {
    if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero cyclotomic");
    return *this = *this * rhs.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) {
        if (a.is_rational() && b.is_rational()) return a.num_ == b.num_ && a.den_ == b.den_;
        long m = lcm(a.order_, b.order_);
        return a.promote(m) == b.promote(m);
    }
    return a.den_ == b.den_ && a.num_ == b.num_;
}

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    if (a.num_.size() != b.num_.size()) return a.num_.size() < b.num_.size();
    for (std::size_t k = 0; k < a.num_.size(); ++k) {
        int c = cmp(a.num_[k], b.num_[k]);
        if (c != 0) return c < 0;
    }
    return cmp(a.den_, b.den_) < 0;
}

std::size_t Cyclotomic::hash() const noexcept {
    std::size_t h = std::hash<long>{}(order_);
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (const auto& x : num_) mix(static_cast<std::size_t>(mpz_get_si(x.get_mpz_t())) ^ mpz_size(x.get_mpz_t()));
    mix(static_cast<std::size_t>(mpz_get_ui(den_.get_mpz_t())));
    return h;
}

std::string Cyclotomic::to_string() const {
    if (num_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : coords()) {
        if (!first) os << (sgn(v) < 0 ? " - " : " + ");
        else if (sgn(v) < 0) os << "-";
        first = false;
        Rational mag = abs(v);
        if (k == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << "z" << order_;
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

}  // namespace sigpairs
