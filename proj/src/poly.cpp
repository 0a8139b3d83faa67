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

#include "sigpairs/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sigpairs/error.hpp"
#include "sigpairs/json_io.hpp"

namespace sigpairs {

std::string to_string(const MultiIndex& m) {
    return "(" + std::to_string(m.a) + "," + std::to_string(m.b) + ")";
}

HoloPoly HoloPoly::constant(const Cyclotomic& c) { return monomial({0, 0}, c); }

HoloPoly HoloPoly::monomial(MultiIndex m, const Cyclotomic& c) {
    HoloPoly p;
    p.add(m, c);
    return p;
}

HoloPoly HoloPoly::linear(const Cyclotomic& c1, const Cyclotomic& c2) {
    HoloPoly p;
    p.add({1, 0}, c1);
    p.add({0, 1}, c2);
    return p;
}

Cyclotomic HoloPoly::coeff(MultiIndex m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Cyclotomic(0) : it->second;
}

void HoloPoly::add(MultiIndex m, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

HoloPoly HoloPoly::operator-() const {
    HoloPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

HoloPoly& HoloPoly::operator+=(const HoloPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add(m, c);
    return *this;
}

HoloPoly& HoloPoly::operator-=(const HoloPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add(m, -c);
    return *this;
}

HoloPoly operator*(const HoloPoly& a, const HoloPoly& b) {
    HoloPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add({ma.a + mb.a, ma.b + mb.b}, ca * cb);
    return out;
}

HoloPoly operator*(const Cyclotomic& c, const HoloPoly& p) {
    HoloPoly out;
    if (c.is_zero()) return out;
    for (const auto& [m, x] : p.terms_) out.terms_.emplace(m, c * x);
    return out;
}

HoloPoly HoloPoly::pow(unsigned k) const {
    HoloPoly result = constant(Cyclotomic(1));
    for (unsigned i = 0; i < k; ++i) result = result * *this;
    return result;
}

HoloPoly HoloPoly::conj_coeffs() const {
    HoloPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.conj());
    return out;
}

std::string HoloPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        if (m.a != 0) os << "*z1^" << m.a;
        if (m.b != 0) os << "*z2^" << m.b;
    }
    return os.str();
}

HermitianPolynomial::Key HermitianPolynomial::pack(MultiIndex alpha, MultiIndex beta) {
    if (alpha.a > 0xffff || alpha.b > 0xffff || beta.a > 0xffff || beta.b > 0xffff)
        throw Error(ErrorCode::IndexOutOfRange, "exponent exceeds 16 bits");
    return (Key{alpha.a} << 48) | (Key{alpha.b} << 32) | (Key{beta.a} << 16) | Key{beta.b};
}

std::pair<MultiIndex, MultiIndex> HermitianPolynomial::unpack(Key key) {
    auto part = [key](int shift) { return static_cast<unsigned>((key >> shift) & 0xffff); };
    return {{part(48), part(32)}, {part(16), part(0)}};
}

Cyclotomic HermitianPolynomial::coeff(MultiIndex alpha, MultiIndex beta) const {
    auto it = terms_.find(pack(alpha, beta));
    return it == terms_.end() ? Cyclotomic(0) : it->second;
}

void HermitianPolynomial::add(MultiIndex alpha, MultiIndex beta, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(pack(alpha, beta), c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void HermitianPolynomial::insert_new(MultiIndex alpha, MultiIndex beta, Cyclotomic c) {
    terms_.emplace_hint(terms_.end(), pack(alpha, beta), std::move(c));
}

std::vector<MultiIndex> HermitianPolynomial::support() const {
    std::set<MultiIndex> s;
    for (const auto& [key, c] : terms_) {
        auto [alpha, beta] = unpack(key);
        s.insert(alpha);
        s.insert(beta);
    }
    return {s.begin(), s.end()};
}

bool HermitianPolynomial::is_diagonal() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) {
        auto [alpha, beta] = unpack(kv.first);
        return alpha == beta;
    });
}

bool HermitianPolynomial::is_hermitian() const {
    for (const auto& [key, c] : terms_) {
        auto [alpha, beta] = unpack(key);
        auto it = terms_.find(pack(beta, alpha));
        if (it == terms_.end() || it->second != c.conj()) return false;
    }
    return true;
}

void HermitianPolynomial::assert_hermitian() const {
    if (!is_hermitian()) throw Error(ErrorCode::NotHermitian, "polynomial is not Hermitian-symmetric");
}

unsigned HermitianPolynomial::max_degree() const {
    unsigned d = 0;
    for (const auto& [key, c] : terms_) {
        auto [alpha, beta] = unpack(key);
        d = std::max({d, alpha.a, alpha.b, beta.a, beta.b});
    }
    return d;
}

HermitianPolynomial& HermitianPolynomial::operator+=(const HermitianPolynomial& rhs) {
    for (const auto& [key, c] : rhs.terms_) {
        auto [alpha, beta] = unpack(key);
        add(alpha, beta, c);
    }
    return *this;
}

HermitianPolynomial& HermitianPolynomial::operator-=(const HermitianPolynomial& rhs) {
    for (const auto& [key, c] : rhs.terms_) {
        auto [alpha, beta] = unpack(key);
        add(alpha, beta, -c);
    }
    return *this;
}

HermitianPolynomial operator*(const HermitianPolynomial& a, const HermitianPolynomial& b) {
    HermitianPolynomial out(a.group_order_);
    for (const auto& [ka, ca] : a.terms_) {
        auto [aa, ab] = HermitianPolynomial::unpack(ka);
        for (const auto& [kb, cb] : b.terms_) {
            auto [ba, bb] = HermitianPolynomial::unpack(kb);
            out.add({aa.a + ba.a, aa.b + ba.b}, {ab.a + bb.a, ab.b + bb.b}, ca * cb);
        }
    }
    return out;
}

std::string HermitianPolynomial::to_csv() const {
    std::ostringstream os;
    for (const auto& [key, c] : terms_) {
        auto [alpha, beta] = unpack(key);
        os << alpha.a << ',' << alpha.b << ',' << beta.a << ',' << beta.b << ','
           << cyclotomic_to_json(c).dump() << '\n';
    }
    return os.str();
}

}  // namespace sigpairs
