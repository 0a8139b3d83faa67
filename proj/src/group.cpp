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

#include "sigpairs/group.hpp"

#include <charconv>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "sigpairs/error.hpp"
#include "sigpairs/json_io.hpp"

namespace sigpairs {

Matrix2 Matrix2::identity(long order) {
    return diag(Cyclotomic(1, order), Cyclotomic(1, order));
}

Matrix2 Matrix2::diag(const Cyclotomic& a, const Cyclotomic& b) {
    long n = lcm(a.order(), b.order());
    return Matrix2{{a.promote(n), Cyclotomic(0, n), Cyclotomic(0, n), b.promote(n)}};
}

Matrix2 Matrix2::adjoint() const { return Matrix2{{e[0].conj(), e[2].conj(), e[1].conj(), e[3].conj()}}; }

Cyclotomic Matrix2::det() const { return e[0] * e[3] - e[1] * e[2]; }

bool Matrix2::is_unitary() const {
    Matrix2 p = *this * adjoint();
    return p(0, 0) == Cyclotomic(1) && p(1, 1) == Cyclotomic(1) && p(0, 1).is_zero() && p(1, 0).is_zero();
}

bool Matrix2::is_diagonal() const { return e[1].is_zero() && e[2].is_zero(); }

long Matrix2::field_order() const {
    long n = 1;
    for (const auto& x : e) n = lcm(n, x.order());
    return n;
}

Matrix2 Matrix2::promote(long m) const {
    return Matrix2{{e[0].promote(m), e[1].promote(m), e[2].promote(m), e[3].promote(m)}};
}

Matrix2 Matrix2::pow(long k) const {
    Matrix2 base = k < 0 ? adjoint() : *this;
    unsigned long n = static_cast<unsigned long>(k < 0 ? -k : k);
    Matrix2 result = identity(field_order());
    while (n != 0) {
        if (n & 1U) result = result * base;
        base = base * base;
        n >>= 1U;
    }
    return result;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return Matrix2{{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
                    a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
}

Matrix2 operator*(const Cyclotomic& c, const Matrix2& m) {
    return Matrix2{{c * m.e[0], c * m.e[1], c * m.e[2], c * m.e[3]}};
}

std::size_t Matrix2::hash() const noexcept {
    std::size_t h = 0;
    for (const auto& x : e) h = h * 1000003U ^ x.hash();
    return h;
}

std::string Matrix2::to_string() const {
    std::ostringstream os;
    os << "[[" << e[0] << ", " << e[1] << "], [" << e[2] << ", " << e[3] << "]]";
    return os.str();
}

FiniteMatrixGroup::FiniteMatrixGroup(std::vector<Matrix2> elements, std::string label, long field_order)
    : elements_(std::move(elements)), label_(std::move(label)), field_order_(field_order) {}

bool FiniteMatrixGroup::contains(const Matrix2& m) const {
    Matrix2 x = m.promote(lcm(m.field_order(), field_order_));
    for (const auto& g : elements_)
        if (g == x) return true;
    return false;
}

FiniteMatrixGroup closure(const std::vector<Matrix2>& generators, std::size_t cap, const std::string& label) {
    long n = 1;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (!generators[i].is_unitary()) throw NotUnitaryError(i);
        n = lcm(n, generators[i].field_order());
    }
    std::vector<Matrix2> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) gens.push_back(g.promote(n));

    std::vector<Matrix2> elements{Matrix2::identity(n)};
    std::unordered_set<Matrix2> seen{elements.front()};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : gens) {
            Matrix2 y = elements[head] * g;
            if (seen.contains(y)) continue;
            if (elements.size() >= cap)
                throw Error(ErrorCode::CapExceeded,
                            "closure exceeded cap of " + std::to_string(cap) + " elements");
            seen.insert(y);
            elements.push_back(std::move(y));
        }
    }
    return FiniteMatrixGroup(std::move(elements), label, n);
}

FiniteMatrixGroup cyclic_gamma(long p, long q) {
    if (p < 1) throw Error(ErrorCode::IndexOutOfRange, "cyclic group needs p >= 1");
    Matrix2 g = Matrix2::diag(Cyclotomic::root_of_unity(p, 1), Cyclotomic::root_of_unity(p, q));
    return closure({g}, kDefaultClosureCap, "cyclic:" + std::to_string(p) + "," + std::to_string(q));
}

FiniteMatrixGroup dihedral(long p) {
    if (p < 1) throw Error(ErrorCode::IndexOutOfRange, "dihedral group needs p >= 1");
    Matrix2 a = Matrix2::diag(Cyclotomic::root_of_unity(p, 1), Cyclotomic::root_of_unity(p, -1));
    Matrix2 b{{Cyclotomic(0, p), Cyclotomic(1, p), Cyclotomic(1, p), Cyclotomic(0, p)}};
    return closure({a, b}, kDefaultClosureCap, "dihedral:" + std::to_string(p));
}

FiniteMatrixGroup binary_dihedral(long p) {
    if (p < 1) throw Error(ErrorCode::IndexOutOfRange, "binary dihedral group needs p >= 1");
    const long n = 2 * p;
    Matrix2 a = Matrix2::diag(Cyclotomic::root_of_unity(n, 1), Cyclotomic::root_of_unity(n, -1));
    Matrix2 b{{Cyclotomic(0, n), Cyclotomic(1, n), Cyclotomic(-1, n), Cyclotomic(0, n)}};
    return closure({a, b}, kDefaultClosureCap, "binary-dihedral:" + std::to_string(p));
}

SpringerGenerators springer_generators(Polyhedral kind) {
    if (kind == Polyhedral::I) {
        const long n = 10;
        const Cyclotomic eps = Cyclotomic::root_of_unity(n, 2);
        const Cyclotomic inv = eps.conj();
        Matrix2 r = Cyclotomic(-1, n) * Matrix2::diag(eps * eps * eps, eps * eps);
        Matrix2 s{{Cyclotomic(0, n), Cyclotomic(1, n), Cyclotomic(-1, n), Cyclotomic(0, n)}};
        const Cyclotomic scale = (eps * eps - inv * inv).inverse();
        const Cyclotomic c = eps + inv;
        Matrix2 t = scale * Matrix2{{c, Cyclotomic(1, n), Cyclotomic(1, n), -c}};
        return {r, s, t};
    }
    const long n = 8;
    const Cyclotomic eps = Cyclotomic::root_of_unity(n, 1);
    const Cyclotomic inv = eps.conj();
    const Cyclotomic inv_sqrt2 = (eps + inv) * Cyclotomic(Rational(1, 2), n);
    Matrix2 r = Matrix2::diag(eps, inv);
    Matrix2 s{{Cyclotomic(0, n), Cyclotomic(1, n), Cyclotomic(-1, n), Cyclotomic(0, n)}};
    Matrix2 t = inv_sqrt2 * Matrix2{{inv, inv, -eps, eps}};
    return {r, s, t};
}

std::array<Matrix2, 2> polyhedral_generators(Polyhedral kind) {
    auto [r, s, t] = springer_generators(kind);
    switch (kind) {
        case Polyhedral::T: return {s * t.adjoint(), t};
        case Polyhedral::O: return {r * t, t};
        case Polyhedral::I: return {r, r.pow(4) * t * s};
    }
    return {r, t};
}

FiniteMatrixGroup binary_polyhedral(Polyhedral kind) {
    auto gens = polyhedral_generators(kind);
    const char* label = kind == Polyhedral::T ? "T" : kind == Polyhedral::O ? "O" : "I";
    return closure({gens[0], gens[1]}, kDefaultClosureCap, label);
}

FiniteMatrixGroup conjugate(const FiniteMatrixGroup& group, const Matrix2& u) {
    if (!u.is_unitary()) throw NotUnitaryError(0);
    const long n = lcm(group.field_order(), u.field_order());
    const Matrix2 un = u.promote(n);
    const Matrix2 uh = un.adjoint();
    std::vector<Matrix2> out;
    out.reserve(group.order());
    for (const auto& g : group.elements()) out.push_back(un * g.promote(n) * uh);
    return FiniteMatrixGroup(std::move(out), group.label() + "^U", n);
}

namespace {

long parse_long(std::string_view text, const std::string& spec) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw Error(ErrorCode::Parse, "bad integer in group spec '" + spec + "'");
    return v;
}

long parse_positive(std::string_view text, const std::string& spec) {
    long v = parse_long(text, spec);
    if (v < 1) throw Error(ErrorCode::Parse, "group parameter must be positive in '" + spec + "'");
    return v;
}

}  // namespace

FiniteMatrixGroup group_from_spec(const std::string& spec) {
    if (spec == "T") return binary_polyhedral(Polyhedral::T);
    if (spec == "O") return binary_polyhedral(Polyhedral::O);
    if (spec == "I") return binary_polyhedral(Polyhedral::I);
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::Parse, "unknown group spec '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    const std::string_view args = std::string_view(spec).substr(colon + 1);
    if (kind == "file") return load_generator_file(std::string(args));
    if (kind == "cyclic") {
        auto comma = args.find(',');
        if (comma == std::string_view::npos)
            throw Error(ErrorCode::Parse, "cyclic spec needs p,q: '" + spec + "'");
        return cyclic_gamma(parse_positive(args.substr(0, comma), spec), parse_long(args.substr(comma + 1), spec));
    }
    if (kind == "dihedral") return dihedral(parse_positive(args, spec));
    if (kind == "binary-dihedral") return binary_dihedral(parse_positive(args, spec));
    throw Error(ErrorCode::Parse, "unknown group family '" + kind + "'");
}

}  // namespace sigpairs
