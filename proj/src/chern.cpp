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


#include "sigpairs/chern.hpp"

#include <algorithm>

#include "sigpairs/error.hpp"
#include "sigpairs/invariant.hpp"

namespace sigpairs {

namespace {

HoloPoly sum_of_variables() { return HoloPoly::linear(Cyclotomic(1), Cyclotomic(1)); }

// Product of two polynomials in X with HoloPoly coefficients, lowest X-degree first.
std::vector<HoloPoly> multiply(const std::vector<HoloPoly>& a, const std::vector<HoloPoly>& b) {
    std::vector<HoloPoly> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

HoloPoly act(const Matrix2& g, const HoloPoly& h) { return substitute(h, g.adjoint()); }

Orbit orbit(const FiniteMatrixGroup& group, const HoloPoly& h) {
    Orbit orb;
    orb.elements.reserve(group.order());
    for (const auto& g : group.elements()) {
        HoloPoly b = act(g, h);
        if (std::find(orb.distinct.begin(), orb.distinct.end(), b) == orb.distinct.end()) orb.distinct.push_back(b);
        orb.elements.push_back(std::move(b));
    }
    orb.stabilizer_order = orb.distinct.empty() ? 0 : orb.elements.size() / orb.distinct.size();
    return orb;
}

std::vector<HoloPoly> orbit_polynomial(const Orbit& orb, OrbitForm form) {
    const auto& factors = form == OrbitForm::Multiset ? orb.elements : orb.distinct;
    // e[a] is the a-th elementary symmetric polynomial of the factors seen so far.
    std::vector<HoloPoly> e{HoloPoly::constant(Cyclotomic(1))};
    for (const auto& b : factors) {
        e.emplace_back();
        for (std::size_t a = e.size() - 1; a >= 1; --a) e[a] += e[a - 1] * b;
    }
    return e;
}

std::vector<HoloPoly> chern_classes(const Orbit& orb, OrbitForm form) {
    auto e = orbit_polynomial(orb, form);
    e.erase(e.begin());
    return e;
}

HoloPoly alternating_sum(const std::vector<HoloPoly>& classes) {
    HoloPoly s;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        if (j % 2 == 0) s += classes[j];
        else s -= classes[j];
    }
    return s;
}

bool verify_chern_identity(const FiniteMatrixGroup& group, OrbitForm form) {
    const Orbit orb = orbit(group, sum_of_variables());
    return alternating_sum(chern_classes(orb, form)) == polarized_at_ones(group);
}

bool set_power_matches_multiset(const Orbit& orb) {
    // orbit_polynomial lists c_a by a; as a polynomial in X the coefficient
    // of X^(n-a) is c_a, so reversing gives ascending X-degree.
    auto ascending = [](std::vector<HoloPoly> c) {
        std::reverse(c.begin(), c.end());
        return c;
    };
    const auto set_poly = ascending(orbit_polynomial(orb, OrbitForm::Set));
    std::vector<HoloPoly> power{HoloPoly::constant(Cyclotomic(1))};
    for (std::size_t k = 0; k < orb.stabilizer_order; ++k) power = multiply(power, set_poly);
    return power == ascending(orbit_polynomial(orb, OrbitForm::Multiset));
}

IntBivariatePoly restrict_to_xy(const HoloPoly& h) {
    IntBivariatePoly out;
    for (const auto& [m, c] : h.terms()) {
        auto q = c.to_rational();
        if (!q || q->get_den() != 1) throw Error(ErrorCode::NonIntegerCoefficient, "coefficient is not an integer");
        out.add(m.a, m.b, q->get_num());
    }
    return out;
}

ChernReport chern_report(const FiniteMatrixGroup& group) {
    const Orbit orb = orbit(group, sum_of_variables());
    const HoloPoly target = polarized_at_ones(group);
    ChernReport r;
    r.group = group.label();
    r.order = group.order();
    r.distinct = orb.distinct.size();
    r.stabilizer_order = orb.stabilizer_order;
    r.multiset_ok = alternating_sum(chern_classes(orb, OrbitForm::Multiset)) == target;
    r.set_ok = alternating_sum(chern_classes(orb, OrbitForm::Set)) == target;
    r.set_power_ok = set_power_matches_multiset(orb);
    return r;
}

}  // namespace sigpairs
