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


#ifndef SIGPAIRS_CHERN_HPP
#define SIGPAIRS_CHERN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "sigpairs/fpq.hpp"
#include "sigpairs/group.hpp"
#include "sigpairs/poly.hpp"

namespace sigpairs {

/// (g . h)(z) = h(g^-1 z); g is assumed unitary so g^-1 = g^H.
HoloPoly act(const Matrix2& g, const HoloPoly& h);

struct Orbit {
    /// act(g, h) for every g, in group element order.
    std::vector<HoloPoly> elements;
    /// Distinct elements in order of first occurrence.
    std::vector<HoloPoly> distinct;
    std::size_t stabilizer_order = 0;
};

Orbit orbit(const FiniteMatrixGroup& group, const HoloPoly& h);

enum class OrbitForm { Multiset, Set };

/// Coefficients of prod_b (X + b): entry a is c_a, with c_0 = 1 included.
std::vector<HoloPoly> orbit_polynomial(const Orbit& orb, OrbitForm form = OrbitForm::Multiset);
/// c_1 .. c_n of the orbit polynomial (c_0 omitted).
std::vector<HoloPoly> chern_classes(const Orbit& orb, OrbitForm form = OrbitForm::Multiset);
/// sum_j (-1)^(j-1) c_j.
HoloPoly alternating_sum(const std::vector<HoloPoly>& classes);

/// Alternating sum of the classes of the orbit of z1 + z2 equals
/// polarized_at_ones(G).
bool verify_chern_identity(const FiniteMatrixGroup& group, OrbitForm form = OrbitForm::Multiset);

/// Set-form orbit polynomial raised to the stabilizer order equals the
/// multiset form.
bool set_power_matches_multiset(const Orbit& orb);

/// z1 -> x, z2 -> y; throws Error(NonIntegerCoefficient) unless every
/// coefficient is a rational integer.
IntBivariatePoly restrict_to_xy(const HoloPoly& h);

struct ChernReport {
    std::string group;
    std::size_t order = 0;
    std::size_t distinct = 0;
    std::size_t stabilizer_order = 0;
    bool multiset_ok = false;
    bool set_ok = false;
    bool set_power_ok = false;
};

/// Both conventions for the orbit of z1 + z2.
ChernReport chern_report(const FiniteMatrixGroup& group);

}  // namespace sigpairs

#endif
