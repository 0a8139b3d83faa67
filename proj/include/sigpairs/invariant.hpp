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

#ifndef SIGPAIRS_INVARIANT_HPP
#define SIGPAIRS_INVARIANT_HPP

#include "sigpairs/group.hpp"
#include "sigpairs/poly.hpp"

namespace sigpairs {

/// 1 - prod_{g in G} (1 - <g z, z>), where <g z, z> = sum_{j,k} g_jk z_k conj(z_j).
/// Coefficients live in Q(zeta_N), N = G.field_order(). The result is checked
/// for Hermitian symmetry, a vanishing constant term and the degree bound |G|.
HermitianPolynomial phi(const FiniteMatrixGroup& group);

/// 1 - prod_{g in G} (1 - sum_j (g z)_j), a polynomial in z only.
HoloPoly polarized_at_ones(const FiniteMatrixGroup& group);

/// P(g z, conj(g z)).
HermitianPolynomial substitute(const HermitianPolynomial& poly, const Matrix2& g);
/// h(g z).
HoloPoly substitute(const HoloPoly& poly, const Matrix2& g);

inline bool is_diagonal(const HermitianPolynomial& poly) { return poly.is_diagonal(); }

}  // namespace sigpairs

#endif
