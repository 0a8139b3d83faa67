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

#ifndef SIGPAIRS_SIGNATURE_HPP
#define SIGPAIRS_SIGNATURE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sigpairs/group.hpp"
#include "sigpairs/poly.hpp"

namespace sigpairs {

/// Underlying matrix of a Hermitian polynomial: entry (j, k) is the
/// coefficient of z^basis[j] conj(z)^basis[k]. Only nonzero entries are stored.
struct HermitianMatrix {
    std::vector<MultiIndex> basis;
    std::map<std::pair<std::size_t, std::size_t>, Cyclotomic> entries;

    std::size_t dimension() const noexcept { return basis.size(); }
    Cyclotomic at(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, const Cyclotomic& value);
    bool is_hermitian() const;
};

struct Inertia {
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    std::size_t n_zero = 0;

    std::size_t rank() const noexcept { return n_plus + n_minus; }
    std::size_t dimension() const noexcept { return n_plus + n_minus + n_zero; }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

struct SignaturePair {
    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    friend bool operator==(const SignaturePair&, const SignaturePair&) = default;
};

/// Basis order: exponent of z1 descending, then exponent of z2 ascending
/// (z1 before z2; z1^2 before z2 before z2^2).
HermitianMatrix coefficient_matrix(const HermitianPolynomial& poly);
HermitianMatrix matrix_from_dense(const std::vector<std::vector<Cyclotomic>>& rows);

/// Exact inertia by Hermitian congruence over the cyclotomic field. The
/// matrix is first split into the connected components of its sparsity graph.
/// Throws Error(NotHermitian).
Inertia inertia_exact(const HermitianMatrix& m);

/// Rank by plain Gaussian elimination over the cyclotomic field.
std::size_t rank_exact(const HermitianMatrix& m);

/// Floating oracle: eigenvalues of the realified matrix at the given MPFR
/// precision; |lambda| <= zero_threshold counts as zero. Not certified.
Inertia inertia_numeric(const HermitianMatrix& m, unsigned precision_bits = 256,
                        const std::string& zero_threshold = "1e-30");

SignaturePair signature_pair(const FiniteMatrixGroup& group);
/// N+ / (N+ + N-). Throws Error(EmptySpectrum) when both counts are zero.
Rational positivity_ratio(const SignaturePair& s);
Rational positivity_ratio(const FiniteMatrixGroup& group);

enum class Method { Exact, Numeric };

struct SignatureRecord {
    std::string group;
    std::size_t order = 0;
    Inertia inertia;
    Rational ratio;
    Method method = Method::Exact;
    long long elapsed_ms = 0;
};

SignatureRecord compute_signature(const FiniteMatrixGroup& group, Method method, unsigned precision_bits = 256);
/// {"group","order","N","N_plus","N_minus","rank","ratio","method","elapsed_ms"};
/// elapsed_ms is written as 0 when stable is true.
nlohmann::ordered_json to_json(const SignatureRecord& record, bool stable = false);

}  // namespace sigpairs

#endif
