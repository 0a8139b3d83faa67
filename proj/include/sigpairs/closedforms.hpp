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


#ifndef SIGPAIRS_CLOSEDFORMS_HPP
#define SIGPAIRS_CLOSEDFORMS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "sigpairs/cyclotomic.hpp"
#include "sigpairs/fpq.hpp"
#include "sigpairs/poly.hpp"
#include "sigpairs/signature.hpp"

namespace sigpairs {

/// Dense integer polynomial in one variable; coefficient k is the degree-k
/// coefficient. Trailing zeros are trimmed.
class UnivariateIntPoly {
   public:
    UnivariateIntPoly() = default;
    explicit UnivariateIntPoly(std::vector<Integer> coeffs);

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Integer coeff(std::size_t k) const;

    friend bool operator==(const UnivariateIntPoly&, const UnivariateIntPoly&) = default;

    std::string to_string(const std::string& var = "t") const;

   private:
    std::vector<Integer> coeffs_;
};

/// One block of a block-diagonal Hermitian matrix. Diagonal blocks keep one
/// value per row; the 2x2 blocks are dense.
struct DiagonalBlockSummary {
    std::string label;
    std::vector<std::vector<Integer>> entries;
    Inertia inertia;
};

/// Inertia of a diagonal or 2x2 symmetric integer block.
Inertia block_inertia(const std::vector<std::vector<Integer>>& block);
/// Sum of the block contributions.
Inertia total_inertia(const std::vector<DiagonalBlockSummary>& blocks);

// Dihedral groups Delta_p of order 2p.

/// f(|z1|^2, |z2|^2) + f(z2 conj z1, z1 conj z2) - product, f = f_{p,p-1}.
HermitianPolynomial phi_delta_decomposed(long p);

/// E_k = sum_{a+b=k, 1<=a,b<=p/2} c_{p,a} c_{p,b}, plus 2 c_{p,k} when k <= p/2.
Integer dihedral_E(long p, long k);

/// Blocks "lead", "A_{p,1}", "A_{p,2}", "A_{p,3}" predicted for p >= 3.
std::vector<DiagonalBlockSummary> delta_blocks(long p);

struct DeltaCounts {
    long n = 0;
    long n_plus = 0;
    friend bool operator==(const DeltaCounts&, const DeltaCounts&) = default;
};

/// N = p + p/2 + 2, N+ = p/2 + p/4 + 2 (floors).
DeltaCounts delta_counts(long p);
/// (p/2 + p/4 + 2, 3(p+1)/4) (floors).
SignaturePair delta_signature_closed(long p);
/// Four-case formula by p mod 4. Throws Error(IndexOutOfRange) for p < 3.
Rational delta_ratio(long p);

// Binary dihedral groups Lambda_p of order 4p.

/// Same shape as phi_delta_decomposed with f = f_{2p,2p-1} and second
/// argument (z2 conj z1, -z1 conj z2).
HermitianPolynomial phi_lambda_decomposed(long p);

/// D_p(t): coefficient of t^(2k) is the coefficient d_k of (z1 z2 conj z1 conj z2)^(2k)
/// in phi_lambda_decomposed(p).
UnivariateIntPoly d_poly(long p);
/// 1 - 4/16^p sum_{j,k} binom(2p,2j) binom(2p,2k) (1-4t)^j (1+4t)^k.
UnivariateIntPoly d_poly_closed(long p);
/// d_k > 0 for odd k and d_k < 0 for even k, 1 <= k <= p.
bool d_signs_ok(const UnivariateIntPoly& d, long p);

/// P(z) = 2 sum_k binom(2p, 2k) z^k.
UnivariateIntPoly p_poly(long p);
/// |P(x+iy)|^2 as an integer polynomial in x, y.
IntBivariatePoly p_poly_abs2(long p);
/// Sturm count shows p distinct negative real roots; bisection at 128 bits
/// matches -tan^2((2j+1)pi/4p) to 60 bits; every coefficient of |P|^2 is positive.
bool p_poly_roots_check(long p);

/// Diagonal entry j (1 <= j <= p-1) of E_{p,2}.
Integer lambda_E2(long p, long j);
/// Blocks "lead", "E_{p,1}", "E_{p,2}", "E_{p,3}" predicted for p >= 2.
std::vector<DiagonalBlockSummary> lambda_blocks(long p);
/// (2 + p + p/2, 1 + (p-1)/2) (floors).
SignaturePair lambda_signature_closed(long p);

/// Signs of the six eigenvalues listed for Lambda_2: 1, 4, 2, 12, -2+sqrt5,
/// -2-sqrt5, with sqrt5 = 1 + 2(zeta5 + zeta5^4) certified by Cyclotomic::sign.
std::vector<int> lambda2_eigen_signs();

enum class Family { Dihedral, BinaryDihedral };
const char* to_string(Family f);

/// CSV "p,N,N_plus,N_minus,ratio" from the closed forms; with_engine appends
/// "engine_N_plus,engine_N_minus,match". Closed-form cells are left empty
/// below the validity threshold (Delta: p < 3, Lambda: p < 2).
std::string family_csv(Family family, long p_min, long p_max, bool with_engine);

}  // namespace sigpairs

#endif
