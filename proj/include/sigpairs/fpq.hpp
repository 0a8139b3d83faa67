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

#ifndef SIGPAIRS_FPQ_HPP
#define SIGPAIRS_FPQ_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sigpairs/cyclotomic.hpp"
#include "sigpairs/signature.hpp"

namespace sigpairs {

/// Sparse integer polynomial in x, y; key (r, s) is the monomial x^r y^s.
class IntBivariatePoly {
   public:
    using Exponents = std::pair<unsigned, unsigned>;

    const std::map<Exponents, Integer>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    Integer coeff(unsigned r, unsigned s) const;
    void add(unsigned r, unsigned s, const Integer& c);

    friend bool operator==(const IntBivariatePoly& a, const IntBivariatePoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const IntBivariatePoly& a, const IntBivariatePoly& b) { return !(a == b); }

   private:
    std::map<Exponents, Integer> terms_;
};

/// f_{p,q}(x, y) = 1 - prod_{j<p} (1 - w^j x - w^{qj} y), w = zeta_p, expanded
/// in Q(zeta_p); every coefficient is checked to be a rational integer.
IntBivariatePoly fpq(long p, long q);

/// The same polynomial computed from power sums of the linear factors
/// (exact integer Newton recurrence); much faster for large p.
IntBivariatePoly fpq_power_sum(long p, long q);

/// c_{p,j} = p/(p-j) * binom(p-j, j), 1 <= j <= floor(p/2).
Integer c_closed(long p, long j);
/// x^p + y^p + sum_j (-1)^(j-1) c_{p,j} (xy)^j.
IntBivariatePoly f_closed_pminus1(long p);
/// Expands 1 + x^p + y^p - ((1+s)/2)^p - ((1-s)/2)^p with s^2 = 1 - 4xy and
/// compares it with fpq(p, p-1).
bool verify_exact_formula(long p);

/// k with r + q s = k p, if any.
std::optional<long> weight(long r, long s, long p, long q);
/// +1 when gcd(r, s, w) is odd, -1 when it is even.
int lww_sign(long r, long s, long w);

struct TermRecord {
    unsigned r = 0;
    unsigned s = 0;
    long weight = 0;
    int sign = 0;
};

struct WeightReport {
    long p = 0;
    long q = 0;
    std::map<long, long> per_k;
    long n_odd = 0;
    long n_even = 0;
    long n_total = 0;
    std::vector<TermRecord> terms;
    // Counting bounds; the N_k and N_q bounds apply for q >= 2 only.
    bool n1_ok = true;
    bool nq_ok = true;
    bool nk_ok = true;
    bool n_ok = true;

    bool bounds_ok() const noexcept { return n1_ok && nq_ok && nk_ok && n_ok; }
};

WeightReport weight_census(const IntBivariatePoly& f, long p, long q);
WeightReport weight_census(long p, long q);

/// (#positive, #negative) coefficients of f_{p,q}.
SignaturePair signature_cyclic(const IntBivariatePoly& f);
SignaturePair signature_cyclic(long p, long q);

/// Asymptotic positivity ratio of Gamma(p, q) as p grows.
Rational T_closed(long q);

/// Limits of N_even/N and N_odd/N as p grows, by residue of q mod 4.
std::pair<Rational, Rational> even_odd_limits(long q);

enum class MirrorMap { Identity, Swap, SameY, SameX };
const char* to_string(MirrorMap m);

struct MirrorResult {
    /// Absolute coefficients agree as multisets.
    bool multiset = false;
    /// Monomial correspondences under which absolute coefficients agree.
    std::vector<MirrorMap> maps;
};

/// Compares f_{p,q} with f_{p,p-q+1}.
MirrorResult mirror_analysis(long p, long q);
/// True when some monomial correspondence matches absolute coefficients.
bool mirror_check(long p, long q);

/// Terms ordered by ascending weight (computed with the given q), then by
/// ascending y-degree, e.g. "x^6+6x^2y-3x^4y^2+2y^3+3x^2y^4-y^6".
std::string render(const IntBivariatePoly& f, long p, long q);

enum class TableFormat { Text, Latex };
/// One row per p in 1..p_max for fixed q.
std::string fpq_table(long q, long p_max, TableFormat format);
/// Residue-class summary of the even/odd limits for q = 2..q_max.
std::string even_odd_table(long q_max);

}  // namespace sigpairs

#endif
