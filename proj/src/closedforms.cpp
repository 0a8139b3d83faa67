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


#include "sigpairs/closedforms.hpp"

#include <mpfr.h>

#include <algorithm>
#include <sstream>

#include "sigpairs/error.hpp"
#include "sigpairs/group.hpp"
#include "sigpairs/invariant.hpp"

namespace sigpairs {

namespace {

Integer binom(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer ipow(long base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

void require_positive(long p) {
    if (p < 1) throw Error(ErrorCode::IndexOutOfRange, "p must be positive");
}

std::size_t idx(long k) { return static_cast<std::size_t>(k); }

MultiIndex mi(long a, long b) { return {static_cast<unsigned>(a), static_cast<unsigned>(b)}; }

enum class Arg { Moduli, Swap, SwapSigned };

// f(x, y) with x, y replaced by |z1|^2, |z2|^2 or by z2 conj(z1), (+/-) z1 conj(z2).
HermitianPolynomial lift(const IntBivariatePoly& f, Arg arg) {
    HermitianPolynomial out;
    for (const auto& [e, c] : f.terms()) {
        const auto [r, s] = e;
        if (arg == Arg::Moduli) {
            out.add({r, s}, {r, s}, Cyclotomic(Rational(c)));
        } else {
            const bool flip = arg == Arg::SwapSigned && s % 2 == 1;
            out.add({s, r}, {r, s}, Cyclotomic(Rational(flip ? Integer(-c) : c)));
        }
    }
    return out;
}

HermitianPolynomial decomposed(const IntBivariatePoly& f, Arg second, std::size_t order) {
    const HermitianPolynomial a = lift(f, Arg::Moduli);
    const HermitianPolynomial b = lift(f, second);
    HermitianPolynomial out = a + b - a * b;
    out.set_group_order(order);
    return out;
}

Integer to_integer(const Cyclotomic& c) {
    auto q = c.to_rational();
    if (!q || q->get_den() != 1) throw Error(ErrorCode::NonIntegerCoefficient, "expected an integer coefficient");
    return q->get_num();
}

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RatPoly derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    trim(d);
    return d;
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        const Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
        a.pop_back();
        trim(a);
    }
    return a;
}

Rational eval(const RatPoly& p, const Rational& x) {
    Rational v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain{p, derivative(p)};
    while (!chain.back().empty()) {
        RatPoly r = remainder(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

long variations(const std::vector<int>& signs) {
    long v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

long variations_at(const std::vector<RatPoly>& chain, const Rational& x) {
    std::vector<int> s;
    for (const auto& p : chain) s.push_back(sgn(eval(p, x)));
    return variations(s);
}

long variations_at_minus_infinity(const std::vector<RatPoly>& chain) {
    std::vector<int> s;
    for (const auto& p : chain) {
        const int lead = sgn(p.back());
        s.push_back((p.size() - 1) % 2 == 0 ? lead : -lead);
    }
    return variations(s);
}

// Intervals (a, b] holding exactly one root each.
void isolate(const std::vector<RatPoly>& chain, const Rational& a, const Rational& b,
             std::vector<std::pair<Rational, Rational>>& out) {
    const long count = variations_at(chain, a) - variations_at(chain, b);
    if (count == 0) return;
    if (count == 1) {
        out.emplace_back(a, b);
        return;
    }
    const Rational mid = (a + b) / 2;
    isolate(chain, a, mid, out);
    isolate(chain, mid, b, out);
}

class Mpfr {
   public:
    explicit Mpfr(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }

   private:
    mpfr_t v_;
};

int sign_at(const UnivariateIntPoly& p, mpfr_srcptr x, mpfr_prec_t bits) {
    Mpfr acc(bits);
    mpfr_set_ui(acc.get(), 0, MPFR_RNDN);
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        mpfr_mul(acc.get(), acc.get(), x, MPFR_RNDN);
        mpfr_add_z(acc.get(), acc.get(), it->get_mpz_t(), MPFR_RNDN);
    }
    return mpfr_sgn(acc.get());
}

IntBivariatePoly multiply(const IntBivariatePoly& a, const IntBivariatePoly& b) {
    IntBivariatePoly out;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) out.add(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return out;
}

}  // namespace

UnivariateIntPoly::UnivariateIntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer UnivariateIntPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

std::string UnivariateIntPoly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Integer& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        if (!first) os << (sgn(c) > 0 ? "+" : "-");
        else if (sgn(c) < 0) os << "-";
        first = false;
        const Integer a = abs(c);
        if (k == 0 || a != 1) os << a;
        if (k > 0) os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

Inertia block_inertia(const std::vector<std::vector<Integer>>& block) {
    Inertia in;
    const auto count = [&in](int s) {
        if (s > 0) ++in.n_plus;
        else if (s < 0) ++in.n_minus;
        else ++in.n_zero;
    };
    if (block.size() == 2 && block[0].size() == 2) {
        const Integer det = block[0][0] * block[1][1] - block[0][1] * block[1][0];
        const int tr = sgn(Integer(block[0][0] + block[1][1]));
        if (sgn(det) < 0) {
            count(1);
            count(-1);
        } else if (sgn(det) > 0) {
            count(tr);
            count(tr);
        } else {
            count(tr);
            count(0);
        }
        return in;
    }
    for (const auto& row : block) {
        if (row.size() != 1) throw Error(ErrorCode::IndexOutOfRange, "block must be diagonal or 2x2");
        count(sgn(row[0]));
    }
    return in;
}

Inertia total_inertia(const std::vector<DiagonalBlockSummary>& blocks) {
    Inertia in;
    for (const auto& b : blocks) {
        in.n_plus += b.inertia.n_plus;
        in.n_minus += b.inertia.n_minus;
        in.n_zero += b.inertia.n_zero;
    }
    return in;
}

HermitianPolynomial phi_delta_decomposed(long p) {
    require_positive(p);
    return decomposed(f_closed_pminus1(p), Arg::Swap, idx(2 * p));
}

Integer dihedral_E(long p, long k) {
    const long h = p / 2;
    if (k < 1 || k > 2 * h) throw Error(ErrorCode::IndexOutOfRange, "E_k needs 1 <= k <= 2 floor(p/2)");
    Integer e = 0;
    for (long a = std::max(1L, k - h); a <= std::min(h, k - 1); ++a) e += c_closed(p, a) * c_closed(p, k - a);
    if (k <= h) e += 2 * c_closed(p, k);
    return e;
}

namespace {

DiagonalBlockSummary make_block(std::string label, std::vector<std::vector<Integer>> entries) {
    DiagonalBlockSummary b{std::move(label), std::move(entries), {}};
    b.inertia = block_inertia(b.entries);
    return b;
}

std::vector<std::vector<Integer>> diagonal(const std::vector<Integer>& values) {
    std::vector<std::vector<Integer>> rows;
    for (const auto& v : values) rows.push_back({v});
    return rows;
}

}  // namespace

std::vector<DiagonalBlockSummary> delta_blocks(long p) {
    if (p < 3) throw Error(ErrorCode::IndexOutOfRange, "dihedral block structure needs p >= 3");
    std::vector<Integer> a1, a2;
    for (long j = 1; j <= p / 2; ++j) a1.push_back(j % 2 == 0 ? c_closed(p, j) : Integer(-c_closed(p, j)));
    for (long k = 1; k < p; ++k) {
        const Integer e = k <= 2 * (p / 2) ? dihedral_E(p, k) : Integer(0);
        a2.push_back(k % 2 == 1 ? e : Integer(-e));
    }
    const Integer corner = p % 2 == 0 ? Integer(-dihedral_E(p, p)) : Integer(0);
    return {make_block("lead", {{1}}), make_block("A_{p,1}", diagonal(a1)), make_block("A_{p,2}", diagonal(a2)),
            make_block("A_{p,3}", {{corner, -1}, {-1, 0}})};
}

DeltaCounts delta_counts(long p) {
    require_positive(p);
    return {p + p / 2 + 2, p / 2 + p / 4 + 2};
}

SignaturePair delta_signature_closed(long p) {
    require_positive(p);
    return {idx(p / 2 + p / 4 + 2), idx(3 * (p + 1) / 4)};
}

Rational delta_ratio(long p) {
    if (p < 3) throw Error(ErrorCode::IndexOutOfRange, "dihedral ratio formula needs p >= 3");
    long num = 0, den = 1;
    switch (p % 4) {
        case 0:
            num = 2, den = 3 * p + 4;
            break;
        case 1:
            num = 1, den = 3 * p + 3;
            break;
        case 2:
            num = 1, den = 3 * p + 4;
            break;
        default:
            break;
    }
    Rational extra(num, den);
    extra.canonicalize();
    return Rational(1, 2) + extra;
}

HermitianPolynomial phi_lambda_decomposed(long p) {
    require_positive(p);
    return decomposed(f_closed_pminus1(2 * p), Arg::SwapSigned, idx(4 * p));
}

UnivariateIntPoly d_poly(long p) {
    const HermitianPolynomial phi = phi_lambda_decomposed(p);
    std::vector<Integer> d(idx(phi.max_degree() / 2 + 1), 0);
    for (std::size_t m = 1; m < d.size(); ++m) {
        const MultiIndex z = mi(static_cast<long>(m), static_cast<long>(m));
        d[m] = to_integer(phi.coeff(z, z));
    }
    return UnivariateIntPoly(std::move(d));
}

UnivariateIntPoly d_poly_closed(long p) {
    require_positive(p);
    // s(t) = sum_j binom(2p, 2j) (1 - 4t)^j; the double sum is s(t) s(-t).
    std::vector<Integer> s(idx(p + 1), 0);
    for (long j = 0; j <= p; ++j) {
        const Integer b = binom(static_cast<unsigned long>(2 * p), static_cast<unsigned long>(2 * j));
        for (long k = 0; k <= j; ++k) {
            Integer term = b * binom(static_cast<unsigned long>(j), static_cast<unsigned long>(k)) *
                           ipow(4, static_cast<unsigned long>(k));
            s[idx(k)] += k % 2 == 1 ? Integer(-term) : term;
        }
    }
    std::vector<Integer> prod(idx(2 * p + 1), 0);
    for (long a = 0; a <= p; ++a)
        for (long b = 0; b <= p; ++b) prod[idx(a + b)] += b % 2 == 1 ? Integer(-s[idx(a)] * s[idx(b)]) : s[idx(a)] * s[idx(b)];
    const Integer scale = ipow(4, static_cast<unsigned long>(2 * p - 1));
    std::vector<Integer> d(prod.size());
    for (std::size_t k = 0; k < prod.size(); ++k) {
        if (!mpz_divisible_p(prod[k].get_mpz_t(), scale.get_mpz_t()))
            throw Error(ErrorCode::NonIntegerCoefficient, "closed form of D_p is not integral");
        mpz_divexact(d[k].get_mpz_t(), prod[k].get_mpz_t(), scale.get_mpz_t());
        d[k] = -d[k];
    }
    d[0] += 1;
    return UnivariateIntPoly(std::move(d));
}

bool d_signs_ok(const UnivariateIntPoly& d, long p) {
    for (long k = 1; k <= p; ++k) {
        const int s = sgn(d.coeff(idx(2 * k)));
        if (s != (k % 2 == 1 ? 1 : -1)) return false;
    }
    return true;
}

UnivariateIntPoly p_poly(long p) {
    require_positive(p);
    std::vector<Integer> c;
    for (long k = 0; k <= p; ++k) c.push_back(2 * binom(static_cast<unsigned long>(2 * p), static_cast<unsigned long>(2 * k)));
    return UnivariateIntPoly(std::move(c));
}

IntBivariatePoly p_poly_abs2(long p) {
    const UnivariateIntPoly P = p_poly(p);
    IntBivariatePoly re, im;
    for (long k = 0; k <= P.degree(); ++k) {
        for (long m = 0; m <= k; ++m) {
            Integer c = P.coeff(idx(k)) * binom(static_cast<unsigned long>(k), static_cast<unsigned long>(m));
            // i^m
            if (m % 4 >= 2) c = -c;
            (m % 2 == 0 ? re : im).add(static_cast<unsigned>(k - m), static_cast<unsigned>(m), c);
        }
    }
    IntBivariatePoly out = multiply(re, re);
    const IntBivariatePoly im2 = multiply(im, im);
    for (const auto& [e, c] : im2.terms()) out.add(e.first, e.second, c);
    return out;
}

bool p_poly_roots_check(long p) {
    const UnivariateIntPoly P = p_poly(p);
    RatPoly rp;
    for (const auto& c : P.coeffs()) rp.emplace_back(c);
    const auto chain = sturm_chain(rp);
    const long negative = variations_at_minus_infinity(chain) - variations_at(chain, Rational(0));
    if (negative != p || sgn(P.coeff(0)) == 0) return false;

    Integer bound = 0;
    for (const auto& c : P.coeffs()) bound = std::max(bound, Integer(c / P.coeffs().back()));
    std::vector<std::pair<Rational, Rational>> cells;
    isolate(chain, Rational(-(bound + 1)), Rational(0), cells);
    if (static_cast<long>(cells.size()) != p) return false;

    constexpr mpfr_prec_t bits = 128;
    Mpfr lo(bits), hi(bits), mid(bits), width(bits), expected(bits), diff(bits), pi(bits);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    std::vector<bool> matched(idx(p), false);
    for (const auto& [a, b] : cells) {
        mpfr_set_q(lo.get(), a.get_mpq_t(), MPFR_RNDN);
        mpfr_set_q(hi.get(), b.get_mpq_t(), MPFR_RNDN);
        if (sgn(eval(rp, b)) != 0) {
            const int s_hi = sign_at(P, hi.get(), bits);
            for (int it = 0; it < 400; ++it) {
                mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
                mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
                if (mpfr_equal_p(mid.get(), lo.get()) || mpfr_equal_p(mid.get(), hi.get())) break;
                const int s = sign_at(P, mid.get(), bits);
                if (s == 0) {
                    mpfr_set(lo.get(), mid.get(), MPFR_RNDN);
                    mpfr_set(hi.get(), mid.get(), MPFR_RNDN);
                    break;
                }
                mpfr_set(s == s_hi ? hi.get() : lo.get(), mid.get(), MPFR_RNDN);
            }
        } else {
            mpfr_set(lo.get(), hi.get(), MPFR_RNDN);
        }
        bool found = false;
        for (long j = 0; j < p && !found; ++j) {
            if (matched[idx(j)]) continue;
            mpfr_mul_ui(expected.get(), pi.get(), static_cast<unsigned long>(2 * j + 1), MPFR_RNDN);
            mpfr_div_ui(expected.get(), expected.get(), static_cast<unsigned long>(4 * p), MPFR_RNDN);
            mpfr_tan(expected.get(), expected.get(), MPFR_RNDN);
            mpfr_sqr(expected.get(), expected.get(), MPFR_RNDN);
            mpfr_neg(expected.get(), expected.get(), MPFR_RNDN);
            mpfr_sub(diff.get(), lo.get(), expected.get(), MPFR_RNDN);
            mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
            mpfr_abs(width.get(), expected.get(), MPFR_RNDN);
            mpfr_div_2ui(width.get(), width.get(), 60, MPFR_RNDN);
            if (mpfr_lessequal_p(diff.get(), width.get())) {
                matched[idx(j)] = true;
                found = true;
            }
        }
        if (!found) return false;
    }

    const IntBivariatePoly abs2 = p_poly_abs2(p);
    if (abs2.term_count() == 0) return false;
    return std::all_of(abs2.terms().begin(), abs2.terms().end(), [](const auto& t) { return sgn(t.second) > 0; });
}

Integer lambda_E2(long p, long j) {
    if (p < 2 || j < 1 || j > p - 1) throw Error(ErrorCode::IndexOutOfRange, "E_{p,2} index needs 1 <= j <= p-1");
    const long n = 2 * p;
    Integer e = 0;
    const bool low = j <= p / 2;
    const long top = low ? 2 * j - 1 : p;
    for (long k = j + 1; k <= top; ++k) {
        const Integer t = c_closed(n, k) * c_closed(n, 2 * j - k);
        e += k % 2 == 1 ? t : Integer(-t);
    }
    e *= 2;
    const Integer sq = c_closed(n, j) * c_closed(n, j);
    e += j % 2 == 1 ? sq : Integer(-sq);
    if (low) e -= 2 * c_closed(n, 2 * j);
    return e;
}

std::vector<DiagonalBlockSummary> lambda_blocks(long p) {
    if (p < 2) throw Error(ErrorCode::IndexOutOfRange, "binary dihedral block structure needs p >= 2");
    std::vector<Integer> e1, e2;
    for (long j = 1; j <= p; ++j) e1.push_back(c_closed(2 * p, j));
    for (long j = 1; j < p; ++j) e2.push_back(lambda_E2(p, j));
    const Integer sq = c_closed(2 * p, p) * c_closed(2 * p, p);
    const Integer corner = p % 2 == 1 ? sq : Integer(-sq);
    return {make_block("lead", {{1}}), make_block("E_{p,1}", diagonal(e1)), make_block("E_{p,2}", diagonal(e2)),
            make_block("E_{p,3}", {{corner, -1}, {-1, 0}})};
}

SignaturePair lambda_signature_closed(long p) {
    require_positive(p);
    return {idx(2 + p + p / 2), idx(1 + (p - 1) / 2)};
}

std::vector<int> lambda2_eigen_signs() {
    const Cyclotomic sqrt5 = Cyclotomic(1) + Cyclotomic(2) * (Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4));
    if (sqrt5 * sqrt5 != Cyclotomic(5)) throw Error(ErrorCode::NotReal, "sqrt5 representation is wrong");
    std::vector<int> signs;
    for (long v : {1, 4, 2, 12}) signs.push_back(Cyclotomic(v).sign());
    signs.push_back((Cyclotomic(-2) + sqrt5).sign());
    signs.push_back((Cyclotomic(-2) - sqrt5).sign());
    return signs;
}

const char* to_string(Family f) {
    return f == Family::Dihedral ? "dihedral" : "binary-dihedral";
}

std::string family_csv(Family family, long p_min, long p_max, bool with_engine) {
    require_positive(p_min);
    std::ostringstream os;
    os << "p,N,N_plus,N_minus,ratio";
    if (with_engine) os << ",engine_N_plus,engine_N_minus,match";
    os << "\n";
    const long threshold = family == Family::Dihedral ? 3 : 2;
    for (long p = p_min; p <= p_max; ++p) {
        os << p;
        SignaturePair closed;
        const bool asserted = p >= threshold;
        if (asserted) {
            closed = family == Family::Dihedral ? delta_signature_closed(p) : lambda_signature_closed(p);
            os << "," << closed.n_plus + closed.n_minus << "," << closed.n_plus << "," << closed.n_minus << ","
               << positivity_ratio(closed).get_str();
        } else {
            os << ",,,,";
        }
        if (with_engine) {
            const auto g = family == Family::Dihedral ? dihedral(p) : binary_dihedral(p);
            const SignaturePair s = signature_pair(g);
            os << "," << s.n_plus << "," << s.n_minus << ",";
            if (asserted) os << (s == closed ? "yes" : "no");
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace sigpairs
