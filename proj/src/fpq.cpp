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

#include "sigpairs/fpq.hpp"

#include <gmp.h>

#include <algorithm>
#include <sstream>

#include "sigpairs/error.hpp"

namespace sigpairs {

Integer IntBivariatePoly::coeff(unsigned r, unsigned s) const {
    auto it = terms_.find({r, s});
    return it == terms_.end() ? Integer(0) : it->second;
}

void IntBivariatePoly::add(unsigned r, unsigned s, const Integer& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace({r, s}, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

namespace {

long residue(long q, long p) { return ((q % p) + p) % p; }

void require_positive(long p) {
    if (p < 1) throw Error(ErrorCode::IndexOutOfRange, "p must be positive");
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace

IntBivariatePoly fpq(long p, long q) {
    require_positive(p);
    const long qn = residue(q, p);
    const std::size_t len = static_cast<std::size_t>(p);
    const std::size_t top = static_cast<std::size_t>(p);
    // Coefficients in Z[u]/(u^p - 1); level d holds x^r y^(d-r), r = 0..d.
    std::vector<std::vector<std::vector<Integer>>> level(top + 1);
    for (std::size_t d = 0; d <= top; ++d) level[d].assign(d + 1, std::vector<Integer>(len, 0));
    level[0][0][0] = 1;
    auto subtract_rotated = [len](std::vector<Integer>& out, const std::vector<Integer>& src, std::size_t shift) {
        for (std::size_t i = 0; i < len; ++i)
            if (sgn(src[i]) != 0) out[(i + shift) % len] -= src[i];
    };
    for (std::size_t j = 0; j < top; ++j) {
        const std::size_t sx = j % len;
        const std::size_t sy = static_cast<std::size_t>((qn * static_cast<long>(j)) % p);
        for (std::size_t d = j + 1; d >= 1; --d) {
            for (std::size_t r = 0; r <= d; ++r) {
                auto& out = level[d][r];
                if (r >= 1) subtract_rotated(out, level[d - 1][r - 1], sx);
                if (r < d) subtract_rotated(out, level[d - 1][r], sy);
            }
        }
    }
    IntBivariatePoly f;
    for (std::size_t d = 1; d <= top; ++d) {
        for (std::size_t r = 0; r <= d; ++r) {
            Cyclotomic c(level[d][r], 1, p);
            if (c.is_zero()) continue;
            auto value = c.to_rational();
            if (!value || value->get_den() != 1)
                throw Error(ErrorCode::NonIntegerCoefficient,
                            "non-integer coefficient in f_{" + std::to_string(p) + "," + std::to_string(q) + "}");
            f.add(static_cast<unsigned>(r), static_cast<unsigned>(d - r), -value->get_num());
        }
    }
    return f;
}

IntBivariatePoly fpq_power_sum(long p, long q) {
    require_positive(p);
    const long qn = residue(q, p);
    const std::size_t top = static_cast<std::size_t>(p);
    // S_m = sum over a + b = m with a + q b = 0 mod p of binom(m, a) x^a y^b;
    // log prod (1 - L_j) = -sum_m (p/m) S_m gives d F_d = -p sum_m S_m F_{d-m}.
    std::vector<std::vector<std::pair<std::size_t, Integer>>> s(top + 1);
    for (std::size_t m = 1; m <= top; ++m)
        for (std::size_t a = 0; a <= m; ++a)
            if ((static_cast<long>(a) + qn * static_cast<long>(m - a)) % p == 0) s[m].emplace_back(a, binomial(m, a));
    std::vector<std::vector<Integer>> f(top + 1);
    f[0] = {1};
    IntBivariatePoly out;
    for (std::size_t d = 1; d <= top; ++d) {
        std::vector<Integer> acc(d + 1, 0);
        for (std::size_t m = 1; m <= d; ++m) {
            const auto& prev = f[d - m];
            for (const auto& [a, b] : s[m])
                for (std::size_t a2 = 0; a2 < prev.size(); ++a2)
                    if (sgn(prev[a2]) != 0) mpz_addmul(acc[a + a2].get_mpz_t(), b.get_mpz_t(), prev[a2].get_mpz_t());
        }
        for (auto& x : acc) {
            x *= p;
            if (!mpz_divisible_ui_p(x.get_mpz_t(), d))
                throw Error(ErrorCode::NonIntegerCoefficient, "power-sum recurrence produced a fraction");
            mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), d);
            x = -x;
        }
        for (std::size_t a = 0; a <= d; ++a) out.add(static_cast<unsigned>(a), static_cast<unsigned>(d - a), -acc[a]);
        f[d] = std::move(acc);
    }
    return out;
}

Integer c_closed(long p, long j) {
    if (p < 2 || j < 1 || j > p / 2)
        throw Error(ErrorCode::IndexOutOfRange, "c_{p,j} needs 1 <= j <= p/2");
    Integer c = binomial(static_cast<unsigned long>(p - j), static_cast<unsigned long>(j)) * p;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p - j));
    return c;
}

IntBivariatePoly f_closed_pminus1(long p) {
    require_positive(p);
    IntBivariatePoly f;
    f.add(static_cast<unsigned>(p), 0, 1);
    f.add(0, static_cast<unsigned>(p), 1);
    for (long j = 1; j <= p / 2; ++j) {
        Integer c = c_closed(p, j);
        f.add(static_cast<unsigned>(j), static_cast<unsigned>(j), j % 2 == 1 ? c : Integer(-c));
    }
    return f;
}

bool verify_exact_formula(long p) {
    require_positive(p);
    // h(t) = sum_j binom(p, 2j) (1 - 4t)^j; the two conjugate p-th powers sum to h / 2^(p-1).
    std::vector<Integer> h(static_cast<std::size_t>(p / 2 + 1), 0);
    for (long j = 0; 2 * j <= p; ++j) {
        const Integer b = binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(2 * j));
        for (long k = 0; k <= j; ++k) {
            Integer term = b * binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(k));
            Integer pow4;
            mpz_ui_pow_ui(pow4.get_mpz_t(), 4, static_cast<unsigned long>(k));
            term *= pow4;
            if (k % 2 == 1) term = -term;
            h[static_cast<std::size_t>(k)] += term;
        }
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(p - 1));
    if (h[0] != scale) return false;
    IntBivariatePoly f;
    f.add(static_cast<unsigned>(p), 0, 1);
    f.add(0, static_cast<unsigned>(p), 1);
    for (std::size_t k = 1; k < h.size(); ++k) {
        if (!mpz_divisible_p(h[k].get_mpz_t(), scale.get_mpz_t())) return false;
        Integer c;
        mpz_divexact(c.get_mpz_t(), h[k].get_mpz_t(), scale.get_mpz_t());
        f.add(static_cast<unsigned>(k), static_cast<unsigned>(k), -c);
    }
    return f == fpq(p, p - 1);
}

std::optional<long> weight(long r, long s, long p, long q) {
    if (p < 1) return std::nullopt;
    const long n = r + q * s;
    if (n % p != 0) return std::nullopt;
    return n / p;
}

int lww_sign(long r, long s, long w) { return gcd(gcd(r, s), w) % 2 == 1 ? 1 : -1; }

WeightReport weight_census(const IntBivariatePoly& f, long p, long q) {
    WeightReport rep;
    rep.p = p;
    rep.q = q;
    for (const auto& [rs, c] : f.terms()) {
        auto w = weight(rs.first, rs.second, p, q);
        if (!w) throw Error(ErrorCode::IndexOutOfRange, "monomial without integral weight");
        rep.per_k[*w] += 1;
        (*w % 2 == 0 ? rep.n_even : rep.n_odd) += 1;
        rep.terms.push_back({rs.first, rs.second, *w, sgn(c)});
    }
    rep.n_total = static_cast<long>(f.term_count());
    auto count = [&rep](long k) {
        auto it = rep.per_k.find(k);
        return it == rep.per_k.end() ? 0L : it->second;
    };
    if (q >= 1) rep.n1_ok = count(1) == p / q + 1;
    if (q >= 2) {
        rep.nq_ok = count(q) == 1;
        for (long k = 1; k <= q; ++k) {
            Rational expected(p * (q - k), q * (q - 1));
            expected.canonicalize();
            if (abs(Rational(count(k)) - expected) > 1) rep.nk_ok = false;
        }
        for (const auto& [k, n] : rep.per_k)
            if (k < 1 || k > q) rep.nk_ok = false;
        Rational half(p, 2);
        half.canonicalize();
        rep.n_ok = abs(Rational(rep.n_total) - half) <= q;
    }
    return rep;
}

WeightReport weight_census(long p, long q) { return weight_census(fpq(p, q), p, q); }

SignaturePair signature_cyclic(const IntBivariatePoly& f) {
    SignaturePair s;
    for (const auto& [rs, c] : f.terms()) (sgn(c) > 0 ? s.n_plus : s.n_minus) += 1;
    return s;
}

SignaturePair signature_cyclic(long p, long q) { return signature_cyclic(fpq(p, q)); }

Rational T_closed(long q) {
    if (q < 1) throw Error(ErrorCode::IndexOutOfRange, "T(q) needs q >= 1");
    Rational r = q % 2 == 1 ? Rational(3 * q + 1, 4 * q) : Rational(3 * q - 2, 4 * (q - 1));
    r.canonicalize();
    return r;
}

std::pair<Rational, Rational> even_odd_limits(long q) {
    if (q < 1) throw Error(ErrorCode::IndexOutOfRange, "q must be positive");
    Rational even, odd;
    if (q % 2 == 0) {
        even = Rational(q - 2, 2 * (q - 1));
        odd = Rational(q, 2 * (q - 1));
    } else {
        even = Rational(q - 1, 2 * q);
        odd = Rational(q + 1, 2 * q);
    }
    even.canonicalize();
    odd.canonicalize();
    return {even, odd};
}

const char* to_string(MirrorMap m) {
    switch (m) {
        case MirrorMap::Identity: return "identity";
        case MirrorMap::Swap: return "swap";
        case MirrorMap::SameY: return "same-y-degree";
        case MirrorMap::SameX: return "same-x-degree";
    }
    return "unknown";
}

namespace {

// Absolute coefficients keyed by a projection of the exponent pair; fails
// when the projection is not injective on the support.
std::optional<std::map<std::pair<unsigned, unsigned>, Integer>> project(const IntBivariatePoly& f, MirrorMap m) {
    std::map<std::pair<unsigned, unsigned>, Integer> out;
    for (const auto& [rs, c] : f.terms()) {
        std::pair<unsigned, unsigned> key;
        switch (m) {
            case MirrorMap::Identity: key = rs; break;
            case MirrorMap::Swap: key = {rs.second, rs.first}; break;
            case MirrorMap::SameY: key = {0, rs.second}; break;
            case MirrorMap::SameX: key = {rs.first, 0}; break;
        }
        if (!out.emplace(key, abs(c)).second) return std::nullopt;
    }
    return out;
}

}  // namespace

MirrorResult mirror_analysis(long p, long q) {
    if (q < 1 || q > p) throw Error(ErrorCode::IndexOutOfRange, "mirror check needs 1 <= q <= p");
    const IntBivariatePoly a = fpq(p, q);
    const IntBivariatePoly b = fpq(p, p - q + 1);
    MirrorResult res;
    std::vector<Integer> ca, cb;
    for (const auto& [rs, c] : a.terms()) ca.push_back(abs(c));
    for (const auto& [rs, c] : b.terms()) cb.push_back(abs(c));
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    res.multiset = ca == cb;
    for (MirrorMap m : {MirrorMap::Identity, MirrorMap::Swap, MirrorMap::SameY, MirrorMap::SameX}) {
        auto left = project(a, m);
        // Identity/swap compare a under the map with b as is.
        auto right = project(b, m == MirrorMap::Swap ? MirrorMap::Identity : m);
        if (left && right && *left == *right) res.maps.push_back(m);
    }
    return res;
}

bool mirror_check(long p, long q) { return !mirror_analysis(p, q).maps.empty(); }

std::string render(const IntBivariatePoly& f, long p, long q) {
    std::vector<std::pair<IntBivariatePoly::Exponents, Integer>> terms(f.terms().begin(), f.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [q](const auto& l, const auto& r) {
        const long wl = static_cast<long>(l.first.first) + q * static_cast<long>(l.first.second);
        const long wr = static_cast<long>(r.first.first) + q * static_cast<long>(r.first.second);
        if (wl != wr) return wl < wr;
        return l.first.second < r.first.second;
    });
    (void)p;
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [rs, c] : terms) {
        const Integer mag = abs(c);
        if (sgn(c) < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        const bool constant = rs.first == 0 && rs.second == 0;
        if (mag != 1 || constant) os << mag;
        if (rs.first == 1) os << 'x';
        if (rs.first > 1) os << "x^" << rs.first;
        if (rs.second == 1) os << 'y';
        if (rs.second > 1) os << "y^" << rs.second;
    }
    return os.str();
}

std::string fpq_table(long q, long p_max, TableFormat format) {
    if (p_max < 1) throw Error(ErrorCode::IndexOutOfRange, "p-max must be positive");
    std::vector<std::string> names;
    std::size_t width = 0;
    for (long p = 1; p <= p_max; ++p) {
        names.push_back("f_{" + std::to_string(p) + "," + std::to_string(q) + "}(x,y)");
        width = std::max(width, names.back().size());
    }
    std::ostringstream os;
    for (long p = 1; p <= p_max; ++p) {
        const std::string& name = names[static_cast<std::size_t>(p - 1)];
        const std::string body = render(fpq(p, q), p, q);
        if (format == TableFormat::Latex) {
            os << '$' << name << "$   & = $" << body << "$ \\\\\n";
        } else {
            os << name << std::string(width - name.size(), ' ') << " = " << body << '\n';
        }
    }
    return os.str();
}

std::string even_odd_table(long q_max) {
    if (q_max < 2) throw Error(ErrorCode::IndexOutOfRange, "q-max must be at least 2");
    std::ostringstream os;
    os << "q mod 4  lim N_even/N    lim N_odd/N\n";
    os << "0        (q-2)/(2(q-1))  q/(2(q-1))\n";
    os << "1        (q-1)/(2q)      (q+1)/(2q)\n";
    os << "2        (q-2)/(2(q-1))  q/(2(q-1))\n";
    os << "3        (q-1)/(2q)      (q+1)/(2q)\n";
    os << "\nq\tq mod 4\teven\todd\n";
    for (long q = 2; q <= q_max; ++q) {
        auto [even, odd] = even_odd_limits(q);
        os << q << '\t' << q % 4 << '\t' << even << '\t' << odd << '\n';
    }
    return os.str();
}

}  // namespace sigpairs
