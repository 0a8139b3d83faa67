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

#include "sigpairs/invariant.hpp"

#include <gmp.h>

#include <algorithm>

#include <unordered_map>

#include "sigpairs/error.hpp"

namespace sigpairs {

namespace {

// Coefficients of the expansion live in Z[u]/(u^L - sigma), which maps onto
// the ring of integers of Q(zeta_M) by u -> zeta_M. For even M we take
// L = M/2 and sigma = -1, otherwise L = M and sigma = +1. Multiplying by a
// power of u is then a signed rotation of the L coordinates.
struct RingShape {
    long m;
    std::size_t len;
    bool negacyclic;
    std::size_t phi;
};

RingShape ring_for(long field_order) {
    long m = field_order % 4 == 2 ? field_order / 2 : field_order;
    RingShape r{m, 0, m % 2 == 0, static_cast<std::size_t>(euler_phi(m))};
    r.len = static_cast<std::size_t>(r.negacyclic ? m / 2 : m);
    return r;
}

// Integer coordinate list (exponent, value) of one scaled matrix entry.
using ScaledEntry = std::vector<std::pair<std::size_t, long>>;

struct ScaledFactor {
    // c[j][k] multiplies z_k conj(z_j).
    ScaledEntry c[2][2];
};

class Expansion {
   public:
    Expansion(const RingShape& ring, std::size_t max_degree) : ring_(ring) {
        offsets_.resize(max_degree + 2);
        std::size_t off = 0;
        for (std::size_t d = 0; d <= max_degree; ++d) {
            offsets_[d] = off;
            off += (d + 1) * (d + 1) * ring_.len;
        }
        offsets_[max_degree + 1] = off;
        data_.assign(off, 0);
        tmp_.assign(ring_.len, 0);
        data_[0] = 1;
    }

    mpz_class* entry(std::size_t d, std::size_t a1, std::size_t b1) {
        return &data_[offsets_[d] + (a1 * (d + 1) + b1) * ring_.len];
    }

    bool entry_zero(const mpz_class* x) const {
        for (std::size_t i = 0; i < ring_.len; ++i)
            if (sgn(x[i]) != 0) return false;
        return true;
    }

    // Multiplies the expansion (currently of degree top) by
    // scale - sum_{j,k} c_jk z_k conj(z_j).
    void multiply(const ScaledFactor& f, unsigned long scale, std::size_t top) {
        for (std::size_t d = top + 1; d >= 1; --d) {
            const std::size_t prev = d - 1;
            for (std::size_t a1 = 0; a1 <= d; ++a1) {
                for (std::size_t b1 = 0; b1 <= d; ++b1) {
                    mpz_class* out = entry(d, a1, b1);
                    bool any = false;
                    if (d <= top) {
                        for (std::size_t i = 0; i < ring_.len; ++i) {
                            mpz_mul_ui(tmp_[i].get_mpz_t(), out[i].get_mpz_t(), scale);
                            any = any || sgn(tmp_[i]) != 0;
                        }
                    } else {
                        for (auto& t : tmp_) t = 0;
                    }
                    for (int j = 0; j < 2; ++j) {
                        for (int k = 0; k < 2; ++k) {
                            const ScaledEntry& c = f.c[j][k];
                            if (c.empty()) continue;
                            // z_1 raises a1, conj(z_1) raises b1.
                            const std::size_t da = k == 0 ? 1 : 0;
                            const std::size_t db = j == 0 ? 1 : 0;
                            if (a1 < da || b1 < db) continue;
                            const std::size_t sa = a1 - da;
                            const std::size_t sb = b1 - db;
                            if (sa > prev || sb > prev) continue;
                            const mpz_class* src = entry(prev, sa, sb);
                            if (entry_zero(src)) continue;
                            any = true;
                            accumulate(src, c);
                        }
                    }
                    if (any || d <= top)
                        for (std::size_t i = 0; i < ring_.len; ++i) mpz_swap(out[i].get_mpz_t(), tmp_[i].get_mpz_t());
                }
            }
        }
        for (std::size_t i = 0; i < ring_.len; ++i) data_[i] *= scale;
    }

    // Reduces every coordinate vector modulo Phi_M to keep sizes bounded.
    void reduce(std::size_t top) {
        if (ring_.phi == ring_.len) return;
        const auto& modulus = cyclotomic_polynomial(ring_.m);
        const std::size_t end = offsets_[top + 1];
        for (std::size_t off = 0; off < end; off += ring_.len) {
            mpz_class* x = &data_[off];
            for (std::size_t e = ring_.len; e-- > ring_.phi;) {
                if (sgn(x[e]) == 0) continue;
                const std::size_t base = e - ring_.phi;
                for (std::size_t i = 0; i < ring_.phi; ++i) {
                    long c = modulus[i];
                    if (c > 0)
                        mpz_submul_ui(x[base + i].get_mpz_t(), x[e].get_mpz_t(), static_cast<unsigned long>(c));
                    else if (c < 0)
                        mpz_addmul_ui(x[base + i].get_mpz_t(), x[e].get_mpz_t(), static_cast<unsigned long>(-c));
                }
                x[e] = 0;
            }
        }
    }

    std::size_t len() const { return ring_.len; }

   private:
    // tmp -= c * src in the ring.
    void accumulate(const mpz_class* src, const ScaledEntry& c) {
        for (const auto& [shift, value] : c) {
            for (std::size_t i = 0; i < ring_.len; ++i) {
                if (sgn(src[i]) == 0) continue;
                std::size_t t = i + shift;
                long v = value;
                if (t >= ring_.len) {
                    t -= ring_.len;
                    if (ring_.negacyclic) v = -v;
                }
                if (v > 0)
                    mpz_submul_ui(tmp_[t].get_mpz_t(), src[i].get_mpz_t(), static_cast<unsigned long>(v));
                else
                    mpz_addmul_ui(tmp_[t].get_mpz_t(), src[i].get_mpz_t(), static_cast<unsigned long>(-v));
            }
        }
    }

    RingShape ring_;
    std::vector<std::size_t> offsets_;
    std::vector<mpz_class> data_;
    std::vector<mpz_class> tmp_;
};

constexpr std::size_t kReduceEvery = 4;

}  // namespace

HermitianPolynomial phi(const FiniteMatrixGroup& group) {
    const std::size_t order = group.order();
    const long n = group.field_order();
    const RingShape ring = ring_for(n);

    // Demote all entries to Q(zeta_M) and find a common denominator.
    std::vector<std::array<Cyclotomic, 4>> entries;
    entries.reserve(order);
    Integer common = 1;
    for (const auto& g : group.elements()) {
        std::array<Cyclotomic, 4> row;
        for (std::size_t i = 0; i < 4; ++i) {
            auto demoted = g.e[i].promote(n).demote(ring.m);
            if (!demoted) throw Error(ErrorCode::IncompatibleOrder, "matrix entry outside Q(zeta_M)");
            row[i] = std::move(*demoted);
            mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), row[i].denominator().get_mpz_t());
        }
        entries.push_back(std::move(row));
    }
    if (!common.fits_ulong_p()) throw Error(ErrorCode::IndexOutOfRange, "entry denominators too large");
    const unsigned long scale = common.get_ui();

    std::vector<ScaledFactor> factors(order);
    for (std::size_t g = 0; g < order; ++g) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                const Cyclotomic& c = entries[g][static_cast<std::size_t>(2 * j + k)];
                const Integer mult = common / c.denominator();
                const auto& num = c.numerators();
                for (std::size_t e = 0; e < num.size(); ++e) {
                    if (sgn(num[e]) == 0) continue;
                    Integer v = num[e] * mult;
                    if (!v.fits_slong_p()) throw Error(ErrorCode::IndexOutOfRange, "scaled entry too large");
                    factors[g].c[j][k].emplace_back(e, v.get_si());
                }
            }
        }
    }

    Expansion ex(ring, order);
    for (std::size_t g = 0; g < order; ++g) {
        ex.multiply(factors[g], scale, g);
        if ((g + 1) % kReduceEvery == 0) ex.reduce(g + 1);
    }
    ex.reduce(order);

    Integer total_scale;
    mpz_pow_ui(total_scale.get_mpz_t(), common.get_mpz_t(), static_cast<unsigned long>(order));
    {
        const mpz_class* c0 = ex.entry(0, 0, 0);
        bool ok = c0[0] == total_scale;
        for (std::size_t i = 1; i < ex.len(); ++i) ok = ok && sgn(c0[i]) == 0;
        if (!ok) throw Error(ErrorCode::NotHermitian, "constant term of the product is not 1");
    }

    HermitianPolynomial out(order);
    std::vector<Integer> buf(ex.len());
    // Insert in key order (a1, a2, b1, b2) so the map is built with hints.
    std::vector<std::pair<HermitianPolynomial::Key, Cyclotomic>> staged;
    for (std::size_t d = 1; d <= order; ++d) {
        for (std::size_t a1 = 0; a1 <= d; ++a1) {
            for (std::size_t b1 = 0; b1 <= d; ++b1) {
                const mpz_class* x = ex.entry(d, a1, b1);
                if (ex.entry_zero(x)) continue;
                for (std::size_t i = 0; i < ex.len(); ++i) buf[i] = -x[i];
                Cyclotomic c(buf, total_scale, ring.m);
                if (c.is_zero()) continue;
                MultiIndex alpha{static_cast<unsigned>(a1), static_cast<unsigned>(d - a1)};
                MultiIndex beta{static_cast<unsigned>(b1), static_cast<unsigned>(d - b1)};
                staged.emplace_back(HermitianPolynomial::pack(alpha, beta), c.promote(n));
            }
        }
    }
    std::sort(staged.begin(), staged.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    for (auto& [key, c] : staged) {
        auto [alpha, beta] = HermitianPolynomial::unpack(key);
        out.insert_new(alpha, beta, std::move(c));
    }
    out.assert_hermitian();
    if (out.max_degree() > order) throw Error(ErrorCode::IndexOutOfRange, "degree bound violated");
    return out;
}

HoloPoly polarized_at_ones(const FiniteMatrixGroup& group) {
    const std::size_t order = group.order();
    const long n = group.field_order();
    // levels[d][a] is the coefficient of z1^a z2^(d-a).
    std::vector<std::vector<Cyclotomic>> levels(order + 1);
    for (std::size_t d = 0; d <= order; ++d) levels[d].assign(d + 1, Cyclotomic(0, n));
    levels[0][0] = Cyclotomic(1, n);
    for (std::size_t g = 0; g < order; ++g) {
        const Matrix2& m = group.elements()[g];
        const Cyclotomic l1 = m(0, 0) + m(1, 0);
        const Cyclotomic l2 = m(0, 1) + m(1, 1);
        for (std::size_t d = g + 1; d >= 1; --d) {
            for (std::size_t a = 0; a <= d; ++a) {
                Cyclotomic v = levels[d][a];
                if (a >= 1) v -= l1 * levels[d - 1][a - 1];
                if (a < d) v -= l2 * levels[d - 1][a];
                levels[d][a] = std::move(v);
            }
        }
    }
    HoloPoly out;
    for (std::size_t d = 1; d <= order; ++d)
        for (std::size_t a = 0; a <= d; ++a)
            out.add({static_cast<unsigned>(a), static_cast<unsigned>(d - a)}, -levels[d][a]);
    return out;
}

namespace {

class PowerCache {
   public:
    explicit PowerCache(HoloPoly base) : base_(std::move(base)), powers_{HoloPoly::constant(Cyclotomic(1))} {}
    const HoloPoly& get(unsigned k) {
        while (powers_.size() <= k) powers_.push_back(powers_.back() * base_);
        return powers_[k];
    }

   private:
    HoloPoly base_;
    std::vector<HoloPoly> powers_;
};

}  // namespace

HoloPoly substitute(const HoloPoly& poly, const Matrix2& g) {
    PowerCache w1(HoloPoly::linear(g(0, 0), g(0, 1)));
    PowerCache w2(HoloPoly::linear(g(1, 0), g(1, 1)));
    HoloPoly out;
    for (const auto& [m, c] : poly.terms()) out += c * (w1.get(m.a) * w2.get(m.b));
    return out;
}

HermitianPolynomial substitute(const HermitianPolynomial& poly, const Matrix2& g) {
    PowerCache w1(HoloPoly::linear(g(0, 0), g(0, 1)));
    PowerCache w2(HoloPoly::linear(g(1, 0), g(1, 1)));
    HermitianPolynomial out(poly.group_order());
    for (const auto& [key, c] : poly.terms()) {
        auto [alpha, beta] = HermitianPolynomial::unpack(key);
        const HoloPoly holo = w1.get(alpha.a) * w2.get(alpha.b);
        const HoloPoly anti = (w1.get(beta.a) * w2.get(beta.b)).conj_coeffs();
        for (const auto& [ma, ca] : holo.terms()) {
            const Cyclotomic cca = c * ca;
            for (const auto& [mb, cb] : anti.terms()) out.add(ma, mb, cca * cb);
        }
    }
    return out;
}

}  // namespace sigpairs
