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

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>

#include "sigpairs/signature.hpp"

namespace sigpairs {

namespace {

namespace mp = boost::multiprecision;
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

class PrecisionScope {
   public:
    explicit PrecisionScope(unsigned bits) : saved_(Real::default_precision()) {
        Real::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1);
    }
    ~PrecisionScope() { Real::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

   private:
    unsigned saved_;
};

std::pair<Real, Real> evaluate(const Cyclotomic& c, const Real& pi) {
    Real re = 0, im = 0;
    const auto& num = c.numerators();
    for (std::size_t k = 0; k < num.size(); ++k) {
        if (sgn(num[k]) == 0) continue;
        const Real coeff(num[k].get_str());
        const Real angle = 2 * pi * static_cast<long>(k) / c.order();
        re += coeff * cos(angle);
        im += coeff * sin(angle);
    }
    const Real den(c.denominator().get_str());
    return {re / den, im / den};
}

// Householder reduction of a real symmetric matrix to tridiagonal form
// (diagonal d, subdiagonal e), eigenvalues only.
void tridiagonalize(std::vector<std::vector<Real>>& a, std::vector<Real>& d, std::vector<Real>& e) {
    const long n = static_cast<long>(a.size());
    d.assign(static_cast<std::size_t>(n), Real(0));
    e.assign(static_cast<std::size_t>(n), Real(0));
    auto A = [&a](long i, long j) -> Real& { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
    auto E = [&e](long i) -> Real& { return e[static_cast<std::size_t>(i)]; };
    for (long i = n - 1; i > 0; --i) {
        const long l = i - 1;
        Real h = 0;
        if (l > 0) {
            Real scale = 0;
            for (long k = 0; k <= l; ++k) scale += abs(A(i, k));
            if (scale == 0) {
                E(i) = A(i, l);
            } else {
                for (long k = 0; k <= l; ++k) {
                    A(i, k) /= scale;
                    h += A(i, k) * A(i, k);
                }
                Real f = A(i, l);
                Real g = f >= 0 ? Real(-sqrt(h)) : Real(sqrt(h));
                E(i) = scale * g;
                h -= f * g;
                A(i, l) = f - g;
                f = 0;
                for (long j = 0; j <= l; ++j) {
                    g = 0;
                    for (long k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
                    for (long k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
                    E(j) = g / h;
                    f += E(j) * A(i, j);
                }
                const Real hh = f / (h + h);
                for (long j = 0; j <= l; ++j) {
                    f = A(i, j);
                    E(j) = g = E(j) - hh * f;
                    for (long k = 0; k <= j; ++k) A(j, k) -= f * E(k) + g * A(i, k);
                }
            }
        } else {
            E(i) = A(i, l);
        }
    }
    for (long i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = A(i, i);
}

// Implicit QL iteration on a symmetric tridiagonal matrix.
void tridiagonal_eigenvalues(std::vector<Real>& d, std::vector<Real>& e, const Real& eps) {
    const long n = static_cast<long>(d.size());
    auto D = [&d](long i) -> Real& { return d[static_cast<std::size_t>(i)]; };
    auto E = [&e](long i) -> Real& { return e[static_cast<std::size_t>(i)]; };
    for (long i = 1; i < n; ++i) E(i - 1) = E(i);
    if (n > 0) E(n - 1) = 0;
    for (long l = 0; l < n; ++l) {
        int iter = 0;
        long m = l;
        do {
            for (m = l; m < n - 1; ++m) {
                const Real dd = abs(D(m)) + abs(D(m + 1));
                if (abs(E(m)) <= eps * dd) break;
            }
            if (m == l) break;
            if (++iter > 200) throw std::runtime_error("QL iteration did not converge");
            Real g = (D(l + 1) - D(l)) / (2 * E(l));
            Real r = sqrt(g * g + 1);
            g = D(m) - D(l) + E(l) / (g + (g >= 0 ? r : Real(-r)));
            Real s = 1, c = 1, p = 0;
            long i = m - 1;
            bool underflow = false;
            for (; i >= l; --i) {
                Real f = s * E(i);
                const Real b = c * E(i);
                r = sqrt(f * f + g * g);
                E(i + 1) = r;
                if (r == 0) {
                    D(i + 1) -= p;
                    E(m) = 0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = D(i + 1) - p;
                r = (D(i) - g) * s + 2 * c * b;
                p = s * r;
                D(i + 1) = g + p;
                g = c * r - b;
            }
            if (underflow) continue;
            D(l) -= p;
            E(l) = g;
            E(m) = 0;
        } while (m != l);
    }
}

}  // namespace

Inertia inertia_numeric(const HermitianMatrix& m, unsigned precision_bits, const std::string& zero_threshold) {
    PrecisionScope scope(precision_bits);
    const Real pi = acos(Real(-1));
    const Real threshold(zero_threshold);
    const Real eps = ldexp(Real(1), -static_cast<int>(precision_bits));
    const std::size_t n = m.dimension();

    // Split into connected blocks as in the exact path.
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&parent](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [rc, v] : m.entries) parent[find(rc.first)] = find(rc.second);
    std::map<std::size_t, std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < n; ++i) blocks[find(i)].push_back(i);

    Inertia acc;
    for (const auto& [root, idx] : blocks) {
        const std::size_t k = idx.size();
        std::map<std::size_t, std::size_t> local;
        for (std::size_t i = 0; i < k; ++i) local[idx[i]] = i;
        // Realification [[A, -B], [B, A]] doubles every eigenvalue's multiplicity.
        std::vector<std::vector<Real>> a(2 * k, std::vector<Real>(2 * k, Real(0)));
        for (const auto& [rc, v] : m.entries) {
            auto ri = local.find(rc.first);
            if (ri == local.end()) continue;
            const std::size_t i = ri->second, j = local.at(rc.second);
            auto [re, im] = evaluate(v, pi);
            a[i][j] = re;
            a[i + k][j + k] = re;
            a[i][j + k] = -im;
            a[i + k][j] = im;
        }
        std::vector<Real> d, e;
        tridiagonalize(a, d, e);
        tridiagonal_eigenvalues(d, e, eps);
        std::size_t pos = 0, neg = 0, zero = 0;
        for (const auto& lambda : d) {
            if (abs(lambda) <= threshold)
                ++zero;
            else if (lambda > 0)
                ++pos;
            else
                ++neg;
        }
        acc.n_plus += pos / 2;
        acc.n_minus += neg / 2;
        acc.n_zero += zero / 2;
    }
    return acc;
}

}  // namespace sigpairs
