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

#include "sigpairs/signature.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "sigpairs/error.hpp"
#include "sigpairs/invariant.hpp"

namespace sigpairs {

Cyclotomic HermitianMatrix::at(std::size_t row, std::size_t col) const {
    auto it = entries.find({row, col});
    return it == entries.end() ? Cyclotomic(0) : it->second;
}

void HermitianMatrix::set(std::size_t row, std::size_t col, const Cyclotomic& value) {
    if (value.is_zero())
        entries.erase({row, col});
    else
        entries[{row, col}] = value;
}

bool HermitianMatrix::is_hermitian() const {
    for (const auto& [rc, v] : entries) {
        auto it = entries.find({rc.second, rc.first});
        if (it == entries.end() || it->second != v.conj()) return false;
    }
    return true;
}

HermitianMatrix coefficient_matrix(const HermitianPolynomial& poly) {
    HermitianMatrix m;
    m.basis = poly.support();
    std::sort(m.basis.begin(), m.basis.end(), [](const MultiIndex& x, const MultiIndex& y) {
        return x.a != y.a ? x.a > y.a : x.b < y.b;
    });
    std::map<MultiIndex, std::size_t> index;
    for (std::size_t i = 0; i < m.basis.size(); ++i) index[m.basis[i]] = i;
    for (const auto& [key, c] : poly.terms()) {
        auto [alpha, beta] = HermitianPolynomial::unpack(key);
        m.entries.emplace(std::make_pair(index.at(alpha), index.at(beta)), c);
    }
    return m;
}

HermitianMatrix matrix_from_dense(const std::vector<std::vector<Cyclotomic>>& rows) {
    HermitianMatrix m;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        m.basis.push_back({static_cast<unsigned>(i), 0});
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

namespace {

using Dense = std::vector<std::vector<Cyclotomic>>;

// Index sets of the connected components of the sparsity graph.
std::vector<std::vector<std::size_t>> components(const HermitianMatrix& m) {
    const std::size_t n = m.dimension();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [rc, v] : m.entries) parent[find(rc.first)] = find(rc.second);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

Dense extract(const HermitianMatrix& m, const std::vector<std::size_t>& idx) {
    Dense d(idx.size(), std::vector<Cyclotomic>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) d[i][j] = m.at(idx[i], idx[j]);
    return d;
}

void inertia_block(Dense a, Inertia& acc) {
    std::vector<std::size_t> live(a.size());
    std::iota(live.begin(), live.end(), 0);
    auto erase = [&live](std::size_t x) { live.erase(std::find(live.begin(), live.end(), x)); };

    while (!live.empty()) {
        // Largest nonzero diagonal entry by floating estimate; only affects fill.
        std::size_t pivot = a.size();
        double best = -1;
        for (std::size_t i : live) {
            if (a[i][i].is_zero()) continue;
            double mag = std::abs(a[i][i].approx().real());
            if (mag > best) {
                best = mag;
                pivot = i;
            }
        }
        if (pivot != a.size()) {
            const Cyclotomic d = a[pivot][pivot];
            (d.sign() > 0 ? acc.n_plus : acc.n_minus) += 1;
            const Cyclotomic inv = d.inverse();
            erase(pivot);
            for (std::size_t u : live) {
                if (a[u][pivot].is_zero()) continue;
                const Cyclotomic f = a[u][pivot] * inv;
                for (std::size_t v : live) {
                    if (a[pivot][v].is_zero()) continue;
                    a[u][v] -= f * a[pivot][v];
                }
            }
            continue;
        }
        std::size_t pj = a.size(), pk = a.size();
        for (std::size_t j : live) {
            for (std::size_t k : live) {
                if (k != j && !a[j][k].is_zero()) {
                    pj = j;
                    pk = k;
                    break;
                }
            }
            if (pj != a.size()) break;
        }
        if (pj == a.size()) {
            acc.n_zero += live.size();
            return;
        }
        // 2x2 pivot [[0, x], [conj x, 0]] has determinant -|x|^2 < 0.
        acc.n_plus += 1;
        acc.n_minus += 1;
        const Cyclotomic x_inv = a[pj][pk].inverse();
        const Cyclotomic xbar_inv = x_inv.conj();
        erase(pj);
        erase(pk);
        for (std::size_t u : live) {
            const Cyclotomic f_k = a[u][pk] * x_inv;
            const Cyclotomic f_j = a[u][pj] * xbar_inv;
            if (f_k.is_zero() && f_j.is_zero()) continue;
            for (std::size_t v : live) {
                Cyclotomic delta;
                if (!f_k.is_zero() && !a[pj][v].is_zero()) delta += f_k * a[pj][v];
                if (!f_j.is_zero() && !a[pk][v].is_zero()) delta += f_j * a[pk][v];
                if (!delta.is_zero()) a[u][v] -= delta;
            }
        }
    }
}

void check_hermitian(const HermitianMatrix& m) {
    if (!m.is_hermitian()) throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian");
    for (const auto& [rc, v] : m.entries)
        if (rc.first >= m.dimension() || rc.second >= m.dimension())
            throw Error(ErrorCode::IndexOutOfRange, "matrix entry outside the basis");
}

}  // namespace

Inertia inertia_exact(const HermitianMatrix& m) {
    check_hermitian(m);
    Inertia acc;
    for (const auto& comp : components(m)) {
        if (comp.size() == 1) {
            const Cyclotomic d = m.at(comp[0], comp[0]);
            int s = d.sign();
            (s > 0 ? acc.n_plus : s < 0 ? acc.n_minus : acc.n_zero) += 1;
            continue;
        }
        inertia_block(extract(m, comp), acc);
    }
    return acc;
}

std::size_t rank_exact(const HermitianMatrix& m) {
    std::size_t rank = 0;
    for (const auto& comp : components(m)) {
        Dense a = extract(m, comp);
        const std::size_t n = a.size();
        std::size_t row = 0;
        for (std::size_t col = 0; col < n && row < n; ++col) {
            std::size_t p = row;
            while (p < n && a[p][col].is_zero()) ++p;
            if (p == n) continue;
            std::swap(a[p], a[row]);
            const Cyclotomic inv = a[row][col].inverse();
            for (std::size_t i = row + 1; i < n; ++i) {
                if (a[i][col].is_zero()) continue;
                const Cyclotomic f = a[i][col] * inv;
                for (std::size_t j = col; j < n; ++j)
                    if (!a[row][j].is_zero()) a[i][j] -= f * a[row][j];
            }
            ++row;
        }
        rank += row;
    }
    return rank;
}

SignaturePair signature_pair(const FiniteMatrixGroup& group) {
    Inertia in = inertia_exact(coefficient_matrix(phi(group)));
    return {in.n_plus, in.n_minus};
}

Rational positivity_ratio(const SignaturePair& s) {
    if (s.n_plus + s.n_minus == 0) throw Error(ErrorCode::EmptySpectrum, "no nonzero eigenvalues");
    Rational r(static_cast<unsigned long>(s.n_plus), static_cast<unsigned long>(s.n_plus + s.n_minus));
    r.canonicalize();
    return r;
}

Rational positivity_ratio(const FiniteMatrixGroup& group) { return positivity_ratio(signature_pair(group)); }

SignatureRecord compute_signature(const FiniteMatrixGroup& group, Method method, unsigned precision_bits) {
    auto start = std::chrono::steady_clock::now();
    HermitianMatrix m = coefficient_matrix(phi(group));
    SignatureRecord rec;
    rec.group = group.label();
    rec.order = group.order();
    rec.method = method;
    rec.inertia = method == Method::Exact ? inertia_exact(m) : inertia_numeric(m, precision_bits);
    rec.ratio = positivity_ratio(SignaturePair{rec.inertia.n_plus, rec.inertia.n_minus});
    rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

nlohmann::ordered_json to_json(const SignatureRecord& r, bool stable) {
    nlohmann::ordered_json j;
    j["group"] = r.group;
    j["order"] = r.order;
    j["N"] = r.inertia.rank();
    j["N_plus"] = r.inertia.n_plus;
    j["N_minus"] = r.inertia.n_minus;
    j["rank"] = r.inertia.rank();
    j["ratio"] = r.ratio.get_str();
    j["method"] = r.method == Method::Exact ? "exact" : "numeric";
    j["elapsed_ms"] = stable ? 0 : r.elapsed_ms;
    return j;
}

}  // namespace sigpairs
