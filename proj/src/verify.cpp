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


#include "sigpairs/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "sigpairs/chern.hpp"
#include "sigpairs/closedforms.hpp"
#include "sigpairs/error.hpp"
#include "sigpairs/fpq.hpp"
#include "sigpairs/group.hpp"
#include "sigpairs/invariant.hpp"
#include "sigpairs/signature.hpp"

namespace sigpairs {

namespace {

struct CaseResult {
    bool ok = true;
    std::string detail;
    std::vector<std::string> warnings;

    void check(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Case {
    std::string label;
    std::function<void(CaseResult&)> run;
};

std::string str(const SignaturePair& s) {
    return "(" + std::to_string(s.n_plus) + "," + std::to_string(s.n_minus) + ")";
}

std::string str(const Inertia& in) {
    return "(" + std::to_string(in.n_plus) + "," + std::to_string(in.n_minus) + "," + std::to_string(in.n_zero) + ")";
}

SignaturePair pair_of(const Inertia& in) { return {in.n_plus, in.n_minus}; }

// Cases run on a small thread pool; results keep the case order.
std::vector<CaseResult> run_cases(const std::vector<Case>& cases) {
    std::vector<CaseResult> out(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            try {
                cases[i].run(out[i]);
            } catch (const std::exception& e) {
                out[i].check(false, std::string("exception: ") + e.what());
            }
        }
    };
    const std::size_t n = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), cases.size());
    if (n <= 1) {
        worker();
        return out;
    }
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

long pick(long value, long fallback) { return value > 0 ? value : fallback; }

SignaturePair cyclic_su2_closed(long p) { return {static_cast<std::size_t>((p + 2) / 4 + 2), static_cast<std::size_t>(p / 4)}; }

void add_group_case(std::vector<Case>& cases, std::string label, std::function<FiniteMatrixGroup()> make,
                    Inertia expected, bool numeric, unsigned bits) {
    cases.push_back({label, [make, expected, numeric, bits](CaseResult& r) {
                         const FiniteMatrixGroup g = make();
                         const Inertia in = inertia_exact(coefficient_matrix(phi(g)));
                         r.check(in == expected, "exact inertia " + str(in) + ", expected " + str(expected));
                         if (numeric) {
                             const Inertia num = inertia_numeric(coefficient_matrix(phi(g)), bits);
                             r.check(num == in, "numeric inertia " + str(num) + " differs from exact " + str(in));
                         }
                     }});
}

std::vector<Case> thm1_1(const VerifyOptions& o, std::vector<std::string>& notes) {
    std::vector<Case> cases;
    for (long p = 2; p <= pick(o.p_max, 20); ++p) {
        cases.push_back({"cyclic SU(2) p=" + std::to_string(p), [p](CaseResult& r) {
                             const SignaturePair s = signature_pair(cyclic_gamma(p, p - 1));
                             r.check(s == cyclic_su2_closed(p), "engine " + str(s) + ", closed form " + str(cyclic_su2_closed(p)));
                         }});
    }
    for (long p = 2; p <= 8; ++p) {
        cases.push_back({"binary dihedral p=" + std::to_string(p), [p](CaseResult& r) {
                             const SignaturePair s = signature_pair(binary_dihedral(p));
                             const SignaturePair c = lambda_signature_closed(p);
                             r.check(s == c, "engine " + str(s) + ", closed form " + str(c));
                         }});
    }
    const unsigned bits = o.precision_bits;
    add_group_case(cases, "T", [] { return binary_polyhedral(Polyhedral::T); }, {9, 5, 45}, true, bits);
    add_group_case(cases, "O", [] { return binary_polyhedral(Polyhedral::O); }, {17, 9, 109}, true, bits);
    if (o.include_slow)
        add_group_case(cases, "I", [] { return binary_polyhedral(Polyhedral::I); }, {40, 22, 598}, false, bits);
    else
        notes.push_back("icosahedral group skipped; pass --include-slow to run it");
    return cases;
}

std::vector<Case> thm1_2(const VerifyOptions& o) {
    std::vector<Case> cases;
    cases.push_back({"T(q) for q=1..9", [](CaseResult& r) {
                         const std::vector<Rational> expected{Rational(1), Rational(1), Rational(5, 6), Rational(5, 6),
                                                              Rational(4, 5), Rational(4, 5), Rational(11, 14),
                                                              Rational(11, 14), Rational(7, 9)};
                         for (long q = 1; q <= 9; ++q)
                             r.check(T_closed(q) == expected[static_cast<std::size_t>(q - 1)],
                                     "T(" + std::to_string(q) + ") = " + T_closed(q).get_str());
                     }});
    const long q_max = pick(o.q_max, 10000);
    cases.push_back({"pairing and monotonicity for q<=" + std::to_string(q_max), [q_max](CaseResult& r) {
                         Rational prev = T_closed(1);
                         for (long q = 2; q <= q_max; ++q) {
                             const Rational t = T_closed(q);
                             r.check(t <= prev, "T(" + std::to_string(q) + ") > T(" + std::to_string(q - 1) + ")");
                             if (q % 2 == 0) r.check(t == prev, "T(" + std::to_string(q - 1) + ") != T(" + std::to_string(q) + ")");
                             prev = t;
                         }
                     }});
    cases.push_back({"T(10^6) near 3/4", [](CaseResult& r) {
                         const Rational gap = abs(T_closed(1000000) - Rational(3, 4));
                         r.check(gap <= Rational(1, 100000), "|T(10^6) - 3/4| = " + gap.get_str());
                     }});
    for (long q : {3L, 4L, 5L}) {
        for (long p : {100L, 200L, 400L}) {
            cases.push_back({"convergence q=" + std::to_string(q) + " p=" + std::to_string(p), [p, q](CaseResult& r) {
                                 const SignaturePair s = signature_cyclic(fpq_power_sum(p, q));
                                 const Rational gap = abs(positivity_ratio(s) - T_closed(q));
                                 Rational tol(5, p);
                                 tol.canonicalize();
                                 if (gap > tol)
                                     r.warnings.push_back("|L - T(q)| = " + gap.get_str() + " exceeds 5/p for p=" +
                                                          std::to_string(p) + ", q=" + std::to_string(q));
                             }});
        }
    }
    return cases;
}

std::vector<Case> thm1_3(const VerifyOptions& o) {
    std::vector<Case> cases;
    for (long p = 1; p <= pick(o.p_max, 12); ++p) {
        cases.push_back({"dihedral p=" + std::to_string(p), [p](CaseResult& r) {
                             const SignaturePair s = signature_pair(dihedral(p));
                             const SignaturePair c = delta_signature_closed(p);
                             if (p < 3) {
                                 if (s != c) r.warnings.push_back("p=" + std::to_string(p) + ": engine " + str(s) + ", closed form " + str(c));
                                 return;
                             }
                             r.check(s == c, "engine " + str(s) + ", closed form " + str(c));
                             const DeltaCounts n = delta_counts(p);
                             r.check(c == SignaturePair{static_cast<std::size_t>(n.n_plus), static_cast<std::size_t>(n.n - n.n_plus)},
                                     "eigenvalue counts disagree with the signature formula");
                             r.check(pair_of(total_inertia(delta_blocks(p))) == c, "block inertia disagrees");
                         }});
    }
    cases.push_back({"dihedral ratio p=3..200", [](CaseResult& r) {
                         for (long p = 3; p <= 200; ++p) {
                             const DeltaCounts n = delta_counts(p);
                             Rational ratio(n.n_plus, n.n);
                             ratio.canonicalize();
                             r.check(delta_ratio(p) == ratio, "p=" + std::to_string(p) + ": " + delta_ratio(p).get_str() +
                                                                  " vs " + ratio.get_str());
                         }
                     }});
    return cases;
}

std::vector<Case> thm3_1(const VerifyOptions& o) {
    std::vector<Case> cases;
    const long p_max = pick(o.p_max, 40);
    for (long p = 2; p <= p_max; ++p) {
        cases.push_back({"Gamma(p,p-1) p=" + std::to_string(p), [p](CaseResult& r) {
                             r.check(verify_exact_formula(p), "exact formula fails");
                             const IntBivariatePoly f = fpq(p, p - 1);
                             r.check(f == f_closed_pminus1(p), "coefficients differ from c_{p,j}");
                             for (long j = 1; j <= p / 2; ++j) r.check(c_closed(p, j) > 0, "c_{p,j} not positive");
                             const SignaturePair s = signature_cyclic(f);
                             r.check(s == cyclic_su2_closed(p), "signature " + str(s) + ", closed form " + str(cyclic_su2_closed(p)));
                         }});
    }
    for (long p = 2; p <= std::min(p_max, 12L); ++p) {
        cases.push_back({"mirror p=" + std::to_string(p), [p](CaseResult& r) {
                             for (long q = 1; q <= p; ++q)
                                 r.check(mirror_analysis(p, q).multiset, "q=" + std::to_string(q) + ": absolute coefficients differ");
                         }});
    }
    return cases;
}

std::vector<Case> lww(const VerifyOptions& o) {
    std::vector<Case> cases;
    for (long q : {2L, 3L, 4L, 5L, 7L, 8L}) {
        for (long p = 1; p <= pick(o.p_max, 60); ++p) {
            cases.push_back({"p=" + std::to_string(p) + " q=" + std::to_string(q), [p, q](CaseResult& r) {
                                 for (const auto& t : weight_census(fpq(p, q), p, q).terms)
                                     r.check(t.sign == lww_sign(t.r, t.s, t.weight),
                                             "sign of x^" + std::to_string(t.r) + "y^" + std::to_string(t.s) + " (weight " +
                                                 std::to_string(t.weight) + ")");
                             }});
        }
    }
    return cases;
}

std::vector<Case> census(const VerifyOptions& o) {
    std::vector<Case> cases;
    for (long q = 2; q <= pick(o.q_max, 12); ++q) {
        cases.push_back({"q=" + std::to_string(q), [q, p_max = pick(o.p_max, 200)](CaseResult& r) {
                             for (long p = 1; p <= p_max && r.ok; ++p) {
                                 const WeightReport w = weight_census(fpq_power_sum(p, q), p, q);
                                 long sum = 0;
                                 for (const auto& [k, n] : w.per_k) sum += n;
                                 const std::string at = "p=" + std::to_string(p) + ": ";
                                 r.check(sum == w.n_total && w.n_odd + w.n_even == w.n_total, at + "census totals inconsistent");
                                 r.check(w.n1_ok, at + "N_1 != floor(p/q)+1");
                                 r.check(w.nq_ok, at + "N_q != 1");
                                 r.check(w.nk_ok, at + "N_k outside the bound");
                                 r.check(w.n_ok, at + "|N - p/2| > q");
                             }
                         }});
    }
    return cases;
}

std::vector<Case> quaternion(const VerifyOptions& o) {
    std::vector<Case> cases;
    for (long p = 1; p <= pick(o.p_max, 6); ++p) {
        cases.push_back({"binary dihedral p=" + std::to_string(p), [p](CaseResult& r) {
                             const HermitianPolynomial engine = phi(binary_dihedral(p));
                             r.check(phi_lambda_decomposed(p) == engine, "decomposition differs from the engine");
                             const UnivariateIntPoly d = d_poly(p);
                             r.check(d == d_poly_closed(p), "D_p(t) differs from the closed form");
                             if (p < 2) return;
                             for (long j = 1; j < p; ++j)
                                 r.check(lambda_E2(p, j) == d.coeff(static_cast<std::size_t>(2 * j)),
                                         "E_{p,2} entry " + std::to_string(j) + " differs from d_j");
                             for (long j = 1; j <= p; ++j) {
                                 const MultiIndex m{static_cast<unsigned>(j), static_cast<unsigned>(j + 2 * p)};
                                 r.check(engine.coeff(m, m) == Cyclotomic(Rational(c_closed(2 * p, j))),
                                         "E_{p,1} entry " + std::to_string(j) + " differs from the engine");
                             }
                             r.check(pair_of(total_inertia(lambda_blocks(p))) == lambda_signature_closed(p),
                                     "block inertia differs from the closed form");
                         }});
    }
    cases.push_back({"Lambda_2 eigenvalue signs", [](CaseResult& r) {
                         r.check(lambda2_eigen_signs() == std::vector<int>{1, 1, 1, 1, 1, -1}, "sign pattern differs");
                     }});
    return cases;
}

std::vector<Case> dihedral_decomp(const VerifyOptions& o) {
    std::vector<Case> cases;
    for (long p = 1; p <= pick(o.p_max, 10); ++p) {
        cases.push_back({"dihedral p=" + std::to_string(p), [p](CaseResult& r) {
                             const HermitianPolynomial engine = phi(dihedral(p));
                             r.check(phi_delta_decomposed(p) == engine, "decomposition differs from the engine");
                             if (p < 3) return;
                             for (long k = 1; k < p; ++k) {
                                 const MultiIndex m{static_cast<unsigned>(k), static_cast<unsigned>(k)};
                                 Integer e = k <= 2 * (p / 2) ? dihedral_E(p, k) : Integer(0);
                                 if (k % 2 == 0) e = -e;
                                 r.check(engine.coeff(m, m) == Cyclotomic(Rational(e)),
                                         "A_{p,2} entry " + std::to_string(k) + " differs from the engine");
                             }
                             for (long j = 1; j <= p / 2; ++j) {
                                 const MultiIndex m{static_cast<unsigned>(j + p), static_cast<unsigned>(j)};
                                 Integer c = c_closed(p, j);
                                 if (j % 2 == 1) c = -c;
                                 r.check(engine.coeff(m, m) == Cyclotomic(Rational(c)),
                                         "A_{p,1} entry " + std::to_string(j) + " differs from the engine");
                             }
                         }});
    }
    cases.push_back({"E_k > 0 for p<=20", [](CaseResult& r) {
                         for (long p = 2; p <= 20; ++p)
                             for (long k = 1; k <= 2 * (p / 2); ++k)
                                 r.check(dihedral_E(p, k) > 0, "E_" + std::to_string(k) + " for p=" + std::to_string(p));
                     }});
    return cases;
}

std::vector<Case> dk_signs(const VerifyOptions& o) {
    std::vector<Case> cases;
    for (long p = 1; p <= pick(o.p_max, 12); ++p) {
        cases.push_back({"d_k p=" + std::to_string(p), [p](CaseResult& r) {
                             r.check(d_signs_ok(d_poly(p), p), "sign pattern of d_k fails");
                             if (p <= 8) r.check(p_poly_roots_check(p), "root check of P fails");
                         }});
    }
    return cases;
}

std::vector<Case> chern(const VerifyOptions& o) {
    std::vector<Case> cases;
    for (long p = 1; p <= pick(o.p_max, 8); ++p) {
        cases.push_back({"cyclic p=" + std::to_string(p), [p](CaseResult& r) {
                             for (long q = 0; q <= p; ++q) {
                                 const FiniteMatrixGroup g = cyclic_gamma(p, q);
                                 const std::string at = "q=" + std::to_string(q) + ": ";
                                 r.check(verify_chern_identity(g), at + "alternating sum differs");
                                 const Orbit orb = orbit(g, HoloPoly::linear(Cyclotomic(1), Cyclotomic(1)));
                                 r.check(restrict_to_xy(alternating_sum(chern_classes(orb))) == fpq(p, q),
                                         at + "restriction differs from f_{p,q}");
                             }
                         }});
    }
    std::vector<std::function<FiniteMatrixGroup()>> others{
        [] { return dihedral(3); }, [] { return dihedral(4); }, [] { return binary_dihedral(2); },
        [] { return binary_dihedral(3); }, [] { return binary_polyhedral(Polyhedral::T); }};
    for (const auto& make : others) {
        cases.push_back({"", [make](CaseResult& r) {
                             const ChernReport rep = chern_report(make());
                             r.check(rep.multiset_ok, rep.group + ": multiset identity fails");
                             r.check(rep.set_power_ok, rep.group + ": set form to the stabilizer power differs");
                             if (rep.stabilizer_order == 1) r.check(rep.set_ok == rep.multiset_ok, rep.group + ": forms disagree");
                             else if (!rep.set_ok)
                                 r.warnings.push_back(rep.group + ": set-form identity fails (stabilizer order " +
                                                      std::to_string(rep.stabilizer_order) + ")");
                         }});
    }
    return cases;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{"thm1.1", "thm1.2-limit", "thm1.3", "thm3.1", "lww",
                                              "census", "quaternion-decomp", "dihedral-decomp", "dk-signs", "chern"};
    return ids;
}

VerificationReport verify(const std::string& theorem, const VerifyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.theorem = theorem;
    std::vector<Case> cases;
    if (theorem == "thm1.1") cases = thm1_1(options, report.warnings);
    else if (theorem == "thm1.2-limit") cases = thm1_2(options);
    else if (theorem == "thm1.3") cases = thm1_3(options);
    else if (theorem == "thm3.1") cases = thm3_1(options);
    else if (theorem == "lww") cases = lww(options);
    else if (theorem == "census") cases = census(options);
    else if (theorem == "quaternion-decomp") cases = quaternion(options);
    else if (theorem == "dihedral-decomp") cases = dihedral_decomp(options);
    else if (theorem == "dk-signs") cases = dk_signs(options);
    else if (theorem == "chern") cases = chern(options);
    else throw Error(ErrorCode::Parse, "unknown theorem id '" + theorem + "'");

    const auto results = run_cases(cases);
    report.cases_run = static_cast<long>(results.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        report.warnings.insert(report.warnings.end(), r.warnings.begin(), r.warnings.end());
        if (r.ok) {
            ++report.cases_passed;
        } else if (!report.counterexample) {
            report.counterexample = cases[i].label.empty() ? r.detail : cases[i].label + ": " + r.detail;
        }
    }
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::ordered_json to_json(const VerificationReport& report, bool stable) {
    nlohmann::ordered_json j;
    j["theorem"] = report.theorem;
    j["cases_run"] = report.cases_run;
    j["cases_passed"] = report.cases_passed;
    j["passed"] = report.passed();
    j["counterexample"] = report.counterexample ? nlohmann::ordered_json(*report.counterexample) : nlohmann::ordered_json();
    j["warnings"] = report.warnings;
    j["elapsed_ms"] = stable ? 0 : report.elapsed_ms;
    return j;
}

std::string ratio_table(const std::string& family, long lo, long hi, bool with_engine) {
    if (lo < 1 || hi < lo) throw Error(ErrorCode::Parse, "empty or invalid range");
    std::ostringstream os;
    if (family == "cyclic-T") {
        os << "q,T\n";
        for (long q = lo; q <= hi; ++q) os << q << "," << T_closed(q).get_str() << "\n";
        return os.str();
    }
    const bool delta = family == "dihedral";
    if (!delta && family != "binary-dihedral") throw Error(ErrorCode::Parse, "unknown family '" + family + "'");
    os << "p,formula";
    if (with_engine) os << ",engine";
    os << "\n";
    for (long p = lo; p <= hi; ++p) {
        os << p << ",";
        if (delta && p >= 3) os << delta_ratio(p).get_str();
        else if (!delta && p >= 2) os << positivity_ratio(lambda_signature_closed(p)).get_str();
        if (with_engine) os << "," << positivity_ratio(delta ? dihedral(p) : binary_dihedral(p)).get_str();
        os << "\n";
    }
    return os.str();
}

}  // namespace sigpairs
