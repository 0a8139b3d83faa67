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


// Command-line front end over the C API.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sigpairs/sigpairs.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGroup = 3;
constexpr int kExitCounterexample = 4;

int exit_code(sig_status s) {
    switch (s) {
        case SIG_OK: return 0;
        case SIG_ERR_PARSE:
        case SIG_ERR_IO:
        case SIG_ERR_INVALID_ARGUMENT:
        case SIG_ERR_INDEX_OUT_OF_RANGE: return kExitUsage;
        case SIG_ERR_NOT_UNITARY:
        case SIG_ERR_CAP_EXCEEDED: return kExitGroup;
        default: return kExitFailure;
    }
}

int report(sig_status s) {
    std::cerr << "sig: " << sig_status_string(s);
    const std::string detail = sig_last_error();
    if (!detail.empty()) std::cerr << ": " << detail;
    std::cerr << "\n";
    return exit_code(s);
}

// Takes ownership of a C API string and writes it to out.
void emit(char* s, std::ostream& out, bool newline) {
    out << s;
    if (newline) out << "\n";
    sig_string_free(s);
}

class Group {
   public:
    ~Group() { sig_group_destroy(g_); }
    sig_status load(const std::string& spec) { return sig_group_from_spec(spec.c_str(), &g_); }
    const sig_group* get() const { return g_; }

   private:
    sig_group* g_ = nullptr;
};

struct Config {
    std::string group;
    std::string method = "exact";
    unsigned precision = 256;
    bool stable = false;

    long p = 0;
    long q = 0;
    long p_min = 0;
    long p_max = 0;
    long q_max = 0;
    bool table = false;
    bool even_odd = false;
    std::string format = "text";

    std::string theorem;
    bool include_slow = false;

    std::string family;
    bool engine = false;
    std::string output;
};

int cmd_signature(const Config& c) {
    Group g;
    if (sig_status s = g.load(c.group)) return report(s);
    if (c.method == "both") {
        sig_inertia exact{}, numeric{};
        if (sig_status s = sig_signature(g.get(), SIG_METHOD_EXACT, c.precision, &exact)) return report(s);
        if (sig_status s = sig_signature(g.get(), SIG_METHOD_NUMERIC, c.precision, &numeric)) return report(s);
        char* a = nullptr;
        char* b = nullptr;
        if (sig_status s = sig_signature_json(g.get(), SIG_METHOD_EXACT, c.precision, c.stable, &a)) return report(s);
        if (sig_status s = sig_signature_json(g.get(), SIG_METHOD_NUMERIC, c.precision, c.stable, &b)) {
            sig_string_free(a);
            return report(s);
        }
        std::cout << "[";
        emit(a, std::cout, false);
        std::cout << ",";
        emit(b, std::cout, false);
        std::cout << "]\n";
        if (exact.n_plus != numeric.n_plus || exact.n_minus != numeric.n_minus || exact.n_zero != numeric.n_zero) {
            std::cerr << "sig: exact and numeric inertia disagree\n";
            return kExitCounterexample;
        }
        return 0;
    }
    const sig_method m = c.method == "numeric" ? SIG_METHOD_NUMERIC : SIG_METHOD_EXACT;
    char* out = nullptr;
    if (sig_status s = sig_signature_json(g.get(), m, c.precision, c.stable, &out)) return report(s);
    emit(out, std::cout, true);
    return 0;
}

int cmd_fpq(const Config& c) {
    char* out = nullptr;
    sig_status s;
    if (c.even_odd) {
        s = sig_even_odd_table(c.q_max > 0 ? c.q_max : 12, &out);
    } else if (c.table) {
        s = sig_fpq_table(c.q, c.p_max > 0 ? c.p_max : 9, c.format == "latex", &out);
    } else {
        if (c.p < 1) {
            std::cerr << "sig: --p is required and must be positive\n";
            return kExitUsage;
        }
        s = sig_fpq_text(c.p, c.q, &out);
        if (s == SIG_OK) {
            emit(out, std::cout, true);
            return 0;
        }
    }
    if (s) return report(s);
    emit(out, std::cout, false);
    return 0;
}

int cmd_verify(const Config& c) {
    sig_verify_options o{c.p_max, c.q_max, c.include_slow ? 1 : 0, c.precision};
    char* out = nullptr;
    int passed = 0;
    if (sig_status s = sig_verify(c.theorem.c_str(), &o, c.stable, &out, &passed)) return report(s);
    const std::string json = out;
    emit(out, std::cout, true);
    if (!passed) {
        std::cerr << "sig: counterexample in " << c.theorem << ": " << json << "\n";
        return kExitCounterexample;
    }
    return 0;
}

int cmd_ratio(const Config& c) {
    long lo = 0, hi = 0;
    if (c.family == "cyclic-T") {
        lo = 1;
        hi = c.q_max > 0 ? c.q_max : 9;
    } else if (c.p > 0) {
        lo = hi = c.p;
    } else {
        lo = c.p_min > 0 ? c.p_min : 3;
        hi = c.p_max > 0 ? c.p_max : 12;
    }
    char* out = nullptr;
    if (sig_status s = sig_ratio_table(c.family.c_str(), lo, hi, c.engine, &out)) return report(s);
    emit(out, std::cout, false);
    return 0;
}

int cmd_phi(const Config& c) {
    Group g;
    if (sig_status s = g.load(c.group)) return report(s);
    char* out = nullptr;
    if (sig_status s = sig_phi_csv(g.get(), &out)) return report(s);
    if (c.output.empty()) {
        emit(out, std::cout, false);
        return 0;
    }
    std::ofstream file(c.output);
    if (!file) {
        sig_string_free(out);
        std::cerr << "sig: cannot write " << c.output << "\n";
        return kExitUsage;
    }
    emit(out, file, false);
    return 0;
}

int cmd_family(const Config& c) {
    const long lo = c.p_min > 0 ? c.p_min : 1;
    const long hi = c.p_max > 0 ? c.p_max : 12;
    char* out = nullptr;
    if (sig_status s = sig_family_csv(c.family.c_str(), lo, hi, c.engine, &out)) return report(s);
    emit(out, std::cout, false);
    return 0;
}

void apply_precision_env() {
    const char* env = std::getenv("SIG_MAX_PRECISION_BITS");
    if (!env || !*env) return;
    char* end = nullptr;
    const unsigned long bits = std::strtoul(env, &end, 10);
    if (*end != '\0' || bits < 64) {
        std::cerr << "sig: ignoring SIG_MAX_PRECISION_BITS=" << env << "\n";
        return;
    }
    sig_set_max_precision_bits(static_cast<unsigned>(bits));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signature pairs of group-invariant Hermitian polynomials"};
    app.require_subcommand(1);
    app.set_version_flag("--version", sig_version());
    Config c;

    auto precision = [&c](CLI::App* sub) {
        sub->add_option("--precision", c.precision, "Numeric precision in bits")->check(CLI::Range(64u, 1u << 20));
    };

    auto* signature = app.add_subcommand("signature", "Signature of a group's invariant polynomial");
    signature->add_option("--group,-g", c.group, "cyclic:p,q | dihedral:p | binary-dihedral:p | T | O | I | file:<path>")
        ->required();
    signature->add_option("--method", c.method)->check(CLI::IsMember({"exact", "numeric", "both"}));
    signature->add_flag("--stable-output", c.stable, "Write elapsed_ms as 0");
    precision(signature);

    auto* fpq = app.add_subcommand("fpq", "The polynomials f_{p,q}");
    fpq->add_option("--p", c.p)->check(CLI::PositiveNumber);
    fpq->add_option("--q", c.q);
    fpq->add_flag("--table", c.table, "Rows p = 1..p-max");
    fpq->add_option("--p-max", c.p_max)->check(CLI::PositiveNumber);
    fpq->add_flag("--even-odd", c.even_odd, "Even/odd limit table for q = 2..q-max");
    fpq->add_option("--q-max", c.q_max)->check(CLI::PositiveNumber);
    fpq->add_option("--format", c.format)->check(CLI::IsMember({"text", "latex"}));

    auto* verify = app.add_subcommand("verify", "Run a verification sweep");
    verify->add_option("theorem", c.theorem,
                       "thm1.1 | thm1.2-limit | thm1.3 | thm3.1 | lww | census | quaternion-decomp | "
                       "dihedral-decomp | dk-signs | chern")
        ->required();
    verify->add_option("--p-max", c.p_max)->check(CLI::PositiveNumber);
    verify->add_option("--q-max", c.q_max)->check(CLI::PositiveNumber);
    verify->add_flag("--include-slow", c.include_slow, "Include the icosahedral group");
    verify->add_flag("--stable-output", c.stable, "Write elapsed_ms as 0");
    precision(verify);

    auto* ratio = app.add_subcommand("ratio", "Positivity ratio tables");
    ratio->add_option("--family", c.family)->required()->check(CLI::IsMember({"cyclic-T", "dihedral", "binary-dihedral"}));
    ratio->add_option("--p", c.p)->check(CLI::PositiveNumber);
    ratio->add_option("--p-min", c.p_min)->check(CLI::PositiveNumber);
    ratio->add_option("--p-max", c.p_max)->check(CLI::PositiveNumber);
    ratio->add_option("--q-max", c.q_max)->check(CLI::PositiveNumber);
    ratio->add_flag("--engine", c.engine, "Add the engine ratio");

    auto* phi = app.add_subcommand("phi", "Invariant polynomial as CSV");
    phi->add_option("--group,-g", c.group)->required();
    phi->add_option("--output,-o", c.output, "Write to a file instead of standard output");

    auto* family = app.add_subcommand("family", "Closed-form signature table for a family");
    family->add_option("--family", c.family)->required()->check(CLI::IsMember({"dihedral", "binary-dihedral"}));
    family->add_option("--p-min", c.p_min)->check(CLI::PositiveNumber);
    family->add_option("--p-max", c.p_max)->check(CLI::PositiveNumber);
    family->add_flag("--engine", c.engine, "Add engine signatures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "sig: " << e.what() << "\n";
        return kExitUsage;
    }
    if ((c.p_min > 0 && c.p_max > 0 && c.p_min > c.p_max)) {
        std::cerr << "sig: empty range\n";
        return kExitUsage;
    }

    apply_precision_env();
    if (*signature) return cmd_signature(c);
    if (*fpq) return cmd_fpq(c);
    if (*verify) return cmd_verify(c);
    if (*ratio) return cmd_ratio(c);
    if (*phi) return cmd_phi(c);
    return cmd_family(c);
}
