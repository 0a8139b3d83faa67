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


#include "sigpairs/sigpairs.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include <json.hpp>

#include "sigpairs/closedforms.hpp"
#include "sigpairs/error.hpp"
#include "sigpairs/fpq.hpp"
#include "sigpairs/group.hpp"
#include "sigpairs/invariant.hpp"
#include "sigpairs/json_io.hpp"
#include "sigpairs/signature.hpp"
#include "sigpairs/verify.hpp"

struct sig_group {
    sigpairs::FiniteMatrixGroup group;
};

namespace {

thread_local std::string last_error;

sig_status status_of(sigpairs::ErrorCode code) {
    using sigpairs::ErrorCode;
    switch (code) {
        case ErrorCode::DivisionByZero: return SIG_ERR_DIVISION_BY_ZERO;
        case ErrorCode::NotReal: return SIG_ERR_NOT_REAL;
        case ErrorCode::PrecisionExceeded: return SIG_ERR_PRECISION_EXCEEDED;
        case ErrorCode::IncompatibleOrder: return SIG_ERR_INCOMPATIBLE_ORDER;
        case ErrorCode::NotUnitary: return SIG_ERR_NOT_UNITARY;
        case ErrorCode::CapExceeded: return SIG_ERR_CAP_EXCEEDED;
        case ErrorCode::NotHermitian: return SIG_ERR_NOT_HERMITIAN;
        case ErrorCode::EmptySpectrum: return SIG_ERR_EMPTY_SPECTRUM;
        case ErrorCode::NonIntegerCoefficient: return SIG_ERR_NON_INTEGER_COEFFICIENT;
        case ErrorCode::IndexOutOfRange: return SIG_ERR_INDEX_OUT_OF_RANGE;
        case ErrorCode::Parse: return SIG_ERR_PARSE;
        case ErrorCode::Io: return SIG_ERR_IO;
    }
    return SIG_ERR_INTERNAL;
}

sig_status fail(sig_status s, const std::string& message) {
    last_error = message;
    return s;
}

template <typename F>
sig_status guard(F&& body) {
    try {
        last_error.clear();
        body();
        return SIG_OK;
    } catch (const sigpairs::Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(SIG_ERR_PARSE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SIG_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SIG_ERR_INTERNAL, e.what());
    }
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

sigpairs::Method method_of(sig_method m) {
    return m == SIG_METHOD_NUMERIC ? sigpairs::Method::Numeric : sigpairs::Method::Exact;
}

#define SIG_REQUIRE(cond, what) \
    if (!(cond)) return fail(SIG_ERR_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* sig_version(void) { return "1.0.0"; }

const char* sig_status_string(sig_status status) {
    switch (status) {
        case SIG_OK: return "ok";
        case SIG_ERR_DIVISION_BY_ZERO: return "division by zero";
        case SIG_ERR_NOT_REAL: return "not real";
        case SIG_ERR_PRECISION_EXCEEDED: return "precision exceeded";
        case SIG_ERR_INCOMPATIBLE_ORDER: return "incompatible order";
        case SIG_ERR_NOT_UNITARY: return "not unitary";
        case SIG_ERR_CAP_EXCEEDED: return "closure cap exceeded";
        case SIG_ERR_NOT_HERMITIAN: return "not hermitian";
        case SIG_ERR_EMPTY_SPECTRUM: return "empty spectrum";
        case SIG_ERR_NON_INTEGER_COEFFICIENT: return "non-integer coefficient";
        case SIG_ERR_INDEX_OUT_OF_RANGE: return "index out of range";
        case SIG_ERR_PARSE: return "parse error";
        case SIG_ERR_IO: return "i/o error";
        case SIG_ERR_INVALID_ARGUMENT: return "invalid argument";
        case SIG_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* sig_last_error(void) { return last_error.c_str(); }

void sig_string_free(char* s) { std::free(s); }

unsigned sig_max_precision_bits(void) { return sigpairs::max_precision_bits(); }

void sig_set_max_precision_bits(unsigned bits) { sigpairs::set_max_precision_bits(bits); }

sig_status sig_group_from_spec(const char* spec, sig_group** out) {
    SIG_REQUIRE(spec && out, "null argument");
    return guard([&] { *out = new sig_group{sigpairs::group_from_spec(spec)}; });
}

sig_status sig_group_from_json(const char* json, const char* label, sig_group** out) {
    SIG_REQUIRE(json && out, "null argument");
    return guard([&] {
        *out = new sig_group{sigpairs::group_from_json(nlohmann::json::parse(json), label ? label : "json")};
    });
}

void sig_group_destroy(sig_group* group) { delete group; }

sig_status sig_group_order(const sig_group* group, size_t* out) {
    SIG_REQUIRE(group && out, "null argument");
    *out = group->group.order();
    last_error.clear();
    return SIG_OK;
}

sig_status sig_group_label(const sig_group* group, char** out) {
    SIG_REQUIRE(group && out, "null argument");
    return guard([&] { *out = duplicate(group->group.label()); });
}

sig_status sig_signature(const sig_group* group, sig_method method, unsigned precision_bits, sig_inertia* out) {
    SIG_REQUIRE(group && out, "null argument");
    return guard([&] {
        const auto rec = sigpairs::compute_signature(group->group, method_of(method), precision_bits);
        *out = {rec.inertia.n_plus, rec.inertia.n_minus, rec.inertia.n_zero};
    });
}

sig_status sig_signature_json(const sig_group* group, sig_method method, unsigned precision_bits, int stable,
                              char** out) {
    SIG_REQUIRE(group && out, "null argument");
    return guard([&] {
        const auto rec = sigpairs::compute_signature(group->group, method_of(method), precision_bits);
        *out = duplicate(sigpairs::to_json(rec, stable != 0).dump());
    });
}

sig_status sig_phi_csv(const sig_group* group, char** out) {
    SIG_REQUIRE(group && out, "null argument");
    return guard([&] { *out = duplicate(sigpairs::phi(group->group).to_csv()); });
}

sig_status sig_fpq_text(long p, long q, char** out) {
    SIG_REQUIRE(out, "null argument");
    SIG_REQUIRE(p >= 1, "p must be positive");
    return guard([&] { *out = duplicate(sigpairs::render(sigpairs::fpq(p, q), p, q)); });
}

sig_status sig_fpq_table(long q, long p_max, int latex, char** out) {
    SIG_REQUIRE(out, "null argument");
    SIG_REQUIRE(p_max >= 1, "p_max must be positive");
    return guard([&] {
        *out = duplicate(sigpairs::fpq_table(q, p_max, latex ? sigpairs::TableFormat::Latex : sigpairs::TableFormat::Text));
    });
}

sig_status sig_even_odd_table(long q_max, char** out) {
    SIG_REQUIRE(out, "null argument");
    return guard([&] { *out = duplicate(sigpairs::even_odd_table(q_max)); });
}

sig_status sig_ratio_table(const char* family, long lo, long hi, int with_engine, char** out) {
    SIG_REQUIRE(family && out, "null argument");
    return guard([&] { *out = duplicate(sigpairs::ratio_table(family, lo, hi, with_engine != 0)); });
}

sig_status sig_family_csv(const char* family, long lo, long hi, int with_engine, char** out) {
    SIG_REQUIRE(family && out, "null argument");
    const std::string name(family);
    SIG_REQUIRE(name == "dihedral" || name == "binary-dihedral", "family must be dihedral or binary-dihedral");
    SIG_REQUIRE(lo >= 1 && hi >= lo, "empty or invalid range");
    return guard([&] {
        const auto f = name == "dihedral" ? sigpairs::Family::Dihedral : sigpairs::Family::BinaryDihedral;
        *out = duplicate(sigpairs::family_csv(f, lo, hi, with_engine != 0));
    });
}

sig_status sig_verify(const char* theorem, const sig_verify_options* options, int stable, char** json_out,
                      int* passed) {
    SIG_REQUIRE(theorem && json_out && passed, "null argument");
    return guard([&] {
        sigpairs::VerifyOptions o;
        if (options) {
            o.p_max = options->p_max;
            o.q_max = options->q_max;
            o.include_slow = options->include_slow != 0;
            if (options->precision_bits != 0) o.precision_bits = options->precision_bits;
        }
        const auto report = sigpairs::verify(theorem, o);
        *passed = report.passed() ? 1 : 0;
        *json_out = duplicate(sigpairs::to_json(report, stable != 0).dump());
    });
}

}  // extern "C"
