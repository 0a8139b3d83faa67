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


#ifndef SIGPAIRS_VERIFY_HPP
#define SIGPAIRS_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace sigpairs {

struct VerifyOptions {
    /// 0 selects the per-theorem default range.
    long p_max = 0;
    long q_max = 0;
    bool include_slow = false;
    unsigned precision_bits = 256;
};

struct VerificationReport {
    std::string theorem;
    long cases_run = 0;
    long cases_passed = 0;
    std::optional<std::string> counterexample;
    std::vector<std::string> warnings;
    long long elapsed_ms = 0;

    bool passed() const noexcept { return cases_passed == cases_run && !counterexample; }
};

const std::vector<std::string>& theorem_ids();

/// Runs the sweep for one theorem id. Throws Error(Parse) for an unknown id.
VerificationReport verify(const std::string& theorem, const VerifyOptions& options = {});

nlohmann::ordered_json to_json(const VerificationReport& report, bool stable = false);

/// Ratio tables as CSV. Families: "cyclic-T" (rows q = lo..hi, column T),
/// "dihedral" and "binary-dihedral" (rows p = lo..hi, closed-form ratio and,
/// when with_engine, the engine ratio). Throws Error(Parse) for other names.
std::string ratio_table(const std::string& family, long lo, long hi, bool with_engine);

}  // namespace sigpairs

#endif
