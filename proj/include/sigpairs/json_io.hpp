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

#ifndef SIGPAIRS_JSON_IO_HPP
#define SIGPAIRS_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "sigpairs/cyclotomic.hpp"
#include "sigpairs/group.hpp"

namespace sigpairs {

/// {"order": n, "coords": [[k, "num/den"], ...]} with coords sorted by k.
nlohmann::json cyclotomic_to_json(const Cyclotomic& c);
/// Accepts coordinate values as "num/den" strings or JSON integers.
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix2& m);
Matrix2 matrix_from_json(const nlohmann::json& j);

/// {"generators": [[[c,c],[c,c]], ...], "cap": n}; cap is optional.
FiniteMatrixGroup group_from_json(const nlohmann::json& j, const std::string& label);
FiniteMatrixGroup load_generator_file(const std::string& path);

}  // namespace sigpairs

#endif
