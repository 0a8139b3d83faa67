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

#include "sigpairs/json_io.hpp"

#include <fstream>
#include <sstream>

#include "sigpairs/error.hpp"

namespace sigpairs {

using nlohmann::json;

json cyclotomic_to_json(const Cyclotomic& c) {
    json coords = json::array();
    for (const auto& [k, v] : c.coords()) coords.push_back(json::array({k, v.get_str()}));
    return json{{"order", c.order()}, {"coords", coords}};
}

namespace {

Rational parse_rational(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) throw Error(ErrorCode::Parse, "coordinate must be a string or integer");
    Rational r;
    try {
        r = Rational(v.get<std::string>());
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::Parse, "bad rational '" + v.get<std::string>() + "'");
    }
    if (sgn(r.get_den()) == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + v.get<std::string>() + "'");
    r.canonicalize();
    return r;
}

}  // namespace

Cyclotomic cyclotomic_from_json(const json& j) {
    try {
        if (j.is_number_integer()) return Cyclotomic(j.get<long>());
        if (j.is_string()) return Cyclotomic(parse_rational(j));
        long order = j.at("order").get<long>();
        if (order < 1) throw Error(ErrorCode::Parse, "cyclotomic order must be positive");
        std::vector<std::pair<long, Rational>> coords;
        for (const auto& entry : j.at("coords")) {
            if (!entry.is_array() || entry.size() != 2) throw Error(ErrorCode::Parse, "coordinate must be [k, value]");
            coords.emplace_back(entry[0].get<long>(), parse_rational(entry[1]));
        }
        return Cyclotomic::from_coords(order, coords);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("malformed cyclotomic: ") + e.what());
    }
}

json matrix_to_json(const Matrix2& m) {
    return json::array({json::array({cyclotomic_to_json(m(0, 0)), cyclotomic_to_json(m(0, 1))}),
                        json::array({cyclotomic_to_json(m(1, 0)), cyclotomic_to_json(m(1, 1))})});
}

Matrix2 matrix_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
        j[1].size() != 2)
        throw Error(ErrorCode::Parse, "matrix must be [[c, c], [c, c]]");
    Matrix2 m{{cyclotomic_from_json(j[0][0]), cyclotomic_from_json(j[0][1]), cyclotomic_from_json(j[1][0]),
               cyclotomic_from_json(j[1][1])}};
    return m;
}

FiniteMatrixGroup group_from_json(const json& j, const std::string& label) {
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
        throw Error(ErrorCode::Parse, "generator file needs a \"generators\" array");
    std::vector<Matrix2> gens;
    for (const auto& g : j["generators"]) gens.push_back(matrix_from_json(g));
    std::size_t cap = kDefaultClosureCap;
    if (j.contains("cap")) {
        if (!j["cap"].is_number_unsigned() || j["cap"].get<std::size_t>() == 0)
            throw Error(ErrorCode::Parse, "\"cap\" must be a positive integer");
        cap = j["cap"].get<std::size_t>();
    }
    return closure(gens, cap, label);
}

FiniteMatrixGroup load_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open generator file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, "invalid JSON in '" + path + "': " + e.what());
    }
    return group_from_json(j, "file:" + path);
}

}  // namespace sigpairs
