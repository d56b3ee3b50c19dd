/*
   Copyright 2026 wlpkit contributors

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

#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wlp/betti.hpp"
#include "wlp/errors.hpp"
#include "wlp/ring.hpp"

namespace wlp {

namespace detail {

inline std::string strip_comment(const std::string& line) {
    std::string out = line.substr(0, line.find('#'));
    size_t begin = out.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    size_t end = out.find_last_not_of(" \t\r\n");
    return out.substr(begin, end - begin + 1);
}

} // namespace detail

struct IdealFile {
    int nvars = 0;
    std::vector<Polynomial> generators;
};

/// Ideal file: a `ring <r>` header, then one generator per line; '#' starts
/// a comment and blank lines are skipped.
inline IdealFile read_ideal(std::istream& in) {
    IdealFile out;
    std::string line;
    bool header_seen = false;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = detail::strip_comment(line);
        if (body.empty()) continue;
        if (!header_seen) {
            std::istringstream head(body);
            std::string keyword;
            head >> keyword;
            if (keyword != "ring")
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected 'ring <nvars>' header");
            if (!(head >> out.nvars) || out.nvars < 1)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": bad variable count in ring header");
            std::string rest;
            if (head >> rest)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": trailing text after ring header");
            header_seen = true;
            continue;
        }
        out.generators.push_back(Polynomial::parse(body, out.nvars));
    }
    if (!header_seen) throw ParseError("missing 'ring <nvars>' header");
    return out;
}

inline IdealFile read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open ideal file: " + path);
    return read_ideal(in);
}

/// Points file: one projective point per line, whitespace-separated exact
/// coordinates (integers or fractions p/q); '#' comments allowed.
inline std::vector<std::vector<mpq_class>> read_points(std::istream& in) {
    std::vector<std::vector<mpq_class>> points;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = detail::strip_comment(line);
        if (body.empty()) continue;
        std::istringstream fields(body);
        std::vector<mpq_class> pt;
        std::string token;
        while (fields >> token) {
            try {
                mpq_class c(token);
                c.canonicalize();
                pt.push_back(std::move(c));
            } catch (const std::invalid_argument&) {
                throw ParseError("line " + std::to_string(lineno) + ": bad coordinate '" +
                                 token + "'");
            }
        }
        if (!points.empty() && pt.size() != points.front().size())
            throw ParseError("line " + std::to_string(lineno) +
                             ": inconsistent coordinate count");
        points.push_back(std::move(pt));
    }
    if (points.empty()) throw ParseError("points file holds no points");
    return points;
}

inline std::vector<std::vector<mpq_class>> read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open points file: " + path);
    return read_points(in);
}

/// Betti JSON: {"r": <nvars>, "betti": {"i,j": value, ...}}.
inline BettiTable read_betti_json(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(std::string("bad betti JSON: ") + err.what());
    }
    if (!doc.is_object() || !doc.contains("r") || !doc["r"].is_number_integer())
        throw ParseError("betti JSON must carry an integer field 'r'");
    BettiTable table(doc["r"].get<int>());
    if (doc.contains("betti")) {
        if (!doc["betti"].is_object()) throw ParseError("'betti' must be an object");
        for (const auto& [key, value] : doc["betti"].items()) {
            size_t comma = key.find(',');
            if (comma == std::string::npos)
                throw ParseError("betti key '" + key + "' is not of the form i,j");
            int i = 0, j = 0;
            try {
                i = std::stoi(key.substr(0, comma));
                j = std::stoi(key.substr(comma + 1));
            } catch (const std::exception&) {
                throw ParseError("betti key '" + key + "' is not of the form i,j");
            }
            Int v;
            if (value.is_number_integer())
                v = Int(static_cast<long>(value.get<long long>()));
            else if (value.is_string())
                v = Int(value.get<std::string>());
            else
                throw ParseError("betti value for '" + key + "' must be an integer");
            table.set(i, j, v);
        }
    }
    return table;
}

inline BettiTable read_betti_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open betti file: " + path);
    return read_betti_json(in);
}

inline nlohmann::json betti_to_json(const BettiTable& table) {
    nlohmann::json betti = nlohmann::json::object();
    for (const auto& [k, v] : table.entries()) {
        std::string key = std::to_string(k.first) + "," + std::to_string(k.second);
        if (v.fits_slong_p())
            betti[key] = v.get_si();
        else
            betti[key] = v.get_str();
    }
    return nlohmann::json{{"r", table.nvars()}, {"betti", betti}};
}

inline void write_betti_json(std::ostream& out, const BettiTable& table) {
    out << betti_to_json(table).dump(2) << '\n';
}

} // namespace wlp
