// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ikeda/errors.hpp"
#include "ikeda/positivity.hpp"
#include "ikeda/rational.hpp"

namespace ikeda::cli {

struct ApEntry {
    std::uint64_t p = 0;
    Integer ap;
    std::size_t line = 0;
};

/// Hecke eigenvalues a_f(p) of an elliptic eigenform of weight k.
struct ApTable {
    int weight = 0;
    std::vector<ApEntry> entries;
    /// Ramanujan-bound violations; the data is still usable.
    std::vector<std::string> warnings;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) {
        out.push_back(tok);
    }
    return out;
}

inline bool parse_integer(const std::string& tok, Integer& out) {
    std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (start == tok.size()) {
        return false;
    }
    for (std::size_t i = start; i < tok.size(); ++i) {
        if (tok[i] < '0' || tok[i] > '9') {
            return false;
        }
    }
    return out.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) == 0;
}

template <class T>
bool parse_unsigned(const std::string& tok, T& out) {
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, out);
    return ec == std::errc() && ptr == end;
}

}  // namespace detail

/// Grammar: `k <weight>` header, then `<prime> <a_p>` lines. Lines whose first
/// non-blank character is `#` are comments; blank lines are ignored.
inline ApTable parse_ap_table(std::istream& in) {
    ApTable table;
    bool have_header = false;
    std::map<std::uint64_t, std::size_t> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0][0] == '#') {
            continue;
        }
        if (!have_header) {
            int k = 0;
            if (toks.size() != 2 || toks[0] != "k" || !detail::parse_unsigned(toks[1], k) || k < 1) {
                throw ParseError(lineno, "expected header 'k <weight>'");
            }
            table.weight = k;
            have_header = true;
            continue;
        }
        if (toks.size() != 2) {
            throw ParseError(lineno, "expected '<prime> <a_p>'");
        }
        ApEntry e;
        e.line = lineno;
        if (!detail::parse_unsigned(toks[0], e.p)) {
            throw ParseError(lineno, "invalid prime '" + toks[0] + "'");
        }
        if (!is_prime(e.p)) {
            throw ParseError(lineno, toks[0] + " is not a prime");
        }
        if (!detail::parse_integer(toks[1], e.ap)) {
            throw ParseError(lineno, "invalid integer '" + toks[1] + "'");
        }
        if (auto it = seen.find(e.p); it != seen.end()) {
            throw ParseError(lineno, "duplicate prime " + toks[0] + " (lines " + std::to_string(it->second) + " and " +
                                         std::to_string(lineno) + ")");
        }
        if (!table.entries.empty() && e.p < table.entries.back().p) {
            throw ParseError(lineno, "primes must be strictly increasing: " + toks[0] + " follows " +
                                         std::to_string(table.entries.back().p) + " (line " +
                                         std::to_string(table.entries.back().line) + ")");
        }
        seen.emplace(e.p, lineno);
        // |a_p| <= 2 p^{(k-1)/2}  <=>  a_p^2 <= 4 p^{k-1}
        if (e.ap * e.ap > 4 * pow(Integer(static_cast<unsigned long>(e.p)), static_cast<unsigned long>(table.weight - 1))) {
            table.warnings.push_back("line " + std::to_string(lineno) + ": |a_p| exceeds 2 p^((k-1)/2) for p = " +
                                     toks[0]);
        }
        table.entries.push_back(std::move(e));
    }
    if (!have_header) {
        throw ParseError(lineno + 1, "missing header 'k <weight>'");
    }
    return table;
}

inline ApTable load_ap_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    return parse_ap_table(in);
}

}  // namespace ikeda::cli
