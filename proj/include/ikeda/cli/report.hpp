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

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <string>
#include <vector>

#include <json.hpp>

#include "ikeda/ikeda.hpp"

namespace ikeda::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kEngineVersion = "1.0.0";

/// One term c q^q a^a of a normalized eigenvalue.
struct Term {
    int q = 0;
    int a = 0;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Canonical term list: sorted by q-exponent, then a-exponent, both descending.
inline std::vector<Term> term_list(const QALaurent& poly) {
    std::vector<Term> out;
    for (const auto& [a, qpoly] : poly.terms()) {
        for (const auto& [q, c] : qpoly.terms()) {
            out.push_back({q, a, c});
        }
    }
    std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) {
        return x.q != y.q ? x.q > y.q : x.a > y.a;
    });
    return out;
}

inline QALaurent from_term_list(const std::vector<Term>& terms) {
    QALaurent out;
    for (const auto& t : terms) {
        out.add_term(t.a, LaurentQ::monomial(t.coeff, t.q));
    }
    return out;
}

inline Json terms_to_json(const QALaurent& poly) {
    Json arr = Json::array();
    for (const auto& t : term_list(poly)) {
        arr.push_back(Json{{"q", t.q}, {"a", t.a}, {"coeff", t.coeff.to_string()}});
    }
    return arr;
}

inline QALaurent terms_from_json(const Json& arr) {
    std::vector<Term> terms;
    for (const auto& t : arr) {
        terms.push_back({t.at("q").get<int>(), t.at("a").get<int>(), Rational::parse(t.at("coeff").get<std::string>())});
    }
    return from_term_list(terms);
}

namespace detail {

inline std::string power(const char* var, int e) {
    if (e == 1) {
        return var;
    }
    return std::string(var) + "^" + std::to_string(e);
}

}  // namespace detail

/// Human-readable form. Terms are grouped by |a-exponent| (descending) so
/// that a^e and a^-e sit next to each other, then by a-exponent and
/// q-exponent, both descending: "a + a^-1 + q + q^-1".
inline std::string human_readable(const QALaurent& poly) {
    auto terms = term_list(poly);
    if (terms.empty()) {
        return "0";
    }
    std::stable_sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
        if (std::abs(x.a) != std::abs(y.a)) {
            return std::abs(x.a) > std::abs(y.a);
        }
        return x.a != y.a ? x.a > y.a : x.q > y.q;
    });
    std::string out;
    for (const auto& t : terms) {
        std::string coef = t.coeff.to_string();
        const bool negative = t.coeff.sign() < 0;
        if (negative) {
            coef.erase(0, 1);
        }
        out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        std::vector<std::string> factors;
        if (coef != "1" || (t.q == 0 && t.a == 0)) {
            factors.push_back(coef);
        }
        if (t.q != 0) {
            factors.push_back(detail::power("q", t.q));
        }
        if (t.a != 0) {
            factors.push_back(detail::power("a", t.a));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            out += (i ? "*" : "") + factors[i];
        }
    }
    return out;
}

/// Shortest decimal string that round-trips to the same double.
inline std::string decimal(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

struct CheckRecord {
    std::string name;
    std::string status;  // "pass", "fail" or "info"
    Json witness = Json::object();
};

/// Machine-readable command output. With the timestamp disabled, the
/// serialization depends only on the command and its inputs.
struct ReportDocument {
    Json meta = Json::object();
    Json terms = Json::array();
    std::vector<CheckRecord> checks;
    Json extra = Json::object();  // command-specific sections, e.g. table rows

    void add_check(std::string name, bool passed, Json witness) {
        checks.push_back({std::move(name), passed ? "pass" : "fail", std::move(witness)});
    }
    void add_info(std::string name, Json witness) { checks.push_back({std::move(name), "info", std::move(witness)}); }

    std::size_t failures() const {
        return static_cast<std::size_t>(
            std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == "fail"; }));
    }

    Json to_json() const {
        Json doc;
        doc["meta"] = meta;
        doc["terms"] = terms;
        Json arr = Json::array();
        for (const auto& c : checks) {
            arr.push_back(Json{{"name", c.name}, {"status", c.status}, {"witness", c.witness}});
        }
        doc["checks"] = std::move(arr);
        for (const auto& [k, v] : extra.items()) {
            doc[k] = v;
        }
        return doc;
    }

    std::string serialize() const { return to_json().dump(2) + "\n"; }
};

inline Json make_meta(const std::string& command, Json parameters, bool with_timestamp) {
    Json meta;
    meta["command"] = command;
    meta["parameters"] = std::move(parameters);
    meta["engine"] = std::string("ikeda ") + kEngineVersion;
    if (with_timestamp) {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::tm tm{};
        gmtime_r(&now, &tm);
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        meta["timestamp"] = buf;
    }
    return meta;
}

}  // namespace ikeda::cli
