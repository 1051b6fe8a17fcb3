#pragma once

// JSON schemas:
//   XSeries      {"truncation": N, "coeffs": [["num", "den"], ...]}
//   LaurentTable {"d": d, "entries": [{"exp": [..], "series": XSeries}, ...]}
// Big integers travel as decimal strings. Entries are ordered by exponent.

#include <string>
#include <vector>

#include <json.hpp>

#include "offsetwords/series_engine.hpp"
#include "offsetwords/xseries.hpp"

namespace offsetwords {

using Json = nlohmann::json;

inline Json to_json(const XSeries& s) {
    Json coeffs = Json::array();
    for (const auto& q : s.coefficients())
        coeffs.push_back(Json::array({numerator_of(q).str(), denominator_of(q).str()}));
    return Json{{"truncation", s.truncation()}, {"coeffs", std::move(coeffs)}};
}

inline XSeries xseries_from_json(const Json& j) {
    const auto N = j.at("truncation").get<std::size_t>();
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() != N + 1) throw std::invalid_argument("coeffs length does not match truncation");
    std::vector<Rational> c;
    c.reserve(N + 1);
    for (const auto& pair : coeffs) {
        if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("coefficient must be [num, den]");
        const BigCount num(pair[0].get<std::string>());
        const BigCount den(pair[1].get<std::string>());
        if (den == 0) throw std::invalid_argument("zero denominator");
        c.emplace_back(num, den);
    }
    return XSeries(std::move(c));
}

inline Json to_json(const LaurentTable& t) {
    Json entries = Json::array();
    for (const auto& [eta, s] : t.entries()) {
        Json exp = Json::array();
        for (auto v : eta.components()) exp.push_back(v);
        entries.push_back(Json{{"exp", std::move(exp)}, {"series", to_json(s)}});
    }
    return Json{{"d", t.dim()}, {"entries", std::move(entries)}};
}

/// Inverse of to_json(LaurentTable). The power r is not part of the schema and
/// is supplied by the caller.
inline LaurentTable laurent_table_from_json(const Json& j, std::uint64_t r = 1) {
    const auto d = j.at("d").get<std::size_t>();
    std::vector<std::pair<OffsetVector, XSeries>> rows;
    std::size_t N = 0;
    for (const auto& e : j.at("entries")) {
        auto comps = e.at("exp").get<std::vector<std::int64_t>>();
        if (comps.size() != d) throw std::invalid_argument("exponent has wrong dimension");
        XSeries s = xseries_from_json(e.at("series"));
        N = s.truncation();
        rows.emplace_back(OffsetVector(std::move(comps)), std::move(s));
    }
    LaurentTable t(d, r, N);
    for (auto& [eta, s] : rows) t.insert(std::move(eta), std::move(s));
    return t;
}

} // namespace offsetwords
