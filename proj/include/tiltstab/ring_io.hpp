// JSON ingestion and serialization. Rationals travel exclusively as "p/q"
// strings; quadratic values as {"a","b","r"}; enclosures as {"interval":[lo,hi]}.
#pragma once

#include "tiltstab/chern.hpp"
#include "tiltstab/presets.hpp"
#include "tiltstab/quadext.hpp"
#include "tiltstab/ring.hpp"
#include "tiltstab/stability.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace tiltstab {

using nlohmann::json;  // std::map-backed: keys serialize sorted

inline json to_json(const Rational& x) { return to_string(x); }

inline Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("expected a \"p/q\" string, got: " + j.dump());
    return parse_rational(j.get<std::string>());
}

inline json to_json(const QuadExt& x) {
    if (x.is_rational()) return to_string(x.a());
    return json{{"a", to_string(x.a())}, {"b", to_string(x.b())}, {"r", to_string(x.r())}};
}

inline json to_json(const RatInterval& iv) {
    return json{{"interval", {to_string(iv.lo), to_string(iv.hi)}}};
}

inline json to_json(const AlgebraicValue& v) {
    json j = json::object();
    if (v.exact) j["exact"] = to_json(*v.exact);
    j["interval"] = {to_string(v.enclosure.lo), to_string(v.enclosure.hi)};
    return j;
}

inline json coords_to_json(const std::vector<Rational>& v) {
    json j = json::array();
    for (const auto& c : v) j.push_back(to_string(c));
    return j;
}

inline std::vector<Rational> coords_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected a coordinate array, got: " + j.dump());
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(rational_from_json(e));
    return out;
}

// ---------------------------------------------------------------------------
// Threefold <-> JSON.
// ---------------------------------------------------------------------------

inline json to_json(const Threefold& X) {
    json j;
    j["name"] = X.name;
    j["divisor_basis"] = X.ring.divisor_basis;
    j["curve_basis"] = X.ring.curve_basis;
    json dd = json::array();
    for (const auto& row : X.ring.div_div) {
        json r = json::array();
        for (const auto& entry : row) r.push_back(coords_to_json(entry));
        dd.push_back(r);
    }
    j["div_div"] = dd;
    json dcur = json::array();
    for (const auto& row : X.ring.div_curve) {
        json r = json::array();
        for (const auto& x : row) r.push_back(to_string(x));
        dcur.push_back(r);
    }
    j["div_curve"] = dcur;
    if (!X.nef_generators.empty()) {
        json cone = json::array();
        for (const auto& g : X.nef_generators) cone.push_back(coords_to_json(g));
        j["nef_cone"] = cone;
    }
    if (!X.canonical.empty()) j["canonical"] = coords_to_json(X.canonical);
    if (X.todd) {
        j["todd"] = json{{"td1", coords_to_json(X.todd->td1)},
                         {"td2", coords_to_json(X.todd->td2)},
                         {"td3", to_string(X.todd->td3)},
                         {"chi", to_string(X.chi_structure_sheaf)}};
    }
    return j;
}

inline Threefold threefold_from_json(const json& j) {
    Threefold X;
    X.name = j.value("name", std::string("custom"));
    X.ring.divisor_basis = j.at("divisor_basis").get<std::vector<std::string>>();
    X.ring.curve_basis = j.at("curve_basis").get<std::vector<std::string>>();
    const std::size_t n = X.ring.divisor_basis.size();
    const std::size_t nc = X.ring.curve_basis.size();

    const json& dd = j.at("div_div");
    if (dd.size() != n) throw ParseError("div_div must have one row per divisor basis element");
    for (const auto& row : dd) {
        if (row.size() != n) throw ParseError("div_div rows must be square");
        std::vector<CurveClass> r;
        for (const auto& entry : row) {
            CurveClass c = coords_from_json(entry);
            if (c.size() != nc) throw ParseError("div_div entries must have curve-basis length");
            r.push_back(std::move(c));
        }
        X.ring.div_div.push_back(std::move(r));
    }
    const json& dcur = j.at("div_curve");
    if (dcur.size() != n) throw ParseError("div_curve must have one row per divisor basis element");
    for (const auto& row : dcur) {
        if (row.size() != nc) throw ParseError("div_curve rows must have curve-basis length");
        std::vector<Rational> r;
        for (const auto& e : row) r.push_back(rational_from_json(e));
        X.ring.div_curve.push_back(std::move(r));
    }
    if (j.contains("nef_cone"))
        for (const auto& g : j.at("nef_cone")) {
            DivisorClass d = coords_from_json(g);
            X.ring.check_divisor(d);
            X.nef_generators.push_back(std::move(d));
        }
    if (j.contains("canonical")) {
        X.canonical = coords_from_json(j.at("canonical"));
        X.ring.check_divisor(X.canonical);
    } else {
        X.canonical = X.ring.zero_divisor();
    }
    if (j.contains("todd")) {
        const json& t = j.at("todd");
        ToddData td;
        td.td1 = coords_from_json(t.at("td1"));
        td.td2 = coords_from_json(t.at("td2"));
        td.td3 = rational_from_json(t.at("td3"));
        X.ring.check_divisor(td.td1);
        X.ring.check_curve(td.td2);
        X.chi_structure_sheaf = t.contains("chi") ? rational_from_json(t.at("chi")) : td.td3;
        X.todd = std::move(td);
    }
    return X;
}

/// Resolves a ring source: a preset name, or a path to a custom-ring JSON file.
inline Threefold load_threefold(const std::string& source) {
    for (const auto& name : preset_names())
        if (name == source) return preset(name);
    std::ifstream in(source);
    if (!in) throw ParseError("ring source '" + source + "' is neither a preset nor a readable file");
    json j;
    in >> j;
    return threefold_from_json(j);
}

// ---------------------------------------------------------------------------
// ChernVector <-> JSON (graded pieces as coordinate arrays of "p/q" strings).
// ---------------------------------------------------------------------------

inline json to_json(const ChernVector& ch) {
    return json{{"ch0", to_string(ch.ch0)},
                {"ch1", coords_to_json(ch.ch1)},
                {"ch2", coords_to_json(ch.ch2)},
                {"ch3", to_string(ch.ch3)}};
}

inline ChernVector chern_from_json(const json& j, const Threefold& X) {
    ChernVector ch;
    ch.ch0 = rational_from_json(j.at("ch0"));
    ch.ch1 = coords_from_json(j.at("ch1"));
    ch.ch2 = coords_from_json(j.at("ch2"));
    ch.ch3 = rational_from_json(j.at("ch3"));
    X.ring.check_divisor(ch.ch1);
    X.ring.check_curve(ch.ch2);
    return ch;
}

// ---------------------------------------------------------------------------
// Wall diagrams.
// ---------------------------------------------------------------------------

inline json to_json(const WallDiagram& d) {
    json j;
    j["E"] = to_json(d.E);
    j["F"] = to_json(d.F);
    j["H"] = coords_to_json(d.H);
    j["conic"] = json{{"c1", to_string(d.conic.c1)},
                      {"c2", to_string(d.conic.c2)},
                      {"c3", to_string(d.conic.c3)},
                      {"c4", to_string(d.conic.c4)},
                      {"degenerate", d.conic.degenerate}};
    j["alpha_nodes"] = coords_to_json(d.alpha_nodes);
    j["beta_nodes"] = coords_to_json(d.beta_nodes);
    json rows = json::array();
    for (std::size_t i = 0; i < d.alpha_nodes.size(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < d.beta_nodes.size(); ++k) row.push_back(static_cast<int>(d.sign_at(i, k)));
        rows.push_back(row);
    }
    j["signs"] = rows;
    return j;
}

}  // namespace tiltstab
