#pragma once

// JSON and CSV forms of the library's value types. Objects are emitted with sorted keys,
// two-space indentation and a trailing LF, so equal values always produce equal bytes.

#include "lenz/census.hpp"
#include "lenz/construction.hpp"
#include "lenz/exactnum.hpp"
#include "lenz/formulas.hpp"
#include "lenz/geometry.hpp"
#include "lenz/hypergraph.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lenz {

using json = nlohmann::json;

/// Integer as a JSON number when it fits in int64, otherwise as a decimal string.
inline json bigint_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return json(v.convert_to<std::int64_t>());
    }
    return json(v.str());
}

inline BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return detail::parse_bigint(j.get<std::string>());
    throw domain_error("expected an integer");
}

// ---- point sets ------------------------------------------------------------------------------

inline json to_json(const PointSet& P) {
    json pts = json::array();
    for (const auto& p : P) {
        json row = json::array();
        for (const auto& c : p.coords) row.push_back(c.to_string());
        pts.push_back(std::move(row));
    }
    return json{{"dim", P.dim()}, {"points", std::move(pts)}};
}

inline PointSet point_set_from_json(const json& j) {
    PointSet P(j.at("dim").get<std::size_t>());
    for (const auto& row : j.at("points")) {
        Point p;
        for (const auto& c : row) p.coords.push_back(Quad3::parse(c.get<std::string>()));
        P.push_back(std::move(p));
    }
    return P;
}

// ---- configurations --------------------------------------------------------------------------

inline json to_json(const CircleConfig& cfg) {
    json comps = json::array();
    for (const auto& c : cfg.components) {
        json jc{{"kind", to_string(c.kind)}, {"modulus", c.modulus}, {"ticks", c.ticks}};
        if (c.radius_sq) jc["radius_sq"] = c.radius_sq->to_string();
        comps.push_back(std::move(jc));
    }
    return json{{"ambient_dim", cfg.ambient_dim}, {"radius_sq", cfg.radius_sq.to_string()}, {"components", std::move(comps)}};
}

inline CircleConfig circle_config_from_json(const json& j) {
    CircleConfig cfg;
    cfg.ambient_dim = j.at("ambient_dim").get<std::size_t>();
    cfg.radius_sq = Rational::parse(j.at("radius_sq").get<std::string>());
    for (const auto& jc : j.at("components")) {
        CircleComponent c;
        const auto kind = jc.at("kind").get<std::string>();
        if (kind == "circle") {
            c.kind = ComponentKind::circle;
        } else if (kind == "sphere2") {
            c.kind = ComponentKind::sphere2;
        } else {
            throw domain_error("unknown component kind '" + kind + "'");
        }
        c.modulus = jc.at("modulus").get<long long>();
        c.ticks = jc.at("ticks").get<std::vector<long long>>();
        std::sort(c.ticks.begin(), c.ticks.end());
        if (jc.contains("radius_sq")) c.radius_sq = Rational::parse(jc.at("radius_sq").get<std::string>());
        cfg.components.push_back(std::move(c));
    }
    cfg.validate();
    return cfg;
}

// ---- census ----------------------------------------------------------------------------------

inline json to_json(const CountReport& rep) {
    json j{{"delta1", bigint_to_json(rep.delta1)},
           {"delta2", bigint_to_json(rep.delta2)},
           {"delta3", bigint_to_json(rep.delta3)},
           {"total", bigint_to_json(rep.total)}};
    if (rep.side_length_sq) j["side_length_sq"] = rep.side_length_sq->to_string();
    return j;
}

inline CountReport count_report_from_json(const json& j) {
    CountReport rep;
    rep.delta1 = bigint_from_json(j.at("delta1"));
    rep.delta2 = bigint_from_json(j.at("delta2"));
    rep.delta3 = bigint_from_json(j.at("delta3"));
    rep.total = bigint_from_json(j.at("total"));
    if (j.contains("side_length_sq")) rep.side_length_sq = Rational::parse(j.at("side_length_sq").get<std::string>());
    if (rep.total != rep.delta1 + rep.delta2 + rep.delta3) throw domain_error("count report total does not match its parts");
    return rep;
}

inline std::string count_report_csv_header() { return "delta1,delta2,delta3,total\n"; }

inline std::string to_csv_row(const CountReport& rep) {
    return rep.delta1.str() + "," + rep.delta2.str() + "," + rep.delta3.str() + "," + rep.total.str() + "\n";
}

// ---- hypergraphs -----------------------------------------------------------------------------

inline json to_json(const Hypergraph& h) {
    json edges = json::array();
    for (const auto& e : h.edges()) edges.push_back(e);
    return json{{"n", h.vertex_count()}, {"k", h.uniformity()}, {"edges", std::move(edges)}};
}

inline Hypergraph hypergraph_from_json(const json& j) {
    Hypergraph h(j.at("n").get<std::size_t>(), j.at("k").get<std::size_t>());
    for (const auto& e : j.at("edges")) h.add_edge(e.get<Edge>());
    return h;
}

// ---- formulas --------------------------------------------------------------------------------

inline json to_json(const PartitionVector& v) { return json(v.entries); }

inline json to_json(const FormulaTerms& t) {
    return json{{"delta1", bigint_to_json(t.delta1)}, {"delta2", bigint_to_json(t.delta2)}, {"delta3", bigint_to_json(t.delta3)}};
}

inline json to_json(const FormulaResult& res) {
    json j{{"value", bigint_to_json(res.value)}};
    if (res.terms) j["terms"] = to_json(*res.terms);
    if (!res.argmax.empty()) {
        json a = json::array();
        for (const auto& v : res.argmax) a.push_back(to_json(v));
        j["argmax"] = std::move(a);
    }
    return j;
}

inline std::string argmax_cell(const std::vector<PartitionVector>& argmax) {
    std::string s;
    for (std::size_t i = 0; i < argmax.size(); ++i) {
        if (i) s += " ";
        s += argmax[i].to_string();
    }
    return s;
}

// ---- output ----------------------------------------------------------------------------------

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw std::runtime_error("'" + path + "': " + e.what());
    }
}

/// Writes bytes verbatim (binary mode keeps LF line endings on every platform).
inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace lenz
