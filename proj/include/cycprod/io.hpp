#pragma once

// JSON (nlohmann) serialization and table rendering. Rationals and big
// integers always travel as exact strings.

#include "bijection.hpp"
#include "colored.hpp"
#include "exact.hpp"
#include "formulas.hpp"
#include "identities.hpp"
#include "oracle.hpp"
#include "permutation.hpp"

#include <json.hpp>

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace cycprod {

using json = nlohmann::ordered_json;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline void to_json(json& j, const Rational& q) { j = q.str(); }
inline void from_json(const json& j, Rational& q) { q = Rational::parse(j.get<std::string>()); }

inline void to_json(json& j, const Permutation& p) { j = p.images(); }
inline void from_json(const json& j, Permutation& p) { p = Permutation::from_images(j.get<std::vector<int>>()); }

inline void to_json(json& j, const ColoredCycle& c) { j = json{{"sigma", c.sigma}, {"colors", c.colors}}; }
inline void from_json(const json& j, ColoredCycle& c) {
    c.sigma = j.at("sigma").get<Permutation>();
    c.colors = j.at("colors").get<std::vector<int>>();
}

/// Elements of S are [color, ordinal] pairs.
inline void to_json(json& j, const Element& e) { j = json::array({e.color, e.ordinal}); }
inline void from_json(const json& j, Element& e) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("Element: expected [color, ordinal]");
    e = {j[0].get<int>(), j[1].get<int>()};
}

inline void to_json(json& j, const LabeledEdge& e) {
    j = json{{"tail", e.tail}, {"head", e.head}, {"uncircled", e.uncircled}, {"circled", e.circled}};
}
inline void from_json(const json& j, LabeledEdge& e) {
    e = {j.at("tail").get<int>(), j.at("head").get<int>(), j.at("uncircled").get<int>(), j.at("circled").get<int>()};
}

inline void to_json(json& j, const TouredDigraph& td) {
    j = json{{"vertices", td.graph.vertices},
             {"edges", td.graph.edges},
             {"first_tour", td.tours.first},
             {"second_tour", td.tours.second}};
}
inline void from_json(const json& j, TouredDigraph& td) {
    td.graph.vertices = j.at("vertices").get<int>();
    td.graph.edges = j.at("edges").get<std::vector<LabeledEdge>>();
    td.tours.first = j.at("first_tour").get<std::vector<int>>();
    td.tours.second = j.at("second_tour").get<std::vector<int>>();
}

inline void to_json(json& j, const EulerStructure& e) {
    json edges = json::array();
    for (int id = 0; id < e.size(); ++id)
        edges.push_back(json{{"tail", e.edges[id].tail}, {"head", e.edges[id].head}, {"label", e.label(id)}});
    j = json{{"root", e.root}, {"edges", edges}, {"exit_order", e.exit_order}, {"wiring", e.wiring}};
}
inline void from_json(const json& j, EulerStructure& e) {
    e.root = j.at("root").get<int>();
    e.edges.clear();
    for (const auto& x : j.at("edges")) e.edges.push_back({x.at("tail").get<int>(), x.at("head").get<int>()});
    e.exit_order = j.at("exit_order").get<std::vector<std::vector<int>>>();
    e.wiring = j.at("wiring").get<std::vector<int>>();
}

inline void to_json(json& j, const SequenceCyclePair& p) {
    j = json{{"svector", p.svector}, {"sequence", p.sequence}, {"cycle", p.cycle}};
}
inline void from_json(const json& j, SequenceCyclePair& p) {
    p.svector = j.at("svector").get<std::vector<int>>();
    p.sequence = j.at("sequence").get<std::vector<Element>>();
    p.cycle = j.at("cycle").get<std::vector<Element>>();
}

inline void to_json(json& j, const ColoredStrip& s) {
    j = json{{"colors", s.colors}};
    if (s.marked) j["marked"] = *s.marked;
}
inline void from_json(const json& j, ColoredStrip& s) {
    s.colors = j.at("colors").get<std::vector<int>>();
    if (j.contains("marked")) s.marked = j.at("marked").get<std::vector<int>>();
    else s.marked.reset();
}

inline void to_json(json& j, const StripTriple& t) {
    j = json{{"plain", t.plain}, {"color_subset", t.color_subset}, {"marks_per_color", t.marks_per_color}};
}

inline void to_json(json& j, const OracleResult& r) {
    j = json{{"favorable", r.favorable.str()}, {"total", r.total.str()}, {"probability", r.probability}};
}

inline void to_json(json& j, const MonteCarloResult& r) {
    j = json{{"estimate", r.estimate}, {"stderr", r.std_error}, {"samples", r.samples}, {"seed", r.seed}};
}

inline void to_json(json& j, const IdentityReport& r) {
    j = json{{"name", r.name},
             {"grid", r.grid},
             {"points_checked", r.points_checked},
             {"points_failed", r.points_failed},
             {"passed", r.passed()}};
    if (r.first_counterexample) {
        const auto& c = *r.first_counterexample;
        j["first_counterexample"] = json{{"point", c.point}, {"lhs", c.lhs}, {"rhs", c.rhs}};
    } else {
        j["first_counterexample"] = nullptr;
    }
}

inline json distribution_json(const std::map<int, Rational>& dist) {
    json j = json::object();
    for (const auto& [nu, p] : dist) j[std::to_string(nu)] = p;
    return j;
}

/// Every intermediate structure of the bijection chain for one colored cycle.
inline json pipeline_dump(const ColoredCycle& c) {
    const TouredDigraph td = step1_forward(c);
    const EulerStructure es = step2_forward(td);
    const SequenceCyclePair sc = step3_forward(es);
    return json{{"colored_cycle", c},
                {"cycle_notation", c.sigma.cycle_string()},
                {"svector", svector_of(c)},
                {"toured_digraph", td},
                {"euler_structure", es},
                {"sequence_cycle", sc}};
}

// --- Table output ---------------------------------------------------------

enum class TableFormat { csv, json, markdown };

inline json table_row_json(long long k, const char* parity, const PartialFractionRow& row) {
    json terms = json::array();
    for (const auto& t : row.terms) terms.push_back(json{{"pole", t.pole}, {"coefficient", t.coefficient}});
    return json{{"k", k}, {"parity", parity}, {"constant", row.constant}, {"terms", terms}};
}

inline json table_json(long long k_max) {
    json rows = json::array();
    for (long long k = 1; k <= k_max; ++k) {
        const PartialFractionTable t = partial_fraction_table(k);
        rows.push_back(table_row_json(k, "even", t.even));
        rows.push_back(table_row_json(k, "odd", t.odd));
    }
    return rows;
}

/// One line per (k, parity, term); rows without terms list only the constant.
inline std::string table_csv(long long k_max) {
    std::ostringstream os;
    os << "k,parity,constant,pole,coefficient\n";
    for (long long k = 1; k <= k_max; ++k) {
        const PartialFractionTable t = partial_fraction_table(k);
        for (const auto& [parity, row] : {std::pair{"even", &t.even}, std::pair{"odd", &t.odd}}) {
            if (row->terms.empty()) os << k << ',' << parity << ',' << row->constant.str() << ",,\n";
            for (const auto& term : row->terms)
                os << k << ',' << parity << ',' << row->constant.str() << ',' << term.pole << ','
                   << term.coefficient.str() << '\n';
        }
    }
    return os.str();
}

inline std::string table_markdown(long long k_max) {
    std::ostringstream os;
    os << "| | n even | n odd |\n|---|---|---|\n";
    for (long long k = 1; k <= k_max; ++k) {
        const PartialFractionTable t = partial_fraction_table(k);
        os << "| k=" << k << " | " << render_row(t.even) << " | " << render_row(t.odd) << " |\n";
    }
    return os.str();
}

inline std::string render_table(long long k_max, TableFormat format) {
    if (k_max < 1) throw std::invalid_argument("render_table: k_max must be positive");
    switch (format) {
        case TableFormat::csv: return table_csv(k_max);
        case TableFormat::json: return table_json(k_max).dump(2) + "\n";
        case TableFormat::markdown: return table_markdown(k_max);
    }
    return {};
}

}  // namespace cycprod
