#ifndef LHREG_JSON_HPP
#define LHREG_JSON_HPP

// JSON encodings of the library's value types. Requires nlohmann/json (vendor/json.hpp).

#include <json.hpp>

#include "lhreg/betti.hpp"
#include "lhreg/bounds.hpp"
#include "lhreg/hypergraph.hpp"

namespace lhreg {

using Json = nlohmann::ordered_json;

/// Vertex sets are written 1-based.
inline Json vertices_json(const VertexSet& s) {
    Json out = Json::array();
    s.for_each([&](std::size_t v) { out.push_back(v + 1); });
    return out;
}

inline Json monomial_json(const Monomial& m, const Alphabet& alphabet) {
    Json out = Json::array();
    for (const auto& n : variable_names(m, alphabet)) out.push_back(n);
    return out;
}

inline Json ideal_json(const MonomialIdeal& ideal) {
    Json gens = Json::array();
    for (const auto& g : ideal.generators()) gens.push_back(monomial_json(g, ideal.alphabet()));
    return Json{{"vars", ideal.alphabet().names()}, {"gens", std::move(gens)}};
}

/// {vertices, labels: {var: [vertices]}, edges: [{members, multiplicity, labels}]}
inline Json hypergraph_json(const LabeledHypergraph& h) {
    Json labels = Json::object();
    for (std::size_t a = 0; a < h.alphabet().size(); ++a)
        if (!h.edge_of(a).empty()) labels[h.alphabet().name(a)] = vertices_json(h.edge_of(a));
    Json edges = Json::array();
    for (const auto& e : h.edges()) {
        Json names = Json::array();
        for (auto a : e.labels) names.push_back(h.alphabet().name(a));
        edges.push_back({{"members", vertices_json(e.members)}, {"multiplicity", e.multiplicity()}, {"labels", names}});
    }
    return Json{{"vertices", vertices_json(h.vertices())}, {"labels", std::move(labels)}, {"edges", std::move(edges)}};
}

/// {field, entries: [{i, degree, rank}], reg, pd}
inline Json betti_json(const BettiTable& t) {
    Json entries = Json::array();
    for (const auto& e : t.entries())
        entries.push_back({{"i", e.i}, {"degree", monomial_json(e.degree, t.alphabet())}, {"rank", e.rank}});
    return Json{{"field", t.field().characteristic()},
                {"entries", std::move(entries)},
                {"reg", t.regularity()},
                {"pd", t.projective_dimension()}};
}

inline Json best_json(const std::optional<BestBound>& b) {
    if (!b) return nullptr;
    return Json{{"id", method_id(b->id)}, {"value", b->value}};
}

/// {ideal, hypergraph: {X, V, dim}, methods, best_upper, best_lower}
inline Json bound_report_json(const BoundReport& r) {
    Json methods = Json::array();
    for (const auto& m : r.methods) {
        Json entry{{"id", method_id(m.id)}, {"applicable", m.applicable}};
        entry["value"] = m.value ? Json(*m.value) : Json(nullptr);
        entry["witness"] = m.witness ? vertices_json(*m.witness) : Json(nullptr);
        methods.push_back(std::move(entry));
    }
    return Json{{"ideal", ideal_json(r.ideal)},
                {"hypergraph", {{"X", r.label_count}, {"V", r.vertex_count}, {"dim", r.dimension}}},
                {"methods", std::move(methods)},
                {"best_upper", best_json(r.best_upper)},
                {"best_lower", best_json(r.best_lower)}};
}

}  // namespace lhreg

#endif  // LHREG_JSON_HPP
