#ifndef LHREG_ANALYSIS_HPP
#define LHREG_ANALYSIS_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lhreg/betti.hpp"
#include "lhreg/bounds.hpp"
#include "lhreg/hypergraph.hpp"
#include "lhreg/json.hpp"

namespace lhreg {

/// How one applicable method's value compares with the exact regularity.
struct Tightness {
    Method id;
    int value;
    int slack;   // bound - reg for upper bounds, reg - bound for lower, |value - reg| for exact
    bool holds;  // the stated relation is satisfied
};

inline Tightness judge(Method id, int value, int reg) {
    switch (method_kind(id)) {
        case BoundKind::upper: return {id, value, value - reg, value >= reg};
        case BoundKind::lower: return {id, value, reg - value, value <= reg};
        case BoundKind::exact: return {id, value, value > reg ? value - reg : reg - value, value == reg};
    }
    return {id, value, 0, false};
}

inline std::vector<Tightness> judge_report(const BoundReport& report, int reg) {
    std::vector<Tightness> out;
    for (const auto& m : report.methods)
        if (m.applicable) out.push_back(judge(m.id, *m.value, reg));
    return out;
}

struct AnalyzeOptions {
    FieldSpec field{2};
    bool oracle = true;
    unsigned threads = 1;
};

struct Analysis {
    LabeledHypergraph hypergraph;
    BoundReport report;
    std::optional<BettiTable> betti;
    std::vector<Tightness> tightness;
    std::string warning;  // set when the oracle was skipped because of a cap
};

inline Analysis analyze(const MonomialIdeal& ideal, const AnalyzeOptions& options = {}) {
    Analysis a{build_hypergraph(ideal), best_bounds(ideal), std::nullopt, {}, {}};
    if (options.oracle) {
        try {
            a.betti = betti_table(ideal, {options.field, options.threads});
            a.tightness = judge_report(a.report, a.betti->regularity());
        } catch (const CapExceeded& e) {
            a.warning = std::string("oracle skipped: ") + e.what();
        }
    }
    return a;
}

inline Json analysis_json(const Analysis& a) {
    Json out{{"hypergraph", hypergraph_json(a.hypergraph)}, {"report", bound_report_json(a.report)}};
    if (a.betti) {
        out["oracle"] = betti_json(*a.betti);
        Json verdicts = Json::array();
        for (const auto& t : a.tightness)
            verdicts.push_back({{"id", method_id(t.id)},
                                {"kind", kind_name(method_kind(t.id))},
                                {"value", t.value},
                                {"slack", t.slack},
                                {"holds", t.holds},
                                {"tight", t.holds && t.slack == 0}});
        out["tightness"] = std::move(verdicts);
    } else {
        out["oracle"] = nullptr;
        out["tightness"] = nullptr;
    }
    if (!a.warning.empty()) out["warning"] = a.warning;
    return out;
}

inline std::string vertex_list(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t v) {
        out += (first ? "" : ",") + std::to_string(v + 1);
        first = false;
    });
    return out + "}";
}

inline std::string analysis_text(const Analysis& a) {
    const auto& h = a.hypergraph;
    const auto& r = a.report;
    std::ostringstream out;
    out << "ideal: " << r.ideal.to_string() << '\n';
    out << "hypergraph: |X| = " << r.label_count << ", |V| = " << r.vertex_count << ", dim = " << r.dimension
        << ", open = " << vertex_list(open_vertices(h)) << ", edges = " << h.edges().size() << '\n';
    out << "  saturated: " << (is_saturated(h) ? "yes" : "no")
        << ", isolated open vertices: " << (has_isolated_open_vertices(h) ? "yes" : "no")
        << ", isolated simple edges: " << (has_isolated_simple_edges(h) ? "yes" : "no") << '\n';
    out << "methods:\n";
    for (const auto& m : r.methods) {
        out << "  " << method_id(m.id) << " (" << kind_name(method_kind(m.id)) << "): ";
        if (!m.applicable) {
            out << "n/a\n";
            continue;
        }
        out << *m.value;
        if (m.witness) out << "  witness " << vertex_list(*m.witness);
        out << '\n';
    }
    out << "best upper: " << method_id(r.best_upper.id) << " = " << r.best_upper.value << '\n';
    out << "best lower: ";
    if (r.best_lower)
        out << method_id(r.best_lower->id) << " = " << r.best_lower->value << '\n';
    else
        out << "none\n";
    if (a.betti) {
        out << "oracle (GF(" << a.betti->field().characteristic() << ")): reg = " << a.betti->regularity()
            << ", pd = " << a.betti->projective_dimension() << '\n';
        out << a.betti->to_text();
        out << "tightness:\n";
        for (const auto& t : a.tightness) {
            out << "  " << method_id(t.id) << ": " << t.value << ' ';
            if (!t.holds)
                out << "VIOLATED";
            else if (t.slack == 0)
                out << "tight";
            else
                out << "slack " << t.slack;
            out << '\n';
        }
    }
    if (!a.warning.empty()) out << "warning: " << a.warning << '\n';
    return out.str();
}

}  // namespace lhreg

#endif  // LHREG_ANALYSIS_HPP
