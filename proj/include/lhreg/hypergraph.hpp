#ifndef LHREG_HYPERGRAPH_HPP
#define LHREG_HYPERGRAPH_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lhreg/bitset.hpp"
#include "lhreg/monomial.hpp"

namespace lhreg {

inline constexpr std::size_t kMaxVertices = VertexSet::capacity;

/// A distinct edge together with the variables labeling it.
struct Edge {
    VertexSet members;
    std::vector<std::size_t> labels;  // alphabet indices, ascending

    [[nodiscard]] std::size_t size() const { return members.count(); }
    [[nodiscard]] std::size_t multiplicity() const { return labels.size(); }

    friend bool operator==(const Edge&, const Edge&) = default;
};

/**
 * Labeled hypergraph on vertices 0..n-1.
 *
 * The labeling sends every alphabet variable to a (possibly empty) vertex
 * set. Variables with a nonempty image are the labels X; the distinct
 * nonempty images are the edges. Vertex v of the hypergraph of an ideal is
 * the generator at index v in canonical order. Serialized forms number
 * vertices from 1.
 */
class LabeledHypergraph {
public:
    LabeledHypergraph(std::size_t vertex_count, Alphabet alphabet, std::vector<VertexSet> labeling)
        : vertex_count_(vertex_count), alphabet_(std::move(alphabet)), labeling_(std::move(labeling)) {
        if (vertex_count_ > kMaxVertices)
            throw CapExceeded("hypergraph has " + std::to_string(vertex_count_) + " vertices; capacity is " +
                              std::to_string(kMaxVertices));
        if (labeling_.size() != alphabet_.size())
            throw std::invalid_argument("labeling must assign a vertex set to every alphabet variable");
        const auto all = VertexSet::prefix(vertex_count_);
        std::map<VertexSet, std::vector<std::size_t>> grouped;
        for (std::size_t a = 0; a < labeling_.size(); ++a) {
            if (!labeling_[a].subset_of(all)) throw std::invalid_argument("label image outside vertex set");
            if (labeling_[a].empty()) continue;
            grouped[labeling_[a]].push_back(a);
            ++label_count_;
        }
        for (auto& [members, labels] : grouped) edges_.push_back({members, std::move(labels)});
        std::sort(edges_.begin(), edges_.end(),
                  [](const Edge& x, const Edge& y) { return graded_lex_less(x.members, y.members); });
    }

    [[nodiscard]] std::size_t vertex_count() const noexcept { return vertex_count_; }
    [[nodiscard]] VertexSet vertices() const { return VertexSet::prefix(vertex_count_); }
    [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
    [[nodiscard]] const std::vector<VertexSet>& labeling() const noexcept { return labeling_; }
    [[nodiscard]] const VertexSet& edge_of(std::size_t variable) const { return labeling_.at(variable); }

    /// |X|, the number of labels counted with multiplicity.
    [[nodiscard]] std::size_t label_count() const noexcept { return label_count_; }
    /// Distinct edges, ordered by size then lexicographically.
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

    [[nodiscard]] const Edge* find_edge(const VertexSet& members) const {
        for (const auto& e : edges_)
            if (e.members == members) return &e;
        return nullptr;
    }
    [[nodiscard]] bool has_edge(const VertexSet& members) const { return find_edge(members) != nullptr; }

    /// Variables whose edge contains v.
    [[nodiscard]] VarSet labels_of_vertex(std::size_t v) const {
        check_vertex(v);
        VarSet out;
        for (std::size_t a = 0; a < labeling_.size(); ++a)
            if (labeling_[a].test(v)) out.set(a);
        return out;
    }

    void check_vertex(std::size_t v) const {
        if (v >= vertex_count_) throw std::out_of_range("unknown vertex " + std::to_string(v + 1));
    }

    friend bool operator==(const LabeledHypergraph&, const LabeledHypergraph&) = default;

private:
    std::size_t vertex_count_ = 0;
    Alphabet alphabet_;
    std::vector<VertexSet> labeling_;
    std::size_t label_count_ = 0;
    std::vector<Edge> edges_;
};

/// E_a = {j : a divides f_j}.
inline LabeledHypergraph build_hypergraph(const MonomialIdeal& ideal) {
    if (ideal.size() > kMaxVertices)
        throw CapExceeded("ideal has " + std::to_string(ideal.size()) + " generators; hypergraph capacity is " +
                          std::to_string(kMaxVertices));
    std::vector<VertexSet> labeling(ideal.alphabet().size());
    for (std::size_t j = 0; j < ideal.size(); ++j)
        ideal.generator(j).for_each([&](std::size_t a) { labeling[a].set(j); });
    return LabeledHypergraph(ideal.size(), ideal.alphabet(), std::move(labeling));
}

inline VertexSet closed_vertices(const LabeledHypergraph& h) {
    VertexSet out;
    for (const auto& e : h.edges())
        if (e.size() == 1) out |= e.members;
    return out;
}

inline VertexSet open_vertices(const LabeledHypergraph& h) { return h.vertices() - closed_vertices(h); }

inline bool is_saturated(const LabeledHypergraph& h) { return open_vertices(h).empty(); }

inline VertexSet neighbors(const LabeledHypergraph& h, std::size_t v) {
    h.check_vertex(v);
    VertexSet out;
    for (const auto& e : h.edges())
        if (e.members.test(v)) out |= e.members;
    out.reset(v);
    return out;
}

/// No two open vertices share an edge.
inline bool has_isolated_open_vertices(const LabeledHypergraph& h) {
    const auto open = open_vertices(h);
    bool isolated = true;
    open.for_each([&](std::size_t v) {
        if (neighbors(h, v).intersects(open)) isolated = false;
    });
    return isolated;
}

/// Edges of size >= 2 with no proper nonempty subedge.
inline std::vector<Edge> simple_edges(const LabeledHypergraph& h) {
    std::vector<Edge> out;
    for (const auto& f : h.edges()) {
        if (f.size() < 2) continue;
        bool has_sub = std::any_of(h.edges().begin(), h.edges().end(), [&](const Edge& g) {
            return g.members != f.members && g.members.subset_of(f.members);
        });
        if (!has_sub) out.push_back(f);
    }
    return out;
}

/// Every open vertex lies in exactly one simple edge (vacuous when saturated).
inline bool has_isolated_simple_edges(const LabeledHypergraph& h) {
    const auto simple = simple_edges(h);
    bool ok = true;
    open_vertices(h).for_each([&](std::size_t v) {
        auto n = std::count_if(simple.begin(), simple.end(), [&](const Edge& e) { return e.members.test(v); });
        if (n != 1) ok = false;
    });
    return ok;
}

/// max |F| - 1 over edges; -1 for a hypergraph without edges.
inline int dimension(const LabeledHypergraph& h) {
    int d = -1;
    for (const auto& e : h.edges()) d = std::max(d, static_cast<int>(e.size()) - 1);
    return d;
}

struct Separation {
    bool separated = true;
    /// First ordered pair (v, w) with no edge containing v but not w.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

inline Separation is_separated(const LabeledHypergraph& h) {
    for (std::size_t v = 0; v < h.vertex_count(); ++v)
        for (std::size_t w = 0; w < h.vertex_count(); ++w) {
            if (v == w) continue;
            bool split = std::any_of(h.edges().begin(), h.edges().end(),
                                     [&](const Edge& e) { return e.members.test(v) && !e.members.test(w); });
            if (!split) return {false, std::make_pair(v, w)};
        }
    return {};
}

class NotSeparatedError : public std::invalid_argument {
public:
    NotSeparatedError(std::size_t v, std::size_t w)
        : std::invalid_argument("hypergraph is not separated: no edge contains vertex " + std::to_string(v + 1) +
                                " without vertex " + std::to_string(w + 1)),
          witness_(v, w) {}
    [[nodiscard]] std::pair<std::size_t, std::size_t> witness() const { return witness_; }

private:
    std::pair<std::size_t, std::size_t> witness_;
};

/// I_H: the generator for vertex v is the product of its labels.
inline MonomialIdeal ideal_of(const LabeledHypergraph& h) {
    if (h.vertex_count() == 0) throw std::invalid_argument("ideal_of: hypergraph has no vertices");
    auto sep = is_separated(h);
    if (!sep.separated) throw NotSeparatedError(sep.witness->first, sep.witness->second);
    std::vector<Monomial> gens;
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
        auto g = h.labels_of_vertex(v);
        if (g.empty()) throw std::invalid_argument("ideal_of: vertex " + std::to_string(v + 1) + " carries no label");
        gens.push_back(g);
    }
    return minimalize(h.alphabet(), std::move(gens)).ideal();
}

/**
 * Vertex bijection sigma with sigma(E_a) = E'_a for every label name a, if
 * one exists. A vertex is pinned down by the set of label names on it, so
 * matching reduces to pairing vertices with equal label sets.
 */
inline std::optional<std::vector<std::size_t>> find_isomorphism(const LabeledHypergraph& g,
                                                                const LabeledHypergraph& h) {
    if (g.vertex_count() != h.vertex_count() || g.label_count() != h.label_count()) return std::nullopt;
    auto signature = [](const LabeledHypergraph& x, std::size_t v) {
        return variable_names(x.labels_of_vertex(v), x.alphabet());
    };
    std::map<std::vector<std::string>, std::vector<std::size_t>> pool;
    for (std::size_t w = 0; w < h.vertex_count(); ++w) pool[signature(h, w)].push_back(w);
    std::vector<std::size_t> sigma(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        auto it = pool.find(signature(g, v));
        if (it == pool.end() || it->second.empty()) return std::nullopt;
        sigma[v] = it->second.front();
        it->second.erase(it->second.begin());
    }
    return sigma;
}

inline bool isomorphic(const LabeledHypergraph& g, const LabeledHypergraph& h) {
    return find_isomorphism(g, h).has_value();
}

}  // namespace lhreg

#endif  // LHREG_HYPERGRAPH_HPP
