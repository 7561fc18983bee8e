#ifndef LHREG_BOUNDS_HPP
#define LHREG_BOUNDS_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lhreg/hypergraph.hpp"
#include "lhreg/monomial.hpp"
#include "lhreg/vertex_cover.hpp"

namespace lhreg {

inline int x_minus_v(const LabeledHypergraph& h) {
    return static_cast<int>(h.label_count()) - static_cast<int>(h.vertex_count());
}

struct SaturatedFormula {
    int regularity;            // |X| - |V|
    int projective_dimension;  // |V|
};

/// Exact reg and pd of R/I for a saturated hypergraph.
inline SaturatedFormula saturated_regularity(const LabeledHypergraph& h) {
    if (!is_saturated(h)) throw HypothesisError("hypergraph is not saturated");
    return {x_minus_v(h), static_cast<int>(h.vertex_count())};
}

/// max over nonempty generator subsets F of deg lcm(F) - |F|.
inline int taylor_regularity_bound(const MonomialIdeal& ideal) {
    if (ideal.size() > 20)
        throw CapExceeded("Taylor bound limited to 20 generators, got " + std::to_string(ideal.size()));
    const std::uint32_t n = static_cast<std::uint32_t>(ideal.size());
    std::vector<Monomial> lcms(std::size_t{1} << n);
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        const auto low = static_cast<std::uint32_t>(std::countr_zero(mask));
        lcms[mask] = lcms[mask & (mask - 1)] | ideal.generator(low);
        best = std::max(best, static_cast<int>(lcms[mask].count()) - std::popcount(mask));
    }
    return best;
}

/// reg(R/I) <= |X| - |V| when open vertices are pairwise non-adjacent.
inline int iso_upper_bound(const LabeledHypergraph& h) {
    if (!has_isolated_open_vertices(h)) throw HypothesisError("hypergraph has adjacent open vertices");
    return x_minus_v(h);
}

struct FillResult {
    int t;
    VertexSet fill_set;
};

/**
 * Fewest open vertices to close so that no two open vertices remain
 * adjacent: a minimum vertex cover of the graph on open vertices joined
 * when they share an edge.
 */
inline FillResult min_fill_number(const LabeledHypergraph& h) {
    const auto open = open_vertices(h);
    std::vector<VertexSet> adjacency(h.vertex_count());
    open.for_each([&](std::size_t v) { adjacency[v] = neighbors(h, v) & open; });
    auto cover = minimum_vertex_cover(adjacency);
    return {static_cast<int>(cover.count()), cover};
}

/// reg(R/I) <= |X| - |V| + t with t the minimum fill number.
inline int fill_upper_bound(const LabeledHypergraph& h) { return x_minus_v(h) + min_fill_number(h).t; }

/// Exact reg(R/I) = |X| - |V| + sum over simple edges of (|F| - 1).
inline int simple_edge_regularity(const LabeledHypergraph& h) {
    if (!has_isolated_simple_edges(h)) throw HypothesisError("hypergraph does not have isolated simple edges");
    int sum = 0;
    for (const auto& e : simple_edges(h)) sum += static_cast<int>(e.size()) - 1;
    return x_minus_v(h) + sum;
}

struct MatchingWitness {
    int value;          // |X| - |V|
    VertexSet closed;   // the chosen closed vertices c_1..c_t
};

namespace detail {

struct MatchingSearch {
    const std::vector<VertexSet>& nbr;
    const VertexSet& candidates;
    std::optional<VertexSet> best;

    void run(VertexSet uncovered, VertexSet chosen, VertexSet blocked) {
        if (best && chosen.count() >= best->count() && !uncovered.empty()) return;
        if (uncovered.empty()) {
            if (!best || chosen.count() < best->count() ||
                (chosen.count() == best->count() && lex_less(chosen, *best)))
                best = chosen;
            return;
        }
        // Some chosen vertex must be a neighbor of the first uncovered open vertex.
        const auto v = uncovered.lowest();
        (nbr[v] & candidates).for_each([&](std::size_t c) {
            if (blocked.test(c)) return;
            auto next_chosen = chosen;
            next_chosen.set(c);
            auto next_blocked = blocked | nbr[c];
            next_blocked.set(c);
            run(uncovered - nbr[c], next_chosen, next_blocked);
        });
    }
};

}  // namespace detail

/**
 * Lower bound |X| - |V| for one-dimensional hypergraphs, when there are
 * pairwise non-adjacent closed vertices, each the edge of exactly one
 * label, whose neighborhoods cover every open vertex. The search is
 * exhaustive; among witnesses the smallest (then lexicographically first)
 * is returned.
 */
inline std::optional<MatchingWitness> matching_lower_bound(const LabeledHypergraph& h) {
    if (dimension(h) != 1) throw HypothesisError("matching bound requires a one-dimensional hypergraph");
    VertexSet candidates;
    closed_vertices(h).for_each([&](std::size_t c) {
        VertexSet single;
        single.set(c);
        if (h.find_edge(single)->multiplicity() == 1) candidates.set(c);
    });
    std::vector<VertexSet> nbr(h.vertex_count());
    for (std::size_t v = 0; v < h.vertex_count(); ++v) nbr[v] = neighbors(h, v);
    detail::MatchingSearch search{nbr, candidates, std::nullopt};
    search.run(open_vertices(h), VertexSet{}, VertexSet{});
    if (!search.best) return std::nullopt;
    return MatchingWitness{x_minus_v(h), *search.best};
}

/// Exact |X| - |V| when the matching witness exists and open vertices are isolated.
inline std::optional<int> matching_regularity(const LabeledHypergraph& h) {
    auto lower = matching_lower_bound(h);
    if (!lower || !has_isolated_open_vertices(h)) return std::nullopt;
    return lower->value;
}

// ---------------------------------------------------------------------------
// Aggregated report

enum class Method { taylor, saturated, isolated_open, fill, isolated_simple, matching_lower, matching_exact };
enum class BoundKind { upper, lower, exact };

inline constexpr std::array<Method, 7> kAllMethods{Method::taylor,          Method::saturated,
                                                   Method::isolated_open,   Method::fill,
                                                   Method::isolated_simple, Method::matching_lower,
                                                   Method::matching_exact};

inline std::string_view method_id(Method m) {
    switch (m) {
        case Method::taylor: return "taylor";
        case Method::saturated: return "saturated";
        case Method::isolated_open: return "isolated_open_vertices";
        case Method::fill: return "fill";
        case Method::isolated_simple: return "isolated_simple_edges";
        case Method::matching_lower: return "matching_lower";
        case Method::matching_exact: return "matching_exact";
    }
    return "?";
}

inline BoundKind method_kind(Method m) {
    switch (m) {
        case Method::taylor:
        case Method::isolated_open:
        case Method::fill: return BoundKind::upper;
        case Method::matching_lower: return BoundKind::lower;
        default: return BoundKind::exact;
    }
}

inline std::string_view kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::upper: return "upper";
        case BoundKind::lower: return "lower";
        case BoundKind::exact: return "exact";
    }
    return "?";
}

struct MethodResult {
    Method id;
    bool applicable = false;
    std::optional<int> value;   // present iff applicable
    std::optional<VertexSet> witness;
};

struct BestBound {
    Method id;
    int value;
};

struct BoundReport {
    MonomialIdeal ideal;
    std::size_t label_count;   // |X|
    std::size_t vertex_count;  // |V|
    int dimension;
    std::vector<MethodResult> methods;  // in kAllMethods order
    BestBound best_upper;
    std::optional<BestBound> best_lower;

    [[nodiscard]] const MethodResult& method(Method m) const {
        for (const auto& r : methods)
            if (r.id == m) return r;
        throw std::out_of_range("method not in report");
    }
};

/**
 * Runs every combinatorial method. Never consults the Betti oracle. The
 * tightest upper (least) and lower (greatest) values are chosen with exact
 * formulas preferred on ties, then the earlier method in kAllMethods.
 */
inline BoundReport best_bounds(const MonomialIdeal& ideal) {
    const auto h = build_hypergraph(ideal);
    std::vector<MethodResult> methods;
    for (auto m : kAllMethods) methods.push_back({m, false, std::nullopt, std::nullopt});
    auto set = [&](Method m, int value, std::optional<VertexSet> witness = std::nullopt) {
        auto& r = methods[static_cast<std::size_t>(m)];
        r.applicable = true;
        r.value = value;
        r.witness = witness;
    };

    if (ideal.size() <= 20) set(Method::taylor, taylor_regularity_bound(ideal));
    if (is_saturated(h)) set(Method::saturated, saturated_regularity(h).regularity);
    if (has_isolated_open_vertices(h)) set(Method::isolated_open, iso_upper_bound(h));
    auto fill = min_fill_number(h);
    set(Method::fill, x_minus_v(h) + fill.t, fill.fill_set);
    if (has_isolated_simple_edges(h)) set(Method::isolated_simple, simple_edge_regularity(h));
    if (dimension(h) == 1) {
        if (auto w = matching_lower_bound(h)) {
            set(Method::matching_lower, w->value, w->closed);
            if (has_isolated_open_vertices(h)) set(Method::matching_exact, w->value, w->closed);
        }
    }

    auto better = [](const MethodResult& cand, const std::optional<BestBound>& cur, bool upper) {
        if (!cur) return true;
        if (*cand.value != cur->value) return upper ? *cand.value < cur->value : *cand.value > cur->value;
        // Equal values: exact beats a bound; otherwise keep the earlier method.
        return method_kind(cand.id) == BoundKind::exact && method_kind(cur->id) != BoundKind::exact;
    };
    std::optional<BestBound> upper, lower;
    for (const auto& r : methods) {
        if (!r.applicable) continue;
        const auto kind = method_kind(r.id);
        if (kind != BoundKind::lower && better(r, upper, true)) upper = BestBound{r.id, *r.value};
        if (kind != BoundKind::upper && better(r, lower, false)) lower = BestBound{r.id, *r.value};
    }
    return {ideal, h.label_count(), h.vertex_count(), dimension(h), std::move(methods), *upper, lower};
}

}  // namespace lhreg

#endif  // LHREG_BOUNDS_HPP
