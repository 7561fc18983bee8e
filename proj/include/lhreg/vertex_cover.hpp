#ifndef LHREG_VERTEX_COVER_HPP
#define LHREG_VERTEX_COVER_HPP

#include <vector>

#include "lhreg/bitset.hpp"

namespace lhreg {

/**
 * Exact minimum vertex cover of a simple graph on at most 64 vertices,
 * given as symmetric adjacency sets.
 *
 * Branch and bound: branch on a maximum-degree vertex v (either v joins the
 * cover, or all of N(v) does), with forced moves for degree-one vertices and
 * a maximal-matching lower bound. The incumbent is seeded greedily.
 */
class VertexCoverSolver {
public:
    explicit VertexCoverSolver(std::vector<VertexSet> adjacency) : adj_(std::move(adjacency)) {}

    VertexSet solve() {
        VertexSet alive;
        for (std::size_t v = 0; v < adj_.size(); ++v) alive.set(v);
        best_ = greedy(alive);
        search(alive, VertexSet{});
        return best_;
    }

    /// Search nodes visited by the last solve().
    [[nodiscard]] std::size_t nodes() const noexcept { return nodes_; }

private:
    [[nodiscard]] std::size_t degree(std::size_t v, const VertexSet& alive) const { return (adj_[v] & alive).count(); }

    [[nodiscard]] VertexSet greedy(VertexSet alive) const {
        VertexSet cover;
        while (true) {
            std::size_t pick = adj_.size(), best_deg = 0;
            alive.for_each([&](std::size_t v) {
                auto d = degree(v, alive);
                if (d > best_deg) {
                    best_deg = d;
                    pick = v;
                }
            });
            if (pick == adj_.size()) return cover;
            cover.set(pick);
            alive.reset(pick);
        }
    }

    [[nodiscard]] std::size_t matching_bound(VertexSet alive) const {
        std::size_t m = 0;
        while (!alive.empty()) {
            auto v = alive.lowest();
            alive.reset(v);
            auto nb = adj_[v] & alive;
            if (nb.empty()) continue;
            alive.reset(nb.lowest());
            ++m;
        }
        return m;
    }

    void search(VertexSet alive, VertexSet cover) {
        ++nodes_;
        // Forced moves: a degree-one vertex can always be covered by its neighbor.
        for (bool changed = true; changed;) {
            changed = false;
            VertexSet isolated;
            alive.for_each([&](std::size_t v) {
                if (!alive.test(v)) return;
                auto nb = adj_[v] & alive;
                auto d = nb.count();
                if (d == 0) {
                    isolated.set(v);
                } else if (d == 1) {
                    auto w = nb.lowest();
                    cover.set(w);
                    alive.reset(w);
                    changed = true;
                }
            });
            alive -= isolated;
        }
        if (cover.count() + matching_bound(alive) >= best_.count()) {
            if (alive.empty() && cover.count() < best_.count()) best_ = cover;
            return;
        }
        if (alive.empty()) {
            best_ = cover;
            return;
        }
        std::size_t pick = 0, best_deg = 0;
        alive.for_each([&](std::size_t v) {
            auto d = degree(v, alive);
            if (d > best_deg) {
                best_deg = d;
                pick = v;
            }
        });
        auto with_v = cover;
        with_v.set(pick);
        auto rest = alive;
        rest.reset(pick);
        search(rest, with_v);

        auto nb = adj_[pick] & alive;
        search(alive - nb - VertexSet::from_indices({pick}), cover | nb);
    }

    std::vector<VertexSet> adj_;
    VertexSet best_;
    std::size_t nodes_ = 0;
};

inline VertexSet minimum_vertex_cover(const std::vector<VertexSet>& adjacency) {
    return VertexCoverSolver(adjacency).solve();
}

}  // namespace lhreg

#endif  // LHREG_VERTEX_COVER_HPP
