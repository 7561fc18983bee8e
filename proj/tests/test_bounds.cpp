#include <catch2/catch_amalgamated.hpp>

#include "lhreg/bounds.hpp"
#include "oracles.hpp"

using namespace lhreg;

namespace {

LabeledHypergraph hg(std::string_view s) { return build_hypergraph(parse_compact_ideal(s)); }

/// Smallest qualifying closed-vertex set by trying every subset.
std::optional<std::size_t> smallest_matching_witness(const LabeledHypergraph& h) {
    const auto n = h.vertex_count();
    const auto closed = closed_vertices(h);
    const auto open = open_vertices(h);
    std::optional<std::size_t> best;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        VertexSet c;
        for (std::size_t v = 0; v < n; ++v)
            if (m & (std::uint64_t{1} << v)) c.set(v);
        if (!c.subset_of(closed)) continue;
        bool ok = true;
        VertexSet covered;
        c.for_each([&](std::size_t v) {
            VertexSet single;
            single.set(v);
            if (h.find_edge(single)->multiplicity() != 1) ok = false;
            if (neighbors(h, v).intersects(c)) ok = false;
            covered |= neighbors(h, v);
        });
        if (ok && open.subset_of(covered) && (!best || c.count() < *best)) best = c.count();
    }
    return best;
}

}  // namespace

TEST_CASE("vertex cover solver matches exhaustive search") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 14;
        const auto density = rng() % 4;
        std::vector<VertexSet> adj(n);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = v + 1; w < n; ++w)
                if (rng() % 4 <= density) {
                    adj[v].set(w);
                    adj[w].set(v);
                }
        const auto cover = minimum_vertex_cover(adj);
        for (std::size_t v = 0; v < n; ++v)
            adj[v].for_each([&](std::size_t w) { CHECK((cover.test(v) || cover.test(w))); });
        CHECK(cover.count() == oracle::min_cover_size(adj));
    }
}

TEST_CASE("vertex cover of larger sparse graphs stays exact") {
    // Disjoint triangles need two vertices each; a 30-vertex cycle needs 15.
    std::vector<VertexSet> tri(30);
    for (std::size_t t = 0; t < 10; ++t)
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b)
                if (a != b) tri[3 * t + a].set(3 * t + b);
    CHECK(minimum_vertex_cover(tri).count() == 20);
    std::vector<VertexSet> cycle(30);
    for (std::size_t v = 0; v < 30; ++v) {
        cycle[v].set((v + 1) % 30);
        cycle[v].set((v + 29) % 30);
    }
    CHECK(minimum_vertex_cover(cycle).count() == 15);
}

TEST_CASE("saturated formula") {
    auto f = saturated_regularity(hg("efhk,aefgij,bchij,dghij"));
    CHECK(f.regularity == 7);
    CHECK(f.projective_dimension == 4);
    CHECK_THROWS_AS(saturated_regularity(hg("efh,aefgij,bchij,dghij")), HypothesisError);
}

TEST_CASE("Taylor bound") {
    CHECK(taylor_regularity_bound(parse_compact_ideal("ab,ac,bc")) == 1);
    CHECK(taylor_regularity_bound(parse_compact_ideal("efhk,aefgij,bchij,dghij")) == 7);
    CHECK(taylor_regularity_bound(parse_compact_ideal("abc,abd,acd,bcd")) == 2);
}

TEST_CASE("isolated open vertex bound") {
    CHECK(iso_upper_bound(hg("efh,cefgij,abhij,dghij")) == 6);
    CHECK(iso_upper_bound(hg("ab,acd,bef")) == 3);
    CHECK(iso_upper_bound(hg("di,ade,bij,fgijk,efg,jh,ch")) == 4);
    CHECK_THROWS_AS(iso_upper_bound(hg("ab,ac,bc")), HypothesisError);
}

TEST_CASE("fill bound") {
    auto tri = hg("ab,ac,bc");
    CHECK(min_fill_number(tri).t == 2);
    CHECK(fill_upper_bound(tri) == 2);
    auto one = hg("di,ade,bij,fgij,efg,jh,ch");
    CHECK(min_fill_number(one).t == 1);
    CHECK(fill_upper_bound(one) == 4);
    CHECK(fill_upper_bound(hg("abc,def,adg,beg")) == 4);
    auto k4 = hg("abc,abd,acd,bcd");
    CHECK(min_fill_number(k4).t == 3);
    CHECK(fill_upper_bound(k4) == 3);
}

TEST_CASE("fill set isolates the remaining open vertices") {
    for (const auto& I : oracle::random_ideals(200, 8, 8, 52)) {
        const auto h = build_hypergraph(I);
        const auto fill = min_fill_number(h);
        const auto remaining = open_vertices(h) - fill.fill_set;
        CHECK(fill.fill_set.subset_of(open_vertices(h)));
        remaining.for_each([&](std::size_t v) { CHECK_FALSE(neighbors(h, v).intersects(remaining)); });
        CHECK(fill_upper_bound(h) <= x_minus_v(h) + static_cast<int>(open_vertices(h).count()));
        if (fill.t == 0) CHECK(fill_upper_bound(h) == iso_upper_bound(h));
    }
}

TEST_CASE("simple edge formula") {
    CHECK(simple_edge_regularity(hg("ab,bcdef,ac,eg,fg,gh,hi")) == 5);
    CHECK(simple_edge_regularity(hg("abc,def,adg,beg")) == 4);
    CHECK_THROWS_AS(simple_edge_regularity(hg("ab,ac,bc")), HypothesisError);
}

TEST_CASE("matching bound") {
    auto h = hg("aef,bgh,ei,hk,cgij,dfjk");
    auto w = matching_lower_bound(h);
    REQUIRE(w);
    CHECK(w->value == 5);
    // aef and bgh are vertices 3 and 4 in canonical order (ei, hk come first).
    CHECK(w->closed == VertexSet::from_indices({2, 3}));
    CHECK(matching_regularity(h) == 5);

    CHECK(matching_regularity(hg("ab,bc,cdef,fg,ghi,ij,jklm,mn,no")) == 6);
    auto path = hg("ab,bc,cde,ef,fghi,ij,jklm,mn,no");
    CHECK_FALSE(matching_lower_bound(path));
    CHECK_FALSE(matching_regularity(path));
    CHECK_THROWS_AS(matching_lower_bound(hg("efh,aefgij,bchij,dghij")), HypothesisError);

    // Saturated, one label per vertex: the empty witness works.
    auto sat = hg("abx,bcy,acz");
    REQUIRE(is_saturated(sat));
    auto sw = matching_lower_bound(sat);
    REQUIRE(sw);
    CHECK(sw->closed.empty());
    CHECK(sw->value == 6 - 3);
}

TEST_CASE("matching search agrees with exhaustive enumeration") {
    std::size_t seen = 0, found = 0;
    for (const auto& I : oracle::random_ideals(600, 8, 8, 53)) {
        const auto h = build_hypergraph(I);
        if (dimension(h) != 1) continue;
        ++seen;
        const auto w = matching_lower_bound(h);
        const auto brute = smallest_matching_witness(h);
        CHECK(w.has_value() == brute.has_value());
        if (w && brute) {
            ++found;
            CHECK(w->closed.count() == *brute);
        }
    }
    CHECK(seen > 20);
    CHECK(found > 0);
}

TEST_CASE("best bounds on the triangle") {
    auto r = best_bounds(parse_compact_ideal("ab,ac,bc"));
    CHECK(r.method(Method::fill).value == 2);
    CHECK_FALSE(r.method(Method::isolated_open).applicable);
    CHECK(r.best_upper.id == Method::taylor);
    CHECK(r.best_upper.value == 1);
    CHECK_FALSE(r.best_lower);
}

TEST_CASE("best bounds prefer exact formulas") {
    auto sat = best_bounds(parse_compact_ideal("efhk,aefgij,bchij,dghij"));
    CHECK(sat.best_upper.id == Method::saturated);
    CHECK(sat.best_upper.value == 7);
    REQUIRE(sat.best_lower);
    CHECK(sat.best_lower->id == Method::saturated);

    auto simple = best_bounds(parse_compact_ideal("ab,bcdef,ac,eg,fg,gh,hi"));
    CHECK(simple.best_upper.id == Method::isolated_simple);
    CHECK(simple.best_upper.value == 5);
    CHECK(simple.best_lower->value == 5);
}

TEST_CASE("method ids and kinds") {
    CHECK(method_id(Method::isolated_open) == "isolated_open_vertices");
    CHECK(method_kind(Method::matching_lower) == BoundKind::lower);
    CHECK(method_kind(Method::fill) == BoundKind::upper);
    CHECK(method_kind(Method::matching_exact) == BoundKind::exact);
    for (auto m : kAllMethods) CHECK_FALSE(method_id(m).empty());
}
