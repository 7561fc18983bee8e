#include <catch2/catch_amalgamated.hpp>

#include <regex>

#include "lhreg/hypergraph.hpp"
#include "lhreg/render.hpp"
#include "oracles.hpp"

using namespace lhreg;

namespace {

LabeledHypergraph hg(std::string_view s) { return build_hypergraph(parse_compact_ideal(s)); }

VertexSet vs(std::initializer_list<std::size_t> one_based) {
    VertexSet s;
    for (auto v : one_based) s.set(v - 1);
    return s;
}

std::size_t count_matches(const std::string& text, const std::string& pattern) {
    std::regex re(pattern);
    return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), {}));
}

}  // namespace

TEST_CASE("hypergraph of the one-open-vertex ideal matches its drawing") {
    auto h = hg("efh,aefgij,bchij,dghij");
    CHECK(h.vertex_count() == 4);
    CHECK(h.label_count() == 10);
    CHECK(h.edges().size() == 7);

    // Same hypergraph written with generators efh, aefgij, bchij, dghij as 1..4.
    Alphabet x({"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"});
    std::vector<VertexSet> labels{vs({2}), vs({3}), vs({3}), vs({4}), vs({1, 2}),
                                  vs({1, 2}), vs({2, 4}), vs({1, 3, 4}), vs({2, 3, 4}), vs({2, 3, 4})};
    LabeledHypergraph drawn(4, x, labels);
    std::vector<VertexSet> expected_edges{vs({2}), vs({3}), vs({4}), vs({1, 2}), vs({2, 4}), vs({1, 3, 4}),
                                          vs({2, 3, 4})};
    for (const auto& e : expected_edges) CHECK(drawn.has_edge(e));
    CHECK(drawn.edges().size() == expected_edges.size());
    auto sigma = find_isomorphism(drawn, h);
    REQUIRE(sigma);
    CHECK((*sigma)[0] == 0);  // efh is first in canonical order too
    CHECK(ideal_of(drawn) == parse_compact_ideal("efh,aefgij,bchij,dghij"));
}

TEST_CASE("closed and open vertices") {
    auto h = hg("efh,aefgij,bchij,dghij");
    CHECK(open_vertices(h) == vs({1}));
    CHECK(closed_vertices(h) == vs({2, 3, 4}));
    CHECK_FALSE(is_saturated(h));
    CHECK(has_isolated_open_vertices(h));
    CHECK(is_saturated(hg("efhk,aefgij,bchij,dghij")));
}

TEST_CASE("neighbors and isolated open vertices of the triangle") {
    auto h = hg("ab,ac,bc");
    CHECK(open_vertices(h) == vs({1, 2, 3}));
    CHECK(neighbors(h, 0) == vs({2, 3}));
    CHECK_FALSE(has_isolated_open_vertices(h));
    CHECK(dimension(h) == 1);
    CHECK_THROWS(neighbors(h, 3));
}

TEST_CASE("simple edges") {
    // Generators in canonical order: ab ac eg fg gh hi bcdef.
    auto h = hg("ab,bcdef,ac,eg,fg,gh,hi");
    auto simple = simple_edges(h);
    REQUIRE(simple.size() == 2);
    std::vector<std::string> names;
    for (const auto& e : simple) names.push_back(h.alphabet().name(e.labels.at(0)));
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"a", "g"});
    CHECK(has_isolated_simple_edges(h));
    CHECK_FALSE(has_isolated_simple_edges(hg("ab,ac,bc")));
    // No open vertices: the condition holds vacuously.
    CHECK(has_isolated_simple_edges(hg("efhk,aefgij,bchij,dghij")));
}

TEST_CASE("dimension is largest edge size minus one") {
    CHECK(dimension(hg("aef,bgh,ei,hk,cgij,dfjk")) == 1);
    CHECK(dimension(hg("efh,aefgij,bchij,dghij")) == 2);
    CHECK(dimension(hg("a,b")) == 0);
}

TEST_CASE("separation") {
    Alphabet x({"a", "b"});
    LabeledHypergraph glued(2, x, {vs({1, 2}), VertexSet{}});
    auto sep = is_separated(glued);
    CHECK_FALSE(sep.separated);
    REQUIRE(sep.witness);
    CHECK(sep.witness->first == 0);
    CHECK_THROWS_AS(ideal_of(glued), NotSeparatedError);

    LabeledHypergraph nested(2, x, {vs({1, 2}), vs({2})});
    CHECK_FALSE(is_separated(nested).separated);  // vertex 1 divides vertex 2
    CHECK(is_separated(hg("ab,bc")).separated);
}

TEST_CASE("ideal to hypergraph and back is the identity") {
    for (const auto& I : oracle::random_ideals(200, 10, 8, 21)) {
        INFO(I.to_string());
        CHECK(ideal_of(build_hypergraph(I)) == I);
        CHECK(is_separated(build_hypergraph(I)).separated);
    }
}

TEST_CASE("separated hypergraphs come back from their ideals") {
    std::mt19937_64 rng(22);
    std::size_t tried = 0;
    for (std::size_t found = 0; found < 200; ++tried) {
        REQUIRE(tried < 100000);
        const std::size_t n = 1 + rng() % 6, vars = 1 + rng() % 8;
        std::vector<VertexSet> labels(vars);
        for (auto& l : labels)
            for (std::size_t v = 0; v < n; ++v)
                if (rng() % 2) l.set(v);
        LabeledHypergraph h(n, default_alphabet(vars), labels);
        if (!is_separated(h).separated) continue;
        bool labeled = true;
        for (std::size_t v = 0; v < n; ++v) labeled = labeled && !h.labels_of_vertex(v).empty();
        if (!labeled) continue;
        ++found;
        const auto back = build_hypergraph(ideal_of(h));
        CHECK(isomorphic(back, h));
        CHECK(back.edges().size() == h.edges().size());
    }
}

TEST_CASE("unlabeled collision: same edges, different labels") {
    auto small = hg("ac,bc");
    auto large = hg("acd,bcd");
    REQUIRE(small.edges().size() == large.edges().size());
    for (std::size_t k = 0; k < small.edges().size(); ++k)
        CHECK(small.edges()[k].members == large.edges()[k].members);
    CHECK_FALSE(isomorphic(small, large));
}

TEST_CASE("render dot") {
    auto text = render(hg("efh,aefgij,bchij,dghij"), RenderFormat::dot);
    CHECK(text.rfind("graph H {", 0) == 0);
    CHECK(count_matches(text, R"(\n  v\d+ \[label=)") == 4);
    CHECK(count_matches(text, R"(\n  e\d+ \[shape=point)") == 2);
    CHECK(count_matches(text, "fillcolor=black") == 3);
    CHECK(text.find("v1 -- v4 [label=\"e,f\"]") != std::string::npos);
}

TEST_CASE("render tikz is a standalone document") {
    auto text = render(hg("aef,bgh,ei,hk,cgij,dfjk"), RenderFormat::tikz);
    CHECK(text.find("\\documentclass[tikz]{standalone}") == 0);
    CHECK(text.find("\\end{document}") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '{') == std::count(text.begin(), text.end(), '}'));
    CHECK(count_matches(text, R"(\\coordinate \(v\d+\))") == 6);
}

TEST_CASE("render format names") {
    CHECK(parse_render_format("dot") == RenderFormat::dot);
    CHECK(parse_render_format("tikz") == RenderFormat::tikz);
    CHECK_THROWS_AS(parse_render_format("svg"), std::invalid_argument);
}
