#include <catch2/catch_amalgamated.hpp>

#include "lhreg/prime_field.hpp"
#include "lhreg/simplicial.hpp"
#include "oracles.hpp"

using namespace lhreg;

namespace {

VarSet vars(std::initializer_list<std::size_t> idx) { return VarSet::from_indices(idx); }

/// Ranks indexed by dimension + 1, trailing zeros dropped.
std::vector<std::size_t> trimmed(std::vector<std::size_t> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

}  // namespace

TEST_CASE("field arithmetic") {
    FieldSpec f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    CHECK(f.from_int(-1) == 6);
    CHECK_THROWS(FieldSpec(4));
    CHECK_THROWS(FieldSpec(65537));
    CHECK_NOTHROW(FieldSpec(65521));
}

TEST_CASE("dense rank matches textbook elimination") {
    std::mt19937_64 rng(31);
    for (std::uint32_t p : {2U, 3U, 5U, 65521U}) {
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 80;
            DenseMatrix d(rows, cols);
            std::vector<std::vector<long long>> ref(rows, std::vector<long long>(cols));
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c) {
                    const auto v = rng() % 4 == 0 ? rng() % p : 0;
                    d.at(r, c) = static_cast<std::uint32_t>(v);
                    ref[r][c] = static_cast<long long>(v);
                }
            CHECK(d.rank(FieldSpec(p)) == oracle::rank_mod_p(ref, p));
        }
    }
}

TEST_CASE("sparse elimination agrees with dense rank") {
    std::mt19937_64 rng(32);
    for (std::uint32_t p : {2U, 3U, 7U}) {
        const FieldSpec field(p);
        for (int trial = 0; trial < 80; ++trial) {
            const std::size_t rows = 1 + rng() % 15, cols = 1 + rng() % 15;
            DenseMatrix d(rows, cols);
            SparseEliminator e(field);
            for (std::size_t c = 0; c < cols; ++c) {
                SparseColumn col;
                for (std::size_t r = 0; r < rows; ++r)
                    if (rng() % 3 == 0) {
                        const auto v = static_cast<std::uint32_t>(1 + rng() % (p - 1));
                        d.at(r, c) = v;
                        col.emplace_back(static_cast<std::uint32_t>(r), v);
                    }
                e.add(col);
            }
            CHECK(e.rank() == d.rank(field));
        }
    }
}

TEST_CASE("reduced homology of small complexes") {
    const FieldSpec f2(2);
    // Boundary of a triangle: a circle.
    auto circle = SimplicialComplex::from_facets(vars({0, 1, 2}), {vars({0, 1}), vars({1, 2}), vars({0, 2})});
    CHECK(trimmed(reduced_homology_ranks(circle, f2)) == std::vector<std::size_t>{0, 0, 1});
    // Two points.
    auto points = SimplicialComplex::from_facets(vars({0, 1}), {vars({0}), vars({1})});
    CHECK(trimmed(reduced_homology_ranks(points, f2)) == std::vector<std::size_t>{0, 1});
    // A full simplex is acyclic.
    auto simplex = SimplicialComplex::from_facets(vars({0, 1, 2}), {vars({0, 1, 2})});
    CHECK(trimmed(reduced_homology_ranks(simplex, f2)).empty());
    // {∅} has homology in dimension -1; the void complex has none.
    auto empty_face = SimplicialComplex::from_facets(vars({0}), {VarSet{}});
    CHECK(empty_face.dimension() == -1);
    CHECK(reduced_homology_ranks(empty_face, f2) == std::vector<std::size_t>{1});
    auto void_complex = SimplicialComplex::from_facets(vars({0}), {});
    CHECK(void_complex.is_void());
    CHECK(reduced_homology_ranks(void_complex, f2).empty());
}

TEST_CASE("torsion shows up only in characteristic 2") {
    // Six-vertex triangulation of the real projective plane.
    std::vector<VarSet> facets;
    for (auto t : std::vector<std::array<std::size_t, 3>>{{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                                          {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}})
        facets.push_back(vars({t[0], t[1], t[2]}));
    auto rp2 = SimplicialComplex::from_facets(VarSet::prefix(6), facets);
    CHECK(trimmed(reduced_homology_ranks(rp2, FieldSpec(2))) == std::vector<std::size_t>{0, 0, 1, 1});
    CHECK(trimmed(reduced_homology_ranks(rp2, FieldSpec(3))).empty());
}

TEST_CASE("reduced homology matches brute force on random complexes") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + rng() % 7;
        std::vector<VarSet> facets;
        const std::size_t k = rng() % 6;
        for (std::size_t i = 0; i < k; ++i) {
            VarSet f;
            for (std::size_t v = 0; v < n; ++v)
                if (rng() % 2) f.set(v);
            facets.push_back(f);
        }
        auto c = SimplicialComplex::from_facets(VarSet::prefix(n), facets);
        for (long long p : {2LL, 3LL}) {
            auto brute = oracle::reduced_homology(
                n,
                [&](std::uint32_t m) {
                    VarSet s;
                    for (std::size_t v = 0; v < n; ++v)
                        if (m & (1U << v)) s.set(v);
                    return c.contains(s);
                },
                p);
            CHECK(trimmed(reduced_homology_ranks(c, FieldSpec(static_cast<std::uint32_t>(p)))) ==
                  trimmed(brute));
        }
    }
}

TEST_CASE("upper Koszul complex faces") {
    auto I = parse_compact_ideal("ab,bc,cd");
    const auto b = I.alphabet().all();
    auto k = upper_koszul(I, b);
    for (std::uint32_t m = 0; m < 16; ++m) {
        VarSet t;
        for (std::size_t v = 0; v < 4; ++v)
            if (m & (1U << v)) t.set(v);
        CHECK(k.contains(t) == I.contains(b - t));
    }
    CHECK(upper_koszul(I, VarSet::from_indices({0, 2})).is_void());
}
