#ifndef LHREG_SIMPLICIAL_HPP
#define LHREG_SIMPLICIAL_HPP

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lhreg/bitset.hpp"
#include "lhreg/errors.hpp"
#include "lhreg/monomial.hpp"
#include "lhreg/prime_field.hpp"

namespace lhreg {

inline constexpr std::size_t kMaxFaces = std::size_t{1} << 16;

/**
 * Finite simplicial complex on a set of variables, stored as its explicit
 * face list grouped by size (faces_by_size()[k] holds the (k-1)-faces).
 *
 * The void complex has no faces at all; the complex {∅} has only the empty
 * face. They differ in reduced homology.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of the given facets over ground set `vertices`.
    static SimplicialComplex from_facets(const VarSet& vertices, const std::vector<VarSet>& facets) {
        SimplicialComplex c;
        c.vertices_ = vertices;
        if (facets.empty()) return c;
        std::unordered_set<VarSet, BitSetHash> seen;
        for (const auto& facet : facets) {
            if (!facet.subset_of(vertices)) throw std::invalid_argument("facet outside the vertex set");
            const auto members = facet.indices();
            if (members.size() > 16)
                throw CapExceeded("simplicial complex exceeds " + std::to_string(kMaxFaces) + " faces");
            const std::uint32_t n = static_cast<std::uint32_t>(members.size());
            for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
                VarSet face;
                for (std::uint32_t k = 0; k < n; ++k)
                    if (mask & (1U << k)) face.set(members[k]);
                seen.insert(face);
            }
            if (seen.size() > kMaxFaces)
                throw CapExceeded("simplicial complex exceeds " + std::to_string(kMaxFaces) + " faces");
        }
        for (const auto& f : seen) {
            const auto k = f.count();
            if (c.faces_.size() <= k) c.faces_.resize(k + 1);
            c.faces_[k].push_back(f);
        }
        for (auto& layer : c.faces_)
            std::sort(layer.begin(), layer.end(), [](const VarSet& a, const VarSet& b) { return lex_less(a, b); });
        return c;
    }

    [[nodiscard]] const VarSet& vertex_set() const noexcept { return vertices_; }
    [[nodiscard]] const std::vector<std::vector<VarSet>>& faces_by_size() const noexcept { return faces_; }
    [[nodiscard]] bool is_void() const noexcept { return faces_.empty(); }
    /// -1 for {∅}; -2 for the void complex.
    [[nodiscard]] int dimension() const noexcept { return static_cast<int>(faces_.size()) - 2; }

    [[nodiscard]] std::size_t face_count() const {
        std::size_t n = 0;
        for (const auto& layer : faces_) n += layer.size();
        return n;
    }

    [[nodiscard]] bool contains(const VarSet& face) const {
        const auto k = face.count();
        if (k >= faces_.size()) return false;
        return std::binary_search(faces_[k].begin(), faces_[k].end(), face,
                                  [](const VarSet& a, const VarSet& b) { return lex_less(a, b); });
    }

private:
    VarSet vertices_;
    std::vector<std::vector<VarSet>> faces_;
};

/**
 * Upper Koszul complex of I at square-free degree b: faces are the subsets
 * t of b with the monomial on b \ t lying in I. Its facets are b \ g for the
 * generators g dividing b; the complex is void when b is not in I.
 */
inline SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& b) {
    if (!b.subset_of(ideal.alphabet().all())) throw std::invalid_argument("upper_koszul: degree outside alphabet");
    std::vector<VarSet> facets;
    for (const auto& g : ideal.generators())
        if (g.subset_of(b)) facets.push_back(b - g);
    return SimplicialComplex::from_facets(b, facets);
}

/**
 * Reduced homology ranks over GF(p): element k is the rank in dimension
 * k - 1, for dimensions -1 .. dim C. Empty for the void complex.
 *
 * Boundary matrices are reduced from the top dimension down; a face that
 * is the pivot of a reduced higher boundary column has a dependent column
 * one dimension lower and is skipped.
 */
inline std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, const FieldSpec& field) {
    const auto& faces = complex.faces_by_size();
    if (complex.is_void()) return {};
    if (complex.face_count() > kMaxFaces)
        throw CapExceeded("simplicial complex exceeds " + std::to_string(kMaxFaces) + " faces");
    const std::size_t layers = faces.size();  // sizes 0 .. layers-1

    std::vector<std::unordered_map<VarSet, std::uint32_t, BitSetHash>> index(layers);
    for (std::size_t k = 0; k < layers; ++k)
        for (std::uint32_t i = 0; i < faces[k].size(); ++i) index[k].emplace(faces[k][i], i);

    // rank_of[k] = rank of the boundary from size-k faces to size-(k-1) faces.
    std::vector<std::size_t> rank_of(layers + 1, 0);
    std::vector<char> cleared;
    std::vector<char> next_cleared;
    for (std::size_t k = layers; k-- > 1;) {
        SparseEliminator elim(field);
        next_cleared.assign(faces[k - 1].size(), 0);
        for (std::uint32_t col = 0; col < faces[k].size(); ++col) {
            if (!cleared.empty() && cleared[col]) continue;
            const auto members = faces[k][col].indices();
            SparseColumn column;
            column.reserve(members.size());
            for (std::size_t r = 0; r < members.size(); ++r) {
                auto sub = faces[k][col];
                sub.reset(members[r]);
                const std::uint32_t coeff = (r % 2 == 0) ? 1U : field.neg(1);
                column.emplace_back(index[k - 1].at(sub), coeff);
            }
            std::sort(column.begin(), column.end());
            if (auto pivot = elim.add(std::move(column))) next_cleared[*pivot] = 1;
        }
        rank_of[k] = elim.rank();
        cleared.swap(next_cleared);
    }

    std::vector<std::size_t> out(layers);
    for (std::size_t k = 0; k < layers; ++k) out[k] = faces[k].size() - rank_of[k] - rank_of[k + 1];
    return out;
}

}  // namespace lhreg

#endif  // LHREG_SIMPLICIAL_HPP
