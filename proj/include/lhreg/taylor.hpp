#ifndef LHREG_TAYLOR_HPP
#define LHREG_TAYLOR_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "lhreg/betti.hpp"
#include "lhreg/monomial.hpp"
#include "lhreg/prime_field.hpp"

namespace lhreg {

inline constexpr std::size_t kMaxTaylorGenerators = 16;

namespace detail {

inline void check_taylor_cap(const MonomialIdeal& ideal) {
    if (ideal.size() > kMaxTaylorGenerators)
        throw CapExceeded("Taylor complex limited to " + std::to_string(kMaxTaylorGenerators) + " generators, got " +
                          std::to_string(ideal.size()));
}

/// lcm of every generator subset, indexed by subset bitmask.
inline std::vector<Monomial> subset_lcms(const MonomialIdeal& ideal) {
    const std::uint32_t n = static_cast<std::uint32_t>(ideal.size());
    std::vector<Monomial> lcms(std::size_t{1} << n);
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        const auto low = static_cast<std::uint32_t>(std::countr_zero(mask));
        lcms[mask] = lcms[mask & (mask - 1)] | ideal.generator(low);
    }
    return lcms;
}

}  // namespace detail

/// One term sign * coefficient * e_target of a Taylor differential.
struct TaylorTerm {
    std::size_t target;  // index within the next lower homological degree
    int sign;
    Monomial coefficient;
};

/**
 * Taylor resolution of R/I. Degree i has one basis element e_F per i-subset
 * F of the generators (bitmask, ascending), in multidegree lcm(F), with
 *   d(e_F) = sum_k (-1)^k lcm(F)/lcm(F \ j_k) e_{F \ j_k}
 * for F = {j_1 < ... < j_i}.
 */
class TaylorComplex {
public:
    explicit TaylorComplex(const MonomialIdeal& ideal) : alphabet_(ideal.alphabet()), generators_(ideal.size()) {
        detail::check_taylor_cap(ideal);
        lcms_ = detail::subset_lcms(ideal);
        const std::uint32_t n = static_cast<std::uint32_t>(generators_);
        basis_.resize(generators_ + 1);
        position_.assign(lcms_.size(), 0);
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            auto& layer = basis_[static_cast<std::size_t>(std::popcount(mask))];
            position_[mask] = layer.size();
            layer.push_back(mask);
        }
        boundary_.resize(generators_ + 1);
        for (std::size_t i = 1; i <= generators_; ++i) {
            boundary_[i].resize(basis_[i].size());
            for (std::size_t idx = 0; idx < basis_[i].size(); ++idx) {
                const auto mask = basis_[i][idx];
                int k = 0;
                for (std::uint32_t j = 0; j < n; ++j) {
                    if (!(mask & (1U << j))) continue;
                    ++k;
                    const auto face = mask & ~(1U << j);
                    boundary_[i][idx].push_back({position_[face], k % 2 == 0 ? 1 : -1, lcms_[mask] - lcms_[face]});
                }
            }
        }
    }

    [[nodiscard]] std::size_t generator_count() const noexcept { return generators_; }
    [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
    /// Rank of T_i, which is C(mu, i).
    [[nodiscard]] std::size_t rank(std::size_t i) const { return basis_.at(i).size(); }
    [[nodiscard]] const std::vector<std::uint32_t>& basis(std::size_t i) const { return basis_.at(i); }
    [[nodiscard]] const Monomial& multidegree(std::size_t i, std::size_t idx) const {
        return lcms_.at(basis_.at(i).at(idx));
    }
    [[nodiscard]] const std::vector<TaylorTerm>& boundary(std::size_t i, std::size_t idx) const {
        return boundary_.at(i).at(idx);
    }

    /**
     * Symbolic check that d_{i-1} d_i = 0 in every degree. Products of
     * coefficients are tracked with exact exponents (a square-free pair
     * multiplies to exponent 2 on the overlap), then like terms are summed.
     */
    [[nodiscard]] bool boundary_squares_to_zero() const {
        for (std::size_t i = 2; i <= generators_; ++i) {
            for (std::size_t idx = 0; idx < basis_[i].size(); ++idx) {
                // (target, variables with exponent >= 1, variables with exponent 2) -> coefficient
                std::map<std::tuple<std::size_t, Monomial, Monomial>, int> sum;
                for (const auto& outer : boundary_[i][idx])
                    for (const auto& inner : boundary_[i - 1][outer.target]) {
                        auto key = std::make_tuple(inner.target, outer.coefficient | inner.coefficient,
                                                   outer.coefficient & inner.coefficient);
                        sum[key] += outer.sign * inner.sign;
                    }
                for (const auto& [key, c] : sum)
                    if (c != 0) return false;
            }
        }
        return true;
    }

private:
    Alphabet alphabet_;
    std::size_t generators_;
    std::vector<Monomial> lcms_;
    std::vector<std::vector<std::uint32_t>> basis_;
    std::vector<std::size_t> position_;
    std::vector<std::vector<std::vector<TaylorTerm>>> boundary_;
};

inline TaylorComplex taylor_complex(const MonomialIdeal& ideal) { return TaylorComplex(ideal); }

/// No differential entry is a unit: lcm(F) != lcm(F \ j) for all F and j in F.
inline bool is_taylor_minimal(const MonomialIdeal& ideal) {
    detail::check_taylor_cap(ideal);
    const auto lcms = detail::subset_lcms(ideal);
    for (std::uint32_t mask = 1; mask < lcms.size(); ++mask)
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            const auto bit = rest & (~rest + 1);
            if (lcms[mask] == lcms[mask & ~bit]) return false;
        }
    return true;
}

/**
 * Betti numbers from the Taylor complex tensored with the field. In
 * multidegree b that complex has basis {e_F : lcm(F) = b}; a differential
 * entry survives (as its sign) exactly when lcm(F \ j) = lcm(F), i.e. the
 * monomial coefficient is 1. Ranks use dense elimination, independent of
 * the sparse kernel behind betti_table.
 */
inline BettiTable taylor_strand_betti(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec{2}) {
    detail::check_taylor_cap(ideal);
    const auto lcms = detail::subset_lcms(ideal);
    std::unordered_map<Monomial, std::vector<std::uint32_t>, BitSetHash> strands;
    for (std::uint32_t mask = 0; mask < lcms.size(); ++mask) strands[lcms[mask]].push_back(mask);

    std::vector<BettiEntry> entries;
    for (const auto& [degree, masks] : strands) {
        std::vector<std::vector<std::uint32_t>> by_size(ideal.size() + 2);
        for (auto m : masks) by_size[static_cast<std::size_t>(std::popcount(m))].push_back(m);
        std::vector<std::size_t> rank_of(ideal.size() + 2, 0);  // d_i : size i -> size i-1
        for (std::size_t i = 1; i <= ideal.size(); ++i) {
            const auto& cols = by_size[i];
            const auto& rows = by_size[i - 1];
            if (cols.empty() || rows.empty()) continue;
            std::unordered_map<std::uint32_t, std::size_t> row_of;
            for (std::size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r], r);
            DenseMatrix d(rows.size(), cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c) {
                int k = 0;
                for (std::uint32_t j = 0; j < ideal.size(); ++j) {
                    if (!(cols[c] & (1U << j))) continue;
                    ++k;
                    auto it = row_of.find(cols[c] & ~(1U << j));
                    if (it != row_of.end()) d.at(it->second, c) = field.from_int(k % 2 == 0 ? 1 : -1);
                }
            }
            rank_of[i] = d.rank(field);
        }
        for (std::size_t i = 0; i <= ideal.size(); ++i) {
            const auto h = by_size[i].size() - rank_of[i] - rank_of[i + 1];
            if (h) entries.push_back({static_cast<int>(i), degree, h});
        }
    }
    return BettiTable(field, ideal.alphabet(), std::move(entries));
}

}  // namespace lhreg

#endif  // LHREG_TAYLOR_HPP
