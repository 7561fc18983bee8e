#ifndef LHREG_BETTI_HPP
#define LHREG_BETTI_HPP

#include <algorithm>
#include <exception>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lhreg/monomial.hpp"
#include "lhreg/prime_field.hpp"
#include "lhreg/simplicial.hpp"

namespace lhreg {

inline constexpr std::size_t kMaxLatticeGenerators = 20;

struct BettiEntry {
    int i;          // homological index of R/I
    Monomial degree;
    std::size_t rank;

    friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

/// Multigraded Betti numbers of R/I over GF(p); only nonzero entries stored.
class BettiTable {
public:
    BettiTable(FieldSpec field, Alphabet alphabet, std::vector<BettiEntry> entries)
        : field_(field), alphabet_(std::move(alphabet)), entries_(std::move(entries)) {
        std::erase_if(entries_, [](const BettiEntry& e) { return e.rank == 0; });
        std::sort(entries_.begin(), entries_.end(), [](const BettiEntry& a, const BettiEntry& b) {
            if (a.i != b.i) return a.i < b.i;
            return graded_lex_less(a.degree, b.degree);
        });
    }

    [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
    [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
    [[nodiscard]] const std::vector<BettiEntry>& entries() const noexcept { return entries_; }

    [[nodiscard]] std::size_t rank(int i, const Monomial& degree) const {
        for (const auto& e : entries_)
            if (e.i == i && e.degree == degree) return e.rank;
        return 0;
    }

    /// beta_{i,j} = sum of multigraded ranks with |b| = j.
    [[nodiscard]] std::map<std::pair<int, int>, std::size_t> coarse() const {
        std::map<std::pair<int, int>, std::size_t> out;
        for (const auto& e : entries_) out[{e.i, static_cast<int>(e.degree.count())}] += e.rank;
        return out;
    }

    /// Total rank in homological degree i.
    [[nodiscard]] std::size_t total(int i) const {
        std::size_t n = 0;
        for (const auto& e : entries_)
            if (e.i == i) n += e.rank;
        return n;
    }

    [[nodiscard]] int regularity() const {
        int reg = 0;
        for (const auto& e : entries_) reg = std::max(reg, static_cast<int>(e.degree.count()) - e.i);
        return reg;
    }

    [[nodiscard]] int projective_dimension() const {
        int pd = 0;
        for (const auto& e : entries_) pd = std::max(pd, e.i);
        return pd;
    }

    /// Rows j - i, columns i, dots for zeros, in the usual computer
    /// algebra layout.
    [[nodiscard]] std::string to_text() const {
        const auto table = coarse();
        const int pd = projective_dimension();
        const int reg = regularity();
        std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(reg) + 2,
                                                    std::vector<std::string>(static_cast<std::size_t>(pd) + 2));
        cells[0][0] = "";
        for (int i = 0; i <= pd; ++i) cells[0][static_cast<std::size_t>(i) + 1] = std::to_string(i);
        std::vector<std::string> totals{"total:"};
        for (int i = 0; i <= pd; ++i) totals.push_back(std::to_string(total(i)));
        for (int row = 0; row <= reg; ++row) {
            auto& line = cells[static_cast<std::size_t>(row) + 1];
            line[0] = std::to_string(row) + ":";
            for (int i = 0; i <= pd; ++i) {
                auto it = table.find({i, i + row});
                line[static_cast<std::size_t>(i) + 1] = it == table.end() ? "." : std::to_string(it->second);
            }
        }
        cells.insert(cells.begin() + 1, totals);
        std::vector<std::size_t> width(static_cast<std::size_t>(pd) + 2, 0);
        for (const auto& line : cells)
            for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
        std::ostringstream out;
        for (const auto& line : cells) {
            for (std::size_t c = 0; c < line.size(); ++c) {
                if (c) out << ' ';
                out << std::setw(static_cast<int>(width[c])) << line[c];
            }
            out << '\n';
        }
        return out.str();
    }

    friend bool operator==(const BettiTable& a, const BettiTable& b) {
        return a.field_ == b.field_ && a.alphabet_ == b.alphabet_ && a.entries_ == b.entries_;
    }

private:
    FieldSpec field_;
    Alphabet alphabet_;
    std::vector<BettiEntry> entries_;
};

/// Distinct lcms of nonempty generator subsets, in canonical order.
inline std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal) {
    if (ideal.size() > kMaxLatticeGenerators)
        throw CapExceeded("lcm lattice limited to " + std::to_string(kMaxLatticeGenerators) + " generators, got " +
                          std::to_string(ideal.size()));
    std::unordered_set<Monomial, BitSetHash> lattice;
    for (const auto& g : ideal.generators()) {
        std::vector<Monomial> grown;
        grown.reserve(lattice.size() + 1);
        for (const auto& m : lattice) grown.push_back(m | g);
        grown.push_back(g);
        lattice.insert(grown.begin(), grown.end());
    }
    std::vector<Monomial> out(lattice.begin(), lattice.end());
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return graded_lex_less(a, b); });
    return out;
}

struct BettiOptions {
    FieldSpec field{2};
    /// Worker threads for the per-degree map; 0 picks the hardware count.
    unsigned threads = 1;
};

/**
 * Betti numbers from the upper Koszul complexes:
 * beta_{i,b}(R/I) = rank of reduced H_{i-2} of upper_koszul(I, b), over the
 * lcm lattice, plus beta_{0,1} = 1.
 *
 * Degrees are independent; with threads > 1 they are split across workers
 * and merged in lattice order, so the result does not depend on scheduling.
 */
inline BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options = {}) {
    const auto lattice = lcm_lattice(ideal);
    std::vector<std::vector<BettiEntry>> per_degree(lattice.size());
    auto work = [&](std::size_t k) {
        const auto& b = lattice[k];
        const auto ranks = reduced_homology_ranks(upper_koszul(ideal, b), options.field);
        for (std::size_t d = 0; d < ranks.size(); ++d)
            if (ranks[d] != 0) per_degree[k].push_back({static_cast<int>(d) + 1, b, ranks[d]});
    };

    unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, lattice.size()));
    if (threads <= 1) {
        for (std::size_t k = 0; k < lattice.size(); ++k) work(k);
    } else {
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t k = t; k < lattice.size(); k += threads) work(k);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    std::vector<BettiEntry> entries{{0, Monomial{}, 1}};
    for (auto& chunk : per_degree) entries.insert(entries.end(), chunk.begin(), chunk.end());
    return BettiTable(options.field, ideal.alphabet(), std::move(entries));
}

inline int regularity(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec{2}) {
    return betti_table(ideal, {field, 1}).regularity();
}

inline int projective_dimension(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec{2}) {
    return betti_table(ideal, {field, 1}).projective_dimension();
}

}  // namespace lhreg

#endif  // LHREG_BETTI_HPP
