#ifndef LHREG_PRIME_FIELD_HPP
#define LHREG_PRIME_FIELD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lhreg {

/// GF(p) for a prime p < 2^16.
class FieldSpec {
public:
    explicit FieldSpec(std::uint32_t characteristic = 2) : p_(characteristic) {
        if (p_ < 2 || p_ >= (1U << 16) || !is_prime(p_))
            throw std::invalid_argument("field characteristic must be a prime below 65536, got " + std::to_string(p_));
    }

    [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }

    [[nodiscard]] std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
    [[nodiscard]] std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
    [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    [[nodiscard]] std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    [[nodiscard]] std::uint32_t inv(std::uint32_t a) const {
        if (a % p_ == 0) throw std::domain_error("inverse of zero");
        // Fermat: a^(p-2).
        std::uint32_t result = 1, base = a % p_, e = p_ - 2;
        while (e) {
            if (e & 1U) result = mul(result, base);
            base = mul(base, base);
            e >>= 1U;
        }
        return result;
    }
    /// Image of a signed integer.
    [[nodiscard]] std::uint32_t from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_;
};

/// Row-major dense matrix over GF(p); rank by Gaussian elimination.
class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    [[nodiscard]] std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::size_t rank(const FieldSpec& field) const {
        if (field.characteristic() == 2) return rank_gf2();
        auto m = data_;
        for (auto& x : m) x %= field.characteristic();
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
            std::size_t pivot = rank;
            while (pivot < rows_ && m[pivot * cols_ + c] == 0) ++pivot;
            if (pivot == rows_) continue;
            if (pivot != rank)
                for (std::size_t k = 0; k < cols_; ++k) std::swap(m[pivot * cols_ + k], m[rank * cols_ + k]);
            const auto inv = field.inv(m[rank * cols_ + c]);
            for (std::size_t r = rank + 1; r < rows_; ++r) {
                const auto factor = field.mul(m[r * cols_ + c], inv);
                if (factor == 0) continue;
                for (std::size_t k = c; k < cols_; ++k)
                    m[r * cols_ + k] = field.sub(m[r * cols_ + k], field.mul(factor, m[rank * cols_ + k]));
            }
            ++rank;
        }
        return rank;
    }

private:
    // Bit-packed rows; one XOR per 64 columns.
    [[nodiscard]] std::size_t rank_gf2() const {
        const std::size_t words = (cols_ + 63) / 64;
        std::vector<std::uint64_t> m(rows_ * words, 0);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (at(r, c) & 1U) m[r * words + c / 64] |= std::uint64_t{1} << (c % 64);
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
            const std::size_t w = c / 64;
            const std::uint64_t bit = std::uint64_t{1} << (c % 64);
            std::size_t pivot = rank;
            while (pivot < rows_ && !(m[pivot * words + w] & bit)) ++pivot;
            if (pivot == rows_) continue;
            if (pivot != rank)
                for (std::size_t k = 0; k < words; ++k) std::swap(m[pivot * words + k], m[rank * words + k]);
            for (std::size_t r = rank + 1; r < rows_; ++r)
                if (m[r * words + w] & bit)
                    for (std::size_t k = w; k < words; ++k) m[r * words + k] ^= m[rank * words + k];
            ++rank;
        }
        return rank;
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

/// Sparse column: (row, nonzero coefficient) pairs with strictly increasing rows.
using SparseColumn = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/**
 * Column-by-column Gaussian elimination keyed on the lowest nonzero row
 * (the pivot). Each added column is reduced against the stored ones; an
 * independent column is kept and its pivot recorded.
 */
class SparseEliminator {
public:
    explicit SparseEliminator(FieldSpec field) : field_(field) {}

    /// Pivot row of the reduced column, or nullopt when it reduces to zero.
    std::optional<std::uint32_t> add(SparseColumn col) {
        for (auto& entry : col) entry.second %= field_.characteristic();
        std::erase_if(col, [](const auto& e) { return e.second == 0; });
        while (!col.empty()) {
            const auto [low, coeff] = col.back();
            auto it = owner_.find(low);
            if (it == owner_.end()) {
                const auto inv = field_.inv(coeff);
                for (auto& e : col) e.second = field_.mul(e.second, inv);
                owner_.emplace(low, columns_.size());
                columns_.push_back(std::move(col));
                return low;
            }
            // col -= coeff * stored (stored column is normalized at its pivot).
            col = axpy(col, columns_[it->second], field_.neg(coeff));
        }
        return std::nullopt;
    }

    [[nodiscard]] std::size_t rank() const noexcept { return columns_.size(); }
    [[nodiscard]] bool is_pivot(std::uint32_t row) const { return owner_.contains(row); }

private:
    [[nodiscard]] SparseColumn axpy(const SparseColumn& x, const SparseColumn& y, std::uint32_t a) const {
        SparseColumn out;
        out.reserve(x.size() + y.size());
        std::size_t i = 0, j = 0;
        while (i < x.size() || j < y.size()) {
            if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
                out.push_back(x[i++]);
            } else if (i == x.size() || y[j].first < x[i].first) {
                out.emplace_back(y[j].first, field_.mul(a, y[j].second));
                ++j;
            } else {
                auto v = field_.add(x[i].second, field_.mul(a, y[j].second));
                if (v != 0) out.emplace_back(x[i].first, v);
                ++i;
                ++j;
            }
        }
        return out;
    }

    FieldSpec field_;
    std::vector<SparseColumn> columns_;
    std::unordered_map<std::uint32_t, std::size_t> owner_;
};

}  // namespace lhreg

#endif  // LHREG_PRIME_FIELD_HPP
