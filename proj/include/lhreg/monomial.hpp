#ifndef LHREG_MONOMIAL_HPP
#define LHREG_MONOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lhreg/bitset.hpp"
#include "lhreg/errors.hpp"

namespace lhreg {

/// A square-free monomial is identified with its support.
using Monomial = VarSet;

inline constexpr std::size_t kMaxVariables = VarSet::capacity;

inline bool is_valid_variable_name(std::string_view name) {
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

/**
 * Ordered, duplicate-free list of variable names.
 *
 * Names are kept sorted so that two ideals over the same variables always
 * share bit positions, which makes ideal equality structural.
 */
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
        for (const auto& n : names_)
            if (!is_valid_variable_name(n)) throw std::invalid_argument("invalid variable name '" + n + "'");
        std::sort(names_.begin(), names_.end());
        names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
        if (names_.size() > kMaxVariables)
            throw CapExceeded("alphabet has " + std::to_string(names_.size()) + " variables; capacity is " +
                              std::to_string(kMaxVariables));
    }

    [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
    [[nodiscard]] const std::string& name(std::size_t i) const { return names_.at(i); }
    [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }

    [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const {
        auto it = std::lower_bound(names_.begin(), names_.end(), name);
        if (it == names_.end() || *it != name) return std::nullopt;
        return static_cast<std::size_t>(it - names_.begin());
    }
    [[nodiscard]] std::size_t index(std::string_view name) const {
        auto i = find(name);
        if (!i) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
        return *i;
    }

    [[nodiscard]] VarSet all() const { return VarSet::prefix(names_.size()); }

    [[nodiscard]] Monomial monomial(const std::vector<std::string>& vars) const {
        Monomial m;
        for (const auto& v : vars) m.set(index(v));
        return m;
    }

    /// True when every name is one character long, so monomials can be
    /// written by juxtaposition.
    [[nodiscard]] bool compact() const {
        return std::all_of(names_.begin(), names_.end(), [](const auto& n) { return n.size() == 1; });
    }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> names_;
};

inline std::vector<std::string> variable_names(const Monomial& m, const Alphabet& alphabet) {
    std::vector<std::string> out;
    m.for_each([&](std::size_t i) { out.push_back(alphabet.name(i)); });
    return out;
}

/// "1", "abc" for single-letter alphabets, "x1*x2" otherwise.
inline std::string to_string(const Monomial& m, const Alphabet& alphabet) {
    if (m.empty()) return "1";
    const std::string sep = alphabet.compact() ? "" : "*";
    std::string out;
    m.for_each([&](std::size_t i) {
        if (!out.empty()) out += sep;
        out += alphabet.name(i);
    });
    return out;
}

class MonomialIdeal;
class IdealOrUnit;
IdealOrUnit minimalize(const Alphabet& alphabet, std::vector<Monomial> gens);

/**
 * Proper square-free monomial ideal given by its minimal generators.
 *
 * Generators are sorted by degree, then lexicographically by support, so
 * equal ideals compare equal member-wise. Instances are only produced by
 * minimalize() and the operations built on it.
 */
class MonomialIdeal {
public:
    [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
    [[nodiscard]] const std::vector<Monomial>& generators() const noexcept { return gens_; }
    [[nodiscard]] std::size_t size() const noexcept { return gens_.size(); }
    [[nodiscard]] const Monomial& generator(std::size_t i) const { return gens_.at(i); }

    /// Variables dividing some generator.
    [[nodiscard]] VarSet support() const {
        VarSet s;
        for (const auto& g : gens_) s |= g;
        return s;
    }

    [[nodiscard]] bool contains(const Monomial& m) const {
        return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.subset_of(m); });
    }

    [[nodiscard]] std::optional<std::size_t> find(const Monomial& m) const {
        auto it = std::find(gens_.begin(), gens_.end(), m);
        if (it == gens_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - gens_.begin());
    }

    /// "(ab, cd)" style rendering.
    [[nodiscard]] std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i) out += ", ";
            out += lhreg::to_string(gens_[i], alphabet_);
        }
        return out + ")";
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    friend IdealOrUnit minimalize(const Alphabet& alphabet, std::vector<Monomial> gens);
    MonomialIdeal(Alphabet alphabet, std::vector<Monomial> gens)
        : alphabet_(std::move(alphabet)), gens_(std::move(gens)) {}

    Alphabet alphabet_;
    std::vector<Monomial> gens_;
};

/// Result of an operation that may yield the whole ring.
class IdealOrUnit {
public:
    IdealOrUnit(MonomialIdeal ideal) : alphabet_(ideal.alphabet()), ideal_(std::move(ideal)) {}  // NOLINT
    static IdealOrUnit unit(Alphabet alphabet) { return IdealOrUnit(std::move(alphabet)); }

    [[nodiscard]] bool is_unit() const noexcept { return !ideal_.has_value(); }
    [[nodiscard]] const MonomialIdeal& ideal() const {
        if (!ideal_) throw UnitIdealError();
        return *ideal_;
    }
    [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }

    friend bool operator==(const IdealOrUnit&, const IdealOrUnit&) = default;

private:
    explicit IdealOrUnit(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    Alphabet alphabet_;
    std::optional<MonomialIdeal> ideal_;
};

/**
 * Minimal generating set of the ideal generated by gens: duplicates and
 * every monomial divisible by another are dropped, the rest put in
 * canonical order. A 1 among the inputs yields the unit ideal.
 */
inline IdealOrUnit minimalize(const Alphabet& alphabet, std::vector<Monomial> gens) {
    if (gens.empty()) throw std::invalid_argument("minimalize: empty generator list (zero ideal)");
    const auto universe = alphabet.all();
    for (const auto& g : gens) {
        if (!g.subset_of(universe)) throw std::invalid_argument("minimalize: monomial outside alphabet");
        if (g.empty()) return IdealOrUnit::unit(alphabet);
    }
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return graded_lex_less(a, b); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    kept.reserve(gens.size());
    // Sorted by degree, so any divisor of g precedes it.
    for (const auto& g : gens) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.subset_of(g); });
        if (!redundant) kept.push_back(g);
    }
    return MonomialIdeal(alphabet, std::move(kept));
}

inline Monomial lcm(const std::vector<Monomial>& ms) {
    if (ms.empty()) throw std::invalid_argument("lcm of an empty list");
    Monomial out;
    for (const auto& m : ms) out |= m;
    return out;
}

/// I : z, computed generator-wise as (f_i / gcd(f_i, z)).
inline IdealOrUnit colon_by_monomial(const MonomialIdeal& ideal, const Monomial& z) {
    if (!z.subset_of(ideal.alphabet().all())) throw std::invalid_argument("colon: monomial outside alphabet");
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.generators()) gens.push_back(g - z);
    return minimalize(ideal.alphabet(), std::move(gens));
}

inline IdealOrUnit colon_by_monomial(const IdealOrUnit& ideal, const Monomial& z) {
    if (ideal.is_unit()) return ideal;
    return colon_by_monomial(ideal.ideal(), z);
}

/// (I, z) for z != 1.
inline MonomialIdeal add_generator(const MonomialIdeal& ideal, const Monomial& z) {
    if (z.empty()) throw std::invalid_argument("add_generator: z must not be 1");
    auto gens = ideal.generators();
    gens.push_back(z);
    return minimalize(ideal.alphabet(), std::move(gens)).ideal();
}

/// The ideal generated by all generators except the one at index i.
inline MonomialIdeal remove_generator(const MonomialIdeal& ideal, std::size_t i) {
    if (ideal.size() < 2) throw std::invalid_argument("remove_generator: result would be the zero ideal");
    auto gens = ideal.generators();
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
    return minimalize(ideal.alphabet(), std::move(gens)).ideal();
}

/**
 * Alexander dual: generated by the minimal transversals of the generator
 * supports. Built incrementally (Berge multiplication): after each support S
 * the current family holds the minimal transversals of the supports seen.
 */
inline MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
    std::vector<Monomial> transversals{Monomial{}};
    for (const auto& support : ideal.generators()) {
        std::vector<Monomial> next;
        for (const auto& t : transversals) {
            if (t.intersects(support)) {
                next.push_back(t);
                continue;
            }
            support.for_each([&](std::size_t x) {
                auto grown = t;
                grown.set(x);
                next.push_back(grown);
            });
        }
        // Keep only the inclusion-minimal sets.
        std::sort(next.begin(), next.end(), [](const Monomial& a, const Monomial& b) { return graded_lex_less(a, b); });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        transversals.clear();
        for (const auto& t : next) {
            bool redundant =
                std::any_of(transversals.begin(), transversals.end(), [&](const Monomial& k) { return k.subset_of(t); });
            if (!redundant) transversals.push_back(t);
        }
    }
    return minimalize(ideal.alphabet(), std::move(transversals)).ideal();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line, std::size_t line_no, std::size_t column_offset) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            unsigned char d = static_cast<unsigned char>(line[i]);
            if (!std::isalnum(d) && d != '_')
                throw ParseError(std::string("unexpected character '") + line[i] + "'", line_no,
                                 column_offset + i + 1);
            ++i;
        }
        out.push_back({std::string(line.substr(start, i - start)), column_offset + start + 1});
    }
    return out;
}

}  // namespace detail

/**
 * Parse the ideal file format: one generator per line, variables separated
 * by whitespace, '#' comment lines, blank lines ignored, and an optional
 * `vars: ...` line declaring extra alphabet variables.
 */
inline MonomialIdeal parse_ideal(std::string_view text) {
    std::vector<std::vector<detail::Token>> raw;
    std::vector<std::size_t> raw_lines;
    std::vector<std::string> names;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto body = detail::trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto indent = static_cast<std::size_t>(body.data() - line.data());
        if (body.starts_with("vars:")) {
            for (auto& tok : detail::tokenize(body.substr(5), line_no, indent + 5)) names.push_back(tok.text);
            continue;
        }
        auto toks = detail::tokenize(body, line_no, indent);
        for (std::size_t a = 0; a < toks.size(); ++a)
            for (std::size_t b = 0; b < a; ++b)
                if (toks[a].text == toks[b].text)
                    throw ParseError("variable '" + toks[a].text + "' repeated in one generator (not square-free)",
                                     line_no, toks[a].column);
        for (const auto& t : toks) names.push_back(t.text);
        raw.push_back(std::move(toks));
        raw_lines.push_back(line_no);
    }
    if (raw.empty()) throw ParseError("no generators", line_no, 1);
    Alphabet alphabet(std::move(names));
    std::vector<Monomial> gens;
    gens.reserve(raw.size());
    for (const auto& toks : raw) {
        Monomial m;
        for (const auto& t : toks) m.set(alphabet.index(t.text));
        gens.push_back(m);
    }
    return minimalize(alphabet, std::move(gens)).ideal();
}

/**
 * Single-letter shorthand: "efhk, aefgij, bchij" with every character a
 * variable. Extra alphabet letters may be passed in `extra`.
 */
inline MonomialIdeal parse_compact_ideal(std::string_view text, std::string_view extra = {}) {
    std::string file;
    if (!extra.empty()) {
        file += "vars:";
        for (char c : extra) (file += ' ') += c;
        file += '\n';
    }
    for (char c : text) {
        if (c == ',' || c == '(' || c == ')')
            file += '\n';
        else if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        else
            (file += c) += ' ';
    }
    return parse_ideal(file);
}

/// Inverse of parse_ideal; declares the full alphabet when it has
/// variables not used by any generator.
inline std::string format_ideal(const MonomialIdeal& ideal) {
    std::ostringstream out;
    if (ideal.support() != ideal.alphabet().all()) {
        out << "vars:";
        for (const auto& n : ideal.alphabet().names()) out << ' ' << n;
        out << '\n';
    }
    for (const auto& g : ideal.generators()) {
        bool first = true;
        for (const auto& n : variable_names(g, ideal.alphabet())) {
            out << (first ? "" : " ") << n;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace lhreg

#endif  // LHREG_MONOMIAL_HPP
