#ifndef LHREG_RANDOM_IDEAL_HPP
#define LHREG_RANDOM_IDEAL_HPP

#include <cstdint>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lhreg/analysis.hpp"
#include "lhreg/monomial.hpp"

namespace lhreg {

inline constexpr std::size_t kMaxRandomOracleVars = 14;
inline constexpr std::size_t kMaxRandomOracleGens = 10;

/// Variable names a..z, or x1..xn past 26 variables.
inline Alphabet default_alphabet(std::size_t vars) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vars; ++i)
        names.push_back(vars <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i + 1));
    return Alphabet(std::move(names));
}

/// C(n, floor(n/2)), saturating at 2^62: the largest antichain of subsets.
inline std::uint64_t max_antichain(std::size_t n) {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < n / 2; ++i) {
        c = c * (n - i) / (i + 1);
        if (c > (std::uint64_t{1} << 62)) return std::uint64_t{1} << 62;
    }
    return c;
}

/**
 * Seeded sampler for minimally generated square-free ideals with exactly
 * `gens` generators over `vars` variables. Each draw takes `gens` nonempty
 * supports, every variable present independently with probability
 * `density`. A support equal to, dividing or divisible by one already
 * kept is redrawn; after 256 straight rejections the partial draw is
 * dropped and started over. Only the raw 64-bit output of
 * mt19937_64 is used, so sequences match on every platform.
 */
class RandomIdealSampler {
public:
    RandomIdealSampler(std::size_t vars, std::size_t gens, std::uint64_t seed, double density = 0.5)
        : alphabet_(default_alphabet(vars)), gens_(gens), density_(density), rng_(seed) {
        if (vars == 0 || vars > kMaxVariables)
            throw std::invalid_argument("vars must be in 1.." + std::to_string(kMaxVariables));
        if (gens == 0) throw std::invalid_argument("gens must be positive");
        if (!(density > 0.0 && density <= 1.0)) throw std::invalid_argument("density must be in (0, 1]");
        if (gens > max_antichain(vars))
            throw std::invalid_argument("no " + std::to_string(gens) + " pairwise non-dividing monomials in " +
                                        std::to_string(vars) + " variables");
    }

    [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }

    /// Draws until an antichain comes up; gives up after max_attempts supports.
    MonomialIdeal next(std::size_t max_attempts = 1'000'000) {
        std::vector<Monomial> gens;
        std::size_t misses = 0;
        for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
            const auto m = support();
            if (comparable(gens, m)) {
                if (++misses == 256) {
                    gens.clear();
                    misses = 0;
                }
                continue;
            }
            misses = 0;
            gens.push_back(m);
            if (gens.size() == gens_) return minimalize(alphabet_, std::move(gens)).ideal();
        }
        throw CapExceeded("random sampler: no valid draw in " + std::to_string(max_attempts) + " attempts");
    }

private:
    bool coin() {
        const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        return u < density_;
    }

    Monomial support() {
        while (true) {
            Monomial m;
            for (std::size_t v = 0; v < alphabet_.size(); ++v)
                if (coin()) m.set(v);
            if (!m.empty()) return m;
        }
    }

    static bool comparable(const std::vector<Monomial>& gens, const Monomial& m) {
        for (const auto& g : gens)
            if (g.subset_of(m) || m.subset_of(g)) return true;
        return false;
    }

    Alphabet alphabet_;
    std::size_t gens_;
    double density_;
    std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Sweeps

struct MethodStats {
    Method id;
    std::size_t applicable = 0;
    std::size_t tight = 0;
    std::size_t violations = 0;
    long long slack_sum = 0;

    [[nodiscard]] double mean_slack() const {
        return applicable ? static_cast<double>(slack_sum) / static_cast<double>(applicable) : 0.0;
    }
};

struct SweepOptions {
    std::size_t vars = 6;
    std::size_t gens = 4;
    std::size_t count = 100;
    std::uint64_t seed = 0;
    double density = 0.5;
    AnalyzeOptions analyze;
};

struct Sweep {
    std::vector<Analysis> instances;
    std::vector<MethodStats> stats;  // counted only over instances with an oracle value

    [[nodiscard]] std::size_t violations() const {
        std::size_t n = 0;
        for (const auto& s : stats) n += s.violations;
        return n;
    }
};

inline Sweep random_sweep(const SweepOptions& o) {
    if (o.analyze.oracle && (o.vars > kMaxRandomOracleVars || o.gens > kMaxRandomOracleGens))
        throw CapExceeded("oracle sweeps are limited to " + std::to_string(kMaxRandomOracleVars) + " variables and " +
                          std::to_string(kMaxRandomOracleGens) + " generators");
    RandomIdealSampler sampler(o.vars, o.gens, o.seed, o.density);
    Sweep sweep;
    for (auto m : kAllMethods) sweep.stats.push_back({m});
    for (std::size_t k = 0; k < o.count; ++k) {
        sweep.instances.push_back(analyze(sampler.next(), o.analyze));
        for (const auto& t : sweep.instances.back().tightness) {
            auto& s = sweep.stats[static_cast<std::size_t>(t.id)];
            ++s.applicable;
            s.tight += t.holds && t.slack == 0;
            s.violations += !t.holds;
            s.slack_sum += t.slack;
        }
    }
    return sweep;
}

inline std::string fixed2(double x) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << x;
    return out.str();
}

inline std::string sweep_text(const Sweep& s) {
    std::ostringstream out;
    for (std::size_t k = 0; k < s.instances.size(); ++k) {
        const auto& a = s.instances[k];
        out << '#' << k + 1 << ' ' << a.report.ideal.to_string() << "  X-V=" << x_minus_v(a.hypergraph)
            << " upper=" << a.report.best_upper.value << '(' << method_id(a.report.best_upper.id) << ')';
        if (a.report.best_lower)
            out << " lower=" << a.report.best_lower->value << '(' << method_id(a.report.best_lower->id) << ')';
        if (a.betti) out << " reg=" << a.betti->regularity() << " pd=" << a.betti->projective_dimension();
        for (const auto& t : a.tightness)
            if (!t.holds) out << " VIOLATED:" << method_id(t.id);
        if (!a.warning.empty()) out << " warning: " << a.warning;
        out << '\n';
    }
    out << std::left << std::setw(24) << "method" << std::right << std::setw(11) << "applicable" << std::setw(7)
        << "tight" << std::setw(12) << "violations" << std::setw(12) << "mean_slack" << '\n';
    for (const auto& st : s.stats)
        out << std::left << std::setw(24) << method_id(st.id) << std::right << std::setw(11) << st.applicable
            << std::setw(7) << st.tight << std::setw(12) << st.violations << std::setw(12) << fixed2(st.mean_slack())
            << '\n';
    out << "violations: " << s.violations() << '\n';
    return out.str();
}

inline Json sweep_json(const Sweep& s) {
    Json instances = Json::array();
    for (const auto& a : s.instances) instances.push_back(analysis_json(a));
    Json stats = Json::array();
    for (const auto& st : s.stats)
        stats.push_back({{"id", method_id(st.id)},
                         {"applicable", st.applicable},
                         {"tight", st.tight},
                         {"violations", st.violations},
                         {"mean_slack", st.mean_slack()}});
    return Json{{"instances", std::move(instances)}, {"aggregate", std::move(stats)}, {"violations", s.violations()}};
}

}  // namespace lhreg

#endif  // LHREG_RANDOM_IDEAL_HPP
