#ifndef LHREG_CORPUS_HPP
#define LHREG_CORPUS_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lhreg/analysis.hpp"
#include "lhreg/betti.hpp"
#include "lhreg/bounds.hpp"
#include "lhreg/hypergraph.hpp"
#include "lhreg/json.hpp"
#include "lhreg/monomial.hpp"
#include "lhreg/taylor.hpp"

namespace lhreg {

/// Where an expected value comes from: quoted from the published worked
/// examples, or computed here by independent means.
enum class Source { stated, derived };

inline std::string_view source_name(Source s) { return s == Source::stated ? "stated" : "derived"; }

/**
 * One expected integer. quantity is "reg", "pd", "X", "V", "edges", "open",
 * "dim", or a method id; an empty value means the method must not apply.
 */
struct Expectation {
    std::string quantity;
    std::optional<int> value;
    Source source = Source::stated;
};

/// A published value known to disagree with what the definitions give.
/// Reported next to the computed value, never failed.
struct Discrepancy {
    std::string quantity;
    int stated;
    std::string note;
};

struct CorpusEntry {
    std::string name;
    std::string ideal;  // compact form, one character per variable: "ab,acd,bef"
    std::vector<Expectation> expected;
    std::optional<std::string> dual;  // expected Alexander dual, compact form
    std::optional<Discrepancy> discrepancy;
};

inline std::vector<CorpusEntry> builtin_corpus() {
    using S = Source;
    return {
        {"one-open-vertex",
         "efh,aefgij,bchij,dghij",
         {{"X", 10, S::stated}, {"V", 4, S::stated}, {"edges", 7, S::stated}, {"open", 1, S::stated},
          {"isolated_open_vertices", 6, S::stated}, {"saturated", std::nullopt, S::stated}},
         std::nullopt, std::nullopt},
        {"saturated-four",
         "efhk,aefgij,bchij,dghij",
         {{"reg", 7, S::stated}, {"pd", 4, S::derived}, {"X", 11, S::stated}, {"V", 4, S::stated},
          {"saturated", 7, S::stated}, {"taylor", 7, S::derived}},
         std::nullopt, std::nullopt},
        {"saturated-four-relabeled",
         "efhk,cefgij,abhij,dghij",
         {{"reg", 7, S::stated}, {"X", 11, S::stated}, {"V", 4, S::stated}, {"saturated", 7, S::stated}},
         std::nullopt, std::nullopt},
        {"one-open-vertex-relabeled",
         "efh,cefgij,abhij,dghij",
         {{"reg", 6, S::stated}, {"X", 10, S::stated}, {"V", 4, S::stated}, {"isolated_open_vertices", 6, S::stated}},
         std::nullopt, std::nullopt},
        {"multi-label-open-vertex",
         "ab,acd,bef",
         {{"reg", 2, S::stated}, {"X", 6, S::stated}, {"V", 3, S::stated}, {"open", 1, S::stated},
          {"isolated_open_vertices", 3, S::stated}},
         std::nullopt, std::nullopt},
        {"triangle",
         "ab,ac,bc",
         {{"reg", 1, S::stated}, {"X", 3, S::stated}, {"V", 3, S::stated},
          {"isolated_open_vertices", std::nullopt, S::stated}, {"fill", 2, S::derived}, {"taylor", 1, S::derived},
          {"matching_lower", std::nullopt, S::derived}},
         std::nullopt, std::nullopt},
        {"fill-one-vertex",
         "di,ade,bij,fgij,efg,jh,ch",
         {{"reg", 4, S::stated}, {"X", 10, S::stated}, {"V", 7, S::stated}, {"fill", 4, S::stated}},
         std::nullopt, std::nullopt},
        {"fill-one-vertex-closed",
         "di,ade,bij,fgijk,efg,jh,ch",
         {{"X", 11, S::stated}, {"V", 7, S::stated}, {"isolated_open_vertices", 4, S::stated}},
         std::nullopt, std::nullopt},
        {"two-simple-edges",
         "ab,bcdef,ac,eg,fg,gh,hi",
         {{"reg", 5, S::stated}, {"X", 9, S::stated}, {"V", 7, S::stated}, {"isolated_simple_edges", 5, S::stated}},
         std::nullopt, std::nullopt},
        {"one-simple-edge",
         "abc,def,adg,beg",
         {{"reg", 4, S::stated}, {"fill", 4, S::stated}, {"isolated_simple_edges", 4, S::stated}},
         "bd,ae,cde,abf,adg,cdg,beg,ceg,afg,bfg,cfg", std::nullopt},
        {"complete-3-uniform",
         "abc,abd,acd,bcd",
         {{"reg", 2, S::derived}, {"X", 4, S::derived}, {"V", 4, S::derived}, {"fill", 3, S::derived},
          {"taylor", 2, S::derived}},
         std::nullopt,
         Discrepancy{"fill", 5, "|X| - |V| + t = 5 would need t = 5 > |V|; the minimum fill number is 3"}},
        {"matching-pair",
         "aef,bgh,ei,hk,cgij,dfjk",
         {{"reg", 5, S::stated}, {"X", 11, S::stated}, {"V", 6, S::stated}, {"dim", 1, S::derived},
          {"matching_lower", 5, S::stated}, {"matching_exact", 5, S::stated}},
         std::nullopt, std::nullopt},
        {"path-no-matching",
         "ab,bc,cde,ef,fghi,ij,jklm,mn,no",
         {{"reg", 5, S::stated}, {"X", 15, S::stated}, {"V", 9, S::stated}, {"dim", 1, S::stated},
          {"matching_lower", std::nullopt, S::stated}, {"matching_exact", std::nullopt, S::stated}},
         std::nullopt, std::nullopt},
        {"path-with-matching",
         "ab,bc,cdef,fg,ghi,ij,jklm,mn,no",
         {{"reg", 6, S::stated}, {"X", 15, S::stated}, {"V", 9, S::stated}, {"dim", 1, S::stated},
          {"matching_exact", 6, S::stated}},
         std::nullopt, std::nullopt},
        {"unlabeled-twin-small", "ac,bc", {{"reg", 1, S::derived}, {"edges", 3, S::derived}}, std::nullopt,
         std::nullopt},
        {"unlabeled-twin-large", "acd,bcd", {{"reg", 2, S::derived}, {"edges", 3, S::derived}}, std::nullopt,
         std::nullopt},
    };
}

// ---------------------------------------------------------------------------
// Verification

enum class CheckStatus { pass, fail, flagged };

struct CheckResult {
    std::string entry;
    std::string check;
    CheckStatus status;
    std::string detail;
};

struct CorpusReport {
    std::vector<CheckResult> checks;

    [[nodiscard]] std::size_t count(CheckStatus s) const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.status == s;
        return n;
    }
    [[nodiscard]] bool passed() const { return count(CheckStatus::fail) == 0; }
};

struct VerifyOptions {
    std::vector<FieldSpec> fields{FieldSpec{2}, FieldSpec{3}};  // first one supplies reg and pd
    unsigned threads = 1;
};

namespace detail {

inline std::string opt_string(const std::optional<int>& v) { return v ? std::to_string(*v) : "n/a"; }

inline std::optional<int> method_value(const BoundReport& r, std::string_view id) {
    for (auto m : kAllMethods)
        if (method_id(m) == id) return r.method(m).value;
    throw std::invalid_argument("unknown quantity " + std::string(id));
}

class EntryVerifier {
public:
    EntryVerifier(const CorpusEntry& entry, const VerifyOptions& options, CorpusReport& out)
        : entry_(entry), options_(options), out_(out) {}

    void run() {
        std::optional<MonomialIdeal> ideal;
        try {
            ideal = parse_compact_ideal(entry_.ideal);
        } catch (const std::exception& e) {
            record("parse", false, e.what());
            return;
        }
        const auto& I = *ideal;
        const auto h = build_hypergraph(I);
        const auto report = best_bounds(I);

        record("round-trip", ideal_of(h) == I && parse_ideal(format_ideal(I)) == I, I.to_string());

        std::vector<BettiTable> tables;
        for (const auto& field : options_.fields) {
            auto koszul = betti_table(I, {field, options_.threads});
            const auto p = std::to_string(field.characteristic());
            if (I.size() <= kMaxTaylorGenerators) {
                auto strand = taylor_strand_betti(I, field);
                record("oracles agree GF(" + p + ")", koszul == strand,
                       "reg " + std::to_string(koszul.regularity()) + " vs " + std::to_string(strand.regularity()));
            }
            tables.push_back(std::move(koszul));
        }
        const auto& betti = tables.front();
        const int reg = betti.regularity();
        const int pd = betti.projective_dimension();
        for (std::size_t k = 1; k < tables.size(); ++k) {
            const bool same = tables[k].regularity() == reg && tables[k].projective_dimension() == pd;
            record("characteristic " + std::to_string(options_.fields[0].characteristic()) + " vs " +
                       std::to_string(options_.fields[k].characteristic()),
                   same,
                   "reg " + std::to_string(reg) + "/" + std::to_string(tables[k].regularity()) + ", pd " +
                       std::to_string(pd) + "/" + std::to_string(tables[k].projective_dimension()));
        }
        record("reg and pd helpers", regularity(I, options_.fields[0]) == reg &&
                                         projective_dimension(I, options_.fields[0]) == pd,
               "reg " + std::to_string(reg) + ", pd " + std::to_string(pd));

        const auto lattice = lcm_lattice(I);
        bool in_lattice = true;
        for (const auto& e : betti.entries())
            if (e.i > 0 && std::find(lattice.begin(), lattice.end(), e.degree) == lattice.end()) in_lattice = false;
        record("betti degrees in lcm lattice", in_lattice, std::to_string(lattice.size()) + " lattice points");

        if (I.size() <= kMaxTaylorGenerators) {
            const bool minimal = is_taylor_minimal(I);
            record("saturated iff Taylor-minimal", minimal == is_saturated(h),
                   std::string("saturated ") + (is_saturated(h) ? "yes" : "no") + ", minimal " +
                       (minimal ? "yes" : "no"));
            const auto t = taylor_complex(I);
            bool ranks = true;
            std::size_t binom = 1;
            for (std::size_t i = 0; i <= I.size(); ++i) {
                ranks = ranks && t.rank(i) == binom;
                binom = binom * (I.size() - i) / (i + 1);
            }
            record("Taylor complex", ranks && t.boundary_squares_to_zero(), "d^2 = 0, rank T_i = C(mu, i)");
        }
        if (is_saturated(h)) {
            const auto f = saturated_regularity(h);
            record("saturated formula", f.regularity == reg && f.projective_dimension == pd,
                   "|X| - |V| = " + std::to_string(f.regularity) + ", |V| = " + std::to_string(f.projective_dimension));
        }

        check_direct_calls(I, h, report);

        for (const auto& t : judge_report(report, reg))
            record(std::string("relation ") + std::string(method_id(t.id)), t.holds,
                   std::string(kind_name(method_kind(t.id))) + " " + std::to_string(t.value) + " vs reg " +
                       std::to_string(reg));

        for (const auto& e : entry_.expected) {
            const auto actual = resolve(e.quantity, h, report, reg, pd);
            record(e.quantity, actual == e.value,
                   "expected " + opt_string(e.value) + ", got " + opt_string(actual) + " (" +
                       std::string(source_name(e.source)) + ")");
        }

        if (entry_.dual) {
            std::string letters;
            for (const auto& n : I.alphabet().names()) letters += n;
            const auto expected = parse_compact_ideal(*entry_.dual, letters);
            const auto dual = alexander_dual(I);
            record("alexander dual", dual == expected, dual.to_string());
        }

        if (entry_.discrepancy) {
            const auto& d = *entry_.discrepancy;
            const auto actual = resolve(d.quantity, h, report, reg, pd);
            out_.checks.push_back({entry_.name, d.quantity, CheckStatus::flagged,
                                   "stated " + std::to_string(d.stated) + ", computed " + opt_string(actual) + ": " +
                                       d.note});
        }
    }

private:
    void record(const std::string& check, bool ok, const std::string& detail) {
        out_.checks.push_back({entry_.name, check, ok ? CheckStatus::pass : CheckStatus::fail, detail});
    }

    static std::optional<int> resolve(const std::string& q, const LabeledHypergraph& h, const BoundReport& r,
                                      int reg, int pd) {
        if (q == "reg") return reg;
        if (q == "pd") return pd;
        if (q == "X") return static_cast<int>(h.label_count());
        if (q == "V") return static_cast<int>(h.vertex_count());
        if (q == "edges") return static_cast<int>(h.edges().size());
        if (q == "open") return static_cast<int>(open_vertices(h).count());
        if (q == "dim") return dimension(h);
        return method_value(r, q);
    }

    // Each bound operation called on its own must agree with the aggregated report.
    void check_direct_calls(const MonomialIdeal& I, const LabeledHypergraph& h, const BoundReport& r) {
        std::vector<std::pair<Method, std::optional<int>>> direct;
        if (I.size() <= 20) direct.emplace_back(Method::taylor, taylor_regularity_bound(I));
        if (is_saturated(h)) direct.emplace_back(Method::saturated, saturated_regularity(h).regularity);
        if (has_isolated_open_vertices(h)) direct.emplace_back(Method::isolated_open, iso_upper_bound(h));
        direct.emplace_back(Method::fill, fill_upper_bound(h));
        if (has_isolated_simple_edges(h)) direct.emplace_back(Method::isolated_simple, simple_edge_regularity(h));
        if (dimension(h) == 1) {
            auto w = matching_lower_bound(h);
            direct.emplace_back(Method::matching_lower, w ? std::optional<int>(w->value) : std::nullopt);
            direct.emplace_back(Method::matching_exact, matching_regularity(h));
        }
        bool ok = true;
        for (const auto& [m, v] : direct) ok = ok && r.method(m).value == v;
        record("report matches direct calls", ok, std::to_string(direct.size()) + " methods");
    }

    const CorpusEntry& entry_;
    const VerifyOptions& options_;
    CorpusReport& out_;
};

}  // namespace detail

inline CorpusReport verify_corpus(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options = {}) {
    if (options.fields.empty()) throw std::invalid_argument("verify_corpus: no field given");
    CorpusReport report;
    for (const auto& entry : corpus) detail::EntryVerifier(entry, options, report).run();
    return report;
}

inline std::string_view status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "ok";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::flagged: return "flag";
    }
    return "?";
}

/// One line per check, then a summary line.
inline std::string corpus_report_text(const CorpusReport& r) {
    std::ostringstream out;
    for (const auto& c : r.checks)
        out << '[' << status_name(c.status) << "] " << c.entry << ": " << c.check << ": " << c.detail << '\n';
    out << "checks: " << r.checks.size() << ", failed: " << r.count(CheckStatus::fail)
        << ", flagged: " << r.count(CheckStatus::flagged) << '\n';
    out << (r.passed() ? "verify: PASS" : "verify: FAIL") << '\n';
    return out.str();
}

inline Json corpus_report_json(const CorpusReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"entry", c.entry}, {"check", c.check}, {"status", status_name(c.status)}, {"detail", c.detail}});
    return Json{{"checks", std::move(checks)},
                {"failed", r.count(CheckStatus::fail)},
                {"flagged", r.count(CheckStatus::flagged)},
                {"passed", r.passed()}};
}

}  // namespace lhreg

#endif  // LHREG_CORPUS_HPP
