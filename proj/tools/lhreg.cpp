// lhreg: regularity bounds for square-free monomial ideals from their labeled hypergraphs.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "lhreg/analysis.hpp"
#include "lhreg/corpus.hpp"
#include "lhreg/random_ideal.hpp"
#include "lhreg/render.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kMismatch = 2, kCap = 3 };

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

lhreg::MonomialIdeal load_ideal(const std::string& path) {
    try {
        return lhreg::parse_ideal(read_file(path));
    } catch (const lhreg::ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

lhreg::FieldSpec field_of(unsigned p) {
    try {
        return lhreg::FieldSpec(p);
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--field", e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regularity bounds for square-free monomial ideals via labeled hypergraphs"};
    app.require_subcommand(1);

    std::string path;
    unsigned field = 2;
    unsigned threads = 1;
    bool json = false;
    bool no_oracle = false;

    auto* analyze = app.add_subcommand("analyze", "Bounds, oracle regularity and tightness for an ideal file");
    analyze->add_option("file", path, "Ideal file")->required();
    analyze->add_option("--field", field, "Prime characteristic of the coefficient field")->capture_default_str();
    analyze->add_flag("--no-oracle", no_oracle, "Skip the exact Betti computation");
    analyze->add_flag("--json", json, "Emit JSON");
    analyze->add_option("--threads", threads, "Oracle worker threads (0 = all cores)")->capture_default_str();

    auto* verify = app.add_subcommand("verify-paper", "Check the built-in corpus of worked examples");
    verify->add_flag("--json", json, "Emit JSON");

    lhreg::SweepOptions sweep;
    auto* random = app.add_subcommand("random", "Seeded sweep over random ideals");
    random->add_option("--vars", sweep.vars, "Number of variables")->required();
    random->add_option("--gens", sweep.gens, "Number of minimal generators")->required();
    random->add_option("--count", sweep.count, "Number of ideals")->required();
    random->add_option("--seed", sweep.seed, "Generator seed")->required();
    random->add_option("--density", sweep.density, "Probability that a variable divides a generator")
        ->capture_default_str();
    random->add_option("--field", field, "Prime characteristic of the coefficient field")->capture_default_str();
    random->add_flag("--no-oracle", no_oracle, "Skip the exact Betti computation");
    random->add_flag("--json", json, "Emit JSON");

    std::string format = "dot";
    std::string out_path;
    auto* render = app.add_subcommand("render", "Draw the labeled hypergraph of an ideal file");
    render->add_option("file", path, "Ideal file")->required();
    render->add_option("--format", format, "dot or tikz")->capture_default_str();
    render->add_option("--out", out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze) {
            const auto ideal = load_ideal(path);
            auto a = lhreg::analyze(ideal, {field_of(field), !no_oracle, threads});
            if (json)
                std::cout << lhreg::analysis_json(a).dump(2) << '\n';
            else
                std::cout << lhreg::analysis_text(a);
            if (!a.warning.empty()) std::cerr << "warning: " << a.warning << '\n';
            return kOk;
        }
        if (*verify) {
            const auto report = lhreg::verify_corpus(lhreg::builtin_corpus());
            if (json)
                std::cout << lhreg::corpus_report_json(report).dump(2) << '\n';
            else
                std::cout << lhreg::corpus_report_text(report);
            return report.passed() ? kOk : kMismatch;
        }
        if (*random) {
            sweep.analyze = {field_of(field), !no_oracle, 1};
            const auto result = lhreg::random_sweep(sweep);
            if (json)
                std::cout << lhreg::sweep_json(result).dump(2) << '\n';
            else
                std::cout << lhreg::sweep_text(result);
            return result.violations() == 0 ? kOk : kMismatch;
        }
        if (*render) {
            const auto fmt = lhreg::parse_render_format(format);
            const auto text = lhreg::render(lhreg::build_hypergraph(load_ideal(path)), fmt);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!(out << text)) throw std::runtime_error("cannot write " + out_path);
            }
            return kOk;
        }
    } catch (const lhreg::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
