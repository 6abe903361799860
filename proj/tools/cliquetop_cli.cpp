// Command-line front end: build clique complexes, score simplices, run
// centrality filtrations and report Betti numbers.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cliquetop/cliquetop.hpp"

namespace fs = std::filesystem;
using namespace cliquetop;

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string input;
    int max_dim = 0;  // 0 = unbounded
    std::size_t max_simplices = 10'000'000;
    std::string measure;
    std::string thresholds = "auto";
    int homology_dim = 2;
    int level = 0;
    std::string out = ".";
    std::vector<std::string> formats;
    unsigned threads = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const RunConfig& cfg, const std::string& name, const std::string& content) {
    std::error_code ec;
    fs::create_directories(cfg.out, ec);
    const fs::path path = fs::path(cfg.out) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << content;
    std::cerr << "wrote " << path.string() << "\n";
}

bool wants(const RunConfig& cfg, const std::string& fmt) {
    return std::find(cfg.formats.begin(), cfg.formats.end(), fmt) != cfg.formats.end();
}

void default_formats(RunConfig& cfg, std::vector<std::string> fallback) {
    if (cfg.formats.empty()) cfg.formats = std::move(fallback);
}

/// Edge lists are built into clique complexes; JSON input is read as a stored complex.
SimplicialComplex load_complex(const RunConfig& cfg) {
    const std::string text = read_file(cfg.input);
    const auto first = text.find_first_not_of(" \t\r\n");
    try {
        if (first != std::string::npos && text[first] == '{') return io::complex_from_json(text);
        Graph g = parse_edge_list(text);
        if (g.vertex_count() == 0) throw DataError(cfg.input + ": empty graph");
        if (g.self_loops_dropped() > 0) {
            std::cerr << "warning: dropped " << g.self_loops_dropped() << " self-loop(s)\n";
        }
        CliqueComplexOptions opts;
        if (cfg.max_dim > 0) opts.max_dim = cfg.max_dim;
        opts.max_simplices = cfg.max_simplices;
        return clique_complex(g, opts);
    } catch (const ParseError& e) {
        throw DataError(cfg.input + ": " + e.what());
    } catch (const ComplexTooLarge& e) {
        throw DataError(cfg.input + ": " + e.what());
    }
}

std::string summary(const SimplicialComplex& c) {
    const auto f = c.f_vector();
    std::string out;
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k) out += ", ";
        out += std::to_string(f[k]) + (k == 0 ? " vertices" : " " + std::to_string(k) + "-simplices");
    }
    return out;
}

Measure filtration_measure(const std::string& name) {
    if (name == "degree") return Measure::degree;
    if (name == "gcc") return Measure::gcc_normalized;
    if (name == "betweenness") return Measure::betweenness_normalized;
    throw UsageError("unknown measure '" + name + "' (expected degree, gcc or betweenness)");
}

std::optional<std::vector<double>> parse_thresholds(const std::string& text) {
    if (text == "auto") return std::nullopt;
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        double v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size()) {
            throw UsageError("bad threshold '" + tok + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("empty threshold list");
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (!(out[i] < out[i - 1])) throw UsageError("thresholds must be strictly decreasing");
    }
    return out;
}

int clamp_homology_dim(const RunConfig& cfg, const SimplicialComplex& c) {
    if (cfg.homology_dim < 0) throw UsageError("--homology-dim must be non-negative");
    const int top = std::max(c.dimension(), 0);
    if (cfg.homology_dim > top) {
        std::cerr << "warning: homology dimension " << cfg.homology_dim << " exceeds complex dimension " << top
                  << "; clamped\n";
        return top;
    }
    return cfg.homology_dim;
}

void print_betti_row(std::ostream& os, const std::string& head, const BettiVector& b) {
    os << head << " [";
    for (std::size_t k = 0; k < b.size(); ++k) os << (k ? "," : "") << b[k];
    os << "]\n";
}

int cmd_build(RunConfig cfg) {
    const auto c = load_complex(cfg);
    write_file(cfg, "complex.json", io::complex_to_json(c));
    std::cout << summary(c) << "\n";
    return 0;
}

void write_centrality(const RunConfig& cfg, const SimplicialComplex& c, const std::string& name) {
    ScoreMap raw;
    std::optional<ScoreMap> norm;
    if (name == "degree") {
        raw = degree_scores(c);
    } else if (name == "gcc") {
        raw = gcc_scores(c);
        norm = normalize_gcc(raw);
    } else if (name == "betweenness") {
        raw = betweenness_scores(c, false, cfg.threads);
        norm = betweenness_scores(c, true, cfg.threads);
    } else {
        throw UsageError("unknown measure '" + name + "' (expected degree, gcc or betweenness)");
    }
    const ScoreMap* np = norm ? &*norm : nullptr;
    if (wants(cfg, "csv")) write_file(cfg, "scores_" + name + ".csv", io::scores_to_csv(c, raw, np));
    if (wants(cfg, "json")) write_file(cfg, "scores_" + name + ".json", io::scores_to_json(c, raw, np));
}

int cmd_centrality(RunConfig cfg) {
    if (cfg.measure.empty()) throw UsageError("--measure is required");
    filtration_measure(cfg.measure);
    default_formats(cfg, {"csv", "json"});
    const auto c = load_complex(cfg);
    write_centrality(cfg, c, cfg.measure);
    return 0;
}

void write_filtration(const RunConfig& cfg, const SimplicialComplex& c, const std::string& name) {
    FiltrationOptions opts;
    opts.homology_dim = clamp_homology_dim(cfg, c);
    opts.threads = cfg.threads;
    const auto report = run_filtration(c, filtration_measure(name), parse_thresholds(cfg.thresholds), opts);

    std::cout << "# measure " << name << " (" << to_string(report.measure) << "), coefficients Z/2\n";
    if (!report.note.empty()) std::cout << "# " << report.note << "\n";
    for (const auto& s : report.steps) print_betti_row(std::cout, "delta=" + io::format_number(s.threshold), s.betti);

    if (wants(cfg, "json")) write_file(cfg, "filtration_" + name + ".json", io::report_to_json(c, report));
    if (wants(cfg, "csv")) write_file(cfg, "filtration_" + name + ".csv", io::report_to_csv(report));
    if (wants(cfg, "tsv")) write_file(cfg, "filtration_" + name + ".tsv", io::report_to_tsv(report));
}

int cmd_filtrate(RunConfig cfg) {
    if (cfg.measure.empty()) throw UsageError("--measure is required");
    filtration_measure(cfg.measure);
    parse_thresholds(cfg.thresholds);
    default_formats(cfg, {"json", "csv", "tsv"});
    const auto c = load_complex(cfg);
    write_filtration(cfg, c, cfg.measure);
    return 0;
}

int cmd_betti(RunConfig cfg) {
    default_formats(cfg, {});
    const auto c = load_complex(cfg);
    const auto b = betti_numbers(c, clamp_homology_dim(cfg, c));
    print_betti_row(std::cout, "betti (Z/2)", b);
    if (wants(cfg, "json")) write_file(cfg, "betti.json", io::betti_to_json(c, b));
    if (wants(cfg, "csv")) write_file(cfg, "betti.csv", io::betti_to_csv(b));
    return 0;
}

int cmd_report(RunConfig cfg) {
    parse_thresholds(cfg.thresholds);
    std::vector<std::string> measures = {"degree", "betweenness", "gcc"};
    if (!cfg.measure.empty()) {
        filtration_measure(cfg.measure);
        measures = {cfg.measure};
    }
    default_formats(cfg, {"json", "csv", "tsv"});
    const auto c = load_complex(cfg);
    std::cout << summary(c) << "\n";
    write_file(cfg, "complex.json", io::complex_to_json(c));
    for (const auto& m : measures) {
        write_centrality(cfg, c, m);
        write_filtration(cfg, c, m);
    }
    return 0;
}

int cmd_adjacency(RunConfig cfg) {
    default_formats(cfg, {"json"});
    const auto c = load_complex(cfg);
    if (cfg.level < 0 || cfg.level > c.dimension()) {
        throw UsageError("--level must lie in 0.." + std::to_string(c.dimension()));
    }
    const auto adj = weighted_adjacency_matrix(c, cfg.level);
    const std::string stem = "adjacency_" + std::to_string(cfg.level);
    if (wants(cfg, "json")) write_file(cfg, stem + ".json", io::adjacency_to_json(c, adj));
    if (wants(cfg, "csv")) {
        try {
            write_file(cfg, stem + ".csv", io::adjacency_to_csv(c, adj));
        } catch (const ArgumentError& e) {
            throw DataError(e.what());
        }
    }
    std::cout << "level " << cfg.level << ": " << adj.size() << " simplices, " << adj.nonzero_count() / 2
              << " adjacent pairs\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clique complexes, generalised centralities and centrality filtrations"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool with_measure) {
        sub->add_option("--input", cfg.input, "edge list or complex JSON")->required();
        sub->add_option("--max-dim", cfg.max_dim, "largest clique-complex dimension (0 = unbounded)")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--max-simplices", cfg.max_simplices, "abort when the complex grows past this size");
        sub->add_option("--out", cfg.out, "output directory");
        sub->add_option("--format", cfg.formats, "output formats")
            ->check(CLI::IsMember({"json", "csv", "tsv"}))
            ->delimiter(',');
        sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
        sub->add_option("--homology-dim", cfg.homology_dim, "largest Betti number reported");
        if (with_measure) {
            sub->add_option("--measure", cfg.measure, "degree | gcc | betweenness");
            sub->add_option("--thresholds", cfg.thresholds, "\"a,b,c\" strictly decreasing, or auto");
        }
    };

    auto* build = app.add_subcommand("build", "build the clique complex and write complex.json");
    add_common(build, false);
    auto* centrality = app.add_subcommand("centrality", "score every simplex with one measure");
    add_common(centrality, true);
    auto* filtrate = app.add_subcommand("filtrate", "run a centrality filtration and report Betti numbers");
    add_common(filtrate, true);
    auto* betti = app.add_subcommand("betti", "Betti numbers of the whole complex");
    add_common(betti, false);
    auto* report = app.add_subcommand("report", "complex, centralities and filtrations in one run");
    add_common(report, true);
    auto* adjacency = app.add_subcommand("adjacency", "export the weighted adjacency matrix of one level");
    add_common(adjacency, false);
    adjacency->add_option("--level", cfg.level, "simplex dimension k")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*build) return cmd_build(cfg);
        if (*centrality) return cmd_centrality(cfg);
        if (*filtrate) return cmd_filtrate(cfg);
        if (*betti) return cmd_betti(cfg);
        if (*report) return cmd_report(cfg);
        if (*adjacency) return cmd_adjacency(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDataError;
    }
    return kUsageError;
}
