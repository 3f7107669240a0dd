// cssent: construct CSS codes, compute exact entanglement entropies, and run
// the scaling/discrepancy experiments. All randomness flows from --seed; for
// identical arguments and input files the output is byte-identical.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "cssent/css_code.hpp"
#include "cssent/entropy.hpp"
#include "cssent/errors.hpp"
#include "cssent/experiments.hpp"
#include "cssent/graph.hpp"
#include "cssent/rng.hpp"
#include "cssent/sampling.hpp"

namespace {

using namespace cssent;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::map<std::string, std::string> parse_params(const std::string& spec) {
    std::map<std::string, std::string> params;
    std::stringstream stream(spec);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParameterError("bad --params item '" + item + "' (expected key=value)");
        params[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return params;
}

std::uint64_t param_u64(const std::map<std::string, std::string>& params, const std::string& key,
                        std::optional<std::uint64_t> fallback = std::nullopt) {
    auto it = params.find(key);
    if (it == params.end()) {
        if (fallback) return *fallback;
        throw ParameterError("missing parameter '" + key + "'");
    }
    try {
        return std::stoull(it->second);
    } catch (const std::exception&) {
        throw ParameterError("parameter '" + key + "' is not a number: " + it->second);
    }
}

std::vector<std::size_t> parse_subsystem(const std::string& spec) {
    std::string text = spec;
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw IoError("cannot open subsystem file: " + spec.substr(1));
        std::stringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    std::vector<std::size_t> indices;
    std::string item;
    std::stringstream stream(text);
    while (std::getline(stream, item, ',')) {
        std::stringstream inner(item); // also splits on whitespace/newlines
        std::string token;
        while (inner >> token) {
            try {
                indices.push_back(std::stoull(token));
            } catch (const std::exception&) {
                throw ParameterError("bad subsystem index '" + token + "'");
            }
        }
    }
    std::sort(indices.begin(), indices.end());
    return indices;
}

std::vector<std::size_t> parse_grid(const std::string& spec) {
    std::size_t start = 0, stop = 0, step = 0;
    if (std::sscanf(spec.c_str(), "%zu:%zu:%zu", &start, &stop, &step) != 3 || step == 0)
        throw ParameterError("bad --grid '" + spec + "' (expected start:stop:step)");
    std::vector<std::size_t> grid;
    for (std::size_t v = start; v <= stop; v += step) grid.push_back(v);
    if (grid.empty()) throw ParameterError("--grid is empty");
    return grid;
}

std::string weight_histogram(const std::map<std::size_t, std::size_t>& hist) {
    std::string out;
    for (const auto& [weight, count] : hist) {
        if (!out.empty()) out += ';';
        out += std::to_string(weight) + ":" + std::to_string(count);
    }
    return out;
}

struct Options {
    std::string family, params, code_path, out_path, subsystem, logical = "none";
    std::string method = "rank", mode;
    bool duplicate = false;
    std::size_t size = 0, repeats = 20, samples = 200, trials = 50;
    std::string grid;
    std::uint64_t seed = 0;
    int workers = 1;
};

int cmd_construct(const Options& opt) {
    const auto params = parse_params(opt.params);
    CssCode code;
    if (opt.family == "toric") {
        code = build_toric({static_cast<std::size_t>(param_u64(params, "d"))});
    } else if (opt.family == "bb") {
        BbParams p;
        p.l = param_u64(params, "l");
        p.m = param_u64(params, "m");
        p.a = param_u64(params, "a");
        p.b = param_u64(params, "b");
        p.c = param_u64(params, "c");
        p.d = param_u64(params, "d");
        p.e = param_u64(params, "e");
        p.f = param_u64(params, "f");
        code = build_bb(p);
    } else if (opt.family == "qc") {
        QcParams p;
        p.P = param_u64(params, "P");
        p.sigma = param_u64(params, "sigma");
        p.tau = param_u64(params, "tau");
        p.J = param_u64(params, "J");
        p.K = param_u64(params, "K");
        p.r = param_u64(params, "r", 0);
        code = build_qc(p);
    } else {
        throw ParameterError("unknown family '" + opt.family + "'");
    }
    save_css(code, opt.out_path);
    std::cout << "name=" << code.name << " n=" << code.n << " k=" << code.k << '\n';
    return 0;
}

int cmd_validate(const Options& opt) {
    const CssCode code = load_css(opt.code_path);
    const ValidationReport report = validate(code);
    std::cout << "commutation=" << (report.commutation_ok ? "PASS" : "FAIL") << " n=" << code.n
              << " k=" << report.recomputed_k << " hx_rows=" << code.hx.rows()
              << " hz_rows=" << code.hz.rows()
              << " hx_row_weights=" << weight_histogram(report.hx_row_weights)
              << " hz_row_weights=" << weight_histogram(report.hz_row_weights)
              << " hx_col_weights=" << weight_histogram(report.hx_col_weights)
              << " hz_col_weights=" << weight_histogram(report.hz_col_weights) << '\n';
    return report.ok() ? 0 : kExitDomain;
}

int cmd_entropy(const Options& opt) {
    const CssCode code = load_css(opt.code_path);
    const Bipartition part(code.n, parse_subsystem(opt.subsystem));

    std::optional<LogicalConstraint> constraints;
    if (opt.logical == "all") {
        constraints = LogicalConstraint{logical_z_operators(code)};
    } else if (opt.logical != "none") {
        std::ifstream in(opt.logical);
        if (!in) throw IoError("cannot open logical row file: " + opt.logical);
        constraints = LogicalConstraint{BitMatrix::parse_text(in)};
    }

    if (opt.method == "oracle") {
        const Spectrum spectrum = constraints ? dense_oracle(code, part, *constraints)
                                              : dense_oracle(code, part);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", entropy_bits(spectrum));
        std::cout << "S_A=" << buf << '\n';
        return 0;
    }
    std::size_t s = 0;
    if (opt.method == "rank") {
        s = constraints ? entropy_rank(code.hz, part, *constraints) : entropy_rank(code.hz, part);
    } else if (opt.method == "canonical") {
        const BitMatrix h = constraints ? vstack(code.hz, constraints->rows) : code.hz;
        s = rank(canonicalize(h, part).wa);
    } else if (opt.method == "identity") {
        const BitMatrix h = constraints ? vstack(code.hz, constraints->rows) : code.hz;
        s = entropy_codespace_identity(h, part);
    } else {
        throw ParameterError("unknown method '" + opt.method + "'");
    }
    std::cout << "S_A=" << s << '\n';
    return 0;
}

int cmd_graph(const Options& opt) {
    const CssCode code = load_css(opt.code_path);
    LabeledGraph g;
    if (opt.duplicate) {
        g = incidence_graph(split_columns(code.hz));
    } else {
        g = incidence_graph(code.hz);
    }
    save_graph(g, opt.out_path);
    std::cout << "vertices=" << g.vertex_count << " edges=" << g.edges.size() << '\n';
    return 0;
}

int cmd_sample(const Options& opt) {
    const CssCode code = load_css(opt.code_path);
    auto print = [](const Bipartition& part) {
        for (std::size_t i = 0; i < part.a_set.size(); ++i) {
            if (i) std::cout << ',';
            std::cout << part.a_set[i];
        }
        std::cout << '\n';
    };
    if (opt.mode == "random") {
        print(random_subsystem(code.n, opt.size, opt.seed));
    } else if (opt.mode == "grown") {
        for (const Bipartition& part : grown_subsystem_sequence(code, opt.seed)) print(part);
    } else {
        throw ParameterError("unknown sample mode '" + opt.mode + "'");
    }
    return 0;
}

int cmd_scan(const Options& opt) {
    const CssCode code = load_css(opt.code_path);
    if (opt.mode == "scaling") {
        const ScalingResult result = scaling_scan(code, opt.repeats, opt.seed, opt.workers);
        write_csv(code.name, code.n, result.records, &result.fit, opt.out_path);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", result.fit.gamma);
        std::cout << "records=" << result.records.size() << " gamma=" << buf << '\n';
    } else if (opt.mode == "discrepancy") {
        const auto grid = parse_grid(opt.grid);
        const auto records = discrepancy_scan(code, grid, opt.samples, opt.seed, opt.workers);
        write_csv(code.name, code.n, records, nullptr, opt.out_path);
        std::cout << "records=" << records.size() << '\n';
    } else {
        throw ParameterError("unknown scan mode '" + opt.mode + "'");
    }
    return 0;
}

int cmd_oracle_check(const Options& opt) {
    const CssCode code = load_css(opt.code_path);
    std::size_t agree = 0;
    for (std::size_t t = 0; t < opt.trials; ++t) {
        SplitMix64 rng(derive_seed(opt.seed, t));
        const std::size_t n_a = rng.bounded(code.n + 1);
        const Bipartition part = random_subsystem(code.n, n_a, rng.next());
        const std::size_t by_rank = entropy_rank(code.hz, part);
        const double by_oracle = entropy_bits(dense_oracle(code, part));
        if (std::abs(by_oracle - static_cast<double>(by_rank)) < 1e-9) ++agree;
    }
    std::cout << "agree=" << agree << "/" << opt.trials << '\n';
    return agree == opt.trials ? 0 : kExitDomain;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"CSS code entanglement entropy toolkit"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* construct = app.add_subcommand("construct", "build a code and write a .css file");
    construct->add_option("--family", opt.family, "toric|bb|qc")->required();
    construct->add_option("--params", opt.params, "comma list of key=value parameters")->required();
    construct->add_option("--out", opt.out_path, "output .css path")->required();

    CLI::App* validate_cmd = app.add_subcommand("validate", "check a .css file");
    validate_cmd->add_option("--code", opt.code_path)->required();

    CLI::App* entropy_cmd = app.add_subcommand("entropy", "entropy of one bipartition");
    entropy_cmd->add_option("--code", opt.code_path)->required();
    entropy_cmd->add_option("--subsystem", opt.subsystem, "comma list of qubit indices or @file")
        ->required();
    entropy_cmd->add_option("--logical", opt.logical, "all|none|<row-file>");
    entropy_cmd->add_option("--method", opt.method, "rank|canonical|oracle|identity");

    CLI::App* graph_cmd = app.add_subcommand("graph", "export the incidence graph");
    graph_cmd->add_option("--code", opt.code_path)->required();
    graph_cmd->add_flag("--duplicate", opt.duplicate, "split columns of weight > 2 first");
    graph_cmd->add_option("--out", opt.out_path)->required();

    CLI::App* sample_cmd = app.add_subcommand("sample", "emit subsystem index lists");
    sample_cmd->add_option("--code", opt.code_path)->required();
    sample_cmd->add_option("--mode", opt.mode, "random|grown")->required();
    sample_cmd->add_option("--size", opt.size, "subsystem size for random mode");
    sample_cmd->add_option("--seed", opt.seed);

    CLI::App* scan_cmd = app.add_subcommand("scan", "scaling or discrepancy experiment");
    scan_cmd->add_option("--code", opt.code_path)->required();
    scan_cmd->add_option("--mode", opt.mode, "scaling|discrepancy")->required();
    scan_cmd->add_option("--repeats", opt.repeats, "grown-sequence repeats (scaling)");
    scan_cmd->add_option("--samples", opt.samples, "samples per grid point (discrepancy)");
    scan_cmd->add_option("--grid", opt.grid, "start:stop:step subsystem sizes (discrepancy)");
    scan_cmd->add_option("--seed", opt.seed);
    scan_cmd->add_option("--out", opt.out_path)->required();
    scan_cmd->add_option("--workers", opt.workers, "parallel sampling threads");
    scan_cmd->set_config("--config", "", "key = value file mirroring the flags");

    CLI::App* oracle_cmd = app.add_subcommand("oracle-check", "rank formula vs dense oracle");
    oracle_cmd->add_option("--code", opt.code_path)->required();
    oracle_cmd->add_option("--trials", opt.trials);
    oracle_cmd->add_option("--seed", opt.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (construct->parsed()) return cmd_construct(opt);
        if (validate_cmd->parsed()) return cmd_validate(opt);
        if (entropy_cmd->parsed()) return cmd_entropy(opt);
        if (graph_cmd->parsed()) return cmd_graph(opt);
        if (sample_cmd->parsed()) return cmd_sample(opt);
        if (scan_cmd->parsed()) return cmd_scan(opt);
        if (oracle_cmd->parsed()) return cmd_oracle_check(opt);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}
