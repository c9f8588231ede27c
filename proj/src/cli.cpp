#include "revinv/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>

#include <CLI11.hpp>

#include "revinv/packed.hpp"
#include "revinv/report.hpp"

namespace revinv {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string format = "text";
    std::size_t max_inputs = kDefaultInputCap;
    int workers = 0;
    std::string gates = "all";
    std::uint64_t seed = 0;
};

struct CliError {
    int code;
    std::string message;
};

Circuit load_checked(const std::string& path) {
    try {
        auto c = load_real(path);
        c.validate();
        return c;
    } catch (const ParseError& e) {
        const std::string where = e.line() ? path + ":" + std::to_string(e.line()) : path;
        throw CliError{kExitInvalid, where + ": " + e.detail()};
    } catch (const std::exception& e) {
        throw CliError{kExitInvalid, path + ": " + e.what()};
    }
}

AnalysisOptions analysis_options(const RunConfig& cfg, bool natural, bool artificial) {
    AnalysisOptions opt;
    try {
        opt.library = select_gate_library(cfg.gates);
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitUsage, e.what()};
    }
    opt.cap = cfg.max_inputs;
    opt.workers = cfg.workers;
    opt.natural = natural;
    opt.artificial = artificial;
    return opt;
}

int cmd_validate(const RunConfig& cfg, const std::string& path, std::ostream& out) {
    const auto c = load_checked(path);
    if (cfg.format == "json") {
        out << json{{"circuit", c.name},
                    {"gates", c.num_gates()},
                    {"wires", c.num_wires()},
                    {"garbage", c.garbage_count()},
                    {"free_inputs", free_input_count(c)}}
                   .dump(2)
            << '\n';
    } else if (cfg.format == "csv") {
        out << "circuit,gates,wires,garbage,free_inputs\n"
            << c.name << ',' << c.num_gates() << ',' << c.num_wires() << ',' << c.garbage_count() << ','
            << free_input_count(c) << '\n';
    } else {
        out << "gates=" << c.num_gates() << " wires=" << c.num_wires() << " garbage=" << c.garbage_count() << '\n';
    }
    return kExitOk;
}

int cmd_truth(const RunConfig& cfg, const std::string& path, std::ostream& out) {
    const auto c = load_checked(path);
    TruthTable t;
    try {
        t = simulate_exhaustive_packed(c, cfg.max_inputs, cfg.workers);
    } catch (const InputCapExceeded& e) {
        throw CliError{kExitInvalid, e.what()};
    }
    auto bits = [&](const StateVector& s) {
        std::string r;
        for (auto b : s) r += b ? '1' : '0';
        return r;
    };
    if (cfg.format == "json") {
        json rows = json::array();
        for (std::uint64_t r = 0; r < t.rows; ++r)
            rows.push_back({{"in", bits(t.input_row(r))}, {"out", bits(t.output_row(r))}});
        out << json{{"circuit", c.name}, {"wires", c.wire_labels}, {"rows", rows}}.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        out << "input,output\n";
        for (std::uint64_t r = 0; r < t.rows; ++r) out << bits(t.input_row(r)) << ',' << bits(t.output_row(r)) << '\n';
    } else {
        out << dump_truth_table(c, t);
    }
    return kExitOk;
}

int cmd_implications(const RunConfig& cfg, const std::string& path, bool natural, bool artificial, std::ostream& out) {
    const auto c = load_checked(path);
    const auto opt = analysis_options(cfg, natural, artificial);
    std::vector<Implication> nat;
    std::vector<ArtificialFinding> art;
    try {
        if (natural) nat = discover_natural(simulate_exhaustive_packed(c, opt.cap, opt.workers), c);
        if (artificial) art = discover_artificial(c, opt.library, opt.cap, opt.workers);
    } catch (const InputCapExceeded& e) {
        throw CliError{kExitInvalid, e.what()};
    }
    if (cfg.format == "json") {
        json j = {{"circuit", c.name}, {"natural", json::array()}, {"artificial", json::array()}};
        for (const auto& imp : nat)
            j["natural"].push_back({{"id", implication_id(imp)},
                                    {"implication", format_implication(imp, c)},
                                    {"kind", kind_name(imp.kind)}});
        for (const auto& f : art)
            for (const auto& imp : f.new_implications)
                j["artificial"].push_back({{"id", implication_id(imp, &f.placement)},
                                           {"placement", format_placement(f.placement, c)},
                                           {"implication", format_implication(imp, c)},
                                           {"kind", kind_name(imp.kind)}});
        out << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        out << "id,origin,placement,implication,kind\n";
        for (const auto& imp : nat)
            out << implication_id(imp) << ",natural,," << format_implication(imp, c) << ',' << kind_name(imp.kind) << '\n';
        for (const auto& f : art)
            for (const auto& imp : f.new_implications)
                out << implication_id(imp, &f.placement) << ",artificial,\"" << format_placement(f.placement, c)
                    << "\"," << format_implication(imp, c) << ',' << kind_name(imp.kind) << '\n';
    } else {
        std::size_t n_art = 0;
        for (const auto& imp : nat)
            out << "natural     " << implication_id(imp) << "  " << format_implication_text(imp, c) << '\n';
        for (const auto& f : art)
            for (const auto& imp : f.new_implications) {
                ++n_art;
                out << "artificial  " << implication_id(imp, &f.placement) << "  "
                    << format_implication_text(imp, c) << "  via " << format_placement(f.placement, c) << '\n';
            }
        out << "natural=" << nat.size() << " artificial=" << n_art << '\n';
    }
    return kExitOk;
}

int cmd_impact(const RunConfig& cfg, const std::string& path, const std::string& id, std::ostream& out) {
    const auto c = load_checked(path);
    ReportOptions ropt;
    ropt.analysis = analysis_options(cfg, true, true);
    ropt.timing = false;
    ReportRow row;
    try {
        row = analyze_row(c, ropt);
    } catch (const InputCapExceeded& e) {
        throw CliError{kExitInvalid, e.what()};
    }
    if (!id.empty()) {
        auto keep = [&](std::vector<ImplicationRecord>& v) {
            v.erase(std::remove_if(v.begin(), v.end(), [&](const auto& r) { return r.id != id; }), v.end());
        };
        std::vector<std::string> valid;
        for (const auto& r : row.natural) valid.push_back(r.id);
        for (const auto& r : row.artificial) valid.push_back(r.id);
        if (std::find(valid.begin(), valid.end(), id) == valid.end()) {
            std::string msg = "unknown implication id '" + id + "'; valid ids:";
            if (valid.empty()) msg += " (none)";
            for (const auto& v : valid) msg += "\n  " + v;
            throw CliError{kExitUsage, msg};
        }
        keep(row.natural);
        keep(row.artificial);
    }
    if (cfg.format == "json") {
        out << to_json(row).dump(2) << '\n';
    } else if (cfg.format == "csv") {
        out << impact_csv(row);
    } else {
        for (const auto& r : row.natural)
            out << r.id << "  natural     " << r.implication << "  detected=" << r.detected << " missed=" << r.missed
                << " impact=" << fixed2(r.impact) << "%\n";
        for (const auto& r : row.artificial)
            out << r.id << "  artificial  " << r.implication << " via " << r.placement << "  detected=" << r.detected
                << " missed=" << r.missed << " impact=" << fixed2(r.impact) << "%\n";
    }
    return kExitOk;
}

int cmd_report(const RunConfig& cfg, std::string dir, const std::string& out_dir, bool timing, std::ostream& out,
               std::ostream& err) {
    if (dir.empty()) dir = default_corpus_dir();
    std::vector<CorpusEntry> corpus;
    try {
        corpus = load_corpus(dir);
    } catch (const std::exception& e) {
        throw CliError{kExitInvalid, e.what()};
    }
    ReportOptions ropt;
    ropt.analysis = analysis_options(cfg, true, true);
    ropt.timing = timing;
    const auto rep = build_report(corpus, ropt);

    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    auto write = [&](const std::string& name, const std::string& text) {
        std::ofstream f(fs::path(out_dir) / name, std::ios::binary);
        if (!f) throw CliError{kExitInvalid, "cannot write " + (fs::path(out_dir) / name).string()};
        f << text;
    };
    write("tables1.csv", table1_csv(rep));
    write("tables2.csv", table2_csv(rep));
    write("report.json", to_json(rep).dump(2) + "\n");

    if (cfg.format == "json") {
        out << to_json(rep).dump(2) << '\n';
    } else if (cfg.format == "csv") {
        out << table2_csv(rep);
    } else {
        out << table2_csv(rep) << '\n' << format_comparison(rep);
    }
    for (const auto& r : rep.rows)
        if (r.status != "ok") err << "failed: " << r.circuit << ": " << r.error << '\n';
    return rep.failures() ? kExitPartial : kExitOk;
}

int cmd_bench(const RunConfig& cfg, std::size_t wires, std::size_t gates, std::uint64_t seed, int repeat,
              std::ostream& out) {
    if (wires == 0 || gates == 0) throw CliError{kExitUsage, "bench needs at least 1 wire and 1 gate"};
    if (wires > cfg.max_inputs) throw CliError{kExitInvalid, InputCapExceeded(wires, cfg.max_inputs).what()};
    const auto c = random_toffoli_circuit(wires, gates, seed);
    using clock = std::chrono::steady_clock;
    auto ms = [](clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
    double naive_best = 1e300, packed_best = 1e300;
    bool same = true;
    for (int i = 0; i < std::max(1, repeat); ++i) {
        auto t0 = clock::now();
        const auto a = simulate_exhaustive(c, cfg.max_inputs);
        auto t1 = clock::now();
        const auto b = simulate_exhaustive_packed(c, cfg.max_inputs, cfg.workers);
        auto t2 = clock::now();
        naive_best = std::min(naive_best, ms(t1 - t0));
        packed_best = std::min(packed_best, ms(t2 - t1));
        same = same && a == b;
    }
    const std::uint64_t vectors = std::uint64_t{1} << wires;
    if (cfg.format == "json") {
        out << json{{"wires", wires},
                    {"gates", gates},
                    {"seed", seed},
                    {"vectors", vectors},
                    {"naive_ms", naive_best},
                    {"packed_ms", packed_best},
                    {"workers", resolve_workers(cfg.workers)},
                    {"identical", same}}
                   .dump()
            << '\n';
    } else if (cfg.format == "csv") {
        out << "wires,gates,seed,vectors,naive_ms,packed_ms,workers,identical\n"
            << wires << ',' << gates << ',' << seed << ',' << vectors << ',' << naive_best << ',' << packed_best << ','
            << resolve_workers(cfg.workers) << ',' << (same ? "true" : "false") << '\n';
    } else {
        out << "wires=" << wires << " gates=" << gates << " seed=" << seed << " vectors=" << vectors
            << " naive_ms=" << fixed2(naive_best) << " packed_ms=" << fixed2(packed_best)
            << " workers=" << resolve_workers(cfg.workers) << (same ? "" : " MISMATCH") << '\n';
    }
    return same ? kExitOk : kExitInvalid;
}

}

Circuit random_toffoli_circuit(std::size_t wires, std::size_t gates, std::uint64_t seed) {
    auto c = Circuit::with_wires(wires, "random");
    std::mt19937_64 rng(seed);
    std::vector<Wire> all(wires);
    for (Wire w = 0; w < wires; ++w) all[w] = w;
    const std::size_t max_controls = std::min<std::size_t>(wires - 1, 3);
    for (std::size_t g = 0; g < gates; ++g) {
        std::shuffle(all.begin(), all.end(), rng);
        const auto k = std::uniform_int_distribution<std::size_t>(0, max_controls)(rng);
        c.gates.push_back(Gate::toffoli(std::vector<Wire>(all.begin(), all.begin() + static_cast<long>(k)), all[k]));
    }
    return c;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exhaustive fault simulation and invariant mining for reversible circuits", "revinv"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--max-inputs", cfg.max_inputs, "Largest free-input count simulated exhaustively")
        ->check(CLI::Range(std::size_t{1}, std::size_t{62}));
    app.add_option("--workers", cfg.workers, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    app.add_option("--gates", cfg.gates, "Artificial gate library: all or a list of cnot,toffoli,fredkin,peres,fd");
    app.add_option("--seed", cfg.seed, "Reserved");

    std::string path, id, corpus_dir, out_dir = ".";
    bool nat = false, art = false, all = false, every = false, no_timing = false;
    std::size_t bench_wires = 10, bench_gates = 50;
    std::uint64_t bench_seed = kDefaultBenchSeed;
    int repeat = 3;

    auto* validate = app.add_subcommand("validate", "Parse a .real file and print its size");
    validate->add_option("path", path)->required();
    auto* truth = app.add_subcommand("truth", "Dump the exhaustive truth table");
    truth->add_option("path", path)->required();
    auto* imps = app.add_subcommand("implications", "List natural and artificial implications");
    imps->add_option("path", path)->required();
    imps->add_flag("--natural", nat);
    imps->add_flag("--artificial", art);
    imps->add_flag("--all", all);
    auto* impact = app.add_subcommand("impact", "Score implications against the stuck-at fault universe");
    impact->add_option("path", path)->required();
    auto* id_opt = impact->add_option("--implication", id, "Implication id");
    impact->add_flag("--all", every)->excludes(id_opt);
    auto* report = app.add_subcommand("report", "Analyse a corpus directory");
    report->add_option("corpus", corpus_dir, "Corpus directory (default: $REVINV_CORPUS or ./corpus)");
    report->add_option("--out", out_dir, "Directory for tables1.csv, tables2.csv, report.json");
    report->add_flag("--no-timing", no_timing, "Zero wall-time fields for byte-stable output");
    auto* bench = app.add_subcommand("bench", "Time exhaustive simulation of a random Toffoli network");
    bench->add_option("--wires", bench_wires);
    bench->add_option("--num-gates", bench_gates);
    bench->add_option("--seed", bench_seed);
    bench->add_option("--repeat", repeat);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, r;
        const int code = app.exit(e, o, r);
        out << o.str();
        err << r.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*validate) return cmd_validate(cfg, path, out);
        if (*truth) return cmd_truth(cfg, path, out);
        if (*imps) {
            if (!nat && !art) nat = art = true;
            if (all) nat = art = true;
            return cmd_implications(cfg, path, nat, art, out);
        }
        if (*impact) return cmd_impact(cfg, path, id, out);
        if (*report) return cmd_report(cfg, corpus_dir, out_dir, !no_timing, out, err);
        if (*bench) return cmd_bench(cfg, bench_wires, bench_gates, bench_seed, repeat, out);
    } catch (const CliError& e) {
        err << "error: " << e.message << '\n';
        return e.code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"revinv"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}
