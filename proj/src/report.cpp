#include "revinv/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace revinv {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string default_corpus_dir() {
    if (const char* env = std::getenv("REVINV_CORPUS"); env && *env) return env;
    return "corpus";
}

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
    if (!fs::is_directory(dir)) throw std::runtime_error("corpus directory '" + dir + "' not found");
    std::vector<CorpusEntry> out;
    const fs::path manifest = fs::path(dir) / "manifest.json";
    if (fs::exists(manifest)) {
        std::ifstream in(manifest);
        json j = json::parse(in);
        for (const auto& c : j.at("circuits")) {
            CorpusEntry e;
            e.name = c.at("name").get<std::string>();
            e.path = (fs::path(dir) / c.at("file").get<std::string>()).string();
            e.source_collection = c.value("source_collection", "");
            e.reconstruction = c.value("reconstruction", "");
            if (c.contains("reference")) {
                const auto& r = c.at("reference");
                ReferenceRow ref;
                ref.gates = c.value("gates", std::size_t{0});
                ref.wires = c.value("wires", std::size_t{0});
                ref.garbage = c.value("garbage", std::size_t{0});
                ref.natural_count = r.at("natural").at("count").get<std::size_t>();
                ref.natural_avg = r.at("natural").at("avg_impact").get<double>();
                ref.artificial_count = r.at("artificial").at("count").get<std::size_t>();
                ref.artificial_avg = r.at("artificial").at("avg_impact").get<double>();
                e.reference = ref;
            }
            out.push_back(std::move(e));
        }
        return out;
    }
    for (const auto& f : fs::directory_iterator(dir))
        if (f.is_regular_file() && f.path().extension() == ".real")
            out.push_back({f.path().stem().string(), f.path().string(), "", "", std::nullopt});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return out;
}

std::size_t BenchmarkReport::failures() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.status != "ok"; }));
}

namespace {

ImplicationRecord make_record(const Circuit& c, const ImpactReport& r, const Placement* p) {
    ImplicationRecord rec;
    rec.id = implication_id(r.implication, p);
    if (p) rec.placement = format_placement(*p, c);
    rec.implication = format_implication(r.implication, c);
    rec.kind = kind_name(r.implication.kind);
    rec.detected = r.detected;
    rec.missed = r.missed;
    rec.impact = r.percent();
    rec.denominator_zero = r.denominator_zero();
    return rec;
}

json summary_json(const CategorySummary& s) {
    return {{"count", s.count}, {"avg_impact", s.avg_impact}, {"count_all", s.count_all},
            {"inverted", s.inverted}, {"literal", s.literal}};
}

CategorySummary summary_from(const json& j) {
    CategorySummary s;
    s.count = j.at("count").get<std::size_t>();
    s.avg_impact = j.at("avg_impact").get<double>();
    s.count_all = j.at("count_all").get<std::size_t>();
    s.inverted = j.at("inverted").get<std::size_t>();
    s.literal = j.at("literal").get<std::size_t>();
    return s;
}

json record_json(const ImplicationRecord& r, bool artificial) {
    json j = {{"id", r.id},           {"implication", r.implication}, {"kind", r.kind},
              {"detected", r.detected}, {"missed", r.missed},         {"impact", r.impact},
              {"denominator_zero", r.denominator_zero}};
    if (artificial) j["placement"] = r.placement;
    return j;
}

ImplicationRecord record_from(const json& j) {
    ImplicationRecord r;
    r.id = j.at("id").get<std::string>();
    r.placement = j.value("placement", "");
    r.implication = j.at("implication").get<std::string>();
    r.kind = j.at("kind").get<std::string>();
    r.detected = j.at("detected").get<std::uint64_t>();
    r.missed = j.at("missed").get<std::uint64_t>();
    r.impact = j.at("impact").get<double>();
    r.denominator_zero = j.at("denominator_zero").get<bool>();
    return r;
}

}

ReportRow analyze_row(const Circuit& c, const ReportOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    ReportRow row;
    row.circuit = c.name;
    row.gates = c.num_gates();
    row.wires = c.num_wires();
    row.garbage = c.garbage_count();
    const auto a = analyze(c, opt.analysis);
    row.vectors = a.vectors;
    row.fault_count = a.fault_count;
    row.natural_summary = summarize_natural(a);
    row.artificial_summary = summarize_artificial(a);
    for (const auto& r : a.natural) row.natural.push_back(make_record(c, r, nullptr));
    for (const auto& x : a.artificial) row.artificial.push_back(make_record(c, x.report, &x.placement));
    if (opt.timing)
        row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

BenchmarkReport build_report(const std::vector<CorpusEntry>& corpus, const ReportOptions& opt) {
    BenchmarkReport rep;
    for (const auto& e : corpus) {
        ReportRow row;
        try {
            auto c = load_real(e.path);
            c.validate();
            c.name = e.name;
            row = analyze_row(c, opt);
        } catch (const std::exception& ex) {
            row = ReportRow{};
            row.circuit = e.name;
            row.status = "failed";
            row.error = ex.what();
        }
        row.file = fs::path(e.path).filename().string();
        row.reference = e.reference;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

json to_json(const ReportRow& r) {
    json j = {{"circuit", r.circuit},
              {"file", r.file},
              {"status", r.status},
              {"gates", r.gates},
              {"wires", r.wires},
              {"garbage", r.garbage},
              {"vectors", r.vectors},
              {"fault_count", r.fault_count},
              {"wall_ms", r.wall_ms},
              {"natural_summary", summary_json(r.natural_summary)},
              {"artificial_summary", summary_json(r.artificial_summary)},
              {"natural", json::array()},
              {"artificial", json::array()}};
    if (!r.error.empty()) j["error"] = r.error;
    for (const auto& x : r.natural) j["natural"].push_back(record_json(x, false));
    for (const auto& x : r.artificial) j["artificial"].push_back(record_json(x, true));
    if (r.reference) {
        const auto& p = *r.reference;
        j["reference"] = {{"gates", p.gates},
                          {"wires", p.wires},
                          {"garbage", p.garbage},
                          {"natural", {{"count", p.natural_count}, {"avg_impact", p.natural_avg}}},
                          {"artificial", {{"count", p.artificial_count}, {"avg_impact", p.artificial_avg}}}};
    }
    return j;
}

json to_json(const BenchmarkReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows) rows.push_back(to_json(r));
    return {{"rows", rows}, {"failures", rep.failures()}};
}

ReportRow row_from_json(const json& j) {
    ReportRow r;
    r.circuit = j.at("circuit").get<std::string>();
    r.file = j.value("file", "");
    r.status = j.value("status", "ok");
    r.error = j.value("error", "");
    r.gates = j.at("gates").get<std::size_t>();
    r.wires = j.at("wires").get<std::size_t>();
    r.garbage = j.at("garbage").get<std::size_t>();
    r.vectors = j.at("vectors").get<std::uint64_t>();
    r.fault_count = j.at("fault_count").get<std::size_t>();
    r.wall_ms = j.at("wall_ms").get<double>();
    r.natural_summary = summary_from(j.at("natural_summary"));
    r.artificial_summary = summary_from(j.at("artificial_summary"));
    for (const auto& x : j.at("natural")) r.natural.push_back(record_from(x));
    for (const auto& x : j.at("artificial")) r.artificial.push_back(record_from(x));
    if (j.contains("reference")) {
        const auto& p = j.at("reference");
        ReferenceRow ref;
        ref.gates = p.at("gates").get<std::size_t>();
        ref.wires = p.at("wires").get<std::size_t>();
        ref.garbage = p.at("garbage").get<std::size_t>();
        ref.natural_count = p.at("natural").at("count").get<std::size_t>();
        ref.natural_avg = p.at("natural").at("avg_impact").get<double>();
        ref.artificial_count = p.at("artificial").at("count").get<std::size_t>();
        ref.artificial_avg = p.at("artificial").at("avg_impact").get<double>();
        r.reference = ref;
    }
    return r;
}

BenchmarkReport report_from_json(const json& j) {
    BenchmarkReport rep;
    for (const auto& r : j.at("rows")) rep.rows.push_back(row_from_json(r));
    return rep;
}

std::string table1_csv(const BenchmarkReport& rep) {
    std::ostringstream out;
    out << "benchmark,gates,wires,garbage,vectors,fault_count,status\n";
    for (const auto& r : rep.rows)
        out << r.circuit << ',' << r.gates << ',' << r.wires << ',' << r.garbage << ',' << r.vectors << ','
            << r.fault_count << ',' << r.status << '\n';
    return out.str();
}

std::string table2_csv(const BenchmarkReport& rep) {
    std::ostringstream out;
    out << "benchmark,natural_number,natural_avg_impact,artificial_number,artificial_avg_impact,"
           "natural_all,natural_inverted,natural_literal,artificial_all,artificial_inverted,artificial_literal,"
           "wall_ms,status\n";
    for (const auto& r : rep.rows) {
        const auto& n = r.natural_summary;
        const auto& a = r.artificial_summary;
        out << r.circuit << ',' << n.count << ',' << fixed2(n.avg_impact) << ',' << a.count << ','
            << fixed2(a.avg_impact) << ',' << n.count_all << ',' << n.inverted << ',' << n.literal << ','
            << a.count_all << ',' << a.inverted << ',' << a.literal << ',' << fixed2(r.wall_ms) << ',' << r.status
            << '\n';
    }
    return out.str();
}

std::string impact_csv(const ReportRow& r) {
    std::ostringstream out;
    out << "id,origin,placement,implication,detected,missed,impact\n";
    for (const auto& x : r.natural)
        out << x.id << ",natural,," << x.implication << ',' << x.detected << ',' << x.missed << ','
            << fixed2(x.impact) << '\n';
    for (const auto& x : r.artificial)
        out << x.id << ",artificial," << '"' << x.placement << '"' << ',' << x.implication << ',' << x.detected << ','
            << x.missed << ',' << fixed2(x.impact) << '\n';
    return out.str();
}

std::vector<ComparisonLine> compare_with_reference(const BenchmarkReport& rep, double tol) {
    std::vector<ComparisonLine> out;
    for (const auto& r : rep.rows) {
        if (!r.reference) continue;
        const auto& p = *r.reference;
        if (r.status != "ok") {
            out.push_back({r.circuit, "status", "ok", r.status, false});
            continue;
        }
        auto count = [&](const char* field, std::size_t pub, std::size_t got) {
            out.push_back({r.circuit, field, std::to_string(pub), std::to_string(got), pub == got});
        };
        auto avg = [&](const char* field, double pub, double got) {
            out.push_back({r.circuit, field, fixed2(pub), fixed2(got), std::fabs(pub - got) <= tol + 1e-9});
        };
        count("gates", p.gates, r.gates);
        count("wires", p.wires, r.wires);
        count("garbage", p.garbage, r.garbage);
        count("natural_number", p.natural_count, r.natural_summary.count);
        avg("natural_avg_impact", p.natural_avg, r.natural_summary.avg_impact);
        count("artificial_number", p.artificial_count, r.artificial_summary.count);
        avg("artificial_avg_impact", p.artificial_avg, r.artificial_summary.avg_impact);
    }
    return out;
}

std::string format_comparison(const BenchmarkReport& rep, double tol) {
    std::ostringstream out;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-12s %-22s %10s %10s  %s\n", "benchmark", "field", "published", "computed", "");
    out << buf;
    for (const auto& l : compare_with_reference(rep, tol)) {
        std::snprintf(buf, sizeof buf, "%-12s %-22s %10s %10s  %s\n", l.circuit.c_str(), l.field.c_str(),
                      l.published.c_str(), l.computed.c_str(), l.match ? "" : "MISMATCH");
        out << buf;
    }
    return out.str();
}

}
