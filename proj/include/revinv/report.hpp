#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "revinv/faultlab.hpp"

namespace revinv {

struct ReferenceRow {
    std::size_t gates = 0, wires = 0, garbage = 0;
    std::size_t natural_count = 0;
    double natural_avg = 0;
    std::size_t artificial_count = 0;
    double artificial_avg = 0;
    friend bool operator==(const ReferenceRow&, const ReferenceRow&) = default;
};

struct CorpusEntry {
    std::string name;
    std::string path;
    std::string source_collection;
    std::string reconstruction;
    std::optional<ReferenceRow> reference;
};

// Reads manifest.json when present, otherwise every *.real file in name order.
std::vector<CorpusEntry> load_corpus(const std::string& dir);
std::string default_corpus_dir();

struct ImplicationRecord {
    std::string id;
    std::string placement;
    std::string implication;
    std::string kind;
    std::uint64_t detected = 0;
    std::uint64_t missed = 0;
    double impact = 0;
    bool denominator_zero = false;
    friend bool operator==(const ImplicationRecord&, const ImplicationRecord&) = default;
};

struct ReportRow {
    std::string circuit;
    std::string file;
    std::string status = "ok";
    std::string error;
    std::size_t gates = 0, wires = 0, garbage = 0;
    std::uint64_t vectors = 0;
    std::size_t fault_count = 0;
    CategorySummary natural_summary, artificial_summary;
    std::vector<ImplicationRecord> natural, artificial;
    double wall_ms = 0;
    std::optional<ReferenceRow> reference;
    friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct BenchmarkReport {
    std::vector<ReportRow> rows;
    std::size_t failures() const;
    friend bool operator==(const BenchmarkReport&, const BenchmarkReport&) = default;
};

struct ReportOptions {
    AnalysisOptions analysis;
    bool timing = true;
};

ReportRow analyze_row(const Circuit& circuit, const ReportOptions& options);
BenchmarkReport build_report(const std::vector<CorpusEntry>& corpus, const ReportOptions& options = {});

nlohmann::json to_json(const ReportRow& row);
nlohmann::json to_json(const BenchmarkReport& report);
ReportRow row_from_json(const nlohmann::json& j);
BenchmarkReport report_from_json(const nlohmann::json& j);

std::string table1_csv(const BenchmarkReport& report);
std::string table2_csv(const BenchmarkReport& report);
std::string impact_csv(const ReportRow& row);

struct ComparisonLine {
    std::string circuit;
    std::string field;
    std::string published;
    std::string computed;
    bool match = true;
};

// Published-vs-computed cells; averages match within `tolerance` points.
std::vector<ComparisonLine> compare_with_reference(const BenchmarkReport& report, double tolerance = 0.01);
std::string format_comparison(const BenchmarkReport& report, double tolerance = 0.01);

std::string fixed2(double v);

}
