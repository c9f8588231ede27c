#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "corpus.hpp"
#include "oracle.hpp"
#include "revinv/report.hpp"

using namespace revinv;
namespace fs = std::filesystem;

TEST_CASE("rd32 natural impact: fast path, serial path and oracle agree") {
    const auto c = testing_corpus::load("rd32");
    const auto imp = Implication::equal(0, 0);
    const auto fast = implication_impact(c, imp);
    const auto slow = serial::implication_impact(c, imp);
    const auto o = oracle::impact(c, imp);
    CHECK(fast == slow);
    CHECK(fast.detected == o.detected);
    CHECK(fast.missed == o.missed);
    CHECK(fast.detected + fast.missed <= 16 * 32);
    CHECK(fast.percent_text() == ImpactReport{imp, o.detected, o.missed}.percent_text());
}

TEST_CASE("rd32 artificial impacts are scored over G+1 gates") {
    const auto c = testing_corpus::load("rd32");
    const auto findings = discover_artificial(c, default_gate_library());
    REQUIRE_FALSE(findings.empty());
    for (const auto& f : findings) {
        const auto appended = apply_placement(c, f.placement);
        CHECK(fault_count(appended) == 40);
        for (const auto& imp : f.new_implications) {
            const auto fast = implication_impact(appended, imp);
            const auto o = oracle::impact(appended, imp);
            CHECK(fast.detected == o.detected);
            CHECK(fast.missed == o.missed);
            CHECK(fast == serial::implication_impact(appended, imp));
        }
    }
}

TEST_CASE("fast impact equals the oracle on every small benchmark implication") {
    for (const auto& name : {"rd53-130", "sym6-145", "4gt4-v0-73", "rd84-143", "9symd2"}) {
        CAPTURE(name);
        const auto c = testing_corpus::load(name);
        const auto imps = discover_natural(simulate_exhaustive(c), c);
        const auto reports = implication_impacts(c, imps, kDefaultInputCap, 2);
        for (std::size_t i = 0; i < imps.size(); ++i) {
            const auto o = oracle::impact(c, imps[i]);
            CHECK(reports[i].detected == o.detected);
            CHECK(reports[i].missed == o.missed);
        }
    }
}

TEST_CASE("impact is identical for any worker count") {
    const auto c = testing_corpus::load("sym6-145");
    const auto imps = discover_natural(simulate_exhaustive(c), c);
    CHECK(implication_impacts(c, imps, kDefaultInputCap, 1) == implication_impacts(c, imps, kDefaultInputCap, 4));
}

TEST_CASE("impact rejects implications that do not hold") {
    const auto c = testing_corpus::load("rd32");
    CHECK_THROWS_AS(implication_impact(c, Implication::equal(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(serial::implication_impact(c, Implication::equal(1, 1)), std::invalid_argument);
}

TEST_CASE("zero denominator reports 0 with a flag") {
    auto c = Circuit::with_wires(1);
    c.garbage = {true};
    c.gates.push_back(Gate::toffoli({}, 0));
    const auto r = implication_impact(c, Implication::inverted(0, 0));
    CHECK(r.denominator_zero());
    CHECK(r.percent() == 0.0);
    CHECK(r.percent_text() == "0.00");
}

TEST_CASE("without garbage every output mismatch propagates") {
    auto c = Circuit::with_wires(2);
    c.gates.push_back(Gate::toffoli({0}, 1));
    c.gates.push_back(Gate::toffoli({}, 1));
    const auto imp = Implication::equal(0, 0);
    const auto r = implication_impact(c, imp);
    const auto o = oracle::impact(c, imp);
    CHECK(r.detected == o.detected);
    CHECK(r.missed == o.missed);
    // every fault on wire 0 is visible on wire 0 itself
    CHECK(r.detected > 0);
}

TEST_CASE("percent uses the exact tallies") {
    ImpactReport r{Implication::equal(0, 0), 1, 7};
    CHECK(r.percent() == doctest::Approx(12.5));
    CHECK(r.percent_text() == "12.50");
    r = {Implication::equal(0, 0), 3, 13};
    CHECK(r.percent_text() == "18.75");
}

TEST_CASE("impact_all and summaries on rd32") {
    const auto c = testing_corpus::load("rd32");
    const auto a = analyze(c);
    CHECK(a.natural.size() == 1);
    CHECK(a.artificial.size() >= 1);
    CHECK(a.vectors == 16);
    CHECK(a.fault_count == 32);
    const auto n = summarize_natural(a);
    const auto s = summarize_artificial(a);
    CHECK(n.count == 1);
    CHECK(s.count == 1);
    CHECK(n.avg_impact == doctest::Approx(a.natural[0].percent()));
    CHECK(s.avg_impact == doctest::Approx(a.artificial[0].report.percent()));
    CHECK(impact_all(c).size() == a.natural.size() + a.artificial.size());
}

TEST_CASE("impact_all is empty for circuits without implications") {
    CHECK(impact_all(testing_corpus::load("hwb6-56")).empty());
    CHECK(impact_all(testing_corpus::load("ham7-25-49")).empty());
}

TEST_CASE("artificial summary counts distinct uncovered antecedents") {
    CircuitAnalysis a;
    const Placement p{"cnot", Gate::toffoli({0}, 1)};
    a.natural.push_back({Implication::equal(0, 0), 1, 3});
    a.artificial.push_back({p, {Implication::equal(0, 1), 5, 5}});
    a.artificial.push_back({p, {Implication::equal(2, 1), 1, 1}});
    a.artificial.push_back({p, {Implication::equal(2, 0), 0, 4}});
    a.artificial.push_back({p, {Implication::literal(3, true, 1, true), 0, 4}});
    a.artificial.push_back({p, {Implication::inverted(3, 1), 0, 4}});
    const auto s = summarize_artificial(a);
    CHECK(s.count == 1);
    CHECK(s.avg_impact == doctest::Approx(50.0));
    CHECK(s.count_all == 5);
    CHECK(s.literal == 1);
    CHECK(s.inverted == 1);
    const auto n = summarize_natural(a);
    CHECK(n.count == 1);
    CHECK(n.avg_impact == doctest::Approx(25.0));
}

TEST_CASE("build_report over the bundled corpus") {
    const auto corpus = load_corpus(REVINV_CORPUS_DIR);
    REQUIRE(corpus.size() == 10);
    ReportOptions opt;
    opt.timing = false;
    const auto rep = build_report(corpus, opt);
    REQUIRE(rep.rows.size() == 10);
    CHECK(rep.failures() == 0);
    const auto& rd32 = rep.rows[0];
    CHECK(rd32.circuit == "rd32");
    CHECK(rd32.gates == 4);
    CHECK(rd32.wires == 4);
    CHECK(rd32.garbage == 2);
    CHECK(rd32.natural_summary.count == 1);
    CHECK(rd32.artificial_summary.count == 1);
    for (const auto& row : rep.rows) {
        REQUIRE(row.reference.has_value());
        CHECK(row.gates == row.reference->gates);
        CHECK(row.wires == row.reference->wires);
        CHECK(row.garbage == row.reference->garbage);
        CHECK(row.fault_count == row.gates * row.wires * 2);
    }
    // determinism across worker counts
    opt.analysis.workers = 1;
    const auto one = build_report(corpus, opt);
    opt.analysis.workers = 3;
    CHECK(to_json(one).dump() == to_json(build_report(corpus, opt)).dump());
}

TEST_CASE("empty corpus gives an empty report") {
    const auto dir = fs::temp_directory_path() / "revinv_empty_corpus";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const auto rep = build_report(load_corpus(dir.string()));
    CHECK(rep.rows.empty());
    CHECK(table2_csv(rep).find('\n') == table2_csv(rep).size() - 1);
    fs::remove_all(dir);
}

TEST_CASE("a bad file becomes a failed row") {
    const auto dir = fs::temp_directory_path() / "revinv_bad_corpus";
    fs::remove_all(dir);
    fs::create_directories(dir);
    fs::copy_file(testing_corpus::path("rd32"), dir / "rd32.real");
    std::ofstream(dir / "broken.real") << ".numvars 2\n.variables a b\n.begin\nq3 a b\n.end\n";
    const auto rep = build_report(load_corpus(dir.string()));
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.failures() == 1);
    CHECK(rep.rows[0].circuit == "broken");
    CHECK(rep.rows[0].status == "failed");
    CHECK(rep.rows[0].error.find("line 4") != std::string::npos);
    CHECK(rep.rows[1].status == "ok");
    fs::remove_all(dir);
}

TEST_CASE("JSON report round trip") {
    ReportOptions opt;
    const auto rep = build_report(load_corpus(REVINV_CORPUS_DIR), opt);
    const auto text = to_json(rep).dump(2);
    const auto back = report_from_json(nlohmann::json::parse(text));
    CHECK(back == rep);
    const auto j = to_json(rep.rows[0]);
    for (const char* key : {"circuit", "gates", "wires", "garbage", "natural", "artificial", "fault_count", "vectors",
                            "wall_ms"})
        CHECK(j.contains(key));
    CHECK(j["natural"][0].contains("implication"));
    CHECK(j["natural"][0].contains("impact"));
    CHECK(j["artificial"][0].contains("placement"));
}

TEST_CASE("CSV tables follow the table column order") {
    ReportOptions opt;
    opt.timing = false;
    const auto rep = build_report(load_corpus(REVINV_CORPUS_DIR), opt);
    const auto t1 = table1_csv(rep);
    const auto t2 = table2_csv(rep);
    CHECK(t1.rfind("benchmark,gates,wires,garbage", 0) == 0);
    CHECK(t2.rfind("benchmark,natural_number,natural_avg_impact,artificial_number,artificial_avg_impact", 0) == 0);
    CHECK(t1.find("\nrd32,4,4,2,16,32,ok\n") != std::string::npos);
    CHECK(t2.find("\nckt1-149,0,0.00,0,0.00,") != std::string::npos);
}

TEST_CASE("side-by-side comparison flags mismatches") {
    BenchmarkReport rep;
    ReportRow row;
    row.circuit = "x";
    row.gates = 4;
    row.natural_summary.count = 1;
    row.natural_summary.avg_impact = 12.505;
    row.reference = ReferenceRow{4, 0, 0, 1, 12.5, 2, 0};
    rep.rows.push_back(row);
    const auto lines = compare_with_reference(rep);
    REQUIRE(lines.size() == 7);
    for (const auto& l : lines) CHECK(l.match == (l.field != "artificial_number"));
    CHECK(format_comparison(rep).find("MISMATCH") != std::string::npos);
}
