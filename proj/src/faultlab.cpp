#include "revinv/faultlab.hpp"

#include <bit>
#include <cstdio>
#include <set>

#include "revinv/packed.hpp"

namespace revinv {

double ImpactReport::percent() const {
    if (denominator_zero()) return 0.0;
    return 100.0 * static_cast<double>(detected) / static_cast<double>(detected + missed);
}

std::string ImpactReport::percent_text() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", percent());
    return buf;
}

namespace {

Word violation_word(const Implication& imp, Word in, Word out) {
    switch (imp.kind) {
    case ImplicationKind::Equal: return in ^ out;
    case ImplicationKind::Inverted: return ~(in ^ out);
    case ImplicationKind::Literal: return (imp.v_in ? in : ~in) & (imp.v_out ? ~out : out);
    }
    return 0;
}

void require_holds(const TruthTable& table, const Implication& imp) {
    if (!implication_holds(table, imp))
        throw std::invalid_argument("implication does not hold on the fault-free circuit");
}

}

std::vector<ImpactReport> implication_impacts(const Circuit& circuit, const std::vector<Implication>& imps,
                                              std::size_t cap, int workers) {
    std::vector<ImpactReport> out;
    for (const auto& imp : imps) out.push_back({imp, 0, 0});
    if (imps.empty()) return out;
    const auto table = simulate_exhaustive_packed(circuit, cap, workers);
    for (const auto& imp : imps) require_holds(table, imp);

    const auto faults = fault_universe(circuit);
    const auto words = table.words();
    const Word tail = table.tail_mask();
    // per fault, per implication: (detected, missed)
    std::vector<std::uint64_t> tallies(faults.size() * imps.size() * 2, 0);
    sweep_faults(circuit, table, faults, workers, [&](std::size_t f, const PackedStates& faulty) {
        std::uint64_t* t = tallies.data() + f * imps.size() * 2;
        for (std::size_t i = 0; i < words; ++i) {
            Word prop = 0;
            for (Wire w = 0; w < table.num_wires; ++w)
                if (!circuit.garbage[w]) prop |= faulty.column(w)[i] ^ table.outputs[w][i];
            if (i + 1 == words) prop &= tail;
            if (!prop) continue;
            for (std::size_t k = 0; k < imps.size(); ++k) {
                const Word v = violation_word(imps[k], table.inputs[imps[k].in_wire][i], faulty.column(imps[k].out_wire)[i]);
                t[2 * k] += static_cast<std::uint64_t>(std::popcount(v & prop));
                t[2 * k + 1] += static_cast<std::uint64_t>(std::popcount(~v & prop));
            }
        }
    });
    for (std::size_t f = 0; f < faults.size(); ++f)
        for (std::size_t k = 0; k < imps.size(); ++k) {
            out[k].detected += tallies[(f * imps.size() + k) * 2];
            out[k].missed += tallies[(f * imps.size() + k) * 2 + 1];
        }
    return out;
}

ImpactReport implication_impact(const Circuit& circuit, const Implication& imp, std::size_t cap, int workers) {
    return implication_impacts(circuit, {imp}, cap, workers).front();
}

namespace serial {

ImpactReport implication_impact(const Circuit& circuit, const Implication& imp, std::size_t cap) {
    const auto table = simulate_exhaustive(circuit, cap);
    require_holds(table, imp);
    ImpactReport r{imp, 0, 0};
    const auto faults = fault_universe(circuit);
    for (std::uint64_t row = 0; row < table.rows; ++row) {
        const auto in = input_vector(circuit, row);
        const auto golden = simulate(circuit, in);
        for (const auto& f : faults) {
            const auto bad = simulate_faulty(circuit, f, in);
            bool propagated = false;
            for (Wire w = 0; w < circuit.num_wires(); ++w)
                if (!circuit.garbage[w] && bad[w] != golden[w]) propagated = true;
            if (!propagated) continue;
            const bool a = in[imp.in_wire], b = bad[imp.out_wire];
            bool violated = false;
            switch (imp.kind) {
            case ImplicationKind::Equal: violated = a != b; break;
            case ImplicationKind::Inverted: violated = a == b; break;
            case ImplicationKind::Literal: violated = a == imp.v_in && b != imp.v_out; break;
            }
            ++(violated ? r.detected : r.missed);
        }
    }
    return r;
}

}

CircuitAnalysis analyze(const Circuit& circuit, const AnalysisOptions& opt) {
    CircuitAnalysis a;
    a.fault_count = fault_count(circuit);
    a.vectors = std::uint64_t{1} << free_input_count(circuit);
    if (opt.natural) {
        const auto table = simulate_exhaustive_packed(circuit, opt.cap, opt.workers);
        a.natural = implication_impacts(circuit, discover_natural(table, circuit), opt.cap, opt.workers);
    }
    if (opt.artificial) {
        for (auto& finding : discover_artificial(circuit, opt.library, opt.cap, opt.workers)) {
            const auto appended = apply_placement(circuit, finding.placement);
            for (auto& r : implication_impacts(appended, finding.new_implications, opt.cap, opt.workers))
                a.artificial.push_back({finding.placement, r});
        }
    }
    return a;
}

std::vector<ImpactReport> impact_all(const Circuit& circuit, const AnalysisOptions& options) {
    auto a = analyze(circuit, options);
    std::vector<ImpactReport> out = a.natural;
    for (const auto& x : a.artificial) out.push_back(x.report);
    return out;
}

CategorySummary summarize_natural(const CircuitAnalysis& a) {
    CategorySummary s;
    double sum = 0;
    for (const auto& r : a.natural) {
        ++s.count_all;
        switch (r.implication.kind) {
        case ImplicationKind::Equal:
            ++s.count;
            sum += r.percent();
            break;
        case ImplicationKind::Inverted: ++s.inverted; break;
        case ImplicationKind::Literal: ++s.literal; break;
        }
    }
    s.avg_impact = s.count ? sum / static_cast<double>(s.count) : 0.0;
    return s;
}

CategorySummary summarize_artificial(const CircuitAnalysis& a) {
    CategorySummary s;
    std::set<Wire> covered;
    for (const auto& r : a.natural)
        if (r.implication.kind == ImplicationKind::Equal) covered.insert(r.implication.in_wire);
    std::set<Wire> seen;
    std::set<Implication> inverted, literal;
    double sum = 0;
    for (const auto& x : a.artificial) {
        const auto& imp = x.report.implication;
        ++s.count_all;
        if (imp.kind == ImplicationKind::Inverted) inverted.insert(imp);
        if (imp.kind == ImplicationKind::Literal) literal.insert(imp);
        if (imp.kind != ImplicationKind::Equal || covered.contains(imp.in_wire)) continue;
        if (!seen.insert(imp.in_wire).second) continue;
        ++s.count;
        sum += x.report.percent();
    }
    s.inverted = inverted.size();
    s.literal = literal.size();
    s.avg_impact = s.count ? sum / static_cast<double>(s.count) : 0.0;
    return s;
}

}
