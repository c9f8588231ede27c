#pragma once

#include <string>
#include <vector>

#include "revinv/implications.hpp"

namespace revinv {

struct ImpactReport {
    Implication implication;
    std::uint64_t detected = 0;
    std::uint64_t missed = 0;

    bool denominator_zero() const { return detected + missed == 0; }
    double percent() const;
    std::string percent_text() const;
    friend bool operator==(const ImpactReport&, const ImpactReport&) = default;
};

// Throws std::invalid_argument if the implication does not hold fault-free.
ImpactReport implication_impact(const Circuit& circuit, const Implication& imp, std::size_t cap = kDefaultInputCap,
                                int workers = 0);
// One fault sweep shared by all implications.
std::vector<ImpactReport> implication_impacts(const Circuit& circuit, const std::vector<Implication>& imps,
                                              std::size_t cap = kDefaultInputCap, int workers = 0);

namespace serial {
// Scalar reference: StateVector simulation of every (vector, fault) pair.
ImpactReport implication_impact(const Circuit& circuit, const Implication& imp, std::size_t cap = kDefaultInputCap);
}

struct AnalysisOptions {
    std::vector<GateTemplate> library = default_gate_library();
    std::size_t cap = kDefaultInputCap;
    int workers = 0;
    bool natural = true;
    bool artificial = true;
};

struct ArtificialImpact {
    Placement placement;
    ImpactReport report;
};

struct CircuitAnalysis {
    std::vector<ImpactReport> natural;
    std::vector<ArtificialImpact> artificial;
    std::uint64_t vectors = 0;
    std::size_t fault_count = 0;
};

// Discovery plus impact scoring; artificial reports are scored on the
// appended circuit with its (G+1)-gate fault universe.
CircuitAnalysis analyze(const Circuit& circuit, const AnalysisOptions& options = {});

std::vector<ImpactReport> impact_all(const Circuit& circuit, const AnalysisOptions& options = {});

struct CategorySummary {
    std::size_t count = 0;
    double avg_impact = 0;
    std::size_t count_all = 0;
    std::size_t inverted = 0;
    std::size_t literal = 0;
    friend bool operator==(const CategorySummary&, const CategorySummary&) = default;
};

// Table-level tallies: `count` is the number of Equal implications (for the
// artificial side, distinct antecedents not already covered naturally).
CategorySummary summarize_natural(const CircuitAnalysis& analysis);
CategorySummary summarize_artificial(const CircuitAnalysis& analysis);

}
