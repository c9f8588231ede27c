#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revinv/engine.hpp"

namespace revinv {

enum class ImplicationKind { Equal, Inverted, Literal };

// Relation from an input site to an output site. v_in/v_out only matter for
// Literal and are kept false otherwise.
struct Implication {
    Wire in_wire = 0;
    Wire out_wire = 0;
    ImplicationKind kind = ImplicationKind::Equal;
    bool v_in = false;
    bool v_out = false;

    static Implication equal(Wire in, Wire out) { return {in, out, ImplicationKind::Equal, false, false}; }
    static Implication inverted(Wire in, Wire out) { return {in, out, ImplicationKind::Inverted, false, false}; }
    static Implication literal(Wire in, bool v_in, Wire out, bool v_out) {
        return {in, out, ImplicationKind::Literal, v_in, v_out};
    }

    friend auto operator<=>(const Implication&, const Implication&) = default;
};

struct Placement {
    std::string template_name;
    Gate gate = Gate::toffoli({}, 0);

    std::span<const Wire> wires() const { return gate.wires(); }
    friend bool operator==(const Placement&, const Placement&) = default;
};

struct ArtificialFinding {
    Placement placement;
    std::vector<Implication> new_implications;
};

bool implication_holds(const TruthTable& table, const Implication& imp);

std::vector<Implication> discover_natural(const TruthTable& table, const Circuit& circuit);

std::vector<GateTemplate> default_gate_library();
// Comma-separated subset of cnot,toffoli,fredkin,peres,fd; throws std::invalid_argument.
std::vector<GateTemplate> select_gate_library(const std::string& names);

std::vector<ArtificialFinding> discover_artificial(const Circuit& circuit, const std::vector<GateTemplate>& library,
                                                   std::size_t cap = kDefaultInputCap, int workers = 0);

Circuit apply_placement(const Circuit& circuit, const Placement& placement);

std::string kind_name(ImplicationKind kind);
// in:<label>=<v> => out:<label>=<v>
std::string format_implication(const Implication& imp, const Circuit& circuit);
// (b=0/1) => (q=0/1)
std::string format_implication_text(const Implication& imp, const Circuit& circuit);
std::string format_placement(const Placement& placement, const Circuit& circuit);
std::string implication_id(const Implication& imp, const Placement* placement = nullptr);

}
