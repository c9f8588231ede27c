#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace revinv {

using Wire = std::size_t;

enum class GateKind { Toffoli, Fredkin, Peres, FeynmanDouble };

// One reversible primitive. Wires are stored controls first, then targets.
// Peres and FeynmanDouble keep (a, b, c) with a as the control.
class Gate {
public:
    static Gate toffoli(std::vector<Wire> controls, Wire target);
    static Gate fredkin(std::vector<Wire> controls, Wire first, Wire second);
    static Gate peres(Wire a, Wire b, Wire c);
    static Gate feynman_double(Wire a, Wire b, Wire c);
    static Gate make(GateKind kind, std::vector<Wire> wires);

    GateKind kind() const noexcept { return kind_; }
    std::span<const Wire> wires() const noexcept { return wires_; }
    std::size_t arity() const noexcept { return wires_.size(); }
    std::size_t num_controls() const noexcept;
    std::span<const Wire> controls() const noexcept { return wires().first(num_controls()); }
    std::span<const Wire> targets() const noexcept { return wires().subspan(num_controls()); }
    bool writes(Wire w) const noexcept;
    Wire max_wire() const noexcept;
    std::string mnemonic() const;

    friend bool operator==(const Gate&, const Gate&) = default;

private:
    Gate(GateKind kind, std::vector<Wire> wires);
    GateKind kind_;
    std::vector<Wire> wires_;
};

struct Circuit {
    std::string name;
    std::string version;
    std::vector<std::string> wire_labels;
    std::vector<std::string> input_labels;
    std::vector<std::string> output_labels;
    std::vector<std::optional<bool>> constants;
    std::vector<bool> garbage;
    std::vector<Gate> gates;

    // Identity circuit over `wires` wires labelled a, b, c, ...
    static Circuit with_wires(std::size_t wires, std::string name = {});

    std::size_t num_wires() const noexcept { return wire_labels.size(); }
    std::size_t num_gates() const noexcept { return gates.size(); }
    std::vector<Wire> free_wires() const;
    std::vector<Wire> garbage_wires() const;
    std::size_t garbage_count() const;
    bool is_free(Wire w) const { return !constants[w].has_value(); }

    // Throws std::invalid_argument when an invariant is broken.
    void validate() const;

    friend bool operator==(const Circuit&, const Circuit&) = default;
};

struct Fault {
    std::size_t position = 0;
    Wire wire = 0;
    bool stuck = false;
    friend auto operator<=>(const Fault&, const Fault&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& msg);
    std::size_t line() const noexcept { return line_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

Circuit parse_real(std::string_view text, std::string name = {});
Circuit load_real(const std::string& path);
std::string serialize_real(const Circuit& circuit);

std::vector<Fault> fault_universe(const Circuit& circuit);
std::size_t fault_count(const Circuit& circuit);

// Library gate shape, bound to concrete wires at placement time.
struct GateTemplate {
    std::string name;
    GateKind kind = GateKind::Toffoli;
    std::size_t arity = 2;

    Gate bind(std::span<const Wire> wires) const;
};

Circuit append_gate(const Circuit& circuit, const Gate& gate);
Circuit append_gate(const Circuit& circuit, const GateTemplate& tmpl, std::span<const Wire> assignment);

std::string default_label(std::size_t index);
std::string_view kind_name(GateKind kind);

}
