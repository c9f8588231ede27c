#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "revinv/netlist.hpp"

namespace revinv {

using StateVector = std::vector<std::uint8_t>;
using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;
inline constexpr std::size_t kDefaultInputCap = 24;

class InputCapExceeded : public std::runtime_error {
public:
    InputCapExceeded(std::size_t free_inputs, std::size_t cap);
    std::size_t free_inputs() const noexcept { return free_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t free_, cap_;
};

// Exhaustive input/output table. Columns hold one bit per row; row r sets the
// first free wire to the most significant bit of r.
struct TruthTable {
    std::vector<Wire> free_wires;
    std::size_t num_wires = 0;
    std::uint64_t rows = 0;
    std::vector<std::vector<Word>> inputs;
    std::vector<std::vector<Word>> outputs;

    std::size_t words() const { return static_cast<std::size_t>((rows + kWordBits - 1) / kWordBits); }
    Word tail_mask() const;
    bool input_bit(Wire w, std::uint64_t row) const { return (inputs[w][row / 64] >> (row % 64)) & 1; }
    bool output_bit(Wire w, std::uint64_t row) const { return (outputs[w][row / 64] >> (row % 64)) & 1; }
    StateVector input_row(std::uint64_t row) const;
    StateVector output_row(std::uint64_t row) const;

    friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

void apply_gate_inplace(StateVector& state, const Gate& gate);
StateVector apply_gate(StateVector state, const Gate& gate);
StateVector simulate(const Circuit& circuit, StateVector input);
StateVector simulate_faulty(const Circuit& circuit, const Fault& fault, StateVector input);

std::size_t free_input_count(const Circuit& circuit);
void check_cap(const Circuit& circuit, std::size_t cap);
StateVector input_vector(const Circuit& circuit, std::uint64_t row);

// Naive reference: one StateVector simulation per row.
TruthTable simulate_exhaustive(const Circuit& circuit, std::size_t cap = kDefaultInputCap);

std::string dump_truth_table(const Circuit& circuit, const TruthTable& table);

}
