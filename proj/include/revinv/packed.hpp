#pragma once

#include <functional>
#include <span>

#include "revinv/engine.hpp"

namespace revinv {

// Wire-major bit-parallel state: column w occupies words [w*words, (w+1)*words).
// Lane v of every column is exhaustive row v.
struct PackedStates {
    std::size_t num_wires = 0;
    std::uint64_t lanes = 0;
    std::size_t words = 0;
    std::vector<Word> bits;

    Word* column(Wire w) { return bits.data() + w * words; }
    const Word* column(Wire w) const { return bits.data() + w * words; }
    Word tail_mask() const;
    StateVector unpack(std::uint64_t lane) const;
};

PackedStates pack_inputs(const TruthTable& table);
PackedStates pack_exhaustive_inputs(const Circuit& circuit, std::size_t cap = kDefaultInputCap);

// Applies gates[first, last) to words [w0, w1) of every column.
void run_gates(PackedStates& state, std::span<const Gate> gates, std::size_t w0, std::size_t w1);
void run_gates(PackedStates& state, std::span<const Gate> gates);

TruthTable simulate_exhaustive_packed(const Circuit& circuit, std::size_t cap = kDefaultInputCap, int workers = 0);

// Called once per fault with the faulty output columns. Calls may run
// concurrently on different faults; lanes past `rows` are unspecified.
using FaultVisitor = std::function<void(std::size_t fault_index, const PackedStates& faulty)>;

// Runs every fault over all rows of `table` (which must come from `circuit`),
// reusing the fault-free prefix state at each position.
void sweep_faults(const Circuit& circuit, const TruthTable& table, std::span<const Fault> faults, int workers,
                  const FaultVisitor& visit);

// Per fault, bit r set iff row r corrupts at least one non-garbage output.
std::vector<std::vector<Word>> propagation_masks(const Circuit& circuit, const TruthTable& table,
                                                 std::span<const Fault> faults, int workers = 0);
std::vector<std::vector<Word>> propagation_masks_naive(const Circuit& circuit, const TruthTable& table,
                                                       std::span<const Fault> faults);

int resolve_workers(int workers);

}
