#include "revinv/engine.hpp"

#include <sstream>

namespace revinv {

InputCapExceeded::InputCapExceeded(std::size_t free_inputs, std::size_t cap)
    : std::runtime_error("refusing exhaustive simulation: " + std::to_string(free_inputs) +
                         " free inputs exceeds the cap of " + std::to_string(cap) + " (raise it with --max-inputs)"),
      free_(free_inputs), cap_(cap) {}

Word TruthTable::tail_mask() const {
    const auto rem = rows % kWordBits;
    return rem == 0 ? ~Word{0} : (Word{1} << rem) - 1;
}

StateVector TruthTable::input_row(std::uint64_t row) const {
    StateVector s(num_wires);
    for (Wire w = 0; w < num_wires; ++w) s[w] = input_bit(w, row);
    return s;
}

StateVector TruthTable::output_row(std::uint64_t row) const {
    StateVector s(num_wires);
    for (Wire w = 0; w < num_wires; ++w) s[w] = output_bit(w, row);
    return s;
}

void apply_gate_inplace(StateVector& s, const Gate& gate) {
    auto w = gate.wires();
    switch (gate.kind()) {
    case GateKind::Toffoli: {
        std::uint8_t all = 1;
        for (Wire c : gate.controls()) all &= s[c];
        s[w.back()] ^= all;
        break;
    }
    case GateKind::Fredkin: {
        std::uint8_t all = 1;
        for (Wire c : gate.controls()) all &= s[c];
        if (all) std::swap(s[w[w.size() - 2]], s[w.back()]);
        break;
    }
    case GateKind::Peres: {
        const std::uint8_t a = s[w[0]], b = s[w[1]];
        s[w[1]] = a ^ b;
        s[w[2]] ^= a & b;
        break;
    }
    case GateKind::FeynmanDouble: {
        const std::uint8_t a = s[w[0]];
        s[w[1]] ^= a;
        s[w[2]] ^= a;
        break;
    }
    }
}

StateVector apply_gate(StateVector state, const Gate& gate) {
    apply_gate_inplace(state, gate);
    return state;
}

StateVector simulate(const Circuit& circuit, StateVector input) {
    for (const auto& g : circuit.gates) apply_gate_inplace(input, g);
    return input;
}

StateVector simulate_faulty(const Circuit& circuit, const Fault& fault, StateVector input) {
    for (std::size_t g = 0; g < circuit.num_gates(); ++g) {
        if (g == fault.position) input[fault.wire] = fault.stuck;
        apply_gate_inplace(input, circuit.gates[g]);
    }
    return input;
}

std::size_t free_input_count(const Circuit& circuit) {
    std::size_t k = 0;
    for (const auto& c : circuit.constants)
        if (!c) ++k;
    return k;
}

void check_cap(const Circuit& circuit, std::size_t cap) {
    const auto k = free_input_count(circuit);
    if (k > cap) throw InputCapExceeded(k, cap);
    if (k >= 63) throw InputCapExceeded(k, 62);
}

StateVector input_vector(const Circuit& circuit, std::uint64_t row) {
    StateVector s(circuit.num_wires());
    const auto free = circuit.free_wires();
    const auto k = free.size();
    for (Wire w = 0; w < circuit.num_wires(); ++w)
        if (circuit.constants[w]) s[w] = *circuit.constants[w];
    for (std::size_t i = 0; i < k; ++i) s[free[i]] = (row >> (k - 1 - i)) & 1;
    return s;
}

TruthTable simulate_exhaustive(const Circuit& circuit, std::size_t cap) {
    check_cap(circuit, cap);
    TruthTable t;
    t.free_wires = circuit.free_wires();
    t.num_wires = circuit.num_wires();
    t.rows = std::uint64_t{1} << t.free_wires.size();
    t.inputs.assign(t.num_wires, std::vector<Word>(t.words(), 0));
    t.outputs.assign(t.num_wires, std::vector<Word>(t.words(), 0));
    for (std::uint64_t r = 0; r < t.rows; ++r) {
        auto in = input_vector(circuit, r);
        auto out = simulate(circuit, in);
        const Word bit = Word{1} << (r % kWordBits);
        for (Wire w = 0; w < t.num_wires; ++w) {
            if (in[w]) t.inputs[w][r / kWordBits] |= bit;
            if (out[w]) t.outputs[w][r / kWordBits] |= bit;
        }
    }
    return t;
}

std::string dump_truth_table(const Circuit& circuit, const TruthTable& table) {
    std::ostringstream out;
    for (Wire w = 0; w < table.num_wires; ++w) out << (w ? " " : "") << circuit.wire_labels[w];
    out << '\n';
    std::string in(table.num_wires, '0'), res(table.num_wires, '0');
    for (std::uint64_t r = 0; r < table.rows; ++r) {
        for (Wire w = 0; w < table.num_wires; ++w) {
            in[w] = table.input_bit(w, r) ? '1' : '0';
            res[w] = table.output_bit(w, r) ? '1' : '0';
        }
        out << in << " -> " << res << '\n';
    }
    return out.str();
}

}
