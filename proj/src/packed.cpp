#include "revinv/packed.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

namespace revinv {

int resolve_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

Word PackedStates::tail_mask() const {
    const auto rem = lanes % kWordBits;
    return rem == 0 ? ~Word{0} : (Word{1} << rem) - 1;
}

StateVector PackedStates::unpack(std::uint64_t lane) const {
    StateVector s(num_wires);
    for (Wire w = 0; w < num_wires; ++w) s[w] = (column(w)[lane / kWordBits] >> (lane % kWordBits)) & 1;
    return s;
}

PackedStates pack_inputs(const TruthTable& table) {
    PackedStates p;
    p.num_wires = table.num_wires;
    p.lanes = table.rows;
    p.words = table.words();
    p.bits.resize(p.num_wires * p.words);
    for (Wire w = 0; w < p.num_wires; ++w) std::copy(table.inputs[w].begin(), table.inputs[w].end(), p.column(w));
    return p;
}

namespace {

// Word pattern for lane bit `bit` of the row index, at word index i.
Word lane_pattern(std::size_t bit, std::size_t i) {
    if (bit >= 6) return ((i >> (bit - 6)) & 1) ? ~Word{0} : 0;
    static constexpr Word pats[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
                                     0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    return pats[bit];
}

void fill_inputs(const Circuit& circuit, PackedStates& p, std::size_t w0, std::size_t w1) {
    const auto free = circuit.free_wires();
    const auto k = free.size();
    for (Wire w = 0; w < p.num_wires; ++w)
        if (circuit.constants[w]) std::fill(p.column(w) + w0, p.column(w) + w1, *circuit.constants[w] ? ~Word{0} : 0);
    for (std::size_t f = 0; f < k; ++f) {
        Word* col = p.column(free[f]);
        for (std::size_t i = w0; i < w1; ++i) col[i] = lane_pattern(k - 1 - f, i);
    }
    if (w1 == p.words && p.words > 0)
        for (Wire w = 0; w < p.num_wires; ++w) p.column(w)[p.words - 1] &= p.tail_mask();
}

}

PackedStates pack_exhaustive_inputs(const Circuit& circuit, std::size_t cap) {
    check_cap(circuit, cap);
    PackedStates p;
    p.num_wires = circuit.num_wires();
    p.lanes = std::uint64_t{1} << free_input_count(circuit);
    p.words = static_cast<std::size_t>((p.lanes + kWordBits - 1) / kWordBits);
    p.bits.resize(p.num_wires * p.words);
    fill_inputs(circuit, p, 0, p.words);
    return p;
}

void run_gates(PackedStates& p, std::span<const Gate> gates, std::size_t w0, std::size_t w1) {
    const std::size_t n = p.words;
    Word* base = p.bits.data();
    for (const auto& gate : gates) {
        auto wires = gate.wires();
        switch (gate.kind()) {
        case GateKind::Toffoli: {
            Word* t = base + wires.back() * n;
            auto ctl = gate.controls();
            if (ctl.empty()) {
                for (std::size_t i = w0; i < w1; ++i) t[i] = ~t[i];
            } else if (ctl.size() == 1) {
                const Word* a = base + ctl[0] * n;
                for (std::size_t i = w0; i < w1; ++i) t[i] ^= a[i];
            } else if (ctl.size() == 2) {
                const Word* a = base + ctl[0] * n;
                const Word* b = base + ctl[1] * n;
                for (std::size_t i = w0; i < w1; ++i) t[i] ^= a[i] & b[i];
            } else {
                for (std::size_t i = w0; i < w1; ++i) {
                    Word m = ~Word{0};
                    for (Wire c : ctl) m &= base[c * n + i];
                    t[i] ^= m;
                }
            }
            break;
        }
        case GateKind::Fredkin: {
            Word* x = base + wires[wires.size() - 2] * n;
            Word* y = base + wires.back() * n;
            auto ctl = gate.controls();
            for (std::size_t i = w0; i < w1; ++i) {
                Word m = ~Word{0};
                for (Wire c : ctl) m &= base[c * n + i];
                const Word diff = (x[i] ^ y[i]) & m;
                x[i] ^= diff;
                y[i] ^= diff;
            }
            break;
        }
        case GateKind::Peres: {
            const Word* a = base + wires[0] * n;
            Word* b = base + wires[1] * n;
            Word* c = base + wires[2] * n;
            for (std::size_t i = w0; i < w1; ++i) {
                c[i] ^= a[i] & b[i];
                b[i] ^= a[i];
            }
            break;
        }
        case GateKind::FeynmanDouble: {
            const Word* a = base + wires[0] * n;
            Word* b = base + wires[1] * n;
            Word* c = base + wires[2] * n;
            for (std::size_t i = w0; i < w1; ++i) {
                b[i] ^= a[i];
                c[i] ^= a[i];
            }
            break;
        }
        }
    }
}

void run_gates(PackedStates& p, std::span<const Gate> gates) { run_gates(p, gates, 0, p.words); }

TruthTable simulate_exhaustive_packed(const Circuit& circuit, std::size_t cap, int workers) {
    check_cap(circuit, cap);
    PackedStates p;
    p.num_wires = circuit.num_wires();
    p.lanes = std::uint64_t{1} << free_input_count(circuit);
    p.words = static_cast<std::size_t>((p.lanes + kWordBits - 1) / kWordBits);
    p.bits.resize(p.num_wires * p.words);

    TruthTable t;
    t.free_wires = circuit.free_wires();
    t.num_wires = p.num_wires;
    t.rows = p.lanes;
    t.inputs.assign(t.num_wires, std::vector<Word>(p.words));
    t.outputs.assign(t.num_wires, std::vector<Word>(p.words));

    constexpr std::size_t kChunk = 256;
    const auto chunks = static_cast<std::int64_t>((p.words + kChunk - 1) / kChunk);
    const std::span<const Gate> gates(circuit.gates);
#pragma omp parallel for schedule(static) num_threads(resolve_workers(workers))
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::size_t w0 = static_cast<std::size_t>(c) * kChunk;
        const std::size_t w1 = std::min(p.words, w0 + kChunk);
        fill_inputs(circuit, p, w0, w1);
        for (Wire w = 0; w < t.num_wires; ++w) std::copy(p.column(w) + w0, p.column(w) + w1, t.inputs[w].begin() + w0);
        run_gates(p, gates, w0, w1);
        for (Wire w = 0; w < t.num_wires; ++w) {
            std::copy(p.column(w) + w0, p.column(w) + w1, t.outputs[w].begin() + w0);
            if (w1 == p.words) t.outputs[w][p.words - 1] &= p.tail_mask();
        }
    }
    return t;
}

void sweep_faults(const Circuit& circuit, const TruthTable& table, std::span<const Fault> faults, int workers,
                  const FaultVisitor& visit) {
    std::vector<std::size_t> order(faults.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return faults[a].position < faults[b].position; });

    PackedStates prefix = pack_inputs(table);
    const std::span<const Gate> gates(circuit.gates);
    const int threads = resolve_workers(workers);
    std::size_t next = 0;
    for (std::size_t g = 0; g <= gates.size() && next < order.size(); ++g) {
        std::size_t end = next;
        while (end < order.size() && faults[order[end]].position == g) ++end;
        const auto count = static_cast<std::int64_t>(end - next);
        if (count > 0) {
            const auto suffix = gates.subspan(std::min(g, gates.size()));
#pragma omp parallel num_threads(threads)
            {
                PackedStates local = prefix;
#pragma omp for schedule(dynamic, 1)
                for (std::int64_t i = 0; i < count; ++i) {
                    const std::size_t idx = order[next + static_cast<std::size_t>(i)];
                    const Fault& f = faults[idx];
                    std::copy(prefix.bits.begin(), prefix.bits.end(), local.bits.begin());
                    std::fill(local.column(f.wire), local.column(f.wire) + local.words, f.stuck ? ~Word{0} : 0);
                    run_gates(local, suffix);
                    visit(idx, local);
                }
            }
        }
        next = end;
        if (g < gates.size()) run_gates(prefix, gates.subspan(g, 1));
    }
}

std::vector<std::vector<Word>> propagation_masks(const Circuit& circuit, const TruthTable& table,
                                                 std::span<const Fault> faults, int workers) {
    std::vector<std::vector<Word>> out(faults.size());
    const auto words = table.words();
    const Word tail = table.tail_mask();
    sweep_faults(circuit, table, faults, workers, [&](std::size_t idx, const PackedStates& faulty) {
        std::vector<Word> m(words, 0);
        for (Wire w = 0; w < table.num_wires; ++w) {
            if (circuit.garbage[w]) continue;
            const Word* col = faulty.column(w);
            for (std::size_t i = 0; i < words; ++i) m[i] |= col[i] ^ table.outputs[w][i];
        }
        if (words) m[words - 1] &= tail;
        out[idx] = std::move(m);
    });
    return out;
}

std::vector<std::vector<Word>> propagation_masks_naive(const Circuit& circuit, const TruthTable& table,
                                                       std::span<const Fault> faults) {
    std::vector<std::vector<Word>> out(faults.size(), std::vector<Word>(table.words(), 0));
    for (std::uint64_t r = 0; r < table.rows; ++r) {
        const auto in = table.input_row(r);
        const auto golden = simulate(circuit, in);
        for (std::size_t f = 0; f < faults.size(); ++f) {
            const auto bad = simulate_faulty(circuit, faults[f], in);
            for (Wire w = 0; w < table.num_wires; ++w)
                if (!circuit.garbage[w] && bad[w] != golden[w]) {
                    out[f][r / kWordBits] |= Word{1} << (r % kWordBits);
                    break;
                }
        }
    }
    return out;
}

}
