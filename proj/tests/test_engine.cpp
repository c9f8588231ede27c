#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "corpus.hpp"
#include "oracle.hpp"
#include "revinv/engine.hpp"

using namespace revinv;

namespace {

StateVector sv(std::initializer_list<int> bits) {
    StateVector s;
    for (int b : bits) s.push_back(static_cast<std::uint8_t>(b));
    return s;
}

StateVector from_index(std::uint64_t v, std::size_t n) {
    StateVector s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (v >> (n - 1 - i)) & 1;
    return s;
}

std::vector<Gate> all_gate_shapes() {
    return {Gate::toffoli({}, 0),       Gate::toffoli({0}, 1),       Gate::toffoli({0, 1}, 2),
            Gate::toffoli({0, 1, 2}, 3), Gate::fredkin({}, 0, 1),    Gate::fredkin({0}, 1, 2),
            Gate::fredkin({0, 1}, 2, 3), Gate::peres(0, 1, 2),       Gate::feynman_double(0, 1, 2)};
}

Circuit random_circuit(std::size_t wires, std::size_t gates, std::mt19937_64& rng) {
    auto c = Circuit::with_wires(wires);
    std::vector<Wire> all(wires);
    for (Wire w = 0; w < wires; ++w) all[w] = w;
    for (std::size_t g = 0; g < gates; ++g) {
        std::shuffle(all.begin(), all.end(), rng);
        const int kind = static_cast<int>(rng() % 4);
        if (kind == 0 || wires < 3) {
            const std::size_t k = rng() % std::min<std::size_t>(wires, 4);
            c.gates.push_back(Gate::toffoli({all.begin(), all.begin() + static_cast<long>(k)}, all[k]));
        } else if (kind == 1) {
            const std::size_t k = rng() % std::min<std::size_t>(wires - 1, 3);
            c.gates.push_back(Gate::fredkin({all.begin(), all.begin() + static_cast<long>(k)}, all[k], all[k + 1]));
        } else if (kind == 2) {
            c.gates.push_back(Gate::peres(all[0], all[1], all[2]));
        } else {
            c.gates.push_back(Gate::feynman_double(all[0], all[1], all[2]));
        }
    }
    return c;
}

}

TEST_CASE("Fredkin reproduces the 8-row parity-preserving table") {
    // A B C | P Q R
    const int table[8][6] = {{0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 1}, {0, 1, 0, 0, 1, 0}, {0, 1, 1, 0, 1, 1},
                             {1, 0, 0, 1, 0, 0}, {1, 0, 1, 1, 1, 0}, {1, 1, 0, 1, 0, 1}, {1, 1, 1, 1, 1, 1}};
    const auto g = Gate::fredkin({0}, 1, 2);
    for (const auto& row : table) {
        const auto out = apply_gate(sv({row[0], row[1], row[2]}), g);
        CHECK(out == sv({row[3], row[4], row[5]}));
        CHECK((row[0] ^ row[1] ^ row[2]) == (out[0] ^ out[1] ^ out[2]));
    }
    CHECK(apply_gate(sv({1, 0, 1}), g) == sv({1, 1, 0}));

    auto c = Circuit::with_wires(3);
    c.gates.push_back(g);
    const auto t = simulate_exhaustive(c);
    REQUIRE(t.rows == 8);
    for (std::uint64_t r = 0; r < 8; ++r) CHECK(t.output_row(r) == sv({table[r][3], table[r][4], table[r][5]}));
}

TEST_CASE("Toffoli gives NAND on the target when it starts at 1") {
    CHECK(apply_gate(sv({1, 1, 1}), Gate::toffoli({0, 1}, 2)) == sv({1, 1, 0}));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) CHECK(apply_gate(sv({a, b, 1}), Gate::toffoli({0, 1}, 2))[2] == !(a && b));
}

TEST_CASE("Peres and Feynman-double fixtures") {
    CHECK(apply_gate(sv({1, 1, 0}), Gate::peres(0, 1, 2)) == sv({1, 0, 1}));
    CHECK(apply_gate(sv({1, 0, 0}), Gate::feynman_double(0, 1, 2)) == sv({1, 1, 1}));

    const int peres[8][3] = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}, {1, 0, 0}};
    const int fd[8][3] = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 1, 1}, {1, 1, 0}, {1, 0, 1}, {1, 0, 0}};
    for (std::uint64_t v = 0; v < 8; ++v) {
        const auto in = from_index(v, 3);
        CHECK(apply_gate(in, Gate::peres(0, 1, 2)) == sv({peres[v][0], peres[v][1], peres[v][2]}));
        CHECK(apply_gate(in, Gate::feynman_double(0, 1, 2)) == sv({fd[v][0], fd[v][1], fd[v][2]}));
        // Peres = Toffoli(a,b;c) then CNOT(a;b)
        CHECK(apply_gate(in, Gate::peres(0, 1, 2)) ==
              apply_gate(apply_gate(in, Gate::toffoli({0, 1}, 2)), Gate::toffoli({0}, 1)));
    }
}

TEST_CASE("every gate shape is a bijection on its wires") {
    for (const auto& g : all_gate_shapes()) {
        const auto n = g.max_wire() + 1;
        std::set<StateVector> seen;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) seen.insert(apply_gate(from_index(v, n), g));
        CHECK(seen.size() == (std::size_t{1} << n));
    }
}

TEST_CASE("self-inverse gates and the Peres inverse") {
    for (const auto& g : all_gate_shapes()) {
        if (g.kind() == GateKind::Peres) continue;
        const auto n = g.max_wire() + 1;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const auto s = from_index(v, n);
            CHECK(apply_gate(apply_gate(s, g), g) == s);
        }
    }
    for (std::uint64_t v = 0; v < 8; ++v) {
        const auto s = from_index(v, 3);
        const auto p = apply_gate(s, Gate::peres(0, 1, 2));
        CHECK(apply_gate(apply_gate(p, Gate::toffoli({0}, 1)), Gate::toffoli({0, 1}, 2)) == s);
    }
}

TEST_CASE("Fredkin preserves parity, Toffoli does not") {
    bool toffoli_breaks = false;
    for (std::uint64_t v = 0; v < 8; ++v) {
        const auto s = from_index(v, 3);
        const auto f = apply_gate(s, Gate::fredkin({0}, 1, 2));
        const auto t = apply_gate(s, Gate::toffoli({0, 1}, 2));
        CHECK((s[0] ^ s[1] ^ s[2]) == (f[0] ^ f[1] ^ f[2]));
        toffoli_breaks = toffoli_breaks || (s[0] ^ s[1] ^ s[2]) != (t[0] ^ t[1] ^ t[2]);
    }
    CHECK(toffoli_breaks);
}

TEST_CASE("whole-circuit bijectivity for random circuits up to 12 wires") {
    std::mt19937_64 rng(7);
    for (std::size_t w = 1; w <= 12; ++w) {
        const auto c = random_circuit(w, 3 * w, rng);
        const auto t = simulate_exhaustive(c);
        std::vector<StateVector> outs;
        for (std::uint64_t r = 0; r < t.rows; ++r) outs.push_back(t.output_row(r));
        std::sort(outs.begin(), outs.end());
        CHECK(std::adjacent_find(outs.begin(), outs.end()) == outs.end());
    }
}

TEST_CASE("simulate agrees with the integer oracle on random circuits") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t w = 3 + rng() % 8;
        const auto c = random_circuit(w, 20, rng);
        const auto t = simulate_exhaustive(c);
        const auto ins = oracle::input_states(c);
        for (std::uint64_t r = 0; r < t.rows; ++r) {
            const auto o = oracle::run(c, ins[r]);
            for (Wire x = 0; x < w; ++x) REQUIRE(t.output_bit(x, r) == oracle::bit(o, x));
        }
    }
}

TEST_CASE("trivial simulations") {
    CHECK(simulate(Circuit::with_wires(3), sv({1, 0, 1})) == sv({1, 0, 1}));
    auto inv = Circuit::with_wires(1);
    inv.gates.push_back(Gate::toffoli({}, 0));
    CHECK(simulate(inv, sv({0})) == sv({1}));
    CHECK(simulate_faulty(inv, {0, 0, true}, sv({0})) == sv({0}));
}

TEST_CASE("rd32 computes a full adder") {
    const auto c = testing_corpus::load("rd32");
    // a b c d -> sum on c, d xor carry on d
    for (std::uint64_t v = 0; v < 16; ++v) {
        const auto in = from_index(v, 4);
        const auto out = simulate(c, in);
        const int a = in[0], b = in[1], ci = in[2], d = in[3];
        CHECK(out[2] == (a + b + ci) % 2);
        CHECK(out[3] == (d ^ ((a + b + ci) >= 2)));
        CHECK(out[0] == a);
    }
}

TEST_CASE("constants are held fixed") {
    auto c = Circuit::with_wires(4);
    c.constants[1] = true;
    c.constants[3] = false;
    c.gates.push_back(Gate::toffoli({1}, 3));
    const auto t = simulate_exhaustive(c);
    CHECK(t.rows == 4);
    CHECK(t.free_wires == std::vector<Wire>{0, 2});
    for (std::uint64_t r = 0; r < 4; ++r) {
        CHECK(t.input_bit(1, r));
        CHECK_FALSE(t.input_bit(3, r));
        CHECK(t.output_bit(3, r));
    }
    CHECK(t.input_row(2) == sv({1, 1, 0, 0}));
}

TEST_CASE("bundled benchmarks have pairwise-distinct output rows") {
    for (const auto& name : testing_corpus::names()) {
        CAPTURE(name);
        const auto c = testing_corpus::load(name);
        const auto t = simulate_exhaustive(c);
        std::vector<StateVector> outs;
        for (std::uint64_t r = 0; r < t.rows; ++r) outs.push_back(t.output_row(r));
        std::sort(outs.begin(), outs.end());
        CHECK(std::adjacent_find(outs.begin(), outs.end()) == outs.end());
    }
}

TEST_CASE("input cap refusal") {
    const auto c = Circuit::with_wires(5);
    CHECK_THROWS_AS(simulate_exhaustive(c, 4), InputCapExceeded);
    CHECK(simulate_exhaustive(c, 5).rows == 32);
}

TEST_CASE("no-effect faults leave outputs golden") {
    for (const auto& name : {"rd32", "rd53-130", "4gt4-v0-73", "alu-v4-6", "hwb6-56"}) {
        CAPTURE(name);
        const auto c = testing_corpus::load(name);
        const auto t = simulate_exhaustive(c);
        for (std::uint64_t r = 0; r < t.rows; ++r) {
            auto state = t.input_row(r);
            const auto golden = simulate(c, state);
            for (std::size_t g = 0; g < c.num_gates(); ++g) {
                for (Wire w = 0; w < c.num_wires(); ++w)
                    REQUIRE(simulate_faulty(c, {g, w, static_cast<bool>(state[w])}, t.input_row(r)) == golden);
                apply_gate_inplace(state, c.gates[g]);
            }
        }
    }
}

TEST_CASE("rd32 faulty runs match the oracle on all 16 x 32 pairs") {
    const auto c = testing_corpus::load("rd32");
    const auto ins = oracle::input_states(c);
    std::multiset<std::pair<std::uint64_t, std::size_t>> ours, theirs;
    const auto faults = fault_universe(c);
    for (std::uint64_t r = 0; r < ins.size(); ++r) {
        const auto in = input_vector(c, r);
        const auto golden = simulate(c, in);
        for (std::size_t f = 0; f < faults.size(); ++f) {
            const auto bad = simulate_faulty(c, faults[f], in);
            bool corrupt = false;
            for (Wire w = 0; w < 4; ++w) corrupt = corrupt || (!c.garbage[w] && bad[w] != golden[w]);
            if (corrupt) ours.insert({r, f});
            const auto o = oracle::run(c, ins[r]) ^ oracle::run(c, ins[r], faults[f]);
            if (o & 0b1100) theirs.insert({r, f});
        }
    }
    CHECK(ours == theirs);
    CHECK_FALSE(ours.empty());
}

TEST_CASE("truth dump format") {
    auto c = Circuit::with_wires(2);
    c.gates.push_back(Gate::toffoli({0}, 1));
    CHECK(dump_truth_table(c, simulate_exhaustive(c)) == "a b\n00 -> 00\n01 -> 01\n10 -> 11\n11 -> 10\n");
}
