#include "revinv/implications.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "revinv/packed.hpp"

namespace revinv {

namespace {

bool literal_holds(const TruthTable& t, Wire in, bool v_in, Wire out, bool v_out) {
    const auto words = t.words();
    const Word tail = t.tail_mask();
    const auto& a = t.inputs[in];
    const auto& b = t.outputs[out];
    for (std::size_t i = 0; i < words; ++i) {
        Word m = (v_in ? a[i] : ~a[i]) & (v_out ? ~b[i] : b[i]);
        if (i + 1 == words) m &= tail;
        if (m) return false;
    }
    return true;
}

void permutations(std::size_t arity, const std::vector<Wire>& pool, std::vector<Wire>& cur, std::vector<bool>& used,
                  std::vector<std::vector<Wire>>& out) {
    if (cur.size() == arity) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        cur.push_back(pool[i]);
        permutations(arity, pool, cur, used, out);
        cur.pop_back();
        used[i] = false;
    }
}

std::string value_text(const Implication& imp, bool input) {
    switch (imp.kind) {
    case ImplicationKind::Equal: return "0/1";
    case ImplicationKind::Inverted: return input ? "0/1" : "~";
    case ImplicationKind::Literal: return (input ? imp.v_in : imp.v_out) ? "1" : "0";
    }
    return "?";
}

}

bool implication_holds(const TruthTable& t, const Implication& imp) {
    switch (imp.kind) {
    case ImplicationKind::Equal:
        return literal_holds(t, imp.in_wire, false, imp.out_wire, false) &&
               literal_holds(t, imp.in_wire, true, imp.out_wire, true);
    case ImplicationKind::Inverted:
        return literal_holds(t, imp.in_wire, false, imp.out_wire, true) &&
               literal_holds(t, imp.in_wire, true, imp.out_wire, false);
    case ImplicationKind::Literal: return literal_holds(t, imp.in_wire, imp.v_in, imp.out_wire, imp.v_out);
    }
    return false;
}

std::vector<Implication> discover_natural(const TruthTable& t, const Circuit& circuit) {
    std::vector<Implication> out;
    for (Wire in = 0; in < t.num_wires; ++in) {
        if (!circuit.is_free(in)) continue;
        for (Wire o = 0; o < t.num_wires; ++o) {
            bool lit[2][2];
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) lit[a][b] = literal_holds(t, in, a, o, b);
            if (lit[0][0] && lit[1][1]) {
                out.push_back(Implication::equal(in, o));
                lit[0][0] = lit[1][1] = false;
            }
            if (lit[0][1] && lit[1][0]) {
                out.push_back(Implication::inverted(in, o));
                lit[0][1] = lit[1][0] = false;
            }
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    if (lit[a][b]) out.push_back(Implication::literal(in, a, o, b));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GateTemplate> default_gate_library() {
    return {
        {"cnot", GateKind::Toffoli, 2},  {"toffoli", GateKind::Toffoli, 3},   {"fredkin", GateKind::Fredkin, 3},
        {"peres", GateKind::Peres, 3},   {"fd", GateKind::FeynmanDouble, 3},
    };
}

std::vector<GateTemplate> select_gate_library(const std::string& names) {
    const auto all = default_gate_library();
    std::vector<GateTemplate> out;
    std::stringstream ss(names);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name.empty()) continue;
        if (name == "all") return all;
        auto it = std::find_if(all.begin(), all.end(), [&](const GateTemplate& t) { return t.name == name; });
        if (it == all.end())
            throw std::invalid_argument("unknown gate '" + name + "' (choose from cnot,toffoli,fredkin,peres,fd)");
        if (std::none_of(out.begin(), out.end(), [&](const GateTemplate& t) { return t.name == name; }))
            out.push_back(*it);
    }
    if (out.empty()) throw std::invalid_argument("empty gate library");
    return out;
}

Circuit apply_placement(const Circuit& circuit, const Placement& placement) {
    return append_gate(circuit, placement.gate);
}

std::vector<ArtificialFinding> discover_artificial(const Circuit& circuit, const std::vector<GateTemplate>& library,
                                                   std::size_t cap, int workers) {
    const auto garbage = circuit.garbage_wires();
    if (garbage.empty()) return {};
    const auto base_table = simulate_exhaustive_packed(circuit, cap, workers);
    const auto base = discover_natural(base_table, circuit);

    std::vector<Placement> placements;
    for (const auto& tmpl : library) {
        if (tmpl.arity > garbage.size()) continue;
        std::vector<std::vector<Wire>> perms;
        std::vector<Wire> cur;
        std::vector<bool> used(garbage.size(), false);
        permutations(tmpl.arity, garbage, cur, used, perms);
        for (const auto& p : perms) placements.push_back({tmpl.name, tmpl.bind(p)});
    }

    struct Result {
        std::vector<std::vector<Word>> garbage_outputs;
        std::vector<Implication> fresh;
    };
    std::vector<Result> results(placements.size());
    const auto n = static_cast<std::int64_t>(placements.size());
#pragma omp parallel for schedule(dynamic) num_threads(resolve_workers(workers))
    for (std::int64_t i = 0; i < n; ++i) {
        const auto appended = apply_placement(circuit, placements[static_cast<std::size_t>(i)]);
        const auto table = simulate_exhaustive_packed(appended, cap, 1);
        auto& r = results[static_cast<std::size_t>(i)];
        for (Wire g : garbage) r.garbage_outputs.push_back(table.outputs[g]);
        for (const auto& imp : discover_natural(table, appended))
            if (!std::binary_search(base.begin(), base.end(), imp)) r.fresh.push_back(imp);
    }

    std::vector<ArtificialFinding> out;
    std::set<std::vector<std::vector<Word>>> seen;
    for (std::size_t i = 0; i < placements.size(); ++i) {
        if (!seen.insert(results[i].garbage_outputs).second || results[i].fresh.empty()) continue;
        out.push_back({placements[i], std::move(results[i].fresh)});
    }
    return out;
}

std::string kind_name(ImplicationKind kind) {
    switch (kind) {
    case ImplicationKind::Equal: return "equal";
    case ImplicationKind::Inverted: return "inverted";
    case ImplicationKind::Literal: return "literal";
    }
    return "?";
}

std::string format_implication(const Implication& imp, const Circuit& c) {
    return "in:" + c.wire_labels[imp.in_wire] + "=" + value_text(imp, true) + " => out:" +
           c.wire_labels[imp.out_wire] + "=" + value_text(imp, false);
}

std::string format_implication_text(const Implication& imp, const Circuit& c) {
    std::string rhs = value_text(imp, false);
    if (imp.kind == ImplicationKind::Inverted) rhs = "1/0";
    return "(" + c.wire_labels[imp.in_wire] + "=" + value_text(imp, true) + ") => (" + c.wire_labels[imp.out_wire] +
           "=" + rhs + ")";
}

std::string format_placement(const Placement& p, const Circuit& c) {
    std::string s = p.template_name + "(";
    auto w = p.wires();
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + c.wire_labels[w[i]];
    return s + ")";
}

std::string implication_id(const Implication& imp, const Placement* placement) {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(imp.in_wire);
    mix(imp.out_wire);
    mix(static_cast<std::uint64_t>(imp.kind));
    mix(imp.v_in);
    mix(imp.v_out);
    if (placement) {
        for (char ch : placement->template_name) mix(static_cast<unsigned char>(ch));
        mix(static_cast<std::uint64_t>(placement->gate.kind()));
        for (Wire w : placement->wires()) mix(w + 1);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}
