#include "revinv/netlist.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace revinv {

namespace {

void require_distinct(const std::vector<Wire>& wires) {
    for (std::size_t i = 0; i < wires.size(); ++i)
        for (std::size_t j = i + 1; j < wires.size(); ++j)
            if (wires[i] == wires[j])
                throw std::invalid_argument("gate wires must be pairwise distinct");
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string to_lower(std::string s) {
    for (auto& c : s)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return s;
}

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += xs[i];
    }
    return out;
}

}

Gate::Gate(GateKind kind, std::vector<Wire> wires) : kind_(kind), wires_(std::move(wires)) {
    require_distinct(wires_);
}

Gate Gate::toffoli(std::vector<Wire> controls, Wire target) {
    controls.push_back(target);
    return Gate(GateKind::Toffoli, std::move(controls));
}

Gate Gate::fredkin(std::vector<Wire> controls, Wire first, Wire second) {
    controls.push_back(first);
    controls.push_back(second);
    return Gate(GateKind::Fredkin, std::move(controls));
}

Gate Gate::peres(Wire a, Wire b, Wire c) { return Gate(GateKind::Peres, {a, b, c}); }

Gate Gate::feynman_double(Wire a, Wire b, Wire c) { return Gate(GateKind::FeynmanDouble, {a, b, c}); }

Gate Gate::make(GateKind kind, std::vector<Wire> wires) {
    switch (kind) {
    case GateKind::Toffoli:
        if (wires.empty()) throw std::invalid_argument("toffoli gate needs a target");
        break;
    case GateKind::Fredkin:
        if (wires.size() < 2) throw std::invalid_argument("fredkin gate needs two targets");
        break;
    case GateKind::Peres:
    case GateKind::FeynmanDouble:
        if (wires.size() != 3) throw std::invalid_argument("gate needs exactly 3 wires");
        break;
    }
    return Gate(kind, std::move(wires));
}

std::size_t Gate::num_controls() const noexcept {
    switch (kind_) {
    case GateKind::Toffoli: return wires_.size() - 1;
    case GateKind::Fredkin: return wires_.size() - 2;
    default: return 1;
    }
}

bool Gate::writes(Wire w) const noexcept {
    auto t = targets();
    return std::find(t.begin(), t.end(), w) != t.end();
}

Wire Gate::max_wire() const noexcept { return *std::max_element(wires_.begin(), wires_.end()); }

std::string Gate::mnemonic() const {
    switch (kind_) {
    case GateKind::Toffoli: return "t" + std::to_string(wires_.size());
    case GateKind::Fredkin: return "f" + std::to_string(wires_.size());
    case GateKind::Peres: return "p3";
    case GateKind::FeynmanDouble: return "fd3";
    }
    return "?";
}

std::string_view kind_name(GateKind kind) {
    switch (kind) {
    case GateKind::Toffoli: return "toffoli";
    case GateKind::Fredkin: return "fredkin";
    case GateKind::Peres: return "peres";
    case GateKind::FeynmanDouble: return "feynman_double";
    }
    return "?";
}

std::string default_label(std::size_t index) {
    // a..z, then a1..z1, ...
    std::string s(1, static_cast<char>('a' + index % 26));
    if (index >= 26) s += std::to_string(index / 26);
    return s;
}

Circuit Circuit::with_wires(std::size_t wires, std::string name) {
    Circuit c;
    c.name = std::move(name);
    for (std::size_t i = 0; i < wires; ++i) c.wire_labels.push_back(default_label(i));
    c.constants.assign(wires, std::nullopt);
    c.garbage.assign(wires, false);
    return c;
}

std::vector<Wire> Circuit::free_wires() const {
    std::vector<Wire> out;
    for (Wire w = 0; w < num_wires(); ++w)
        if (is_free(w)) out.push_back(w);
    return out;
}

std::vector<Wire> Circuit::garbage_wires() const {
    std::vector<Wire> out;
    for (Wire w = 0; w < num_wires(); ++w)
        if (garbage[w]) out.push_back(w);
    return out;
}

std::size_t Circuit::garbage_count() const {
    return static_cast<std::size_t>(std::count(garbage.begin(), garbage.end(), true));
}

void Circuit::validate() const {
    const auto w = num_wires();
    if (constants.size() != w || garbage.size() != w)
        throw std::invalid_argument("constant/garbage annotations must cover every wire");
    if (!input_labels.empty() && input_labels.size() != w)
        throw std::invalid_argument("input label count differs from wire count");
    if (!output_labels.empty() && output_labels.size() != w)
        throw std::invalid_argument("output label count differs from wire count");
    for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = i + 1; j < w; ++j)
            if (wire_labels[i] == wire_labels[j])
                throw std::invalid_argument("duplicate wire label '" + wire_labels[i] + "'");
    for (std::size_t g = 0; g < gates.size(); ++g)
        if (gates[g].max_wire() >= w)
            throw std::invalid_argument("gate " + std::to_string(g) + " references a wire out of range");
}

ParseError::ParseError(std::size_t line, const std::string& msg)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line), detail_(msg) {}

Circuit parse_real(std::string_view text, std::string name) {
    Circuit c;
    c.name = std::move(name);
    std::optional<std::size_t> numvars;
    std::size_t numvars_line = 0;
    bool have_vars = false;
    std::string constants_str, garbage_str;
    std::size_t constants_line = 0, garbage_line = 0;
    std::unordered_map<std::string, Wire> index;
    enum { Header, Body, Done } state = Header;

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view raw = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++lineno;

        auto tokens = split_ws(raw);
        if (tokens.empty() || tokens[0][0] == '#') {
            if (nl == text.size()) break;
            continue;
        }
        const std::string key = to_lower(tokens[0]);

        if (state == Done) throw ParseError(lineno, "content after .end");

        if (state == Body) {
            if (key == ".end") {
                state = Done;
                continue;
            }
            if (key[0] == '.') throw ParseError(lineno, "unexpected directive '" + tokens[0] + "' inside gate block");
            std::vector<Wire> wires;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const auto& t = tokens[i];
                if (t[0] == '-' || t.back() == '\'')
                    throw ParseError(lineno, "negative controls are not supported ('" + t + "')");
                auto it = index.find(t);
                if (it == index.end()) throw ParseError(lineno, "undeclared variable '" + t + "'");
                if (std::find(wires.begin(), wires.end(), it->second) != wires.end())
                    throw ParseError(lineno, "duplicate wire '" + t + "' in gate");
                wires.push_back(it->second);
            }
            std::optional<GateKind> kind;
            std::size_t declared = 0;
            auto parse_count = [&](std::string_view digits) {
                if (digits.empty()) return false;
                auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), declared);
                return ec == std::errc() && p == digits.data() + digits.size();
            };
            if (key == "p3") {
                kind = GateKind::Peres;
                declared = 3;
            } else if (key == "fd3") {
                kind = GateKind::FeynmanDouble;
                declared = 3;
            } else if (key[0] == 't' && parse_count(std::string_view(key).substr(1))) {
                kind = GateKind::Toffoli;
            } else if (key[0] == 'f' && parse_count(std::string_view(key).substr(1))) {
                kind = GateKind::Fredkin;
            }
            if (!kind) throw ParseError(lineno, "unknown gate mnemonic '" + tokens[0] + "'");
            if (wires.size() != declared)
                throw ParseError(lineno, "gate '" + tokens[0] + "' expects " + std::to_string(declared) +
                                             " wires, got " + std::to_string(wires.size()));
            if (*kind == GateKind::Toffoli && declared < 1) throw ParseError(lineno, "t0 is not a gate");
            if (*kind == GateKind::Fredkin && declared < 2) throw ParseError(lineno, "fredkin gates need at least 2 wires");
            c.gates.push_back(Gate::make(*kind, std::move(wires)));
            if (nl == text.size()) break;
            continue;
        }

        std::vector<std::string> args(tokens.begin() + 1, tokens.end());
        if (key == ".version") {
            c.version = join(args);
        } else if (key == ".numvars") {
            std::size_t n = 0;
            if (args.size() != 1) throw ParseError(lineno, ".numvars takes one integer");
            auto [p, ec] = std::from_chars(args[0].data(), args[0].data() + args[0].size(), n);
            if (ec != std::errc() || p != args[0].data() + args[0].size())
                throw ParseError(lineno, "invalid .numvars value '" + args[0] + "'");
            numvars = n;
            numvars_line = lineno;
        } else if (key == ".variables") {
            for (const auto& v : args) {
                if (index.contains(v)) throw ParseError(lineno, "variable '" + v + "' declared twice");
                index.emplace(v, c.wire_labels.size());
                c.wire_labels.push_back(v);
            }
            have_vars = true;
        } else if (key == ".inputs") {
            c.input_labels = args;
        } else if (key == ".outputs") {
            c.output_labels = args;
        } else if (key == ".constants") {
            if (args.size() != 1) throw ParseError(lineno, ".constants takes one string");
            constants_str = args[0];
            constants_line = lineno;
        } else if (key == ".garbage") {
            if (args.size() != 1) throw ParseError(lineno, ".garbage takes one string");
            garbage_str = args[0];
            garbage_line = lineno;
        } else if (key == ".begin") {
            if (!numvars) throw ParseError(lineno, "missing .numvars");
            if (!have_vars) throw ParseError(lineno, "missing .variables");
            if (*numvars != c.wire_labels.size())
                throw ParseError(numvars_line, ".numvars " + std::to_string(*numvars) + " does not match " +
                                                   std::to_string(c.wire_labels.size()) + " declared variables");
            state = Body;
        } else if (key == ".end") {
            throw ParseError(lineno, ".end without .begin");
        } else if (key[0] == '.') {
            throw ParseError(lineno, "unsupported directive '" + tokens[0] + "'");
        } else {
            throw ParseError(lineno, "syntax error: expected a directive, got '" + tokens[0] + "'");
        }
        if (nl == text.size()) break;
    }

    if (!numvars) throw ParseError(0, "missing .numvars");
    if (state == Header) throw ParseError(lineno, "missing .begin");
    if (state == Body) throw ParseError(lineno, "missing .end");

    const std::size_t w = c.wire_labels.size();
    if (!c.input_labels.empty() && c.input_labels.size() != w)
        throw ParseError(0, ".inputs lists " + std::to_string(c.input_labels.size()) + " names, expected " +
                                std::to_string(w));
    if (!c.output_labels.empty() && c.output_labels.size() != w)
        throw ParseError(0, ".outputs lists " + std::to_string(c.output_labels.size()) + " names, expected " +
                                std::to_string(w));

    c.constants.assign(w, std::nullopt);
    if (!constants_str.empty()) {
        if (constants_str.size() != w)
            throw ParseError(constants_line, ".constants length differs from .numvars");
        for (std::size_t i = 0; i < w; ++i) {
            char ch = constants_str[i];
            if (ch == '0') c.constants[i] = false;
            else if (ch == '1') c.constants[i] = true;
            else if (ch != '-') throw ParseError(constants_line, std::string("invalid .constants character '") + ch + "'");
        }
    }
    c.garbage.assign(w, false);
    if (!garbage_str.empty()) {
        if (garbage_str.size() != w) throw ParseError(garbage_line, ".garbage length differs from .numvars");
        for (std::size_t i = 0; i < w; ++i) {
            char ch = garbage_str[i];
            if (ch == '1') c.garbage[i] = true;
            else if (ch != '-') throw ParseError(garbage_line, std::string("invalid .garbage character '") + ch + "'");
        }
    }
    return c;
}

Circuit load_real(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
    if (name.size() > 5 && name.ends_with(".real")) name.resize(name.size() - 5);
    return parse_real(ss.str(), name);
}

std::string serialize_real(const Circuit& c) {
    std::ostringstream out;
    if (!c.version.empty()) out << ".version " << c.version << '\n';
    out << ".numvars " << c.num_wires() << '\n';
    out << ".variables " << join(c.wire_labels) << '\n';
    if (!c.input_labels.empty()) out << ".inputs " << join(c.input_labels) << '\n';
    if (!c.output_labels.empty()) out << ".outputs " << join(c.output_labels) << '\n';
    if (std::any_of(c.constants.begin(), c.constants.end(), [](auto v) { return v.has_value(); })) {
        out << ".constants ";
        for (const auto& v : c.constants) out << (v ? (*v ? '1' : '0') : '-');
        out << '\n';
    }
    if (c.garbage_count() > 0) {
        out << ".garbage ";
        for (bool g : c.garbage) out << (g ? '1' : '-');
        out << '\n';
    }
    out << ".begin\n";
    for (const auto& g : c.gates) {
        out << g.mnemonic();
        for (Wire w : g.wires()) out << ' ' << c.wire_labels[w];
        out << '\n';
    }
    out << ".end\n";
    return out.str();
}

std::vector<Fault> fault_universe(const Circuit& c) {
    std::vector<Fault> out;
    out.reserve(fault_count(c));
    for (std::size_t g = 0; g < c.num_gates(); ++g)
        for (Wire w = 0; w < c.num_wires(); ++w) {
            out.push_back({g, w, false});
            out.push_back({g, w, true});
        }
    return out;
}

std::size_t fault_count(const Circuit& c) { return c.num_gates() * c.num_wires() * 2; }

Gate GateTemplate::bind(std::span<const Wire> wires) const {
    if (wires.size() != arity)
        throw std::invalid_argument("template '" + name + "' needs " + std::to_string(arity) + " wires");
    return Gate::make(kind, std::vector<Wire>(wires.begin(), wires.end()));
}

Circuit append_gate(const Circuit& circuit, const Gate& gate) {
    const auto g = circuit.garbage_wires();
    if (gate.arity() > g.size())
        throw std::invalid_argument("gate arity " + std::to_string(gate.arity()) + " exceeds garbage wire count " +
                                    std::to_string(g.size()));
    for (Wire w : gate.wires()) {
        if (w >= circuit.num_wires()) throw std::invalid_argument("wire index out of range");
        if (!circuit.garbage[w])
            throw std::invalid_argument("wire '" + circuit.wire_labels[w] + "' is not a garbage wire");
    }
    Circuit out = circuit;
    out.gates.push_back(gate);
    return out;
}

Circuit append_gate(const Circuit& circuit, const GateTemplate& tmpl, std::span<const Wire> assignment) {
    if (tmpl.arity > circuit.garbage_count())
        throw std::invalid_argument("gate arity " + std::to_string(tmpl.arity) + " exceeds garbage wire count " +
                                    std::to_string(circuit.garbage_count()));
    return append_gate(circuit, tmpl.bind(assignment));
}

}
