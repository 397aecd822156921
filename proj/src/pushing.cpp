// Copyright 2026 The qlego Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlego/pushing.hpp"

#include <sstream>

namespace qlego {

std::optional<Representation> find_representation(const BuiltState &state, const Prescription &partial) {
    const Matrix &m = state.matrix.matrix();
    size_t n = state.legs.size();
    std::vector<size_t> legs;
    Vec target;
    for (const auto &[leg, xz] : partial) {
        auto it = state.leg_index.find(leg);
        if (it == state.leg_index.end()) {
            throw UsageError("leg " + leg.str() + " is not a dangling leg of the network");
        }
        legs.push_back(it->second);
    }
    std::vector<size_t> columns = leg_columns(n, legs);
    for (const auto &[leg, xz] : partial) {
        target.push_back(m.mod().reduce(xz.first));
    }
    for (const auto &[leg, xz] : partial) {
        target.push_back(m.mod().reduce(xz.second));
    }
    std::optional<Vec> c = solve(m.select_columns(columns), target);
    if (!c) {
        return std::nullopt;
    }
    const Modulus &mod = m.mod();
    Vec op(2 * n, 0);
    for (size_t r = 0; r < m.rows(); r++) {
        if ((*c)[r] == 0) {
            continue;
        }
        for (size_t col = 0; col < 2 * n; col++) {
            op[col] = mod.add(op[col], mod.mul((*c)[r], m.at(r, col)));
        }
    }
    Vec gens(state.provenance.cols(), 0);
    for (size_t r = 0; r < m.rows(); r++) {
        if ((*c)[r] == 0) {
            continue;
        }
        for (size_t g = 0; g < gens.size(); g++) {
            gens[g] = mod.add(gens[g], mod.mul((*c)[r], state.provenance.at(r, g)));
        }
    }
    return Representation{PauliVector(mod, std::move(op)), *c, std::move(gens)};
}

std::string local_label(const Modulus &mod, int x, int z) {
    PauliVector p(mod, 1);
    p.set(0, x, z);
    if (mod.d() == 2) {
        return p.str();
    }
    return "x" + std::to_string(x) + "z" + std::to_string(z);
}

FlowDiagram flow_decomposition(const TensorNetwork &net, const BuiltState &state, const PauliVector &op) {
    const Modulus &mod = net.dimension();
    std::optional<Vec> c = solve(state.matrix.matrix(), op.xz());
    if (!c) {
        throw UsageError("operator is not in the row space of the network state");
    }
    Vec gens(state.provenance.cols(), 0);
    for (size_t r = 0; r < state.provenance.rows(); r++) {
        for (size_t g = 0; g < gens.size(); g++) {
            gens[g] = mod.add(gens[g], mod.mul((*c)[r], state.provenance.at(r, g)));
        }
    }
    FlowDiagram flow;
    std::map<std::string, PauliVector> local;
    for (size_t i = 0; i < net.instances().size(); i++) {
        const Instance &inst = net.instances()[i];
        const Lego &lego = net.legos().at(inst.lego);
        PauliVector p(mod, lego.n_legs());
        for (size_t g = 0; g < lego.state.rank(); g++) {
            int coeff = gens[state.generator_offset[i] + g];
            if (coeff != 0) {
                p = p * lego.state.row(g).pow(coeff);
            }
        }
        local.emplace(inst.id, p);
        if (!p.is_identity()) {
            flow.local.emplace(inst.id, p);
        }
    }
    for (const Edge &e : net.edges()) {
        const PauliVector &pa = local.at(e.a.instance);
        const PauliVector &pb = local.at(e.b.instance);
        int xa = pa.x(e.a.leg), za = pa.z(e.a.leg), xb = pb.x(e.b.leg), zb = pb.z(e.b.leg);
        if (xa == 0 && za == 0 && xb == 0 && zb == 0) {
            continue;
        }
        flow.edges.push_back({e, local_label(mod, xa, za), local_label(mod, xb, zb)});
    }
    for (size_t col = 0; col < state.legs.size(); col++) {
        if (op.x(col) != 0 || op.z(col) != 0) {
            flow.dangling[state.legs[col]] = local_label(mod, op.x(col), op.z(col));
        }
    }
    return flow;
}

std::string to_dot(const FlowDiagram &flow) {
    std::ostringstream out;
    out << "graph flow {\n";
    for (const auto &[id, p] : flow.local) {
        out << "  \"" << id << "\" [label=\"" << id << "\"];\n";
    }
    for (const FlowEdge &e : flow.edges) {
        out << "  \"" << e.edge.a.instance << "\" -- \"" << e.edge.b.instance << "\" [label=\"" << e.label_a << "|"
            << e.label_b << "\", taillabel=\"" << e.edge.a.leg << "\", headlabel=\"" << e.edge.b.leg << "\"];\n";
    }
    for (const auto &[leg, label] : flow.dangling) {
        out << "  \"" << leg.str() << "\" [shape=point];\n";
        out << "  \"" << leg.instance << "\" -- \"" << leg.str() << "\" [label=\"" << label << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

struct Label {
    std::string base;
    long long power = 1;

    bool identity() const { return base == "I" || power == 0; }
};

Label parse_label(const std::string &text) {
    size_t caret = text.find('^');
    if (caret == std::string::npos) {
        return {text, 1};
    }
    Label l{text.substr(0, caret), 0};
    try {
        size_t used = 0;
        l.power = std::stoll(text.substr(caret + 1), &used);
        if (used != text.size() - caret - 1) {
            throw UsageError("");
        }
    } catch (const std::exception &) {
        throw UsageError("malformed operator label '" + text + "'");
    }
    return l;
}

std::string render(const Label &l) {
    if (l.identity()) {
        return "I";
    }
    return l.power == 1 ? l.base : l.base + "^" + std::to_string(l.power);
}

Label compose(const Label &a, const Label &b) {
    if (a.identity()) {
        return b;
    }
    if (b.identity()) {
        return a;
    }
    if (a.base != b.base) {
        throw UsageError("cannot compose labels '" + render(a) + "' and '" + render(b) + "' on one leg");
    }
    return {a.base, a.power + b.power};
}

}  // namespace

MatchingTable MatchingTable::builtin(int d) {
    MatchingTable t;
    t.add("I", "I");
    t.add("X", "X");
    t.add("Z", "Zdag");
    t.add("Y", "Y");
    t.add("H", "H");
    t.add("S", "Sdag");
    t.add("T", "Tdag");
    if (d == 2) {
        t.add("Z", "Z");
        t.add("Zdag", "Zdag");
    }
    return t;
}

void MatchingTable::add(const std::string &a, const std::string &b) {
    // A label may have several partners; store them as a '|'-joined list.
    auto join = [this](const std::string &key, const std::string &value) {
        std::string &list = partner_[key];
        if (("|" + list + "|").find("|" + value + "|") == std::string::npos) {
            list = list.empty() ? value : list + "|" + value;
        }
    };
    join(a, b);
    join(b, a);
}

bool MatchingTable::known(const std::string &label) const {
    return partner_.count(parse_label(label).base) != 0;
}

bool MatchingTable::matches(const std::string &a, const std::string &b) const {
    Label la = parse_label(a), lb = parse_label(b);
    if (la.identity() || lb.identity()) {
        return la.identity() && lb.identity();
    }
    if (la.power != lb.power) {
        return false;
    }
    auto it = partner_.find(la.base);
    if (it == partner_.end()) {
        return false;
    }
    return ("|" + it->second + "|").find("|" + lb.base + "|") != std::string::npos;
}

SymbolicResult verify_symbolic(const TensorNetwork &net, const std::map<std::string, std::string> &assignment,
                               const MatchingTable &table) {
    for (const auto &[id, entry] : assignment) {
        if (!net.has_instance(id)) {
            throw UsageError("assignment names unknown instance '" + id + "'");
        }
    }
    std::map<std::string, std::vector<std::string>> labels;
    for (const Instance &inst : net.instances()) {
        const Lego &lego = net.legos().at(inst.lego);
        std::vector<Label> acc(lego.n_legs(), Label{"I", 1});
        auto it = assignment.find(inst.id);
        if (it != assignment.end()) {
            std::stringstream parts(it->second);
            std::string name;
            while (std::getline(parts, name, '*')) {
                const UpsEntry *entry = nullptr;
                for (const UpsEntry &e : lego.ups) {
                    if (e.name == name) {
                        entry = &e;
                    }
                }
                if (name == "identity" && !entry) {
                    continue;
                }
                if (!entry) {
                    throw UsageError("lego '" + lego.name + "' has no operator entry '" + name + "'");
                }
                for (size_t leg = 0; leg < lego.n_legs(); leg++) {
                    if (!table.known(entry->labels[leg])) {
                        throw UsageError("unknown operator label '" + entry->labels[leg] + "'");
                    }
                    acc[leg] = compose(acc[leg], parse_label(entry->labels[leg]));
                }
            }
        }
        std::vector<std::string> rendered;
        for (const Label &l : acc) {
            rendered.push_back(render(l));
        }
        labels.emplace(inst.id, std::move(rendered));
    }
    SymbolicResult result;
    result.ok = true;
    for (const Edge &e : net.edges()) {
        const std::string &a = labels.at(e.a.instance).at(e.a.leg);
        const std::string &b = labels.at(e.b.instance).at(e.b.leg);
        result.edges.push_back({e, a, b});
        if (!table.matches(a, b)) {
            result.ok = false;
            result.mismatches.push_back(e.a.str() + " - " + e.b.str() + ": " + a + " vs " + b);
        }
    }
    for (const LegRef &leg : net.dangling_legs()) {
        result.dangling[leg] = labels.at(leg.instance).at(leg.leg);
    }
    return result;
}

std::string to_dot(const SymbolicResult &result) {
    FlowDiagram flow;
    flow.edges = result.edges;
    flow.dangling = result.dangling;
    return to_dot(flow);
}

}  // namespace qlego
