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

#include "qlego/netfile.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qlego/legos.hpp"

namespace qlego {

using json = nlohmann::ordered_json;

namespace {

std::string position_of(const std::string &text, size_t byte) {
    size_t line = 1, column = 1;
    for (size_t i = 0; i < byte && i < text.size(); i++) {
        if (text[i] == '\n') {
            line++;
            column = 1;
        } else {
            column++;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const json &field(const json &obj, const char *key, const std::string &where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw ParseError(where + ": missing field '" + key + "'");
    }
    return obj.at(key);
}

Role parse_role(const json &value, const std::string &where) {
    if (value == "physical") {
        return Role::Physical;
    }
    if (value == "logical") {
        return Role::Logical;
    }
    throw ParseError(where + ": role must be \"physical\" or \"logical\"");
}

LegRef parse_leg_pair(const json &value, const std::string &where) {
    if (!value.is_array() || value.size() != 2 || !value[0].is_string() || !value[1].is_number_unsigned()) {
        throw ParseError(where + ": a leg is written [\"instance\", leg]");
    }
    return {value[0].get<std::string>(), value[1].get<size_t>()};
}

}  // namespace

LegRef parse_leg(const std::string &text) {
    size_t dot = text.rfind('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == text.size()) {
        throw UsageError("leg '" + text + "' must be written instance.leg");
    }
    std::string digits = text.substr(dot + 1);
    if (digits.find_first_not_of("0123456789") != std::string::npos) {
        throw UsageError("leg '" + text + "' must end in a leg number");
    }
    return {text.substr(0, dot), std::stoul(digits)};
}

TensorNetwork parse_network(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        std::string detail = e.what();
        size_t colon = detail.find(": ");
        if (colon != std::string::npos) {
            detail = detail.substr(colon + 2);
        }
        throw ParseError(position_of(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + detail);
    }
    try {
        if (!doc.is_object()) {
            throw ParseError("network file must hold a JSON object");
        }
        if (field(doc, "version", "file") != 1) {
            throw ParseError("file: unsupported version");
        }
        const json &dim = field(doc, "dimension", "file");
        if (!dim.is_number_integer()) {
            throw ParseError("file: dimension must be an integer");
        }
        Modulus mod(dim.get<int>());
        TensorNetwork net(mod);
        const json &legos = field(doc, "legos", "file");
        if (!legos.is_object()) {
            throw ParseError("file: legos must be an object");
        }
        for (const auto &[name, desc] : legos.items()) {
            std::string where = "lego '" + name + "'";
            Lego lego = [&] {
                if (desc.contains("builtin")) {
                    return builtin(desc.at("builtin").get<std::string>(), mod);
                }
                size_t n = field(desc, "n_legs", where).get<size_t>();
                std::vector<PauliVector> rows;
                for (const json &s : field(desc, "stabilizers", where)) {
                    PauliVector p = PauliVector::parse(s.get<std::string>(), mod);
                    if (p.n() != n) {
                        throw ParseError(where + ": stabilizer " + s.get<std::string>() + " has the wrong length");
                    }
                    rows.push_back(p);
                }
                Lego custom{name, CheckMatrix(rows, mod, n), "", {}};
                if (desc.contains("ups")) {
                    for (const json &e : desc.at("ups")) {
                        custom.ups.push_back(
                            {field(e, "name", where).get<std::string>(), field(e, "labels", where).get<std::vector<std::string>>()});
                    }
                }
                return custom;
            }();
            lego.name = name;
            net.add_lego(std::move(lego));
        }
        for (const json &inst : field(doc, "instances", "file")) {
            net.add_instance(field(inst, "id", "instance").get<std::string>(),
                             field(inst, "lego", "instance").get<std::string>());
        }
        size_t index = 0;
        for (const json &edge : field(doc, "edges", "file")) {
            std::string where = "edge " + std::to_string(index++);
            if (!edge.is_array() || edge.size() != 2) {
                throw ParseError(where + ": an edge is a pair of legs");
            }
            net.add_edge(parse_leg_pair(edge[0], where), parse_leg_pair(edge[1], where));
        }
        if (doc.contains("roles")) {
            for (const auto &[key, value] : doc.at("roles").items()) {
                if (key == "default") {
                    net.set_default_role(parse_role(value, "roles"));
                } else {
                    net.set_role(parse_leg(key), parse_role(value, "roles." + key));
                }
            }
        }
        net.validate();
        return net;
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed network file: ") + e.what());
    }
}

TensorNetwork load_network(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_network(buffer.str());
}

std::string write_network(const TensorNetwork &net) {
    json doc;
    doc["version"] = 1;
    doc["dimension"] = net.dimension().d();
    json legos = json::object();
    for (const auto &[name, lego] : net.legos()) {
        if (!lego.builtin.empty()) {
            legos[name] = {{"builtin", lego.builtin}};
            continue;
        }
        json desc = {{"n_legs", lego.n_legs()}, {"stabilizers", lego.state.strings()}};
        if (!lego.ups.empty()) {
            json ups = json::array();
            for (const UpsEntry &e : lego.ups) {
                ups.push_back({{"name", e.name}, {"labels", e.labels}});
            }
            desc["ups"] = ups;
        }
        legos[name] = desc;
    }
    doc["legos"] = legos;
    json instances = json::array();
    for (const Instance &inst : net.instances()) {
        instances.push_back({{"id", inst.id}, {"lego", inst.lego}});
    }
    doc["instances"] = instances;
    json edges = json::array();
    for (const Edge &e : net.edges()) {
        edges.push_back(json::array({json::array({e.a.instance, e.a.leg}), json::array({e.b.instance, e.b.leg})}));
    }
    doc["edges"] = edges;
    json roles = json::object();
    for (const auto &[leg, role] : net.explicit_roles()) {
        roles[leg.str()] = role == Role::Logical ? "logical" : "physical";
    }
    if (net.default_role()) {
        roles["default"] = *net.default_role() == Role::Logical ? "logical" : "physical";
    }
    doc["roles"] = roles;
    return doc.dump(2) + "\n";
}

bool same_network(const TensorNetwork &a, const TensorNetwork &b) {
    if (!(a.dimension() == b.dimension()) || a.legos().size() != b.legos().size()) {
        return false;
    }
    for (const auto &[name, lego] : a.legos()) {
        auto it = b.legos().find(name);
        if (it == b.legos().end() || !(lego.state == it->second.state)) {
            return false;
        }
    }
    if (a.instances().size() != b.instances().size() || a.edges().size() != b.edges().size()) {
        return false;
    }
    for (size_t i = 0; i < a.instances().size(); i++) {
        if (a.instances()[i].id != b.instances()[i].id || a.instances()[i].lego != b.instances()[i].lego) {
            return false;
        }
    }
    for (size_t i = 0; i < a.edges().size(); i++) {
        if (a.edges()[i].a != b.edges()[i].a || a.edges()[i].b != b.edges()[i].b) {
            return false;
        }
    }
    for (const LegRef &leg : a.dangling_legs()) {
        if (a.role_of(leg) != b.role_of(leg)) {
            return false;
        }
    }
    return a.dangling_legs() == b.dangling_legs();
}

namespace {

std::vector<std::string> leg_names(const std::vector<LegRef> &legs) {
    std::vector<std::string> out;
    for (const LegRef &l : legs) {
        out.push_back(l.str());
    }
    return out;
}

std::vector<std::string> pauli_strings(const std::vector<PauliVector> &ps) {
    std::vector<std::string> out;
    for (const PauliVector &p : ps) {
        out.push_back(p.str());
    }
    return out;
}

std::string method_name(DistanceMethod m) {
    return m == DistanceMethod::Exhaustive ? "exhaustive" : "weight-capped";
}

}  // namespace

std::string report_json(const CodeReport &report, const std::optional<DistanceReport> &distance) {
    json doc;
    doc["n"] = report.n;
    doc["apparent_k"] = report.apparent_k;
    doc["true_k"] = report.true_k;
    doc["dimension"] = report.mod().d();
    doc["physical_legs"] = leg_names(report.physical_legs);
    doc["logical_legs"] = leg_names(report.logical_legs);
    doc["stabilizer_rank"] = report.stabilizers.rank();
    doc["stabilizers"] = report.stabilizers.strings();
    doc["constraint_rank"] = report.constraints.rank();
    doc["constraints"] = report.constraints.strings();
    json pairs = json::array();
    for (const LogicalPair &p : report.logical_pairs) {
        pairs.push_back({{"x_action", p.x_action.str()},
                         {"x_physical", p.x_physical.str()},
                         {"z_action", p.z_action.str()},
                         {"z_physical", p.z_physical.str()}});
    }
    doc["logical_pairs"] = pairs;
    doc["gauge"] = pauli_strings(report.gauge);
    doc["gauge_generators"] = pauli_strings(report.gauge_generators);
    doc["css"] = report.css;
    doc["self_dual"] = report.self_dual;
    if (distance) {
        json d;
        d["method"] = method_name(distance->method);
        d["value"] = distance->distance ? json(*distance->distance) : json(nullptr);
        d["lower_bound"] = distance->lower_bound;
        d["witness"] = distance->witness ? json(distance->witness->str()) : json(nullptr);
        doc["distance"] = d;
    }
    return doc.dump(2) + "\n";
}

std::string report_text(const CodeReport &report, const std::optional<DistanceReport> &distance) {
    std::ostringstream out;
    out << "code [[" << report.n << "," << report.true_k;
    if (distance && distance->distance) {
        out << "," << *distance->distance;
    }
    out << "]]";
    if (report.mod().d() != 2) {
        out << " over qudits of dimension " << report.mod().d();
    }
    out << "\n";
    out << "apparent k: " << report.apparent_k << " (constraint rank " << report.constraints.rank() << ")\n";
    out << "stabilizer rank: " << report.stabilizers.rank() << "\n";
    out << "css: " << (report.css ? "yes" : "no") << ", self-dual: " << (report.self_dual ? "yes" : "no") << "\n";
    if (distance) {
        if (distance->distance) {
            out << "distance: " << *distance->distance << " (" << method_name(distance->method)
                << "), witness " << distance->witness->str() << "\n";
        } else if (report.true_k == 0 || report.logical_pairs.empty()) {
            out << "distance: undefined (no logical qudits)\n";
        } else {
            out << "distance: >= " << distance->lower_bound << " (" << method_name(distance->method) << ")\n";
        }
    }
    out << "physical legs:";
    for (const LegRef &l : report.physical_legs) {
        out << " " << l.str();
    }
    out << "\nlogical legs:";
    for (const LegRef &l : report.logical_legs) {
        out << " " << l.str();
    }
    out << "\nstabilizers:\n";
    for (const std::string &s : report.stabilizers.strings()) {
        out << "  " << s << "\n";
    }
    if (report.constraints.rank() > 0) {
        out << "constraints:\n";
        for (const std::string &s : report.constraints.strings()) {
            out << "  " << s << "\n";
        }
    }
    out << "logical pairs:\n";
    for (size_t i = 0; i < report.logical_pairs.size(); i++) {
        const LogicalPair &p = report.logical_pairs[i];
        out << "  " << i << ": X " << p.x_physical.str() << " acts as " << p.x_action.str() << "\n";
        out << "  " << i << ": Z " << p.z_physical.str() << " acts as " << p.z_action.str() << "\n";
    }
    if (!report.gauge_generators.empty()) {
        out << "gauge generators:\n";
        for (const PauliVector &g : report.gauge_generators) {
            out << "  " << g.str() << "\n";
        }
    }
    return out.str();
}

}  // namespace qlego
