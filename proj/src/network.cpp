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

#include "qlego/network.hpp"

#include <chrono>
#include <set>

#include "qlego/analysis.hpp"
#include "qlego/duality.hpp"
#include "qlego/legos.hpp"
#include "qlego/trace.hpp"

namespace qlego {

void TensorNetwork::add_lego(Lego lego) {
    if (!(lego.state.mod() == dimension_)) {
        throw UsageError("lego '" + lego.name + "' has dimension " + std::to_string(lego.state.mod().d()) +
                         ", network has " + std::to_string(dimension_.d()));
    }
    if (lego.state.rank() != lego.state.n_legs()) {
        throw UsageError("lego '" + lego.name + "' is not a full-rank state");
    }
    for (const UpsEntry &e : lego.ups) {
        if (e.labels.size() != lego.n_legs()) {
            throw UsageError("operator entry '" + e.name + "' of lego '" + lego.name + "' has the wrong leg count");
        }
    }
    std::string name = lego.name;
    legos_.insert_or_assign(name, std::move(lego));
}

void TensorNetwork::add_instance(const std::string &id, const std::string &lego) {
    if (id.empty() || id.find('.') != std::string::npos) {
        throw UsageError("instance id '" + id + "' must be non-empty and contain no '.'");
    }
    if (index_.count(id)) {
        throw UsageError("duplicate instance id '" + id + "'");
    }
    if (!legos_.count(lego)) {
        throw UsageError("instance '" + id + "' references unknown lego '" + lego + "'");
    }
    index_[id] = instances_.size();
    instances_.push_back({id, lego});
}

void TensorNetwork::add_edge(const LegRef &a, const LegRef &b) {
    edges_.push_back({a, b});
}

void TensorNetwork::set_role(const LegRef &leg, Role role) {
    roles_[leg] = role;
}

const Lego &TensorNetwork::lego_of(const std::string &instance) const {
    return legos_.at(instances_.at(instance_index(instance)).lego);
}

size_t TensorNetwork::instance_index(const std::string &id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw UsageError("unknown instance '" + id + "'");
    }
    return it->second;
}

std::vector<LegRef> TensorNetwork::dangling_legs() const {
    std::set<LegRef> used;
    for (const Edge &e : edges_) {
        used.insert(e.a);
        used.insert(e.b);
    }
    std::vector<LegRef> out;
    for (const Instance &inst : instances_) {
        size_t n = legos_.at(inst.lego).n_legs();
        for (size_t leg = 0; leg < n; leg++) {
            LegRef ref{inst.id, leg};
            if (!used.count(ref)) {
                out.push_back(ref);
            }
        }
    }
    return out;
}

Role TensorNetwork::role_of(const LegRef &leg) const {
    auto it = roles_.find(leg);
    if (it != roles_.end()) {
        return it->second;
    }
    if (default_role_) {
        return *default_role_;
    }
    throw UsageError("dangling leg " + leg.str() + " has no role");
}

void TensorNetwork::validate() const {
    std::set<LegRef> used;
    for (size_t i = 0; i < edges_.size(); i++) {
        const Edge &e = edges_[i];
        for (const LegRef &end : {e.a, e.b}) {
            if (!index_.count(end.instance)) {
                throw UsageError("edge " + std::to_string(i) + " references unknown instance '" + end.instance + "'");
            }
            if (end.leg >= lego_of(end.instance).n_legs()) {
                throw UsageError("edge " + std::to_string(i) + " references missing leg " + end.str());
            }
            if (!used.insert(end).second) {
                throw UsageError("leg " + end.str() + " appears in more than one edge");
            }
        }
        if (e.a == e.b) {
            throw UsageError("edge " + std::to_string(i) + " joins a leg to itself");
        }
    }
    for (const auto &[leg, role] : roles_) {
        if (!index_.count(leg.instance) || leg.leg >= lego_of(leg.instance).n_legs()) {
            throw UsageError("role assigned to missing leg " + leg.str());
        }
        if (used.count(leg)) {
            throw UsageError("role assigned to contracted leg " + leg.str());
        }
    }
    for (const LegRef &leg : dangling_legs()) {
        role_of(leg);
    }
}

BuiltState build(const TensorNetwork &net, const std::vector<size_t> &edge_order) {
    net.validate();
    const auto &instances = net.instances();
    if (instances.empty()) {
        throw UsageError("network has no instances");
    }
    std::vector<const CheckMatrix *> blocks;
    std::vector<size_t> leg_offset;
    std::vector<size_t> gen_offset;
    size_t legs = 0, gens = 0;
    for (const Instance &inst : instances) {
        const Lego &lego = net.legos().at(inst.lego);
        blocks.push_back(&lego.state);
        leg_offset.push_back(legs);
        gen_offset.push_back(gens);
        legs += lego.n_legs();
        gens += lego.state.rank();
    }
    TrackedMatrix t = TrackedMatrix::stack(blocks);
    // position[g] is the current column of global leg g; SIZE_MAX once contracted.
    std::vector<size_t> position(legs);
    for (size_t g = 0; g < legs; g++) {
        position[g] = g;
    }
    auto global = [&](const LegRef &r) { return leg_offset[net.instance_index(r.instance)] + r.leg; };

    std::vector<size_t> order = edge_order;
    if (order.empty()) {
        for (size_t i = 0; i < net.edges().size(); i++) {
            order.push_back(i);
        }
    }
    if (order.size() != net.edges().size()) {
        throw UsageError("edge order must list every edge once");
    }
    for (size_t idx : order) {
        const Edge &e = net.edges().at(idx);
        size_t ga = global(e.a), gb = global(e.b);
        size_t pa = position[ga], pb = position[gb];
        size_t before = t.n_legs();
        t.trace(pa, pb);
        t.canonicalize();
        if (t.rows() != before - 2) {
            throw TraceRankError("contracting edge " + std::to_string(idx) + " (" + e.a.str() + " - " + e.b.str() +
                                 ") lost more than two dimensions");
        }
        position[ga] = position[gb] = SIZE_MAX;
        size_t lo = std::min(pa, pb), hi = std::max(pa, pb);
        for (size_t &p : position) {
            if (p == SIZE_MAX) {
                continue;
            }
            if (p > hi) {
                p -= 2;
            } else if (p > lo) {
                p -= 1;
            }
        }
    }
    t.canonicalize();
    BuiltState out{t.check(), net.dangling_legs(), {}, t.provenance(), gen_offset};
    for (size_t i = 0; i < out.legs.size(); i++) {
        out.leg_index[out.legs[i]] = i;
    }
    return out;
}

PauliVector expand_provenance(const TensorNetwork &net, const BuiltState &state, std::span<const int> coefficients) {
    const Modulus &mod = net.dimension();
    PauliVector out(mod, state.legs.size());
    for (size_t i = 0; i < net.instances().size(); i++) {
        const Instance &inst = net.instances()[i];
        const Lego &lego = net.legos().at(inst.lego);
        for (size_t g = 0; g < lego.state.rank(); g++) {
            int c = coefficients[state.generator_offset[i] + g];
            if (c == 0) {
                continue;
            }
            for (size_t leg = 0; leg < lego.n_legs(); leg++) {
                auto it = state.leg_index.find(LegRef{inst.id, leg});
                if (it == state.leg_index.end()) {
                    continue;
                }
                size_t col = it->second;
                int x = mod.add(out.x(col), mod.mul(c, lego.state.matrix().at(g, leg)));
                int z = mod.add(out.z(col), mod.mul(c, lego.state.matrix().at(g, lego.n_legs() + leg)));
                out.set(col, x, z);
            }
        }
    }
    return out;
}

namespace {

/// Whether `legs` of a single instance, with its role-logical legs as logical inputs,
/// form a correctable erasure.
bool step_is_isometric(const TensorNetwork &net, const std::string &instance, const std::vector<size_t> &legs) {
    if (legs.empty()) {
        return true;
    }
    const Lego &lego = net.lego_of(instance);
    std::set<LegRef> contracted;
    for (const Edge &e : net.edges()) {
        contracted.insert(e.a);
        contracted.insert(e.b);
    }
    std::vector<bool> logical(lego.n_legs(), false);
    for (size_t leg = 0; leg < lego.n_legs(); leg++) {
        LegRef ref{instance, leg};
        if (!contracted.count(ref) && net.role_of(ref) == Role::Logical) {
            logical[leg] = true;
        }
    }
    for (size_t leg : legs) {
        if (logical[leg]) {
            return false;
        }
    }
    CodeReport report = extract(lego.state, logical);
    std::vector<size_t> physical_positions;
    size_t p = 0;
    std::vector<size_t> position(lego.n_legs());
    for (size_t leg = 0; leg < lego.n_legs(); leg++) {
        position[leg] = logical[leg] ? SIZE_MAX : p++;
    }
    for (size_t leg : legs) {
        physical_positions.push_back(position[leg]);
    }
    return is_correctable_erasure(report, physical_positions);
}

struct Candidate {
    size_t instance;
    std::vector<Edge> edges;
    std::vector<size_t> own_legs;
};

Candidate candidate_for(const TensorNetwork &net, size_t inst, const std::vector<bool> &placed) {
    Candidate c{inst, {}, {}};
    const std::string &id = net.instances()[inst].id;
    for (const Edge &e : net.edges()) {
        bool a_here = e.a.instance == id, b_here = e.b.instance == id;
        if (a_here && b_here) {
            continue;
        }
        if (a_here && placed[net.instance_index(e.b.instance)]) {
            c.edges.push_back(e);
            c.own_legs.push_back(e.a.leg);
        } else if (b_here && placed[net.instance_index(e.a.instance)]) {
            c.edges.push_back(e);
            c.own_legs.push_back(e.b.leg);
        }
    }
    return c;
}

}  // namespace

ContractionSchedule plan_contraction(const TensorNetwork &net, size_t step_limit) {
    net.validate();
    size_t count = net.instances().size();
    if (step_limit == 0) {
        step_limit = count * count + 1;
    }
    ContractionSchedule schedule;
    if (count == 0) {
        schedule.ok = true;
        return schedule;
    }
    for (const Edge &e : net.edges()) {
        if (e.a.instance == e.b.instance) {
            schedule.failed_step = 0;
            schedule.message = "instance '" + e.a.instance + "' has a self-contraction";
            return schedule;
        }
    }
    std::vector<bool> placed(count, false);
    size_t evaluations = 0;

    // Returns admissible candidates for the next step, in preference order.
    auto admissible = [&]() {
        std::vector<Candidate> adjacent, isolated;
        for (size_t i = 0; i < count; i++) {
            if (placed[i]) {
                continue;
            }
            Candidate c = candidate_for(net, i, placed);
            (c.edges.empty() ? isolated : adjacent).push_back(std::move(c));
        }
        std::vector<Candidate> out;
        for (Candidate &c : adjacent) {
            evaluations++;
            if (step_is_isometric(net, net.instances()[c.instance].id, c.own_legs)) {
                out.push_back(std::move(c));
            }
        }
        if (out.empty() && adjacent.empty() && !isolated.empty()) {
            out.push_back(std::move(isolated.front()));
        }
        return out;
    };

    placed[0] = true;
    schedule.steps.push_back({net.instances()[0].id, {}, true});
    std::vector<std::vector<Candidate>> alternatives = {{}};
    while (schedule.steps.size() < count) {
        if (evaluations > step_limit) {
            schedule.failed_step = schedule.steps.size();
            schedule.message = "step limit reached";
            return schedule;
        }
        std::vector<Candidate> options = admissible();
        if (options.empty()) {
            // One level of backtracking: swap the previous choice for its next alternative.
            bool recovered = false;
            while (schedule.steps.size() > 1 && !alternatives.back().empty()) {
                placed[net.instance_index(schedule.steps.back().instance)] = false;
                Candidate alt = std::move(alternatives.back().front());
                alternatives.back().erase(alternatives.back().begin());
                placed[alt.instance] = true;
                schedule.steps.back() = {net.instances()[alt.instance].id, alt.edges, true};
                options = admissible();
                if (!options.empty()) {
                    recovered = true;
                    break;
                }
            }
            if (!recovered) {
                schedule.failed_step = schedule.steps.size();
                schedule.message = "no instance can be attached through a correctable erasure";
                // Report the remaining steps with their flags so the caller sees where isometry breaks.
                while (schedule.steps.size() < count) {
                    std::optional<Candidate> next;
                    for (size_t i = 0; i < count; i++) {
                        if (placed[i]) {
                            continue;
                        }
                        Candidate c = candidate_for(net, i, placed);
                        if (!next || (next->edges.empty() && !c.edges.empty())) {
                            next = std::move(c);
                        }
                    }
                    placed[next->instance] = true;
                    bool iso = step_is_isometric(net, net.instances()[next->instance].id, next->own_legs);
                    schedule.steps.push_back({net.instances()[next->instance].id, next->edges, iso});
                }
                return schedule;
            }
        }
        Candidate chosen = std::move(options.front());
        options.erase(options.begin());
        placed[chosen.instance] = true;
        schedule.steps.push_back({net.instances()[chosen.instance].id, chosen.edges, true});
        alternatives.push_back(std::move(options));
    }
    schedule.ok = true;
    return schedule;
}

std::vector<ProbeRow> complexity_probe(size_t n_dangling_total) {
    std::vector<ProbeRow> rows;
    size_t target = std::max<size_t>(n_dangling_total, 6);
    std::vector<size_t> sizes;
    for (size_t t = 2; 4 * t + 2 < target; t *= 2) {
        sizes.push_back(t);
    }
    sizes.push_back((target - 2 + 3) / 4);
    for (size_t t : sizes) {
        TensorNetwork net = build_chain(t + 1);
        auto start = std::chrono::steady_clock::now();
        BuiltState state = build(net);
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rows.push_back({t, state.legs.size(), seconds});
    }
    return rows;
}

}  // namespace qlego
