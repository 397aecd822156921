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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qlego/legos.hpp"
#include "qlego/pushing.hpp"

namespace qlego {
namespace {

using testing::Complex;
using Gate = std::array<Complex, 4>;

/// B is a partner of A when conj(A) is proportional to B.
bool matrix_partners(const Gate &a, const Gate &b) {
    Complex ratio = 0;
    for (size_t i = 0; i < 4; i++) {
        if (std::abs(b[i]) > 1e-12) {
            ratio = std::conj(a[i]) / b[i];
            break;
        }
    }
    if (std::abs(std::abs(ratio) - 1) > 1e-9) {
        return false;
    }
    for (size_t i = 0; i < 4; i++) {
        if (std::abs(std::conj(a[i]) - ratio * b[i]) > 1e-9) {
            return false;
        }
    }
    return true;
}

TEST(Pushing, MatchingTableAgreesWithMatrixOracle) {
    const double r = 1 / std::sqrt(2.0);
    const Complex i(0, 1);
    const double pi = 3.14159265358979323846;
    std::map<std::string, Gate> gates = {
        {"I", {1, 0, 0, 1}},           {"X", {0, 1, 1, 0}},       {"Y", {0, -i, i, 0}},
        {"Z", {1, 0, 0, -1}},          {"Zdag", {1, 0, 0, -1}},   {"H", {r, r, r, -r}},
        {"S", {1, 0, 0, i}},           {"Sdag", {1, 0, 0, -i}},   {"T", {1, 0, 0, std::polar(1.0, pi / 4)}},
        {"Tdag", {1, 0, 0, std::polar(1.0, -pi / 4)}},
    };
    MatchingTable table = MatchingTable::builtin(2);
    for (const auto &[a, ga] : gates) {
        EXPECT_TRUE(table.known(a));
        for (const auto &[b, gb] : gates) {
            EXPECT_EQ(table.matches(a, b), matrix_partners(ga, gb)) << a << " " << b;
        }
    }
}

TEST(Pushing, PowersComposeOnTheSameLabel) {
    MatchingTable table = MatchingTable::builtin(2);
    EXPECT_TRUE(table.matches("T^2", "Tdag^2"));
    EXPECT_FALSE(table.matches("T^2", "Tdag"));
    EXPECT_TRUE(table.matches("T^0", "I"));
    table.add("G", "Gbar");
    EXPECT_TRUE(table.matches("Gbar", "G"));
}

TEST(Pushing, RepresentationIsARowSpaceElementMatchingThePrescription) {
    std::mt19937_64 rng(61);
    for (int d : {2, 3, 5}) {
        Modulus mod(d);
        for (int trial = 0; trial < 30; trial++) {
            TensorNetwork net = testing::random_network(rng, mod, 2 + rng() % 3);
            BuiltState state = build(net);
            if (state.matrix.rank() == 0) {
                continue;
            }
            // Prescribe part of a random row-space element, so a representation exists.
            PauliVector target(mod, state.legs.size());
            for (size_t r = 0; r < state.matrix.rank(); r++) {
                target = target * state.matrix.row(r).pow(testing::random_residue(rng, d));
            }
            Prescription partial;
            for (size_t c = 0; c < state.legs.size(); c++) {
                if (rng() % 2) {
                    partial[state.legs[c]] = {target.x(c), target.z(c)};
                }
            }
            std::optional<Representation> rep = find_representation(state, partial);
            ASSERT_TRUE(rep.has_value());
            EXPECT_TRUE(state.matrix.contains(rep->op));
            for (const auto &[leg, xz] : partial) {
                size_t c = state.leg_index.at(leg);
                EXPECT_EQ(rep->op.x(c), xz.first);
                EXPECT_EQ(rep->op.z(c), xz.second);
            }
            EXPECT_EQ(expand_provenance(net, state, rep->generator_coefficients), rep->op);
        }
    }
}

TEST(Pushing, OffRowSpacePrescriptionHasNoRepresentation) {
    TensorNetwork net = build_steane_from_422();
    BuiltState state = build(net);
    Prescription partial;
    for (const LegRef &leg : state.legs) {
        partial[leg] = {0, 0};
    }
    partial[state.legs[0]] = {1, 0};
    EXPECT_FALSE(find_representation(state, partial).has_value());
    EXPECT_THROW(find_representation(state, {{{"zz", 0}, {1, 0}}}), UsageError);
}

TEST(Pushing, SteaneLogicalPushesThroughTheNetwork) {
    TensorNetwork net = build_steane_from_422();
    BuiltState state = build(net);
    std::optional<Representation> rep = find_representation(state, {{{"b", 3}, {1, 0}}});
    ASSERT_TRUE(rep.has_value());
    FlowDiagram flow = flow_decomposition(net, state, rep->op);
    EXPECT_EQ(flow.dangling.at({"b", 3}), "X");
    for (const FlowEdge &e : flow.edges) {
        EXPECT_TRUE(MatchingTable::builtin(2).matches(e.label_a, e.label_b)) << e.label_a << " " << e.label_b;
    }
    std::string dot = to_dot(flow);
    EXPECT_EQ(dot.rfind("graph flow {\n", 0), 0u);
    EXPECT_NE(dot.find("taillabel"), std::string::npos);
    EXPECT_EQ(dot.substr(dot.size() - 2), "}\n");
}

TEST(Pushing, PauliAssignmentsAgreeWithRepresentations) {
    std::mt19937_64 rng(62);
    Modulus mod(2);
    size_t consistent = 0;
    for (int trial = 0; trial < 40; trial++) {
        TensorNetwork base = testing::random_network(rng, mod, 2 + rng() % 3);
        BuiltState state = build(base);
        PauliVector op(mod, state.legs.size());
        for (size_t r = 0; r < state.matrix.rank(); r++) {
            op = op * state.matrix.row(r).pow(testing::random_residue(rng, 2));
        }
        FlowDiagram flow = flow_decomposition(base, state, op);
        bool perturb = rng() % 3 == 0;
        // One private lego per instance whose single entry is that instance's local operator.
        TensorNetwork net(mod);
        std::map<std::string, std::string> assignment;
        for (const Instance &inst : base.instances()) {
            Lego lego = base.legos().at(inst.lego);
            lego.name = "for_" + inst.id;
            PauliVector local(mod, lego.n_legs());
            auto it = flow.local.find(inst.id);
            if (it != flow.local.end()) {
                local = it->second;
            }
            if (perturb && inst.id == base.instances().front().id) {
                local = local * lego.state.row(rng() % lego.state.rank());
            }
            std::vector<std::string> labels;
            for (size_t l = 0; l < lego.n_legs(); l++) {
                labels.push_back(local_label(mod, local.x(l), local.z(l)));
            }
            lego.ups = {{"e", labels}};
            net.add_lego(lego);
            net.add_instance(inst.id, lego.name);
            assignment[inst.id] = "e";
        }
        for (const Edge &e : base.edges()) {
            net.add_edge(e.a, e.b);
        }
        net.set_default_role(Role::Physical);
        SymbolicResult symbolic = verify_symbolic(net, assignment);
        Prescription full;
        for (const auto &[leg, label] : symbolic.dangling) {
            PauliVector p = PauliVector::parse(label, mod);
            full[leg] = {p.x(0), p.z(0)};
        }
        std::optional<Representation> rep = find_representation(build(net), full);
        if (symbolic.ok) {
            consistent++;
            ASSERT_TRUE(rep.has_value());
        }
        if (!perturb) {
            EXPECT_TRUE(symbolic.ok);
            for (size_t c = 0; c < state.legs.size(); c++) {
                EXPECT_EQ(symbolic.dangling.at(state.legs[c]), local_label(mod, op.x(c), op.z(c)));
            }
        }
    }
    EXPECT_GT(consistent, 20u);
}

TEST(Pushing, IdentityAssignmentVerifies) {
    TensorNetwork net = build_rm_pair();
    SymbolicResult r = verify_symbolic(net, {});
    EXPECT_TRUE(r.ok);
    for (const auto &[leg, label] : r.dangling) {
        EXPECT_EQ(label, "I");
    }
}

TEST(Pushing, TransversalTPatternOnReedMullerPair) {
    for (RmVariant variant : {RmVariant::Plain, RmVariant::XGate, RmVariant::FlippedCatalog}) {
        TensorNetwork net = build_rm_pair(variant);
        std::map<std::string, std::string> assignment = {{"a", "logical_Tdag"}, {"b", "logical_T"}};
        if (variant != RmVariant::Plain) {
            assignment["x"] = "T_T";
        }
        if (variant == RmVariant::FlippedCatalog) {
            assignment.erase("x");
        }
        SymbolicResult r = verify_symbolic(net, assignment);
        EXPECT_TRUE(r.ok);
        std::map<std::string, std::map<std::string, size_t>> physical;
        for (const auto &[leg, label] : r.dangling) {
            if (net.role_of(leg) == Role::Physical) {
                physical[leg.instance][label]++;
            }
        }
        EXPECT_EQ(physical["a"]["T"], 14u);
        EXPECT_EQ(physical["b"]["Tdag"], 14u);
    }
    SymbolicResult bad = verify_symbolic(build_rm_pair(), {{"a", "logical_Tdag"}, {"b", "logical_Tdag"}});
    EXPECT_FALSE(bad.ok);
    EXPECT_FALSE(bad.mismatches.empty());
}

TEST(Pushing, UnknownEntriesAndInstancesAreRejected) {
    TensorNetwork net = build_rm_pair();
    EXPECT_THROW(verify_symbolic(net, {{"a", "logical_Q"}}), UsageError);
    EXPECT_THROW(verify_symbolic(net, {{"zz", "identity"}}), UsageError);
}

TEST(Pushing, ProductEntriesComposePowers) {
    TensorNetwork net = build_rm_pair();
    SymbolicResult r =
        verify_symbolic(net, {{"a", "logical_Tdag*logical_Tdag"}, {"b", "logical_T*logical_T"}});
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.dangling.at({"a", 1}), "T^2");
}

}  // namespace
}  // namespace qlego
