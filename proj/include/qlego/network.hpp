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

#ifndef QLEGO_NETWORK_HPP
#define QLEGO_NETWORK_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlego/pauli.hpp"

namespace qlego {

/// A named unitary product stabilizer of a lego: one label per leg.
struct UpsEntry {
    std::string name;
    std::vector<std::string> labels;
};

/// A building block: a stabilizer state on n legs.
struct Lego {
    std::string name;
    CheckMatrix state;
    /// Catalog spelling used when serializing, e.g. "code_422" or "repetition(3,Z)". Empty for custom blocks.
    std::string builtin;
    std::vector<UpsEntry> ups;

    size_t n_legs() const { return state.n_legs(); }
};

struct LegRef {
    std::string instance;
    size_t leg;

    auto operator<=>(const LegRef &) const = default;
    std::string str() const { return instance + "." + std::to_string(leg); }
};

struct Edge {
    LegRef a;
    LegRef b;
};

enum class Role { Physical, Logical };

struct Instance {
    std::string id;
    std::string lego;
};

class TensorNetwork {
   public:
    explicit TensorNetwork(Modulus dimension) : dimension_(std::move(dimension)) {}

    const Modulus &dimension() const { return dimension_; }

    void add_lego(Lego lego);
    void add_instance(const std::string &id, const std::string &lego);
    void add_edge(const LegRef &a, const LegRef &b);
    void set_role(const LegRef &leg, Role role);
    void set_default_role(std::optional<Role> role) { default_role_ = role; }
    void clear_roles() { roles_.clear(); }

    const std::map<std::string, Lego> &legos() const { return legos_; }
    const std::vector<Instance> &instances() const { return instances_; }
    const std::vector<Edge> &edges() const { return edges_; }
    const std::map<LegRef, Role> &explicit_roles() const { return roles_; }
    std::optional<Role> default_role() const { return default_role_; }

    const Lego &lego_of(const std::string &instance) const;
    size_t instance_index(const std::string &id) const;
    bool has_instance(const std::string &id) const { return index_.count(id) != 0; }

    /// Dangling legs in canonical order: by instance, then by leg.
    std::vector<LegRef> dangling_legs() const;
    Role role_of(const LegRef &leg) const;
    /// Throws UsageError describing the first structural problem found.
    void validate() const;

   private:
    Modulus dimension_;
    std::map<std::string, Lego> legos_;
    std::vector<Instance> instances_;
    std::map<std::string, size_t> index_;
    std::vector<Edge> edges_;
    std::map<LegRef, Role> roles_;
    std::optional<Role> default_role_;
};

struct BuiltState {
    CheckMatrix matrix;
    /// Column order of `matrix`.
    std::vector<LegRef> legs;
    std::map<LegRef, size_t> leg_index;
    /// Row i expresses matrix row i over the concatenated generators of every instance.
    Matrix provenance;
    /// First provenance column belonging to each instance.
    std::vector<size_t> generator_offset;
};

/// Contracts every edge (in the given order, or input order) and returns the state on the dangling legs.
BuiltState build(const TensorNetwork &net, const std::vector<size_t> &edge_order = {});

/// Expands a combination of instance generators and deletes every contracted leg.
/// Used to audit provenance.
PauliVector expand_provenance(const TensorNetwork &net, const BuiltState &state, std::span<const int> coefficients);

struct ScheduleStep {
    std::string instance;
    std::vector<Edge> contracted;
    bool isometric;
};

struct ContractionSchedule {
    bool ok = false;
    std::vector<ScheduleStep> steps;
    /// On failure, the step index at which no admissible instance was found.
    std::optional<size_t> failed_step;
    std::string message;
};

/// Orders instances so that every step contracts a correctable erasure of the incoming
/// instance, whose logical legs are those marked logical by the roles. Greedy with one
/// level of backtracking. `step_limit` bounds the number of candidate evaluations;
/// zero means the square of the instance count.
ContractionSchedule plan_contraction(const TensorNetwork &net, size_t step_limit = 0);

struct ProbeRow {
    size_t tensors;
    size_t dangling_total;
    double seconds;
};

/// Times `build` on chains of [[4,2,2]] blocks, doubling the size up to `n_dangling_total`.
std::vector<ProbeRow> complexity_probe(size_t n_dangling_total);

}  // namespace qlego

#endif
