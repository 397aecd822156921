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

#ifndef QLEGO_PUSHING_HPP
#define QLEGO_PUSHING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlego/network.hpp"

namespace qlego {

/// Local Pauli prescription (x, z) per dangling leg.
using Prescription = std::map<LegRef, std::pair<int, int>>;

struct Representation {
    /// Operator over the built state's columns.
    PauliVector op;
    /// Coefficients over the built state's rows.
    Vec row_coefficients;
    /// Coefficients over every instance's generators, in instance order.
    Vec generator_coefficients;
};

std::optional<Representation> find_representation(const BuiltState &state, const Prescription &partial);

/// Writes a single-leg operator as text: I/X/Y/Z for qubits, "x<a>z<b>" otherwise.
std::string local_label(const Modulus &mod, int x, int z);

struct FlowEdge {
    Edge edge;
    std::string label_a;
    std::string label_b;
};

struct FlowDiagram {
    /// Instances whose local operator is not the identity, with that operator.
    std::map<std::string, PauliVector> local;
    std::vector<FlowEdge> edges;
    std::map<LegRef, std::string> dangling;
};

/// Splits `op`, a row-space element of `state`, into the per-instance insertions that produce it.
/// Throws UsageError when `op` is not in the row space.
FlowDiagram flow_decomposition(const TensorNetwork &net, const BuiltState &state, const PauliVector &op);

std::string to_dot(const FlowDiagram &flow);

/// Relation between symbolic single-leg labels: ⟨Φ⁺| A ⊗ B = ⟨Φ⁺| up to phase.
class MatchingTable {
   public:
    static MatchingTable builtin(int d = 2);

    /// Adds a symmetric pair. Extensions are trusted.
    void add(const std::string &a, const std::string &b);
    bool known(const std::string &label) const;
    bool matches(const std::string &a, const std::string &b) const;

   private:
    std::map<std::string, std::string> partner_;
};

struct SymbolicResult {
    bool ok = false;
    std::map<LegRef, std::string> dangling;
    /// Edges whose two labels do not match, as "a.i - b.j: A vs B".
    std::vector<std::string> mismatches;
    /// Both labels on every edge, in edge order.
    std::vector<FlowEdge> edges;
};

/// Assigns to every instance an operator entry of its lego, or a product "e1*e2" of entries.
/// Instances missing from the assignment take the all-identity labels.
SymbolicResult verify_symbolic(const TensorNetwork &net, const std::map<std::string, std::string> &assignment,
                               const MatchingTable &table = MatchingTable::builtin());

std::string to_dot(const SymbolicResult &result);

}  // namespace qlego

#endif
