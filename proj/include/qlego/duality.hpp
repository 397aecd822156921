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

#ifndef QLEGO_DUALITY_HPP
#define QLEGO_DUALITY_HPP

#include <vector>

#include "qlego/network.hpp"
#include "qlego/pauli.hpp"

namespace qlego {

struct AugmentedCode {
    CheckMatrix state;
    /// Columns (legs) appended for the logical qudits.
    std::vector<size_t> logical_columns;
};

/// Turns an [[n,k]] code with logical pairs into a state on n + k legs. Logical X gets X on
/// its appended leg and logical Z gets Z^-1.
AugmentedCode augment(const CheckMatrix &code, const std::vector<PauliVector> &logical_x,
                      const std::vector<PauliVector> &logical_z);

struct LogicalPair {
    /// Action on the logical legs and physical representative, for the X-like and Z-like members.
    PauliVector x_action;
    PauliVector x_physical;
    PauliVector z_action;
    PauliVector z_physical;
};

struct CodeReport {
    size_t n = 0;
    size_t apparent_k = 0;
    size_t true_k = 0;
    CheckMatrix stabilizers;
    /// Logical actions that the network forces to act trivially.
    CheckMatrix constraints;
    std::vector<LogicalPair> logical_pairs;
    /// Physical representatives of demoted pairs; empty for subspace codes.
    std::vector<PauliVector> gauge;
    /// A low-weight generating set of the gauge group (stabilizers included), when gauge is non-empty.
    std::vector<PauliVector> gauge_generators;
    bool css = false;
    bool self_dual = false;
    std::vector<LegRef> physical_legs;
    std::vector<LegRef> logical_legs;

    CodeReport() : stabilizers(Modulus(2), 0), constraints(Modulus(2), 0) {}
    const Modulus &mod() const { return stabilizers.mod(); }
};

/// Splits a state into code data. `logical[c]` marks the logical legs.
CodeReport extract(const CheckMatrix &state, const std::vector<bool> &logical);
CodeReport extract(const BuiltState &state, const TensorNetwork &net);

/// Shorthand for extract(augment(...)) on a code given by generators and logical pairs.
CodeReport report_from_code(const CheckMatrix &code, const std::vector<PauliVector> &logical_x,
                            const std::vector<PauliVector> &logical_z);

/// Keeps the listed logical pairs and demotes the rest to gauge.
CodeReport gauge_fix(const CodeReport &report, const std::vector<size_t> &keep);

/// Re-derives the logical pairs, preferring normalizer elements of weight at most
/// `max_weight` (ascending weight, then lexicographic). Gauge operators of subsystem codes
/// tend to surface as the first pairs.
CodeReport low_weight_pairs(const CodeReport &report, size_t max_weight);

/// Reduces p modulo the row space of m (canonical representative).
PauliVector reduce_modulo(const PauliVector &p, const CheckMatrix &m);

/// Coordinates of a normalizer element in the logical pair basis: (a_1, b_1, a_2, b_2, ...)
/// such that p = prod X_i^a_i Z_i^b_i modulo stabilizers and gauge.
std::vector<int> logical_coordinates(const CodeReport &report, const PauliVector &p);

}  // namespace qlego

#endif
