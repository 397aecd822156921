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

#ifndef QLEGO_ANALYSIS_HPP
#define QLEGO_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qlego/duality.hpp"

namespace qlego {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rank of the subgroup of the row space supported entirely on `legs`.
size_t subgroup_rank_within(const CheckMatrix &state, const std::vector<size_t> &legs);

/// True when the reduced state on `legs` is maximally mixed.
bool is_maximally_mixed(const CheckMatrix &state, const std::vector<size_t> &legs);

/// True when erasing the given physical legs (indices into the report's physical legs) is correctable.
bool is_correctable_erasure(const CodeReport &report, const std::vector<size_t> &legs);

enum class DistanceMethod { Exhaustive, WeightCapped };

struct DistanceOptions {
    std::optional<size_t> weight_cap;
    /// Bare distance ignores gauge multiplication; the default is dressed.
    bool bare = false;
    uint64_t budget = uint64_t{1} << 24;
};

struct DistanceReport {
    /// Set when a logical operator was found; otherwise `lower_bound` holds the bound.
    std::optional<size_t> distance;
    size_t lower_bound = 0;
    std::optional<PauliVector> witness;
    DistanceMethod method = DistanceMethod::Exhaustive;
};

/// Minimal weight of a nontrivial logical operator. Exhaustive enumeration of the normalizer
/// span when no cap is given (throws BudgetExceeded over budget); ascending-weight search
/// up to the cap otherwise.
DistanceReport distance(const CodeReport &report, const DistanceOptions &options = {});

}  // namespace qlego

#endif
