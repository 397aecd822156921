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

#ifndef QLEGO_TRACE_HPP
#define QLEGO_TRACE_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qlego/pauli.hpp"

namespace qlego {

/// Raised when a full-rank input loses more than the two traced dimensions.
/// Without phase information this is the only visible symptom of a contraction
/// that annihilates the state.
struct TraceRankError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TraceResult {
    CheckMatrix matrix;
    /// Row i holds the coefficients expressing output row i over the input rows.
    Matrix provenance;
    size_t dropped_rank;
};

/// A check matrix laid out as [x (n) | z (n) | tags], where the tag block records
/// each row as a combination of some reference set of generators.
class TrackedMatrix {
   public:
    TrackedMatrix(const Matrix &rows, size_t n);
    /// Stacks the rows of each block, block-diagonally in the leg columns.
    static TrackedMatrix stack(const std::vector<const CheckMatrix *> &blocks);

    const Modulus &mod() const { return m_.mod(); }
    size_t n_legs() const { return n_; }
    size_t tag_count() const { return m_.cols() - 2 * n_; }
    size_t rows() const { return m_.rows(); }

    /// Contracts legs a and b. Returns the number of rows lost to the matching rule.
    size_t trace(size_t a, size_t b);
    /// Row-reduces on the leg columns and drops rows that vanish there.
    void canonicalize();

    CheckMatrix check() const;
    Matrix provenance() const;
    const Matrix &raw() const { return m_; }

   private:
    void delete_legs(size_t a, size_t b);
    size_t n_;
    Matrix m_;
};

/// Contracts legs a and b of h with the maximally entangled state.
TraceResult self_trace(const CheckMatrix &h, size_t leg_a, size_t leg_b);

/// The same contraction computed by explicit case distinction on the local
/// structure of the two traced legs. Kept as an independent cross-check.
TraceResult self_trace_case_analysis(const CheckMatrix &h, size_t leg_a, size_t leg_b);

/// Direct sum followed by a self trace; legs of h1 come first in the output.
TraceResult single_trace(const CheckMatrix &h1, const CheckMatrix &h2, size_t leg_a, size_t leg_b);

/// Traces every pair. With h2 present, each pair is (leg of h1, leg of h2); otherwise both
/// legs belong to h1. Output legs: surviving legs of h1 in order, then those of h2.
TraceResult conjoin(const CheckMatrix &h1, const std::optional<CheckMatrix> &h2,
                    const std::vector<std::pair<size_t, size_t>> &pairs);

}  // namespace qlego

#endif
