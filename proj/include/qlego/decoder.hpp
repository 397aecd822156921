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

#ifndef QLEGO_DECODER_HPP
#define QLEGO_DECODER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qlego/duality.hpp"

namespace qlego {

class NoiseModel {
   public:
    /// probabilities[leg][x * d + z] is the chance of X^x Z^z on that leg.
    NoiseModel(Modulus mod, std::vector<std::vector<double>> probabilities);
    static NoiseModel depolarizing(const Modulus &mod, size_t n, double p);

    const Modulus &mod() const { return mod_; }
    size_t n() const { return probabilities_.size(); }
    double probability(size_t leg, int x, int z) const { return probabilities_[leg][x * mod_.d() + z]; }
    long double probability(const PauliVector &p) const;
    /// Natural log of probability(p); -infinity when a factor is zero.
    long double log_probability(const PauliVector &p) const;

   private:
    Modulus mod_;
    std::vector<std::vector<double>> probabilities_;
};

struct TlTensor {
    std::string label;
    size_t n = 0;
    /// Sorted index tuples with value 1; each index is 0..3.
    std::vector<std::vector<uint8_t>> entries;

    /// One line per tuple, indices separated by spaces, after a "# T(<label>) n=<n> entries=<count>" header.
    std::string to_text() const;
};

/// `logical` acts on the report's logical legs. Qubits only.
TlTensor export_tl(const CodeReport &report, const PauliVector &logical, uint64_t budget = uint64_t{1} << 24);

/// Label of the (x, z) tuple in the four-valued index.
uint8_t tl_index(int x, int z);

struct DecodeOutcome {
    Vec syndrome;
    /// Pure error consistent with the syndrome; coset labels are relative to it.
    PauliVector pure_error;
    /// Chosen logical class as (a_1, b_1, ..., a_k, b_k).
    Vec chosen;
    /// Probability of every class, indexed by the label read as a base-d number.
    std::vector<long double> coset_probabilities;
    long double sector_probability = 0;
    PauliVector correction;
    /// Natural logs of the class probabilities, filled in log-domain mode only.
    std::vector<long double> coset_log_probabilities;
};

Vec syndrome_of(const CodeReport &report, const PauliVector &error);

/// With `log_domain` the class sums are accumulated as log-sum-exp, which avoids underflow for
/// long codes; the plain probabilities are then exponentiated from the logs.
DecodeOutcome ml_decode(const CodeReport &report, const NoiseModel &noise, const Vec &syndrome,
                        uint64_t budget = uint64_t{1} << 24, bool log_domain = false);

/// Whether applying `correction` after `error` leaves a stabilizer (times gauge) element.
bool correction_succeeds(const CodeReport &report, const PauliVector &error, const PauliVector &correction);

struct MonteCarloResult {
    double p = 0;
    uint64_t trials = 0;
    uint64_t failures = 0;
    double rate = 0;
    double ci_low = 0;
    double ci_high = 0;

    static std::string csv_header();
    std::string csv_row() const;
};

/// Trial t draws from a generator seeded with splitmix64(seed + t), so results do not depend on scheduling.
MonteCarloResult monte_carlo(const CodeReport &report, const NoiseModel &noise, uint64_t trials, uint64_t seed,
                             double p_label = 0, bool log_domain = false);

uint64_t splitmix64(uint64_t x);

/// Wilson score interval at 95% confidence.
std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials);

}  // namespace qlego

#endif
