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

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qlego/decoder.hpp"

namespace qlego {
namespace {

/// Calls f on every Pauli of n legs, in base-d counting order.
template <typename F>
void for_each_pauli(const Modulus &mod, size_t n, F &&f) {
    size_t total = 1;
    for (size_t i = 0; i < 2 * n; i++) {
        total *= static_cast<size_t>(mod.d());
    }
    for (size_t code = 0; code < total; code++) {
        Vec xz(2 * n);
        size_t v = code;
        for (size_t i = 0; i < 2 * n; i++) {
            xz[i] = static_cast<int>(v % static_cast<size_t>(mod.d()));
            v /= static_cast<size_t>(mod.d());
        }
        f(PauliVector(mod, xz));
    }
}

int raw_symplectic(const Modulus &mod, const PauliVector &a, const PauliVector &b) {
    long acc = 0;
    for (size_t i = 0; i < a.n(); i++) {
        acc += static_cast<long>(a.x(i)) * b.z(i) - static_cast<long>(a.z(i)) * b.x(i);
    }
    long d = mod.d();
    return static_cast<int>(((acc % d) + d) % d);
}

PauliVector coset_base(const CodeReport &report, const PauliVector &pure, uint64_t label) {
    const Modulus &mod = report.mod();
    size_t k = report.logical_pairs.size();
    std::vector<int> digits(2 * k);
    for (size_t m = 2 * k; m > 0; m--) {
        digits[m - 1] = static_cast<int>(label % static_cast<uint64_t>(mod.d()));
        label /= static_cast<uint64_t>(mod.d());
    }
    PauliVector base = pure;
    for (size_t i = 0; i < k; i++) {
        base = base * report.logical_pairs[i].x_physical.pow(digits[2 * i]);
        base = base * report.logical_pairs[i].z_physical.pow(digits[2 * i + 1]);
    }
    return base;
}

/// Checks every coset probability against a direct sum over all Paulis.
void check_against_brute_force(const CodeReport &report, double p) {
    const Modulus &mod = report.mod();
    NoiseModel noise = NoiseModel::depolarizing(mod, report.n, p);
    std::map<Vec, DecodeOutcome> outcomes;
    std::map<Vec, std::vector<long double>> sums;
    long double total = 0;
    for_each_pauli(mod, report.n, [&](const PauliVector &e) {
        Vec syn;
        for (const PauliVector &s : report.stabilizers.rows()) {
            syn.push_back(raw_symplectic(mod, e, s));
        }
        ASSERT_EQ(syn, syndrome_of(report, e));
        auto it = outcomes.find(syn);
        if (it == outcomes.end()) {
            it = outcomes.emplace(syn, ml_decode(report, noise, syn)).first;
            sums[syn].assign(it->second.coset_probabilities.size(), 0);
        }
        const DecodeOutcome &out = it->second;
        size_t hits = 0;
        for (uint64_t label = 0; label < out.coset_probabilities.size(); label++) {
            PauliVector rest = e * coset_base(report, out.pure_error, label).pow(mod.neg(1));
            if (report.stabilizers.contains(rest)) {
                sums[syn][label] += noise.probability(e);
                hits++;
            }
        }
        EXPECT_EQ(hits, 1u) << e.str();
        total += noise.probability(e);
    });
    EXPECT_NEAR(static_cast<double>(total), 1.0, 1e-12);
    long double sector_total = 0;
    for (const auto &[syn, out] : outcomes) {
        long double best = 0;
        for (size_t label = 0; label < out.coset_probabilities.size(); label++) {
            EXPECT_NEAR(static_cast<double>(out.coset_probabilities[label]), static_cast<double>(sums[syn][label]),
                        1e-15);
            best = std::max(best, sums[syn][label]);
        }
        uint64_t chosen = 0;
        for (int digit : out.chosen) {
            chosen = chosen * static_cast<uint64_t>(mod.d()) + static_cast<uint64_t>(digit);
        }
        EXPECT_NEAR(static_cast<double>(sums[syn][chosen]), static_cast<double>(best), 1e-15);
        sector_total += out.sector_probability;
    }
    EXPECT_NEAR(static_cast<double>(sector_total), 1.0, 1e-12);
}

TEST(Decoder, FiveQubitCosetsMatchBruteForce) { check_against_brute_force(testing::five_qubit_report(), 0.07); }

TEST(Decoder, SteaneCosetsMatchBruteForce) { check_against_brute_force(testing::steane_report(), 0.03); }

TEST(Decoder, QutritCosetsMatchBruteForce) {
    std::mt19937_64 rng(71);
    Modulus mod(3);
    for (int trial = 0; trial < 4; trial++) {
        CheckMatrix state = testing::random_stabilizer_state(rng, mod, 4);
        CodeReport report = extract(state, {false, false, false, true});
        check_against_brute_force(report, 0.1);
    }
}

TEST(Decoder, SingleLegErrorsAreCorrected) {
    for (const CodeReport &report : {testing::steane_report(), testing::five_qubit_report()}) {
        NoiseModel noise = NoiseModel::depolarizing(report.mod(), report.n, 0.01);
        for (size_t leg = 0; leg < report.n; leg++) {
            for (const char *op : {"X", "Y", "Z"}) {
                PauliVector e(report.mod(), report.n);
                PauliVector single = PauliVector::parse(op, report.mod());
                e.set(leg, single.x(0), single.z(0));
                DecodeOutcome out = ml_decode(report, noise, syndrome_of(report, e));
                EXPECT_TRUE(correction_succeeds(report, e, out.correction)) << leg << op;
            }
        }
    }
}

/// Exact failure probability of a decoder given as syndrome -> correction.
template <typename Decoder>
long double exact_failure(const CodeReport &report, const NoiseModel &noise, Decoder &&decoder) {
    long double fail = 0;
    std::map<Vec, PauliVector> cache;
    for_each_pauli(report.mod(), report.n, [&](const PauliVector &e) {
        Vec syn = syndrome_of(report, e);
        auto it = cache.find(syn);
        if (it == cache.end()) {
            it = cache.emplace(syn, decoder(syn)).first;
        }
        if (!correction_succeeds(report, e, it->second)) {
            fail += noise.probability(e);
        }
    });
    return fail;
}

TEST(Decoder, MaximumLikelihoodBeatsMinimumWeight) {
    for (double p : {0.02, 0.1, 0.2}) {
        for (const CodeReport &report : {testing::steane_report(), testing::five_qubit_report()}) {
            NoiseModel noise = NoiseModel::depolarizing(report.mod(), report.n, p);
            std::map<Vec, PauliVector> lightest;
            for_each_pauli(report.mod(), report.n, [&](const PauliVector &e) {
                Vec syn = syndrome_of(report, e);
                auto it = lightest.find(syn);
                if (it == lightest.end() || e.weight() < it->second.weight()) {
                    lightest.insert_or_assign(syn, e);
                }
            });
            long double ml = exact_failure(report, noise, [&](const Vec &s) {
                return ml_decode(report, noise, s).correction;
            });
            long double mw = exact_failure(report, noise, [&](const Vec &s) { return lightest.at(s); });
            EXPECT_LE(static_cast<double>(ml), static_cast<double>(mw) + 1e-15);
        }
    }
}

TEST(Decoder, MonteCarloIsDeterministicAndSplittable) {
    CodeReport report = testing::steane_report();
    NoiseModel noise = NoiseModel::depolarizing(report.mod(), report.n, 0.05);
    MonteCarloResult a = monte_carlo(report, noise, 2000, 9);
    MonteCarloResult b = monte_carlo(report, noise, 2000, 9);
    EXPECT_EQ(a.failures, b.failures);
    EXPECT_EQ(a.csv_row(), b.csv_row());
    MonteCarloResult first = monte_carlo(report, noise, 1000, 9);
    MonteCarloResult second = monte_carlo(report, noise, 1000, 1009);
    EXPECT_EQ(a.failures, first.failures + second.failures);
    EXPECT_EQ(monte_carlo(report, noise, 2000, 9, 0.05, true).failures, a.failures);
    EXPECT_GT(a.failures, 0u);
    MonteCarloResult clean = monte_carlo(report, NoiseModel::depolarizing(report.mod(), report.n, 0), 500, 3);
    EXPECT_EQ(clean.failures, 0u);
    EXPECT_EQ(clean.ci_low, 0.0);
    EXPECT_THROW(monte_carlo(report, noise, 0, 1), UsageError);
}

TEST(Decoder, MonteCarloRateTracksExactFailure) {
    CodeReport report = testing::five_qubit_report();
    NoiseModel noise = NoiseModel::depolarizing(report.mod(), report.n, 0.1);
    long double exact = exact_failure(report, noise, [&](const Vec &s) {
        return ml_decode(report, noise, s).correction;
    });
    MonteCarloResult mc = monte_carlo(report, noise, 20000, 4);
    double sigma = std::sqrt(static_cast<double>(exact * (1 - exact)) / 20000.0);
    EXPECT_NEAR(mc.rate, static_cast<double>(exact), 5 * sigma);
}

TEST(Decoder, WilsonIntervalKnownValues) {
    auto [lo0, hi0] = wilson_interval(0, 100);
    EXPECT_EQ(lo0, 0.0);
    EXPECT_NEAR(hi0, 0.036993, 1e-6);
    auto [lo, hi] = wilson_interval(10, 100);
    EXPECT_NEAR(lo, 0.055229, 1e-6);
    EXPECT_NEAR(hi, 0.174366, 1e-6);
    auto [lo1, hi1] = wilson_interval(100, 100);
    EXPECT_EQ(hi1, 1.0);
    EXPECT_NEAR(lo1, 1 - 0.036993, 1e-6);
    EXPECT_EQ(MonteCarloResult::csv_header(), "p,trials,failures,rate,ci_low,ci_high");
}

TEST(Decoder, LogicalLabelsPartitionTheNormalizer) {
    for (const CodeReport &report : {testing::steane_report(), testing::five_qubit_report()}) {
        std::set<std::vector<uint8_t>> seen;
        size_t total = 0;
        for (const char *label : {"I", "X", "Y", "Z"}) {
            PauliVector logical = PauliVector::parse(label, report.mod());
            TlTensor t = export_tl(report, logical);
            EXPECT_EQ(t.entries.size(), size_t{1} << (report.n - 1));
            for (const auto &entry : t.entries) {
                EXPECT_TRUE(seen.insert(entry).second);
                PauliVector p(report.mod(), report.n);
                for (size_t i = 0; i < report.n; i++) {
                    int x = entry[i] == 1 || entry[i] == 2;
                    int z = entry[i] == 2 || entry[i] == 3;
                    p.set(i, x, z);
                }
                EXPECT_TRUE(report.stabilizers.commutes_with(p));
                // X-type content is read by the Z logical and vice versa.
                int a = raw_symplectic(report.mod(), p, report.logical_pairs[0].z_physical);
                int b = raw_symplectic(report.mod(), report.logical_pairs[0].x_physical, p);
                EXPECT_EQ(a, logical.x(0));
                EXPECT_EQ(b, logical.z(0));
            }
            total += t.entries.size();
        }
        size_t normalizer = 0;
        for_each_pauli(report.mod(), report.n, [&](const PauliVector &p) {
            if (report.stabilizers.commutes_with(p)) {
                normalizer++;
                std::vector<uint8_t> e(report.n);
                for (size_t i = 0; i < report.n; i++) {
                    e[i] = tl_index(p.x(i), p.z(i));
                }
                EXPECT_TRUE(seen.count(e));
            }
        });
        EXPECT_EQ(total, normalizer);
    }
}

TEST(Decoder, TlTextFormat) {
    TlTensor t = export_tl(testing::steane_report(), PauliVector::parse("I", Modulus(2)));
    std::string text = t.to_text();
    EXPECT_EQ(text.rfind("# T(I) n=7 entries=64\n0 0 0 0 0 0 0\n", 0), 0u);
    EXPECT_THROW(export_tl(testing::steane_report(), PauliVector::parse("I", Modulus(2)), 10), BudgetExceeded);
}

TEST(Decoder, LogDomainAgreesWithDirectSums) {
    CodeReport report = testing::steane_report();
    NoiseModel noise = NoiseModel::depolarizing(report.mod(), report.n, 0.08);
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 20; trial++) {
        Vec syndrome = syndrome_of(report, testing::random_pauli(rng, report.mod(), report.n));
        DecodeOutcome plain = ml_decode(report, noise, syndrome);
        DecodeOutcome logs = ml_decode(report, noise, syndrome, uint64_t{1} << 24, true);
        ASSERT_EQ(logs.coset_log_probabilities.size(), plain.coset_probabilities.size());
        for (size_t i = 0; i < plain.coset_probabilities.size(); i++) {
            EXPECT_NEAR(static_cast<double>(std::log(plain.coset_probabilities[i])),
                        static_cast<double>(logs.coset_log_probabilities[i]), 1e-12);
        }
        // Ties between classes may be broken differently; the pick must still be a most likely class.
        size_t chosen = static_cast<size_t>(2 * logs.chosen[0] + logs.chosen[1]);
        long double best = *std::max_element(plain.coset_probabilities.begin(), plain.coset_probabilities.end());
        EXPECT_NEAR(static_cast<double>(plain.coset_probabilities[chosen] / best), 1.0, 1e-12);
    }
}

TEST(Decoder, LogDomainHandlesImpossibleClasses) {
    CodeReport report = testing::steane_report();
    // Only X errors occur, so classes needing a Z component carry zero weight.
    NoiseModel noise(report.mod(), std::vector<std::vector<double>>(report.n, {0.9, 0.0, 0.1, 0.0}));
    PauliVector error = PauliVector::parse("XIIIIII", report.mod());
    DecodeOutcome logs = ml_decode(report, noise, syndrome_of(report, error), uint64_t{1} << 24, true);
    size_t impossible = 0;
    for (long double v : logs.coset_log_probabilities) {
        impossible += std::isinf(static_cast<double>(v));
    }
    EXPECT_EQ(impossible, 2u);
    EXPECT_TRUE(correction_succeeds(report, error, logs.correction));
}

TEST(Decoder, RejectsMismatchedInputs) {
    CodeReport report = testing::steane_report();
    NoiseModel noise = NoiseModel::depolarizing(report.mod(), report.n, 0.1);
    EXPECT_THROW(ml_decode(report, noise, Vec{0, 1}), UsageError);
    EXPECT_THROW(ml_decode(report, NoiseModel::depolarizing(report.mod(), 3, 0.1), Vec(6, 0)), UsageError);
}

}  // namespace
}  // namespace qlego
