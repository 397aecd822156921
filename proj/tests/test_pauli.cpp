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

#include <random>

#include "oracles.hpp"
#include "qlego/pauli.hpp"

namespace qlego {
namespace {

TEST(Pauli, TextRoundTripForQubits) {
    Modulus mod(2);
    for (const char *text : {"IXYZ", "XXXX", "ZIZI", "Y"}) {
        EXPECT_EQ(PauliVector::parse(text, mod).str(), text);
    }
    EXPECT_THROW(PauliVector::parse("XQ", mod), UsageError);
}

TEST(Pauli, TextRoundTripForQudits) {
    std::mt19937_64 rng(3);
    for (int d : {3, 5}) {
        Modulus mod(d);
        for (int trial = 0; trial < 20; trial++) {
            PauliVector p = testing::random_pauli(rng, mod, 1 + rng() % 6);
            EXPECT_EQ(PauliVector::parse(p.str(), mod), p);
        }
    }
}

TEST(Pauli, WeightCountsNonIdentityLegs) {
    Modulus mod(2);
    EXPECT_EQ(PauliVector::parse("IXYZI", mod).weight(), 3u);
    EXPECT_TRUE(PauliVector::parse("III", mod).is_identity());
}

TEST(Pauli, SymplecticProductIsAntisymmetric) {
    std::mt19937_64 rng(4);
    for (int d : {2, 3, 5}) {
        Modulus mod(d);
        for (int trial = 0; trial < 200; trial++) {
            size_t n = 1 + rng() % 5;
            PauliVector p = testing::random_pauli(rng, mod, n);
            PauliVector q = testing::random_pauli(rng, mod, n);
            EXPECT_EQ(symplectic_product(p, q), mod.neg(symplectic_product(q, p)));
            EXPECT_EQ(symplectic_product(p, p), 0);
        }
    }
}

TEST(Pauli, SymplecticProductMatchesOperatorCommutation) {
    // X^x Z^z as matrices: P Q = omega^{<p,q>} Q P up to the sign convention fixed below.
    std::mt19937_64 rng(5);
    for (int d : {2, 3, 5}) {
        Modulus mod(d);
        for (int trial = 0; trial < 30; trial++) {
            size_t n = 1 + rng() % 2;
            PauliVector p = testing::random_pauli(rng, mod, n);
            PauliVector q = testing::random_pauli(rng, mod, n);
            size_t dim = 1;
            for (size_t i = 0; i < n; i++) {
                dim *= static_cast<size_t>(d);
            }
            testing::StateVector v(dim);
            std::normal_distribution<double> g;
            for (auto &a : v) {
                a = {g(rng), g(rng)};
            }
            testing::StateVector pq = testing::apply_pauli(testing::apply_pauli(v, q), p);
            testing::StateVector qp = testing::apply_pauli(testing::apply_pauli(v, p), q);
            int s = symplectic_product(p, q);
            testing::Complex w = std::polar(1.0, 2 * 3.14159265358979323846 * s / d);
            double err = 0;
            for (size_t i = 0; i < dim; i++) {
                // Either orientation of the phase identifies the same commutation class; commuting pairs need s == 0.
                err = std::max(err, std::min(std::abs(pq[i] - w * qp[i]), std::abs(pq[i] - std::conj(w) * qp[i])));
            }
            EXPECT_LT(err, 1e-9);
            bool commute = true;
            for (size_t i = 0; i < dim; i++) {
                commute = commute && std::abs(pq[i] - qp[i]) < 1e-9;
            }
            EXPECT_EQ(commute, s == 0);
        }
    }
}

TEST(Pauli, CheckMatrixRejectsNonCommutingGenerators) {
    Modulus mod(2);
    EXPECT_THROW(CheckMatrix::from_strings({"XI", "ZI"}, mod), UsageError);
    EXPECT_NO_THROW(CheckMatrix::from_strings({"XX", "ZZ"}, mod));
    std::mt19937_64 rng(6);
    for (int d : {2, 3, 5}) {
        Modulus m(d);
        for (int trial = 0; trial < 50; trial++) {
            PauliVector p = testing::random_pauli(rng, m, 3);
            PauliVector q = testing::random_pauli(rng, m, 3);
            if (symplectic_product(p, q) != 0) {
                EXPECT_THROW(CheckMatrix({p, q}, m, 3), UsageError);
            }
        }
    }
}

TEST(Pauli, CssFlagSurvivesRowMixing) {
    std::mt19937_64 rng(7);
    for (int d : {2, 3, 5}) {
        Modulus mod(d);
        for (int trial = 0; trial < 50; trial++) {
            CheckMatrix state = testing::random_css_state(rng, mod, 2 + rng() % 5);
            ASSERT_TRUE(state.css_info().css);
            Matrix mixed = state.matrix();
            for (int step = 0; step < 10 && mixed.rows() > 1; step++) {
                size_t a = rng() % mixed.rows(), b = rng() % mixed.rows();
                if (a != b) {
                    mixed.add_row_multiple(a, b, 1 + testing::random_residue(rng, d - 1));
                }
            }
            EXPECT_TRUE(CheckMatrix(mixed).css_info().css);
        }
    }
    EXPECT_FALSE(CheckMatrix::from_strings({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}, Modulus(2)).css_info().css);
}

TEST(Pauli, SelfDualFlag) {
    Modulus mod(2);
    EXPECT_TRUE(CheckMatrix::from_strings({"XXXX", "ZZZZ"}, mod).css_info().self_dual);
    EXPECT_FALSE(CheckMatrix::from_strings({"XXII", "ZZZZ"}, mod).css_info().self_dual);
}

TEST(Pauli, ContainsAndCommutesWith) {
    Modulus mod(2);
    CheckMatrix m = CheckMatrix::from_strings({"XXXX", "ZZZZ"}, mod);
    EXPECT_TRUE(m.contains(PauliVector::parse("YYYY", mod)));
    EXPECT_FALSE(m.contains(PauliVector::parse("XXII", mod)));
    EXPECT_TRUE(m.commutes_with(PauliVector::parse("XXII", mod)));
    EXPECT_FALSE(m.commutes_with(PauliVector::parse("XIII", mod)));
}

}  // namespace
}  // namespace qlego
