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

#ifndef QLEGO_PAULI_HPP
#define QLEGO_PAULI_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qlego/field.hpp"

namespace qlego {

/// A generalized Pauli operator on n legs, X^x Z^z on each leg, modulo phase.
/// Stored as one vector of length 2n: x parts followed by z parts.
class PauliVector {
   public:
    PauliVector(Modulus mod, size_t n);
    PauliVector(Modulus mod, Vec xz);

    const Modulus &mod() const { return mod_; }
    size_t n() const { return xz_.size() / 2; }
    int x(size_t i) const { return xz_[i]; }
    int z(size_t i) const { return xz_[n() + i]; }
    void set(size_t i, int x, int z);
    const Vec &xz() const { return xz_; }

    size_t weight() const;
    bool is_identity() const;
    std::vector<size_t> support() const;

    PauliVector operator*(const PauliVector &other) const;
    PauliVector pow(int k) const;
    PauliVector restrict_to(const std::vector<size_t> &legs) const;

    bool operator==(const PauliVector &other) const { return mod_ == other.mod_ && xz_ == other.xz_; }
    bool operator!=(const PauliVector &other) const { return !(*this == other); }

    std::string str() const;
    static PauliVector parse(std::string_view text, const Modulus &mod);

   private:
    Modulus mod_;
    Vec xz_;
};

int symplectic_product(const PauliVector &p, const PauliVector &q);
int symplectic_product(const Modulus &mod, std::span<const int> p, std::span<const int> q);

struct CssInfo {
    bool css;
    bool self_dual;
};

/// A set of mutually commuting Paulis on n legs, kept in canonical (rref) form.
class CheckMatrix {
   public:
    CheckMatrix(Modulus mod, size_t n);
    /// Validates commutation and canonicalizes. Throws UsageError on non-commuting input.
    explicit CheckMatrix(const Matrix &rows);
    CheckMatrix(const std::vector<PauliVector> &rows, const Modulus &mod, size_t n);
    static CheckMatrix from_strings(const std::vector<std::string> &rows, const Modulus &mod);
    /// Canonicalizes without the quadratic commutation check.
    static CheckMatrix trusted(const Matrix &rows);

    const Modulus &mod() const { return m_.mod(); }
    size_t n_legs() const { return n_; }
    size_t rank() const { return m_.rows(); }
    const Matrix &matrix() const { return m_; }
    PauliVector row(size_t i) const;
    std::vector<PauliVector> rows() const;

    bool contains(const PauliVector &p) const;
    bool commutes_with(const PauliVector &p) const;
    CssInfo css_info() const;
    std::vector<std::string> strings() const;

    bool operator==(const CheckMatrix &other) const { return n_ == other.n_ && m_ == other.m_; }

   private:
    CheckMatrix(Matrix canonical, size_t n);
    size_t n_;
    Matrix m_;
};

bool row_space_equal(const CheckMatrix &a, const CheckMatrix &b);

/// Block-diagonal combination: legs of a first, then legs of b.
CheckMatrix direct_sum(const CheckMatrix &a, const CheckMatrix &b);

/// Column indices (into a 2n-wide matrix) of the x and z parts of the given legs.
std::vector<size_t> leg_columns(size_t n, const std::vector<size_t> &legs);

}  // namespace qlego

#endif
