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

#ifndef QLEGO_FIELD_HPP
#define QLEGO_FIELD_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlego {

/// Raised for malformed arguments (bad indices, parse failures, mismatched sizes).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Arithmetic in the prime field GF(d). All residues are kept in [0, d).
class Modulus {
   public:
    explicit Modulus(int d);

    int d() const { return d_; }
    int add(int a, int b) const { return (a + b) % d_; }
    int sub(int a, int b) const { return (a - b + d_) % d_; }
    int mul(int a, int b) const { return (a * b) % d_; }
    int neg(int a) const { return a == 0 ? 0 : d_ - a; }
    int inv(int a) const;
    int reduce(long long a) const {
        long long r = a % d_;
        return static_cast<int>(r < 0 ? r + d_ : r);
    }

    bool operator==(const Modulus &other) const { return d_ == other.d_; }

   private:
    int d_;
    std::vector<int> inverse_;
};

bool is_prime(int d);

using Vec = std::vector<int>;

/// Dense row-major matrix over GF(d).
class Matrix {
   public:
    Matrix(Modulus mod, size_t rows, size_t cols);
    Matrix(Modulus mod, const std::vector<Vec> &rows, size_t cols);
    static Matrix identity(Modulus mod, size_t n);

    const Modulus &mod() const { return mod_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    int &at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    int at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    std::span<int> row(size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const int> row(size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec row_vec(size_t r) const { return Vec(row(r).begin(), row(r).end()); }

    void append_row(std::span<const int> values);
    void remove_row(size_t r);
    bool row_is_zero(size_t r) const;

    /// Keeps only the listed columns, in the listed order.
    Matrix select_columns(const std::vector<size_t> &columns) const;
    Matrix select_rows(const std::vector<size_t> &rows) const;
    Matrix transpose() const;
    Matrix multiply(const Matrix &other) const;

    /// Row operation: row[dst] += factor * row[src].
    void add_row_multiple(size_t dst, size_t src, int factor);
    void scale_row(size_t r, int factor);
    void swap_rows(size_t a, size_t b);

    bool operator==(const Matrix &other) const;
    std::string to_string() const;

   private:
    Modulus mod_;
    size_t rows_;
    size_t cols_;
    std::vector<int> data_;
};

struct RrefResult {
    Matrix matrix;
    std::vector<size_t> pivots;
    size_t rank;
};

/// Gauss-Jordan elimination restricted to `pivot_order` columns, in the given
/// priority. Row operations act on entire rows, so columns outside the list are
/// carried along. Rows are reordered so that row i holds the i-th pivot; rows
/// without a pivot follow. Returns the pivot columns.
std::vector<size_t> eliminate(Matrix &m, const std::vector<size_t> &pivot_order);

/// Reduced row echelon form with zero rows removed.
RrefResult rref(const Matrix &m);
size_t rank(const Matrix &m);

/// Basis of {v : m v = 0} as rows.
Matrix kernel(const Matrix &m);

/// Returns x with sum_i x_i * row_i(m) == b, or nothing when b is outside the row space.
std::optional<Vec> solve(const Matrix &m, std::span<const int> b);

/// Row space equality via canonical forms.
bool same_row_space(const Matrix &a, const Matrix &b);

}  // namespace qlego

#endif
