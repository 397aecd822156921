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

#include "qlego/field.hpp"

#include <sstream>

namespace qlego {

bool is_prime(int d) {
    if (d < 2) {
        return false;
    }
    for (int p = 2; p * p <= d; p++) {
        if (d % p == 0) {
            return false;
        }
    }
    return true;
}

Modulus::Modulus(int d) : d_(d) {
    if (!is_prime(d)) {
        throw UsageError("dimension " + std::to_string(d) + " is not prime");
    }
    inverse_.assign(d, 0);
    for (int a = 1; a < d; a++) {
        for (int b = 1; b < d; b++) {
            if (a * b % d == 1) {
                inverse_[a] = b;
                break;
            }
        }
    }
}

int Modulus::inv(int a) const {
    if (a == 0) {
        throw UsageError("zero has no inverse");
    }
    return inverse_[a];
}

Matrix::Matrix(Modulus mod, size_t rows, size_t cols)
    : mod_(std::move(mod)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
}

Matrix::Matrix(Modulus mod, const std::vector<Vec> &rows, size_t cols)
    : mod_(std::move(mod)), rows_(rows.size()), cols_(cols), data_(rows.size() * cols, 0) {
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw UsageError("row length does not match column count");
        }
        for (size_t c = 0; c < cols; c++) {
            at(r, c) = mod_.reduce(rows[r][c]);
        }
    }
}

Matrix Matrix::identity(Modulus mod, size_t n) {
    Matrix m(std::move(mod), n, n);
    for (size_t i = 0; i < n; i++) {
        m.at(i, i) = 1;
    }
    return m;
}

void Matrix::append_row(std::span<const int> values) {
    if (values.size() != cols_) {
        throw UsageError("row length does not match column count");
    }
    for (int v : values) {
        data_.push_back(mod_.reduce(v));
    }
    rows_++;
}

void Matrix::remove_row(size_t r) {
    data_.erase(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    rows_--;
}

bool Matrix::row_is_zero(size_t r) const {
    for (int v : row(r)) {
        if (v != 0) {
            return false;
        }
    }
    return true;
}

Matrix Matrix::select_columns(const std::vector<size_t> &columns) const {
    Matrix out(mod_, rows_, columns.size());
    for (size_t r = 0; r < rows_; r++) {
        for (size_t j = 0; j < columns.size(); j++) {
            out.at(r, j) = at(r, columns[j]);
        }
    }
    return out;
}

Matrix Matrix::select_rows(const std::vector<size_t> &rows) const {
    Matrix out(mod_, rows.size(), cols_);
    for (size_t i = 0; i < rows.size(); i++) {
        for (size_t c = 0; c < cols_; c++) {
            out.at(i, c) = at(rows[i], c);
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(mod_, cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out.at(c, r) = at(r, c);
        }
    }
    return out;
}

Matrix Matrix::multiply(const Matrix &other) const {
    if (cols_ != other.rows_) {
        throw UsageError("matrix shapes do not compose");
    }
    Matrix out(mod_, rows_, other.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t k = 0; k < cols_; k++) {
            int a = at(r, k);
            if (a == 0) {
                continue;
            }
            for (size_t c = 0; c < other.cols_; c++) {
                out.at(r, c) = mod_.add(out.at(r, c), mod_.mul(a, other.at(k, c)));
            }
        }
    }
    return out;
}

void Matrix::add_row_multiple(size_t dst, size_t src, int factor) {
    factor = mod_.reduce(factor);
    if (factor == 0) {
        return;
    }
    int *d = data_.data() + dst * cols_;
    const int *s = data_.data() + src * cols_;
    int p = mod_.d();
    for (size_t c = 0; c < cols_; c++) {
        if (s[c] != 0) {
            d[c] = (d[c] + factor * s[c]) % p;
        }
    }
}

void Matrix::scale_row(size_t r, int factor) {
    for (int &v : row(r)) {
        v = mod_.mul(v, factor);
    }
}

void Matrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t c = 0; c < cols_; c++) {
        std::swap(at(a, c), at(b, c));
    }
}

bool Matrix::operator==(const Matrix &other) const {
    return mod_ == other.mod_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out << (c ? " " : "") << at(r, c);
        }
        out << "\n";
    }
    return out.str();
}

std::vector<size_t> eliminate(Matrix &m, const std::vector<size_t> &pivot_order) {
    const Modulus &mod = m.mod();
    std::vector<size_t> pivots;
    size_t next = 0;
    for (size_t col : pivot_order) {
        if (next == m.rows()) {
            break;
        }
        size_t found = m.rows();
        for (size_t r = next; r < m.rows(); r++) {
            if (m.at(r, col) != 0) {
                found = r;
                break;
            }
        }
        if (found == m.rows()) {
            continue;
        }
        m.swap_rows(next, found);
        m.scale_row(next, mod.inv(m.at(next, col)));
        for (size_t r = 0; r < m.rows(); r++) {
            if (r != next && m.at(r, col) != 0) {
                m.add_row_multiple(r, next, mod.neg(m.at(r, col)));
            }
        }
        pivots.push_back(col);
        next++;
    }
    return pivots;
}

RrefResult rref(const Matrix &m) {
    Matrix work = m;
    std::vector<size_t> order(m.cols());
    for (size_t c = 0; c < m.cols(); c++) {
        order[c] = c;
    }
    std::vector<size_t> pivots = eliminate(work, order);
    std::vector<size_t> keep(pivots.size());
    for (size_t i = 0; i < keep.size(); i++) {
        keep[i] = i;
    }
    return RrefResult{work.select_rows(keep), pivots, pivots.size()};
}

size_t rank(const Matrix &m) {
    return rref(m).rank;
}

Matrix kernel(const Matrix &m) {
    RrefResult r = rref(m);
    const Modulus &mod = m.mod();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : r.pivots) {
        is_pivot[p] = true;
    }
    Matrix out(mod, 0, m.cols());
    for (size_t free = 0; free < m.cols(); free++) {
        if (is_pivot[free]) {
            continue;
        }
        Vec v(m.cols(), 0);
        v[free] = 1;
        for (size_t i = 0; i < r.pivots.size(); i++) {
            v[r.pivots[i]] = mod.neg(r.matrix.at(i, free));
        }
        out.append_row(v);
    }
    return out;
}

std::optional<Vec> solve(const Matrix &m, std::span<const int> b) {
    if (b.size() != m.cols()) {
        throw UsageError("right-hand side length does not match column count");
    }
    const Modulus &mod = m.mod();
    size_t rows = m.rows();
    size_t cols = m.cols();
    // Work on [m | I] so that the tag block records how each reduced row was formed.
    Matrix work(mod, rows, cols + rows);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            work.at(r, c) = m.at(r, c);
        }
        work.at(r, cols + r) = 1;
    }
    std::vector<size_t> order(cols);
    for (size_t c = 0; c < cols; c++) {
        order[c] = c;
    }
    std::vector<size_t> pivots = eliminate(work, order);
    Vec residual(b.begin(), b.end());
    for (int &v : residual) {
        v = mod.reduce(v);
    }
    Vec x(rows, 0);
    for (size_t i = 0; i < pivots.size(); i++) {
        int coef = residual[pivots[i]];
        if (coef == 0) {
            continue;
        }
        for (size_t c = 0; c < cols; c++) {
            residual[c] = mod.sub(residual[c], mod.mul(coef, work.at(i, c)));
        }
        for (size_t r = 0; r < rows; r++) {
            x[r] = mod.add(x[r], mod.mul(coef, work.at(i, cols + r)));
        }
    }
    for (int v : residual) {
        if (v != 0) {
            return std::nullopt;
        }
    }
    return x;
}

bool same_row_space(const Matrix &a, const Matrix &b) {
    if (a.cols() != b.cols() || !(a.mod() == b.mod())) {
        return false;
    }
    return rref(a).matrix == rref(b).matrix;
}

}  // namespace qlego
