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

#include "qlego/pauli.hpp"

#include <cctype>

namespace qlego {

PauliVector::PauliVector(Modulus mod, size_t n) : mod_(std::move(mod)), xz_(2 * n, 0) {
}

PauliVector::PauliVector(Modulus mod, Vec xz) : mod_(std::move(mod)), xz_(std::move(xz)) {
    if (xz_.size() % 2 != 0) {
        throw UsageError("Pauli vector must have even length");
    }
    for (int &v : xz_) {
        v = mod_.reduce(v);
    }
}

void PauliVector::set(size_t i, int x, int z) {
    xz_[i] = mod_.reduce(x);
    xz_[n() + i] = mod_.reduce(z);
}

size_t PauliVector::weight() const {
    size_t w = 0;
    for (size_t i = 0; i < n(); i++) {
        if (x(i) != 0 || z(i) != 0) {
            w++;
        }
    }
    return w;
}

bool PauliVector::is_identity() const {
    for (int v : xz_) {
        if (v != 0) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> PauliVector::support() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < n(); i++) {
        if (x(i) != 0 || z(i) != 0) {
            out.push_back(i);
        }
    }
    return out;
}

PauliVector PauliVector::operator*(const PauliVector &other) const {
    if (other.xz_.size() != xz_.size() || !(other.mod_ == mod_)) {
        throw UsageError("Pauli size or dimension mismatch");
    }
    Vec out(xz_.size());
    for (size_t i = 0; i < xz_.size(); i++) {
        out[i] = mod_.add(xz_[i], other.xz_[i]);
    }
    return PauliVector(mod_, std::move(out));
}

PauliVector PauliVector::pow(int k) const {
    Vec out(xz_.size());
    int f = mod_.reduce(k);
    for (size_t i = 0; i < xz_.size(); i++) {
        out[i] = mod_.mul(f, xz_[i]);
    }
    return PauliVector(mod_, std::move(out));
}

PauliVector PauliVector::restrict_to(const std::vector<size_t> &legs) const {
    PauliVector out(mod_, legs.size());
    for (size_t j = 0; j < legs.size(); j++) {
        out.set(j, x(legs[j]), z(legs[j]));
    }
    return out;
}

std::string PauliVector::str() const {
    std::string out;
    if (mod_.d() == 2) {
        static const char kLetters[2][2] = {{'I', 'Z'}, {'X', 'Y'}};
        for (size_t i = 0; i < n(); i++) {
            out.push_back(kLetters[x(i)][z(i)]);
        }
        return out;
    }
    for (size_t i = 0; i < n(); i++) {
        if (i) {
            out.push_back(';');
        }
        out += "x" + std::to_string(x(i)) + "z" + std::to_string(z(i));
    }
    return out;
}

namespace {

int parse_exponent(std::string_view text, size_t &pos, const Modulus &mod) {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        pos++;
    }
    if (start == pos || pos - start > 6) {
        throw UsageError("malformed Pauli token in '" + std::string(text) + "'");
    }
    int v = std::stoi(std::string(text.substr(start, pos - start)));
    if (v >= mod.d()) {
        throw UsageError("exponent " + std::to_string(v) + " out of range for dimension " + std::to_string(mod.d()));
    }
    return v;
}

}  // namespace

PauliVector PauliVector::parse(std::string_view text, const Modulus &mod) {
    bool token_form = text.find('x') != std::string_view::npos;
    if (!token_form) {
        if (mod.d() != 2 && !text.empty()) {
            throw UsageError("letter Pauli strings require dimension 2");
        }
        PauliVector out(mod, text.size());
        for (size_t i = 0; i < text.size(); i++) {
            switch (text[i]) {
                case 'I': break;
                case 'X': out.set(i, 1, 0); break;
                case 'Y': out.set(i, 1, 1); break;
                case 'Z': out.set(i, 0, 1); break;
                default:
                    throw UsageError("malformed Pauli character '" + std::string(1, text[i]) + "'");
            }
        }
        return out;
    }
    std::vector<std::pair<int, int>> legs;
    size_t pos = 0;
    while (true) {
        if (pos >= text.size() || text[pos] != 'x') {
            throw UsageError("malformed Pauli token in '" + std::string(text) + "'");
        }
        pos++;
        int x = parse_exponent(text, pos, mod);
        if (pos >= text.size() || text[pos] != 'z') {
            throw UsageError("malformed Pauli token in '" + std::string(text) + "'");
        }
        pos++;
        int z = parse_exponent(text, pos, mod);
        legs.emplace_back(x, z);
        if (pos == text.size()) {
            break;
        }
        if (text[pos] != ';') {
            throw UsageError("malformed Pauli token in '" + std::string(text) + "'");
        }
        pos++;
    }
    PauliVector out(mod, legs.size());
    for (size_t i = 0; i < legs.size(); i++) {
        out.set(i, legs[i].first, legs[i].second);
    }
    return out;
}

int symplectic_product(const Modulus &mod, std::span<const int> p, std::span<const int> q) {
    size_t n = p.size() / 2;
    long long acc = 0;
    for (size_t i = 0; i < n; i++) {
        acc += static_cast<long long>(p[i]) * q[n + i] - static_cast<long long>(p[n + i]) * q[i];
    }
    return mod.reduce(acc);
}

int symplectic_product(const PauliVector &p, const PauliVector &q) {
    if (p.n() != q.n() || !(p.mod() == q.mod())) {
        throw UsageError("symplectic product of mismatched Paulis");
    }
    return symplectic_product(p.mod(), p.xz(), q.xz());
}

std::vector<size_t> leg_columns(size_t n, const std::vector<size_t> &legs) {
    std::vector<size_t> cols;
    for (size_t leg : legs) {
        cols.push_back(leg);
    }
    for (size_t leg : legs) {
        cols.push_back(n + leg);
    }
    return cols;
}

CheckMatrix::CheckMatrix(Modulus mod, size_t n) : n_(n), m_(std::move(mod), 0, 2 * n) {
}

CheckMatrix::CheckMatrix(Matrix canonical, size_t n) : n_(n), m_(std::move(canonical)) {
}

CheckMatrix CheckMatrix::trusted(const Matrix &rows) {
    if (rows.cols() % 2 != 0) {
        throw UsageError("check matrix must have an even number of columns");
    }
    return CheckMatrix(rref(rows).matrix, rows.cols() / 2);
}

CheckMatrix::CheckMatrix(const Matrix &rows) : CheckMatrix(trusted(rows)) {
    for (size_t i = 0; i < m_.rows(); i++) {
        for (size_t j = i + 1; j < m_.rows(); j++) {
            if (symplectic_product(mod(), m_.row(i), m_.row(j)) != 0) {
                throw UsageError("generators do not commute");
            }
        }
    }
}

CheckMatrix::CheckMatrix(const std::vector<PauliVector> &rows, const Modulus &mod, size_t n)
    : CheckMatrix([&] {
          Matrix m(mod, 0, 2 * n);
          for (const PauliVector &p : rows) {
              if (p.n() != n || !(p.mod() == mod)) {
                  throw UsageError("generator size or dimension mismatch");
              }
              m.append_row(p.xz());
          }
          return m;
      }()) {
}

CheckMatrix CheckMatrix::from_strings(const std::vector<std::string> &rows, const Modulus &mod) {
    if (rows.empty()) {
        throw UsageError("empty generator list needs an explicit leg count");
    }
    std::vector<PauliVector> ps;
    for (const std::string &s : rows) {
        ps.push_back(PauliVector::parse(s, mod));
    }
    return CheckMatrix(ps, mod, ps.front().n());
}

PauliVector CheckMatrix::row(size_t i) const {
    return PauliVector(mod(), m_.row_vec(i));
}

std::vector<PauliVector> CheckMatrix::rows() const {
    std::vector<PauliVector> out;
    for (size_t i = 0; i < rank(); i++) {
        out.push_back(row(i));
    }
    return out;
}

bool CheckMatrix::contains(const PauliVector &p) const {
    return solve(m_, p.xz()).has_value();
}

bool CheckMatrix::commutes_with(const PauliVector &p) const {
    for (size_t i = 0; i < rank(); i++) {
        if (symplectic_product(mod(), m_.row(i), p.xz()) != 0) {
            return false;
        }
    }
    return true;
}

namespace {

/// Rows of the subgroup whose entries vanish on `excluded` columns, projected to `kept` columns.
Matrix pure_subgroup(const Matrix &m, const std::vector<size_t> &excluded, const std::vector<size_t> &kept) {
    Matrix work = m;
    std::vector<size_t> order = excluded;
    order.insert(order.end(), kept.begin(), kept.end());
    std::vector<size_t> pivots = eliminate(work, order);
    std::vector<size_t> rows;
    for (size_t i = 0; i < pivots.size(); i++) {
        if (pivots[i] >= excluded.front() && pivots[i] <= excluded.back()) {
            continue;
        }
        rows.push_back(i);
    }
    return work.select_rows(rows).select_columns(kept);
}

}  // namespace

CssInfo CheckMatrix::css_info() const {
    if (rank() == 0) {
        return {true, true};
    }
    std::vector<size_t> xs(n_), zs(n_);
    for (size_t i = 0; i < n_; i++) {
        xs[i] = i;
        zs[i] = n_ + i;
    }
    Matrix hx = pure_subgroup(m_, zs, xs);
    Matrix hz = pure_subgroup(m_, xs, zs);
    bool css = hx.rows() + hz.rows() == rank();
    bool self_dual = css && same_row_space(hx, hz);
    return {css, self_dual};
}

std::vector<std::string> CheckMatrix::strings() const {
    std::vector<std::string> out;
    for (size_t i = 0; i < rank(); i++) {
        out.push_back(row(i).str());
    }
    return out;
}

bool row_space_equal(const CheckMatrix &a, const CheckMatrix &b) {
    return a.n_legs() == b.n_legs() && a.mod() == b.mod() && a.matrix() == b.matrix();
}

CheckMatrix direct_sum(const CheckMatrix &a, const CheckMatrix &b) {
    if (!(a.mod() == b.mod())) {
        throw UsageError("direct sum of different dimensions");
    }
    size_t na = a.n_legs();
    size_t nb = b.n_legs();
    size_t n = na + nb;
    Matrix m(a.mod(), a.rank() + b.rank(), 2 * n);
    for (size_t r = 0; r < a.rank(); r++) {
        for (size_t i = 0; i < na; i++) {
            m.at(r, i) = a.matrix().at(r, i);
            m.at(r, n + i) = a.matrix().at(r, na + i);
        }
    }
    for (size_t r = 0; r < b.rank(); r++) {
        for (size_t i = 0; i < nb; i++) {
            m.at(a.rank() + r, na + i) = b.matrix().at(r, i);
            m.at(a.rank() + r, n + na + i) = b.matrix().at(r, nb + i);
        }
    }
    return CheckMatrix::trusted(m);
}

}  // namespace qlego
