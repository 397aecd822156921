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

#include "qlego/trace.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

namespace qlego {

namespace {

Matrix with_identity_tags(const Matrix &rows) {
    Matrix m(rows.mod(), rows.rows(), rows.cols() + rows.rows());
    for (size_t r = 0; r < rows.rows(); r++) {
        for (size_t c = 0; c < rows.cols(); c++) {
            m.at(r, c) = rows.at(r, c);
        }
        m.at(r, rows.cols() + r) = 1;
    }
    return m;
}

void check_legs(size_t n, size_t a, size_t b) {
    if (a >= n || b >= n) {
        throw UsageError("traced leg out of range");
    }
    if (a == b) {
        throw UsageError("cannot trace a leg with itself");
    }
}

void check_rank(size_t n_in, size_t rank_in, size_t rank_out, size_t traced_pairs) {
    if (rank_in == n_in && rank_out != n_in - 2 * traced_pairs) {
        throw TraceRankError("trace of a full-rank state produced rank " + std::to_string(rank_out) +
                             ", expected " + std::to_string(n_in - 2 * traced_pairs));
    }
}

TraceResult finish(TrackedMatrix &t, size_t rank_in) {
    t.canonicalize();
    TraceResult out{t.check(), t.provenance(), rank_in - t.rows()};
    return out;
}

}  // namespace

TrackedMatrix::TrackedMatrix(const Matrix &rows, size_t n) : n_(n), m_(rows) {
    if (rows.cols() < 2 * n) {
        throw UsageError("tracked matrix narrower than its leg columns");
    }
}

TrackedMatrix TrackedMatrix::stack(const std::vector<const CheckMatrix *> &blocks) {
    if (blocks.empty()) {
        throw UsageError("nothing to stack");
    }
    Modulus mod = blocks.front()->mod();
    size_t n = 0;
    size_t r = 0;
    for (const CheckMatrix *b : blocks) {
        if (!(b->mod() == mod)) {
            throw UsageError("blocks have different dimensions");
        }
        n += b->n_legs();
        r += b->rank();
    }
    Matrix m(mod, r, 2 * n + r);
    size_t row = 0;
    size_t leg = 0;
    for (const CheckMatrix *b : blocks) {
        size_t nb = b->n_legs();
        for (size_t i = 0; i < b->rank(); i++, row++) {
            for (size_t j = 0; j < nb; j++) {
                m.at(row, leg + j) = b->matrix().at(i, j);
                m.at(row, n + leg + j) = b->matrix().at(i, nb + j);
            }
            m.at(row, 2 * n + row) = 1;
        }
        leg += nb;
    }
    return TrackedMatrix(m, n);
}

size_t TrackedMatrix::trace(size_t a, size_t b) {
    check_legs(n_, a, b);
    const Modulus &mod = m_.mod();
    size_t lost = 0;
    // The two linear constraints of the matching rule: x_a = x_b and z_a = -z_b.
    for (int which = 0; which < 2; which++) {
        auto value = [&](size_t r) {
            if (which == 0) {
                return mod.sub(m_.at(r, a), m_.at(r, b));
            }
            return mod.add(m_.at(r, n_ + a), m_.at(r, n_ + b));
        };
        size_t pivot = m_.rows();
        for (size_t r = 0; r < m_.rows(); r++) {
            if (value(r) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == m_.rows()) {
            continue;
        }
        int inv = mod.inv(value(pivot));
        for (size_t r = pivot + 1; r < m_.rows(); r++) {
            int v = value(r);
            if (v != 0) {
                m_.add_row_multiple(r, pivot, mod.neg(mod.mul(v, inv)));
            }
        }
        m_.remove_row(pivot);
        lost++;
    }
    delete_legs(a, b);
    return lost;
}

void TrackedMatrix::delete_legs(size_t a, size_t b) {
    std::vector<size_t> keep;
    for (size_t c = 0; c < m_.cols(); c++) {
        size_t leg = c < n_ ? c : c - n_;
        if (c < 2 * n_ && (leg == a || leg == b)) {
            continue;
        }
        keep.push_back(c);
    }
    m_ = m_.select_columns(keep);
    n_ -= 2;
}

void TrackedMatrix::canonicalize() {
    std::vector<size_t> order(2 * n_);
    for (size_t c = 0; c < 2 * n_; c++) {
        order[c] = c;
    }
    std::vector<size_t> pivots = eliminate(m_, order);
    while (m_.rows() > pivots.size()) {
        m_.remove_row(m_.rows() - 1);
    }
}

CheckMatrix TrackedMatrix::check() const {
    std::vector<size_t> cols(2 * n_);
    for (size_t c = 0; c < 2 * n_; c++) {
        cols[c] = c;
    }
    return CheckMatrix::trusted(m_.select_columns(cols));
}

Matrix TrackedMatrix::provenance() const {
    std::vector<size_t> cols;
    for (size_t c = 2 * n_; c < m_.cols(); c++) {
        cols.push_back(c);
    }
    return m_.select_columns(cols);
}

TraceResult self_trace(const CheckMatrix &h, size_t leg_a, size_t leg_b) {
    check_legs(h.n_legs(), leg_a, leg_b);
    TrackedMatrix t(with_identity_tags(h.matrix()), h.n_legs());
    t.trace(leg_a, leg_b);
    TraceResult out = finish(t, h.rank());
    check_rank(h.n_legs(), h.rank(), out.matrix.rank(), 1);
    return out;
}

namespace {

/// Matching test on the four local entries (x_a, x_b, z_a, z_b).
bool matches(const Modulus &mod, int xa, int xb, int za, int zb) {
    return xa == xb && za == mod.neg(zb);
}

}  // namespace

TraceResult self_trace_case_analysis(const CheckMatrix &h, size_t leg_a, size_t leg_b) {
    check_legs(h.n_legs(), leg_a, leg_b);
    const Modulus &mod = h.mod();
    size_t n = h.n_legs();

    auto attempt = [&](size_t a, size_t b) -> std::optional<TraceResult> {
        Matrix work = with_identity_tags(h.matrix());
        size_t xa = a, xb = b, za = n + a, zb = n + b;
        std::vector<size_t> order = {xa, xb, za, zb};
        for (size_t c = 0; c < 2 * n; c++) {
            if (c != xa && c != xb && c != za && c != zb) {
                order.push_back(c);
            }
        }
        std::vector<size_t> pivots = eliminate(work, order);
        size_t dim_u = 0;
        while (dim_u < pivots.size() && (pivots[dim_u] == xa || pivots[dim_u] == xb || pivots[dim_u] == za ||
                                         pivots[dim_u] == zb)) {
            dim_u++;
        }
        auto local = [&](size_t r) {
            return std::array<int, 4>{work.at(r, xa), work.at(r, xb), work.at(r, za), work.at(r, zb)};
        };
        auto combo = [&](const std::vector<std::pair<size_t, int>> &terms) {
            Vec v(work.cols(), 0);
            for (auto [r, f] : terms) {
                for (size_t c = 0; c < work.cols(); c++) {
                    v[c] = mod.add(v[c], mod.mul(f, work.at(r, c)));
                }
            }
            return v;
        };

        std::vector<Vec> kept;
        std::vector<size_t> piv(pivots.begin(), pivots.begin() + dim_u);
        if (dim_u == 4) {
            // Every local pattern occurs: keep the two Bell-pair combinations.
            kept.push_back(combo({{0, 1}, {1, 1}}));
            kept.push_back(combo({{2, 1}, {3, mod.neg(1)}}));
        } else if (dim_u == 3) {
            if (piv == std::vector<size_t>{xa, za, zb}) {
                int l = work.at(0, xb), k = work.at(1, xb), j = work.at(2, xb);
                int alpha = mod.sub(j, k);
                int beta = mod.sub(l, 1);
                if (alpha == 0 && beta == 0) {
                    kept.push_back(combo({{0, 1}}));
                    kept.push_back(combo({{1, 1}, {2, mod.neg(1)}}));
                } else {
                    kept.push_back(combo({{0, alpha}, {1, beta}, {2, mod.neg(beta)}}));
                }
            } else if (piv == std::vector<size_t>{xa, xb, za}) {
                int l = work.at(0, zb), j = work.at(1, zb), k = work.at(2, zb);
                int alpha = mod.add(1, k);
                int gamma = mod.neg(mod.add(l, j));
                if (alpha == 0 && gamma == 0) {
                    kept.push_back(combo({{0, 1}, {1, 1}}));
                    kept.push_back(combo({{2, 1}}));
                } else {
                    kept.push_back(combo({{0, alpha}, {1, alpha}, {2, gamma}}));
                }
            } else {
                return std::nullopt;
            }
        } else if (dim_u == 2) {
            auto l0 = local(0), l1 = local(1);
            auto on_a_only = [](const std::array<int, 4> &v) { return v[1] == 0 && v[3] == 0; };
            auto on_b_only = [](const std::array<int, 4> &v) { return v[0] == 0 && v[2] == 0; };
            bool product = (on_a_only(l0) && on_b_only(l1)) || (on_b_only(l0) && on_a_only(l1));
            if (product) {
                size_t ra = on_a_only(l0) ? 0 : 1;
                size_t rb = 1 - ra;
                auto va = local(ra), vb = local(rb);
                int i1 = va[0], j1 = va[2], i2 = vb[1], j2 = mod.neg(vb[3]);
                // Indicator f: is (i2, -j2) a multiple l of (i1, j1)?
                std::optional<int> scale;
                for (int s = 1; s < mod.d(); s++) {
                    if (mod.mul(s, i1) == i2 && mod.mul(s, j1) == j2) {
                        scale = s;
                        break;
                    }
                }
                if (scale) {
                    kept.push_back(combo({{ra, *scale}, {rb, 1}}));
                }
            } else {
                Matrix sols(mod, 0, work.cols());
                for (int p = 0; p < mod.d(); p++) {
                    for (int q = 0; q < mod.d(); q++) {
                        if (p == 0 && q == 0) {
                            continue;
                        }
                        auto c0 = local(0), c1 = local(1);
                        int e[4];
                        for (int t = 0; t < 4; t++) {
                            e[t] = mod.add(mod.mul(p, c0[t]), mod.mul(q, c1[t]));
                        }
                        if (matches(mod, e[0], e[1], e[2], e[3])) {
                            sols.append_row(combo({{0, p}, {1, q}}));
                        }
                    }
                }
                RrefResult basis = rref(sols);
                for (size_t r = 0; r < basis.rank; r++) {
                    kept.push_back(basis.matrix.row_vec(r));
                }
            }
        } else if (dim_u == 1) {
            auto l0 = local(0);
            if (matches(mod, l0[0], l0[1], l0[2], l0[3])) {
                kept.push_back(work.row_vec(0));
            }
        }
        for (size_t r = dim_u; r < work.rows(); r++) {
            kept.push_back(work.row_vec(r));
        }
        Matrix out(mod, 0, work.cols());
        for (const Vec &v : kept) {
            out.append_row(v);
        }
        TrackedMatrix t(out, n);
        t.trace(a, b);  // all kept rows already match, so this only removes the columns
        return finish(t, h.rank());
    };

    std::optional<TraceResult> result = attempt(leg_a, leg_b);
    if (!result) {
        result = attempt(leg_b, leg_a);
    }
    if (!result) {
        throw std::logic_error("case analysis found no applicable normal form");
    }
    // The swapped attempt deletes the same two legs, so the output column order is unchanged.
    check_rank(n, h.rank(), result->matrix.rank(), 1);
    return *result;
}

TraceResult single_trace(const CheckMatrix &h1, const CheckMatrix &h2, size_t leg_a, size_t leg_b) {
    return conjoin(h1, h2, {{leg_a, leg_b}});
}

TraceResult conjoin(const CheckMatrix &h1, const std::optional<CheckMatrix> &h2,
                    const std::vector<std::pair<size_t, size_t>> &pairs) {
    size_t n1 = h1.n_legs();
    size_t n = n1 + (h2 ? h2->n_legs() : 0);
    std::vector<std::pair<size_t, size_t>> legs;
    std::set<size_t> used;
    for (auto [a, b] : pairs) {
        size_t ga = a;
        size_t gb = h2 ? n1 + b : b;
        if (a >= n1 || (h2 && b >= h2->n_legs()) || (!h2 && b >= n1)) {
            throw UsageError("conjoined leg out of range");
        }
        if (!used.insert(ga).second || !used.insert(gb).second) {
            throw UsageError("conjoined leg pairs overlap");
        }
        legs.emplace_back(ga, gb);
    }
    std::vector<const CheckMatrix *> blocks = {&h1};
    if (h2) {
        blocks.push_back(&*h2);
    }
    TrackedMatrix t = TrackedMatrix::stack(blocks);
    size_t rank_in = t.rows();
    std::vector<size_t> position(n);
    for (size_t i = 0; i < n; i++) {
        position[i] = i;
    }
    for (auto [ga, gb] : legs) {
        size_t pa = position[ga], pb = position[gb];
        t.trace(pa, pb);
        size_t lo = std::min(pa, pb), hi = std::max(pa, pb);
        for (size_t &p : position) {
            if (p > hi) {
                p -= 2;
            } else if (p > lo) {
                p -= 1;
            }
        }
    }
    TraceResult out = finish(t, rank_in);
    check_rank(n, rank_in, out.matrix.rank(), legs.size());
    return out;
}

}  // namespace qlego
