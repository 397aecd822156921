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

#include "qlego/duality.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qlego {

namespace {

Matrix stack_rows(const Modulus &mod, size_t width, const std::vector<PauliVector> &rows) {
    Matrix m(mod, 0, width);
    for (const PauliVector &p : rows) {
        m.append_row(p.xz());
    }
    return m;
}

/// Action on a logical leg of a state row carrying (x, z) there: X^x Z^-z.
PauliVector conj_action(const PauliVector &p) {
    PauliVector out(p.mod(), p.n());
    for (size_t i = 0; i < p.n(); i++) {
        out.set(i, p.x(i), p.mod().neg(p.z(i)));
    }
    return out;
}

/// Enumerates all Paulis of the given weight in lexicographic order of their text.
void for_each_of_weight(const Modulus &mod, size_t n, size_t w, const std::function<void(const PauliVector &)> &f) {
    std::vector<size_t> legs(w);
    for (size_t i = 0; i < w; i++) {
        legs[i] = i;
    }
    int d = mod.d();
    int local = d * d - 1;
    while (true) {
        std::vector<int> digit(w, 0);
        while (true) {
            PauliVector p(mod, n);
            for (size_t i = 0; i < w; i++) {
                int v = digit[i] + 1;
                p.set(legs[i], v / d, v % d);
            }
            f(p);
            size_t i = w;
            while (i > 0 && digit[i - 1] == local - 1) {
                digit[i - 1] = 0;
                i--;
            }
            if (i == 0) {
                break;
            }
            digit[i - 1]++;
        }
        size_t i = w;
        while (i > 0 && legs[i - 1] == n - w + i - 1) {
            i--;
        }
        if (i == 0) {
            break;
        }
        legs[i - 1]++;
        for (size_t j = i; j < w; j++) {
            legs[j] = legs[j - 1] + 1;
        }
    }
}

std::vector<PauliVector> low_weight_basis(const Modulus &mod, size_t n, const std::vector<PauliVector> &gens,
                                          size_t max_weight) {
    if (gens.empty()) {
        return {};
    }
    Matrix group = stack_rows(mod, 2 * n, gens);
    size_t target = rank(group);
    std::vector<PauliVector> candidates;
    for (size_t w = 1; w <= std::min(max_weight, n); w++) {
        std::vector<PauliVector> layer;
        for_each_of_weight(mod, n, w, [&](const PauliVector &p) {
            if (solve(group, p.xz())) {
                layer.push_back(p);
            }
        });
        std::sort(layer.begin(), layer.end(), [](const PauliVector &a, const PauliVector &b) { return a.str() < b.str(); });
        candidates.insert(candidates.end(), layer.begin(), layer.end());
    }
    RrefResult canonical = rref(group);
    for (size_t r = 0; r < canonical.rank; r++) {
        candidates.emplace_back(mod, canonical.matrix.row_vec(r));
    }
    std::vector<PauliVector> out;
    Matrix chosen(mod, 0, 2 * n);
    for (const PauliVector &c : candidates) {
        if (out.size() == target) {
            break;
        }
        Matrix trial = chosen;
        trial.append_row(c.xz());
        if (rank(trial) == out.size() + 1) {
            chosen = trial;
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace

PauliVector reduce_modulo(const PauliVector &p, const CheckMatrix &m) {
    const Modulus &mod = p.mod();
    Vec v = p.xz();
    RrefResult r = rref(m.matrix());
    for (size_t i = 0; i < r.rank; i++) {
        int c = v[r.pivots[i]];
        if (c == 0) {
            continue;
        }
        for (size_t col = 0; col < v.size(); col++) {
            v[col] = mod.sub(v[col], mod.mul(c, r.matrix.at(i, col)));
        }
    }
    return PauliVector(mod, std::move(v));
}

AugmentedCode augment(const CheckMatrix &code, const std::vector<PauliVector> &logical_x,
                      const std::vector<PauliVector> &logical_z) {
    const Modulus &mod = code.mod();
    size_t n = code.n_legs();
    size_t k = logical_x.size();
    if (logical_z.size() != k) {
        throw UsageError("logical X and Z lists differ in length");
    }
    for (size_t i = 0; i < k; i++) {
        for (const PauliVector *p : {&logical_x[i], &logical_z[i]}) {
            if (p->n() != n || !(p->mod() == mod)) {
                throw UsageError("logical operator has the wrong size");
            }
            if (!code.commutes_with(*p)) {
                throw UsageError("logical operator " + p->str() + " does not commute with the stabilizers");
            }
        }
        for (size_t j = 0; j < k; j++) {
            int xz = symplectic_product(logical_x[i], logical_z[j]);
            if (symplectic_product(logical_x[i], logical_x[j]) != 0 ||
                symplectic_product(logical_z[i], logical_z[j]) != 0 || xz != (i == j ? 1 : 0)) {
                throw UsageError("logical operators are not conjugate pairs");
            }
        }
    }
    if (code.rank() + k != n) {
        throw UsageError("stabilizer rank plus logical count must equal the number of physical legs");
    }
    size_t m = n + k;
    Matrix rows(mod, 0, 2 * m);
    auto pad = [&](const PauliVector &p) {
        Vec v(2 * m, 0);
        for (size_t i = 0; i < n; i++) {
            v[i] = p.x(i);
            v[m + i] = p.z(i);
        }
        return v;
    };
    for (const PauliVector &s : code.rows()) {
        rows.append_row(pad(s));
    }
    for (size_t i = 0; i < k; i++) {
        Vec vx = pad(logical_x[i]);
        vx[n + i] = 1;
        rows.append_row(vx);
        Vec vz = pad(logical_z[i]);
        vz[m + n + i] = mod.neg(1);
        rows.append_row(vz);
    }
    AugmentedCode out{CheckMatrix(rows), {}};
    for (size_t i = 0; i < k; i++) {
        out.logical_columns.push_back(n + i);
    }
    return out;
}

CodeReport extract(const CheckMatrix &state, const std::vector<bool> &logical) {
    const Modulus &mod = state.mod();
    size_t total = state.n_legs();
    if (logical.size() != total) {
        throw UsageError("role mask does not match the number of legs");
    }
    if (state.rank() != total) {
        throw UsageError("extraction needs a full-rank state");
    }
    std::vector<size_t> phys, logi;
    for (size_t i = 0; i < total; i++) {
        (logical[i] ? logi : phys).push_back(i);
    }
    size_t n = phys.size(), k = logi.size();
    std::vector<size_t> phys_cols = leg_columns(total, phys);
    std::vector<size_t> logi_cols = leg_columns(total, logi);
    // Logical columns ordered leg by leg (x then z) so pivots align with individual legs.
    std::vector<size_t> logi_interleaved;
    for (size_t leg : logi) {
        logi_interleaved.push_back(leg);
        logi_interleaved.push_back(total + leg);
    }

    CodeReport report;
    report.n = n;
    report.apparent_k = k;

    Matrix work = state.matrix();
    std::vector<size_t> order = logi_interleaved;
    order.insert(order.end(), phys_cols.begin(), phys_cols.end());
    std::vector<size_t> pivots = eliminate(work, order);
    size_t first_physical = 0;
    while (first_physical < pivots.size() && logical[pivots[first_physical] % total]) {
        first_physical++;
    }
    std::vector<size_t> stab_rows, logical_rows;
    for (size_t i = 0; i < pivots.size(); i++) {
        (i < first_physical ? logical_rows : stab_rows).push_back(i);
    }
    report.stabilizers = CheckMatrix::trusted(work.select_rows(stab_rows).select_columns(phys_cols));

    Matrix work2 = state.matrix();
    std::vector<size_t> order2 = phys_cols;
    order2.insert(order2.end(), logi_interleaved.begin(), logi_interleaved.end());
    std::vector<size_t> pivots2 = eliminate(work2, order2);
    std::vector<size_t> constraint_rows;
    for (size_t i = 0; i < pivots2.size(); i++) {
        if (logical[pivots2[i] % total]) {
            constraint_rows.push_back(i);
        }
    }
    Matrix constraint_parts = work2.select_rows(constraint_rows).select_columns(logi_cols);
    std::vector<PauliVector> constraint_actions;
    for (size_t r = 0; r < constraint_parts.rows(); r++) {
        constraint_actions.push_back(conj_action(PauliVector(mod, constraint_parts.row_vec(r))));
    }
    report.constraints = CheckMatrix::trusted(stack_rows(mod, 2 * k, constraint_actions));

    size_t r_p = report.stabilizers.rank();
    size_t r_l = report.constraints.rank();
    report.true_k = n - r_p;
    if (n + r_l != k + r_p) {
        throw std::logic_error("rank bookkeeping mismatch: n - r_P = " + std::to_string(n - r_p) +
                               " but apparent_k - r_L = " + std::to_string(static_cast<long>(k) - static_cast<long>(r_l)));
    }

    // Symplectic Gram-Schmidt over the rows with logical pivots, in elimination order.
    std::vector<Vec> pool;
    for (size_t r : logical_rows) {
        pool.push_back(work.row_vec(r));
    }
    auto phys_product = [&](const Vec &a, const Vec &b) {
        long long acc = 0;
        for (size_t leg : phys) {
            acc += static_cast<long long>(a[leg]) * b[total + leg] - static_cast<long long>(a[total + leg]) * b[leg];
        }
        return mod.reduce(acc);
    };
    auto axpy = [&](Vec &v, int f, const Vec &u) {
        if (f == 0) {
            return;
        }
        for (size_t c = 0; c < v.size(); c++) {
            v[c] = mod.add(v[c], mod.mul(f, u[c]));
        }
    };
    auto split = [&](const Vec &v, PauliVector &action, PauliVector &physical) {
        PauliVector full(mod, v);
        physical = reduce_modulo(full.restrict_to(phys), report.stabilizers);
        action = conj_action(full.restrict_to(logi));
    };
    while (!pool.empty()) {
        Vec u = pool.front();
        pool.erase(pool.begin());
        size_t partner = pool.size();
        for (size_t j = 0; j < pool.size(); j++) {
            if (phys_product(u, pool[j]) != 0) {
                partner = j;
                break;
            }
        }
        if (partner == pool.size()) {
            continue;
        }
        Vec w = pool[partner];
        pool.erase(pool.begin() + partner);
        int scale = mod.inv(phys_product(u, w));
        for (int &v : w) {
            v = mod.mul(v, scale);
        }
        for (Vec &v : pool) {
            int vw = phys_product(v, w);
            int vu = phys_product(v, u);
            axpy(v, mod.neg(vw), u);
            axpy(v, vu, w);
        }
        LogicalPair pair{PauliVector(mod, n), PauliVector(mod, n), PauliVector(mod, n), PauliVector(mod, n)};
        split(u, pair.x_action, pair.x_physical);
        split(w, pair.z_action, pair.z_physical);
        report.logical_pairs.push_back(std::move(pair));
    }
    if (report.logical_pairs.size() != report.true_k) {
        throw std::logic_error("found " + std::to_string(report.logical_pairs.size()) + " logical pairs, expected " +
                               std::to_string(report.true_k));
    }
    CssInfo info = report.stabilizers.css_info();
    report.css = info.css;
    report.self_dual = info.self_dual;
    return report;
}

CodeReport extract(const BuiltState &state, const TensorNetwork &net) {
    std::vector<bool> logical;
    for (const LegRef &leg : state.legs) {
        logical.push_back(net.role_of(leg) == Role::Logical);
    }
    CodeReport report = extract(state.matrix, logical);
    for (size_t i = 0; i < state.legs.size(); i++) {
        (logical[i] ? report.logical_legs : report.physical_legs).push_back(state.legs[i]);
    }
    return report;
}

CodeReport report_from_code(const CheckMatrix &code, const std::vector<PauliVector> &logical_x,
                            const std::vector<PauliVector> &logical_z) {
    AugmentedCode aug = augment(code, logical_x, logical_z);
    std::vector<bool> logical(aug.state.n_legs(), false);
    for (size_t c : aug.logical_columns) {
        logical[c] = true;
    }
    return extract(aug.state, logical);
}

CodeReport gauge_fix(const CodeReport &report, const std::vector<size_t> &keep) {
    std::vector<bool> kept(report.logical_pairs.size(), false);
    for (size_t i : keep) {
        if (i >= kept.size()) {
            throw UsageError("gauge_fix: pair index out of range");
        }
        kept[i] = true;
    }
    CodeReport out = report;
    out.logical_pairs.clear();
    for (size_t i = 0; i < kept.size(); i++) {
        if (kept[i]) {
            out.logical_pairs.push_back(report.logical_pairs[i]);
        } else {
            out.gauge.push_back(report.logical_pairs[i].x_physical);
            out.gauge.push_back(report.logical_pairs[i].z_physical);
        }
    }
    out.true_k = out.logical_pairs.size();
    if (!out.gauge.empty()) {
        std::vector<PauliVector> group = out.stabilizers.rows();
        group.insert(group.end(), out.gauge.begin(), out.gauge.end());
        out.gauge_generators = low_weight_basis(out.mod(), out.n, group, 2);
    } else {
        out.gauge_generators.clear();
    }
    return out;
}

std::vector<int> logical_coordinates(const CodeReport &report, const PauliVector &p) {
    const Modulus &mod = report.mod();
    std::vector<int> out;
    for (const LogicalPair &pair : report.logical_pairs) {
        out.push_back(symplectic_product(p, pair.z_physical));
        out.push_back(mod.neg(symplectic_product(p, pair.x_physical)));
    }
    return out;
}

CodeReport low_weight_pairs(const CodeReport &report, size_t max_weight) {
    const Modulus &mod = report.mod();
    size_t n = report.n;
    std::vector<PauliVector> group = report.stabilizers.rows();
    group.insert(group.end(), report.gauge.begin(), report.gauge.end());
    CheckMatrix gauge_group = CheckMatrix::trusted(stack_rows(mod, 2 * n, group));

    std::vector<PauliVector> candidates;
    for (size_t w = 1; w <= std::min(max_weight, n); w++) {
        std::vector<PauliVector> layer;
        for_each_of_weight(mod, n, w, [&](const PauliVector &p) {
            if (report.stabilizers.commutes_with(p) && !reduce_modulo(p, gauge_group).is_identity()) {
                layer.push_back(p);
            }
        });
        std::sort(layer.begin(), layer.end(), [](const PauliVector &a, const PauliVector &b) { return a.str() < b.str(); });
        candidates.insert(candidates.end(), layer.begin(), layer.end());
    }
    for (const LogicalPair &pair : report.logical_pairs) {
        candidates.push_back(pair.x_physical);
        candidates.push_back(pair.z_physical);
    }

    auto action_of = [&](const PauliVector &p) {
        std::vector<int> coords = logical_coordinates(report, p);
        PauliVector act(mod, report.logical_pairs.empty() ? 0 : report.logical_pairs[0].x_action.n());
        for (size_t i = 0; i < report.logical_pairs.size(); i++) {
            act = act * report.logical_pairs[i].x_action.pow(coords[2 * i]);
            act = act * report.logical_pairs[i].z_action.pow(coords[2 * i + 1]);
        }
        return act;
    };

    std::vector<std::pair<PauliVector, PauliVector>> chosen;
    auto orthogonalize = [&](PauliVector v) {
        for (const auto &[u, w] : chosen) {
            int vw = symplectic_product(v, w);
            int vu = symplectic_product(v, u);
            v = v * u.pow(mod.neg(vw)) * w.pow(vu);
        }
        return v;
    };
    for (size_t i = 0; i < candidates.size() && chosen.size() < report.logical_pairs.size(); i++) {
        PauliVector u = orthogonalize(candidates[i]);
        if (reduce_modulo(u, gauge_group).is_identity()) {
            continue;
        }
        for (size_t j = i + 1; j < candidates.size(); j++) {
            PauliVector w = orthogonalize(candidates[j]);
            int uw = symplectic_product(u, w);
            if (uw != 0) {
                chosen.emplace_back(u, w.pow(mod.inv(uw)));
                break;
            }
        }
    }
    if (chosen.size() != report.logical_pairs.size()) {
        throw std::logic_error("low-weight pair search lost logical dimensions");
    }
    CodeReport out = report;
    out.logical_pairs.clear();
    for (const auto &[u, w] : chosen) {
        out.logical_pairs.push_back({action_of(u), reduce_modulo(u, report.stabilizers), action_of(w),
                                     reduce_modulo(w, report.stabilizers)});
    }
    return out;
}

}  // namespace qlego
