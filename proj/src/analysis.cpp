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

#include "qlego/analysis.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace qlego {

namespace {

size_t subgroup_rank_in_matrix(const Matrix &m, size_t n, const std::vector<size_t> &legs) {
    std::vector<bool> inside(n, false);
    for (size_t leg : legs) {
        if (leg >= n) {
            throw UsageError("leg index out of range");
        }
        inside[leg] = true;
    }
    std::vector<size_t> outside_legs, inside_legs;
    for (size_t i = 0; i < n; i++) {
        (inside[i] ? inside_legs : outside_legs).push_back(i);
    }
    std::vector<size_t> order = leg_columns(n, outside_legs);
    size_t outside_count = order.size();
    std::vector<size_t> in_cols = leg_columns(n, inside_legs);
    order.insert(order.end(), in_cols.begin(), in_cols.end());
    Matrix work = m;
    std::vector<size_t> pivots = eliminate(work, order);
    size_t count = 0;
    for (size_t p : pivots) {
        size_t leg = p < n ? p : p - n;
        if (inside[leg]) {
            count++;
        }
    }
    (void)outside_count;
    return count;
}

Matrix group_matrix(const CodeReport &report, bool with_gauge) {
    Matrix m = report.stabilizers.matrix();
    if (with_gauge) {
        for (const PauliVector &g : report.gauge) {
            m.append_row(g.xz());
        }
    }
    return m;
}

}  // namespace

size_t subgroup_rank_within(const CheckMatrix &state, const std::vector<size_t> &legs) {
    return subgroup_rank_in_matrix(state.matrix(), state.n_legs(), legs);
}

bool is_maximally_mixed(const CheckMatrix &state, const std::vector<size_t> &legs) {
    return subgroup_rank_within(state, legs) == 0;
}

bool is_correctable_erasure(const CodeReport &report, const std::vector<size_t> &legs) {
    size_t n = report.n;
    std::vector<size_t> sorted = legs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (size_t leg : sorted) {
        if (leg >= n) {
            throw UsageError("erasure leg out of range");
        }
    }
    Matrix restricted = report.stabilizers.matrix().select_columns(leg_columns(n, sorted));
    size_t centralizer_dim = 2 * sorted.size() - rank(restricted);
    size_t gauge_dim = subgroup_rank_in_matrix(group_matrix(report, true), n, sorted);
    return centralizer_dim == gauge_dim;
}

namespace {

uint64_t span_size(int d, size_t gens, uint64_t budget) {
    uint64_t size = 1;
    for (size_t i = 0; i < gens; i++) {
        if (size > budget / static_cast<uint64_t>(d)) {
            return budget + 1;
        }
        size *= static_cast<uint64_t>(d);
    }
    return size;
}

struct Best {
    size_t weight = SIZE_MAX;
    std::optional<PauliVector> witness;
    std::string text;

    void offer(const PauliVector &p) {
        size_t w = p.weight();
        if (w > weight) {
            return;
        }
        std::string s = p.str();
        if (w < weight || s < text) {
            weight = w;
            witness = p;
            text = std::move(s);
        }
    }
};

DistanceReport exhaustive(const CodeReport &report, const std::vector<PauliVector> &group,
                          const std::vector<PauliVector> &logicals) {
    const Modulus &mod = report.mod();
    size_t n = report.n;
    std::vector<PauliVector> gens = group;
    gens.insert(gens.end(), logicals.begin(), logicals.end());
    size_t g = gens.size();
    size_t first_logical = group.size();
    Best best;
    if (logicals.empty()) {
        return DistanceReport{};
    }
    if (mod.d() == 2 && n <= 64) {
        std::vector<uint64_t> gx(g, 0), gz(g, 0);
        for (size_t i = 0; i < g; i++) {
            for (size_t q = 0; q < n; q++) {
                gx[i] |= static_cast<uint64_t>(gens[i].x(q)) << q;
                gz[i] |= static_cast<uint64_t>(gens[i].z(q)) << q;
            }
        }
        uint64_t x = 0, z = 0;
        uint64_t logical_bits = 0;
        uint64_t total = uint64_t{1} << g;
        size_t best_weight = SIZE_MAX;
        std::vector<std::pair<uint64_t, uint64_t>> ties;
        for (uint64_t t = 1; t < total; t++) {
            size_t i = static_cast<size_t>(std::countr_zero(t));
            x ^= gx[i];
            z ^= gz[i];
            if (i >= first_logical) {
                logical_bits ^= uint64_t{1} << (i - first_logical);
            }
            if (logical_bits == 0) {
                continue;
            }
            size_t w = static_cast<size_t>(std::popcount(x | z));
            if (w < best_weight) {
                best_weight = w;
                ties.clear();
            }
            if (w == best_weight) {
                ties.emplace_back(x, z);
            }
        }
        for (auto [tx, tz] : ties) {
            PauliVector p(mod, n);
            for (size_t q = 0; q < n; q++) {
                p.set(q, (tx >> q) & 1, (tz >> q) & 1);
            }
            best.offer(p);
        }
    } else {
        int d = mod.d();
        Vec cur(2 * n, 0);
        std::vector<int> digit(g, 0);
        size_t nonzero_logical = 0;
        uint64_t total = span_size(d, g, UINT64_MAX - 1);
        for (uint64_t t = 1; t < total; t++) {
            size_t i = 0;
            uint64_t s = t;
            while (s % static_cast<uint64_t>(d) == 0) {
                s /= static_cast<uint64_t>(d);
                i++;
            }
            const Vec &add = gens[i].xz();
            for (size_t c = 0; c < cur.size(); c++) {
                if (add[c]) {
                    cur[c] = mod.add(cur[c], add[c]);
                }
            }
            int before = digit[i];
            digit[i] = mod.add(digit[i], 1);
            if (i >= first_logical) {
                if (before == 0) {
                    nonzero_logical++;
                } else if (digit[i] == 0) {
                    nonzero_logical--;
                }
            }
            if (nonzero_logical == 0) {
                continue;
            }
            size_t w = 0;
            for (size_t q = 0; q < n; q++) {
                if (cur[q] || cur[n + q]) {
                    w++;
                }
            }
            if (w <= best.weight) {
                best.offer(PauliVector(mod, cur));
            }
        }
    }
    DistanceReport out;
    out.method = DistanceMethod::Exhaustive;
    if (best.witness) {
        out.distance = best.weight;
        out.lower_bound = best.weight;
        out.witness = best.witness;
    }
    return out;
}

DistanceReport weight_capped(const CodeReport &report, const std::vector<PauliVector> &checks,
                             const std::vector<PauliVector> &logicals, size_t cap) {
    const Modulus &mod = report.mod();
    size_t n = report.n;
    int d = mod.d();
    size_t nc = checks.size(), nl = logicals.size();
    size_t width = nc + nl;
    // contribution[q][v] lists the products of local Pauli v on leg q with every check and logical.
    std::vector<std::vector<Vec>> contribution(n, std::vector<Vec>(d * d, Vec(width, 0)));
    for (size_t q = 0; q < n; q++) {
        for (int v = 1; v < d * d; v++) {
            PauliVector p(mod, n);
            p.set(q, v / d, v % d);
            for (size_t j = 0; j < nc; j++) {
                contribution[q][v][j] = symplectic_product(p, checks[j]);
            }
            for (size_t j = 0; j < nl; j++) {
                contribution[q][v][nc + j] = symplectic_product(p, logicals[j]);
            }
        }
    }
    DistanceReport out;
    out.method = DistanceMethod::WeightCapped;
    for (size_t w = 1; w <= std::min(cap, n); w++) {
        Best best;
        std::vector<size_t> legs(w);
        std::vector<int> local(w);
        std::vector<Vec> acc(w + 1, Vec(width, 0));
        // Depth-first over increasing leg tuples and local Paulis.
        auto recurse = [&](auto &&self, size_t depth, size_t start) -> void {
            if (depth == w) {
                const Vec &a = acc[w];
                for (size_t j = 0; j < nc; j++) {
                    if (a[j]) {
                        return;
                    }
                }
                bool nontrivial = false;
                for (size_t j = nc; j < width; j++) {
                    if (a[j]) {
                        nontrivial = true;
                        break;
                    }
                }
                if (!nontrivial) {
                    return;
                }
                PauliVector p(mod, n);
                for (size_t i = 0; i < w; i++) {
                    p.set(legs[i], local[i] / d, local[i] % d);
                }
                best.offer(p);
                return;
            }
            for (size_t q = start; q + (w - depth) <= n; q++) {
                legs[depth] = q;
                for (int v = 1; v < d * d; v++) {
                    local[depth] = v;
                    const Vec &c = contribution[q][v];
                    for (size_t j = 0; j < width; j++) {
                        acc[depth + 1][j] = mod.add(acc[depth][j], c[j]);
                    }
                    self(self, depth + 1, q + 1);
                }
            }
        };
        recurse(recurse, 0, 0);
        if (best.witness) {
            out.distance = w;
            out.lower_bound = w;
            out.witness = best.witness;
            return out;
        }
    }
    out.lower_bound = std::min(cap, n) + 1;
    return out;
}

}  // namespace

DistanceReport distance(const CodeReport &report, const DistanceOptions &options) {
    std::vector<PauliVector> logicals;
    for (const LogicalPair &pair : report.logical_pairs) {
        logicals.push_back(pair.x_physical);
        logicals.push_back(pair.z_physical);
    }
    std::vector<PauliVector> group = report.stabilizers.rows();
    if (!options.bare) {
        group.insert(group.end(), report.gauge.begin(), report.gauge.end());
    }
    if (options.weight_cap) {
        std::vector<PauliVector> checks = report.stabilizers.rows();
        if (options.bare) {
            checks.insert(checks.end(), report.gauge.begin(), report.gauge.end());
        }
        return weight_capped(report, checks, logicals, *options.weight_cap);
    }
    uint64_t size = span_size(report.mod().d(), group.size() + logicals.size(), options.budget);
    if (size > options.budget) {
        throw BudgetExceeded("distance enumeration needs " + std::to_string(group.size() + logicals.size()) +
                             " generators, over the budget of " + std::to_string(options.budget) + " elements");
    }
    return exhaustive(report, group, logicals);
}

}  // namespace qlego
