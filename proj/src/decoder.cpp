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

#include "qlego/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "qlego/analysis.hpp"

namespace qlego {

NoiseModel::NoiseModel(Modulus mod, std::vector<std::vector<double>> probabilities)
    : mod_(std::move(mod)), probabilities_(std::move(probabilities)) {
    size_t local = static_cast<size_t>(mod_.d() * mod_.d());
    for (const auto &leg : probabilities_) {
        if (leg.size() != local) {
            throw UsageError("noise model needs d*d probabilities per leg");
        }
        double total = 0;
        for (double v : leg) {
            if (v < 0) {
                throw UsageError("noise probabilities must be non-negative");
            }
            total += v;
        }
        if (std::abs(total - 1.0) > 1e-9) {
            throw UsageError("noise probabilities on a leg must sum to 1");
        }
    }
}

NoiseModel NoiseModel::depolarizing(const Modulus &mod, size_t n, double p) {
    if (p < 0 || p > 1) {
        throw UsageError("depolarizing probability must lie in [0, 1]");
    }
    size_t local = static_cast<size_t>(mod.d() * mod.d());
    std::vector<double> leg(local, p / static_cast<double>(local - 1));
    leg[0] = 1 - p;
    return NoiseModel(mod, std::vector<std::vector<double>>(n, leg));
}

long double NoiseModel::log_probability(const PauliVector &p) const {
    long double out = 0;
    for (size_t i = 0; i < p.n(); i++) {
        out += std::log(static_cast<long double>(probability(i, p.x(i), p.z(i))));
    }
    return out;
}

long double NoiseModel::probability(const PauliVector &p) const {
    long double out = 1;
    for (size_t i = 0; i < p.n(); i++) {
        out *= probability(i, p.x(i), p.z(i));
    }
    return out;
}

uint8_t tl_index(int x, int z) {
    static constexpr uint8_t table[2][2] = {{0, 3}, {1, 2}};
    return table[x & 1][z & 1];
}

std::string TlTensor::to_text() const {
    std::ostringstream out;
    out << "# T(" << label << ") n=" << n << " entries=" << entries.size() << "\n";
    for (const auto &e : entries) {
        for (size_t i = 0; i < e.size(); i++) {
            out << (i ? " " : "") << static_cast<int>(e[i]);
        }
        out << "\n";
    }
    return out.str();
}

namespace {

uint64_t checked_power(int d, size_t e, uint64_t budget, const std::string &what) {
    uint64_t v = 1;
    for (size_t i = 0; i < e; i++) {
        if (v > budget / static_cast<uint64_t>(d)) {
            throw BudgetExceeded(what + " needs more than " + std::to_string(budget) + " group elements");
        }
        v *= static_cast<uint64_t>(d);
    }
    return v;
}

/// Calls f with every element of the span of `gens` shifted by `base`, in modular Gray-code order.
template <typename F>
void for_each_in_coset(const PauliVector &base, const std::vector<PauliVector> &gens, uint64_t count, F &&f) {
    const Modulus &mod = base.mod();
    uint64_t d = static_cast<uint64_t>(mod.d());
    PauliVector cur = base;
    f(cur);
    for (uint64_t t = 1; t < count; t++) {
        size_t i = 0;
        uint64_t s = t;
        while (s % d == 0) {
            s /= d;
            i++;
        }
        cur = cur * gens[i];
        f(cur);
    }
}

PauliVector logical_from_action(const CodeReport &report, const PauliVector &action) {
    const Modulus &mod = report.mod();
    size_t kk = report.logical_legs.empty() ? action.n() : report.logical_legs.size();
    if (action.n() != kk) {
        throw UsageError("logical operator must act on the " + std::to_string(kk) + " logical legs");
    }
    Matrix basis(mod, 0, 2 * kk);
    for (const LogicalPair &pair : report.logical_pairs) {
        basis.append_row(pair.x_action.xz());
        basis.append_row(pair.z_action.xz());
    }
    for (size_t r = 0; r < report.constraints.rank(); r++) {
        basis.append_row(report.constraints.matrix().row(r));
    }
    std::optional<Vec> c = solve(basis, action.xz());
    if (!c) {
        throw UsageError("operator " + action.str() + " is not a logical action of this code");
    }
    PauliVector out(mod, report.n);
    for (size_t i = 0; i < report.logical_pairs.size(); i++) {
        out = out * report.logical_pairs[i].x_physical.pow((*c)[2 * i]);
        out = out * report.logical_pairs[i].z_physical.pow((*c)[2 * i + 1]);
    }
    return out;
}

}  // namespace

TlTensor export_tl(const CodeReport &report, const PauliVector &logical, uint64_t budget) {
    if (report.mod().d() != 2) {
        throw UsageError("T(L) export is defined for qubits only");
    }
    PauliVector rep = logical_from_action(report, logical);
    std::vector<PauliVector> gens = report.stabilizers.rows();
    uint64_t count = checked_power(2, gens.size(), budget, "T(L) export");
    TlTensor out{logical.str(), report.n, {}};
    out.entries.reserve(count);
    for_each_in_coset(rep, gens, count, [&](const PauliVector &p) {
        std::vector<uint8_t> e(p.n());
        for (size_t i = 0; i < p.n(); i++) {
            e[i] = tl_index(p.x(i), p.z(i));
        }
        out.entries.push_back(std::move(e));
    });
    std::sort(out.entries.begin(), out.entries.end());
    return out;
}

Vec syndrome_of(const CodeReport &report, const PauliVector &error) {
    Vec s;
    for (size_t r = 0; r < report.stabilizers.rank(); r++) {
        s.push_back(symplectic_product(error, report.stabilizers.row(r)));
    }
    return s;
}

namespace {
/// Relative margin a later class must exceed to displace the current best, so near ties go to the lowest label.
constexpr long double kTieMargin = 1e-12L;
}  // namespace

DecodeOutcome ml_decode(const CodeReport &report, const NoiseModel &noise, const Vec &syndrome, uint64_t budget,
                        bool log_domain) {
    const Modulus &mod = report.mod();
    size_t n = report.n;
    size_t r = report.stabilizers.rank();
    if (syndrome.size() != r) {
        throw UsageError("syndrome length " + std::to_string(syndrome.size()) + " does not match " +
                         std::to_string(r) + " stabilizer generators");
    }
    if (noise.n() != n) {
        throw UsageError("noise model covers a different number of legs");
    }
    // Solve e . A = syndrome where column j of A evaluates the symplectic product with generator j.
    Matrix a(mod, 2 * n, r);
    for (size_t j = 0; j < r; j++) {
        PauliVector s = report.stabilizers.row(j);
        for (size_t i = 0; i < n; i++) {
            a.at(i, j) = s.z(i);
            a.at(n + i, j) = mod.neg(s.x(i));
        }
    }
    Vec target(syndrome.size());
    for (size_t j = 0; j < syndrome.size(); j++) {
        target[j] = mod.reduce(syndrome[j]);
    }
    std::optional<Vec> e0 = solve(a, target);
    if (!e0) {
        throw std::logic_error("no pure error for syndrome");
    }
    PauliVector pure(mod, *e0);

    std::vector<PauliVector> group = report.stabilizers.rows();
    group.insert(group.end(), report.gauge.begin(), report.gauge.end());
    size_t k = report.logical_pairs.size();
    uint64_t per_coset = checked_power(mod.d(), group.size(), budget, "decoding");
    uint64_t cosets = checked_power(mod.d(), 2 * k, budget, "decoding");
    if (per_coset > budget / cosets) {
        throw BudgetExceeded("decoding needs more than " + std::to_string(budget) + " group elements");
    }

    DecodeOutcome out{syndrome, pure, Vec(2 * k, 0), std::vector<long double>(cosets, 0), 0, pure, {}};
    uint64_t best = 0;
    for (uint64_t label = 0; label < cosets; label++) {
        Vec digits(2 * k);
        uint64_t v = label;
        for (size_t m = 2 * k; m > 0; m--) {
            digits[m - 1] = static_cast<int>(v % static_cast<uint64_t>(mod.d()));
            v /= static_cast<uint64_t>(mod.d());
        }
        PauliVector base = pure;
        for (size_t i = 0; i < k; i++) {
            base = base * report.logical_pairs[i].x_physical.pow(digits[2 * i]);
            base = base * report.logical_pairs[i].z_physical.pow(digits[2 * i + 1]);
        }
        if (log_domain) {
            long double acc = -std::numeric_limits<long double>::infinity();
            for_each_in_coset(base, group, per_coset, [&](const PauliVector &p) {
                long double term = noise.log_probability(p);
                long double hi = std::max(acc, term);
                if (hi != -std::numeric_limits<long double>::infinity()) {
                    acc = hi + std::log1p(std::exp(std::min(acc, term) - hi));
                }
            });
            out.coset_log_probabilities.push_back(acc);
            out.coset_probabilities[label] = std::exp(acc);
            out.sector_probability += out.coset_probabilities[label];
            if (acc > out.coset_log_probabilities[best] + kTieMargin) {
                best = label;
            }
            continue;
        }
        long double total = 0;
        for_each_in_coset(base, group, per_coset, [&](const PauliVector &p) { total += noise.probability(p); });
        out.coset_probabilities[label] = total;
        out.sector_probability += total;
        if (total > out.coset_probabilities[best] * (1 + kTieMargin)) {
            best = label;
        }
    }
    uint64_t v = best;
    for (size_t m = 2 * k; m > 0; m--) {
        out.chosen[m - 1] = static_cast<int>(v % static_cast<uint64_t>(mod.d()));
        v /= static_cast<uint64_t>(mod.d());
    }
    PauliVector correction = pure;
    for (size_t i = 0; i < k; i++) {
        correction = correction * report.logical_pairs[i].x_physical.pow(out.chosen[2 * i]);
        correction = correction * report.logical_pairs[i].z_physical.pow(out.chosen[2 * i + 1]);
    }
    out.correction = correction;
    return out;
}

bool correction_succeeds(const CodeReport &report, const PauliVector &error, const PauliVector &correction) {
    PauliVector residual = error * correction.pow(error.mod().neg(1));
    if (!report.stabilizers.commutes_with(residual)) {
        return false;
    }
    for (int c : logical_coordinates(report, residual)) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials) {
    if (trials == 0) {
        return {0.0, 1.0};
    }
    const double z = 1.959963984540054;
    double nn = static_cast<double>(trials);
    double phat = static_cast<double>(successes) / nn;
    double denom = 1 + z * z / nn;
    double center = (phat + z * z / (2 * nn)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / nn + z * z / (4 * nn * nn)) / denom;
    double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
    double hi = successes == trials ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

std::string MonteCarloResult::csv_header() {
    return "p,trials,failures,rate,ci_low,ci_high";
}

std::string MonteCarloResult::csv_row() const {
    std::ostringstream out;
    out.precision(10);
    out << p << "," << trials << "," << failures << "," << rate << "," << ci_low << "," << ci_high;
    return out.str();
}

MonteCarloResult monte_carlo(const CodeReport &report, const NoiseModel &noise, uint64_t trials, uint64_t seed,
                             double p_label, bool log_domain) {
    if (trials < 1) {
        throw UsageError("trials must be at least 1");
    }
    const Modulus &mod = report.mod();
    int local = mod.d() * mod.d();
    std::vector<std::vector<double>> cumulative(noise.n(), std::vector<double>(local));
    for (size_t leg = 0; leg < noise.n(); leg++) {
        double acc = 0;
        for (int v = 0; v < local; v++) {
            acc += noise.probability(leg, v / mod.d(), v % mod.d());
            cumulative[leg][v] = acc;
        }
    }
    auto run_range = [&](uint64_t begin, uint64_t stop) {
        std::map<Vec, PauliVector> cache;
        uint64_t failures = 0;
        for (uint64_t t = begin; t < stop; t++) {
            std::mt19937_64 rng(splitmix64(seed + t));
            PauliVector error(mod, report.n);
            for (size_t leg = 0; leg < report.n; leg++) {
                // 53 random bits mapped to [0, 1).
                double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                int v = 0;
                while (v + 1 < local && u >= cumulative[leg][v]) {
                    v++;
                }
                error.set(leg, v / mod.d(), v % mod.d());
            }
            Vec syn = syndrome_of(report, error);
            auto it = cache.find(syn);
            if (it == cache.end()) {
                it = cache.emplace(syn, ml_decode(report, noise, syn, uint64_t{1} << 24, log_domain).correction).first;
            }
            if (!correction_succeeds(report, error, it->second)) {
                failures++;
            }
        }
        return failures;
    };
    // Fail fast on oversized problems before spawning workers.
    ml_decode(report, noise, Vec(report.stabilizers.rank(), 0));

    uint64_t workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<uint64_t>({workers, 16, (trials + 255) / 256});
    std::vector<std::future<uint64_t>> parts;
    for (uint64_t w = 0; w < workers; w++) {
        uint64_t begin = trials * w / workers;
        uint64_t stop = trials * (w + 1) / workers;
        parts.push_back(std::async(std::launch::async, run_range, begin, stop));
    }
    MonteCarloResult result;
    result.p = p_label;
    result.trials = trials;
    for (auto &part : parts) {
        result.failures += part.get();
    }
    result.rate = static_cast<double>(result.failures) / static_cast<double>(trials);
    auto [lo, hi] = wilson_interval(result.failures, trials);
    result.ci_low = lo;
    result.ci_high = hi;
    return result;
}

}  // namespace qlego
