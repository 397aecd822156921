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

#ifndef QLEGO_TESTS_ORACLES_HPP
#define QLEGO_TESTS_ORACLES_HPP

// Independent reference computations shared by the test binaries.

#include <complex>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qlego/analysis.hpp"
#include "qlego/duality.hpp"
#include "qlego/network.hpp"
#include "qlego/pauli.hpp"

namespace qlego::testing {

using Complex = std::complex<double>;
using StateVector = std::vector<Complex>;

inline int random_residue(std::mt19937_64 &rng, int d) { return static_cast<int>(rng() % static_cast<uint64_t>(d)); }

inline PauliVector random_pauli(std::mt19937_64 &rng, const Modulus &mod, size_t n) {
    PauliVector p(mod, n);
    for (size_t i = 0; i < n; i++) {
        p.set(i, random_residue(rng, mod.d()), random_residue(rng, mod.d()));
    }
    return p;
}

/// Random full-rank stabilizer state on n qudits: the all-Z state scrambled by random symplectic moves.
inline CheckMatrix random_stabilizer_state(std::mt19937_64 &rng, const Modulus &mod, size_t n) {
    const int d = mod.d();
    std::vector<Vec> rows;
    for (size_t i = 0; i < n; i++) {
        Vec r(2 * n, 0);
        r[n + i] = 1;
        rows.push_back(r);
    }
    for (size_t step = 0; step < 6 * n + 4; step++) {
        size_t a = rng() % n, b = rng() % n;
        int c = 1 + random_residue(rng, d - 1);
        switch (rng() % 3) {
            case 0:  // Fourier: (x, z) -> (-z, x)
                for (Vec &r : rows) {
                    int x = r[a];
                    r[a] = mod.neg(r[n + a]);
                    r[n + a] = x;
                }
                break;
            case 1:  // Phase: z += c x
                for (Vec &r : rows) {
                    r[n + a] = mod.add(r[n + a], mod.mul(c, r[a]));
                }
                break;
            default:  // Sum gate from a to b: x_b += c x_a, z_a -= c z_b
                if (a == b) {
                    break;
                }
                for (Vec &r : rows) {
                    r[b] = mod.add(r[b], mod.mul(c, r[a]));
                    r[n + a] = mod.sub(r[n + a], mod.mul(c, r[n + b]));
                }
        }
    }
    return CheckMatrix(Matrix(mod, rows, 2 * n));
}

/// Random subspace of GF(d)^n with the given dimension, as independent rows.
inline Matrix random_subspace(std::mt19937_64 &rng, const Modulus &mod, size_t n, size_t dim) {
    while (true) {
        Matrix m(mod, dim, n);
        for (size_t r = 0; r < dim; r++) {
            for (size_t c = 0; c < n; c++) {
                m.at(r, c) = random_residue(rng, mod.d());
            }
        }
        if (rank(m) == dim) {
            return m;
        }
    }
}

/// CSS state with X rows spanning `cx` and Z rows spanning its dual.
inline CheckMatrix css_state(const Matrix &cx) {
    const Modulus &mod = cx.mod();
    size_t n = cx.cols();
    Matrix cz = kernel(cx);
    std::vector<Vec> rows;
    for (size_t r = 0; r < cx.rows(); r++) {
        Vec v(2 * n, 0);
        for (size_t c = 0; c < n; c++) {
            v[c] = cx.at(r, c);
        }
        rows.push_back(v);
    }
    for (size_t r = 0; r < cz.rows(); r++) {
        Vec v(2 * n, 0);
        for (size_t c = 0; c < n; c++) {
            v[n + c] = cz.at(r, c);
        }
        rows.push_back(v);
    }
    return CheckMatrix(Matrix(mod, rows, 2 * n));
}

inline CheckMatrix random_css_state(std::mt19937_64 &rng, const Modulus &mod, size_t n) {
    size_t dim = 1 + rng() % (n - 1);
    return css_state(random_subspace(rng, mod, n, dim));
}

inline int dot(const Modulus &mod, const Vec &a, const Vec &b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); i++) {
        s += static_cast<long long>(a[i]) * b[i];
    }
    return mod.reduce(s);
}

/// Random self-dual classical code of length n, grown one isotropic vector at a time.
/// Requires a length that admits one (even n for d = 2 or 5, n divisible by 4 for d = 3).
inline Matrix random_self_dual_code(std::mt19937_64 &rng, const Modulus &mod, size_t n) {
    Matrix code(mod, 0, n);
    while (code.rows() < n / 2) {
        Matrix dual = code.rows() ? kernel(code) : Matrix::identity(mod, n);
        Vec v(n, 0);
        for (size_t r = 0; r < dual.rows(); r++) {
            int c = random_residue(rng, mod.d());
            for (size_t i = 0; i < n; i++) {
                v[i] = mod.add(v[i], mod.mul(c, dual.at(r, i)));
            }
        }
        if (dot(mod, v, v) != 0) {
            continue;
        }
        Matrix extended = code;
        extended.append_row(v);
        if (rank(extended) == code.rows() + 1) {
            code = extended;
        }
    }
    return code;
}

inline StateVector apply_pauli(const StateVector &v, const PauliVector &p) {
    const int d = p.mod().d();
    const size_t n = p.n();
    StateVector out(v.size());
    const double tau = 2 * 3.14159265358979323846 / d;
    std::vector<size_t> stride(n);
    size_t s = 1;
    for (size_t i = n; i-- > 0;) {
        stride[i] = s;
        s *= static_cast<size_t>(d);
    }
    for (size_t index = 0; index < v.size(); index++) {
        size_t target = 0;
        long long phase = 0;
        for (size_t i = 0; i < n; i++) {
            int digit = static_cast<int>(index / stride[i] % d);
            phase += static_cast<long long>(p.z(i)) * digit;
            target += static_cast<size_t>((digit + p.x(i)) % d) * stride[i];
        }
        out[target] += v[index] * std::polar(1.0, tau * static_cast<double>(phase % d));
    }
    return out;
}

inline Complex inner(const StateVector &a, const StateVector &b) {
    Complex s = 0;
    for (size_t i = 0; i < a.size(); i++) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

/// True when P|v> is proportional to |v> with a unit-modulus factor.
inline bool stabilized_up_to_phase(const StateVector &v, const PauliVector &p, double tol = 1e-9) {
    double norm = std::real(inner(v, v));
    return std::abs(std::abs(inner(v, apply_pauli(v, p))) - norm) <= tol * norm;
}

/// Qubit stabilizer state with every Hermitian generator at eigenvalue +1, projected from a random vector.
inline StateVector qubit_state(const CheckMatrix &state, uint64_t seed = 7) {
    size_t n = state.n_legs();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    StateVector v(size_t{1} << n);
    for (Complex &a : v) {
        a = {g(rng), g(rng)};
    }
    for (const PauliVector &row : state.rows()) {
        size_t y = 0;
        for (size_t i = 0; i < n; i++) {
            y += static_cast<size_t>(row.x(i) & row.z(i));
        }
        // X^x Z^z times i^{#Y} is Hermitian.
        static const Complex powers[4] = {1.0, Complex(0, 1), -1.0, Complex(0, -1)};
        StateVector pv = apply_pauli(v, row);
        for (size_t i = 0; i < v.size(); i++) {
            v[i] = 0.5 * (v[i] + powers[y % 4] * pv[i]);
        }
    }
    double norm = std::sqrt(std::real(inner(v, v)));
    for (Complex &a : v) {
        a /= norm;
    }
    return v;
}

/// Von Neumann entropy (in bits) of the reduced state on `legs`, for a flat-spectrum state: log2 of the Schmidt rank.
inline size_t schmidt_rank_log2(const StateVector &v, size_t n, const std::vector<size_t> &legs) {
    std::vector<bool> in_a(n, false);
    for (size_t l : legs) {
        in_a[l] = true;
    }
    size_t na = legs.size(), nb = n - na;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(Eigen::Index(1) << na, Eigen::Index(1) << nb);
    for (size_t index = 0; index < v.size(); index++) {
        size_t ia = 0, ib = 0;
        for (size_t q = 0; q < n; q++) {
            size_t bit = (index >> (n - 1 - q)) & 1;
            if (in_a[q]) {
                ia = (ia << 1) | bit;
            } else {
                ib = (ib << 1) | bit;
            }
        }
        m(static_cast<Eigen::Index>(ia), static_cast<Eigen::Index>(ib)) = v[index];
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    size_t r = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); i++) {
        if (svd.singularValues()(i) > 1e-8) {
            r++;
        }
    }
    size_t bits = 0;
    while ((size_t{1} << bits) < r) {
        bits++;
    }
    return bits;
}

/// Enumerates every Pauli supported on `legs` (d^(2|legs|) of them).
template <typename F>
void for_each_pauli_on(const Modulus &mod, size_t n, const std::vector<size_t> &legs, F &&visit) {
    const int d = mod.d();
    size_t total = 1;
    for (size_t i = 0; i < 2 * legs.size(); i++) {
        total *= static_cast<size_t>(d);
    }
    for (size_t code = 0; code < total; code++) {
        PauliVector p(mod, n);
        size_t c = code;
        for (size_t l : legs) {
            int x = static_cast<int>(c % d);
            c /= d;
            int z = static_cast<int>(c % d);
            c /= d;
            p.set(l, x, z);
        }
        visit(p);
    }
}

/// Knill-Laflamme condition for erasures: every Pauli on `legs` that commutes with the stabilizers
/// (and the gauge, for subsystem codes) lies in stabilizer times gauge.
inline bool erasure_oracle(const CodeReport &report, const std::vector<size_t> &legs) {
    std::vector<PauliVector> group = report.stabilizers.rows();
    for (const PauliVector &g : report.gauge) {
        group.push_back(g);
    }
    Matrix rows(report.mod(), 0, 2 * report.n);
    for (const PauliVector &g : group) {
        rows.append_row(g.xz());
    }
    size_t base = rank(rows);
    bool ok = true;
    for_each_pauli_on(report.mod(), report.n, legs, [&](const PauliVector &p) {
        if (!ok) {
            return;
        }
        for (const PauliVector &s : report.stabilizers.rows()) {
            if (symplectic_product(p, s) != 0) {
                return;
            }
        }
        for (const PauliVector &g : report.gauge) {
            if (symplectic_product(p, g) != 0) {
                return;
            }
        }
        Matrix extended = rows;
        extended.append_row(p.xz());
        if (rank(extended) != base) {
            ok = false;
        }
    });
    return ok;
}

/// Smallest weight of a Pauli that commutes with all stabilizers (and gauge) but is not in stabilizer times gauge,
/// found by enumerating supports of increasing size. Returns 0 when none exists up to `max_weight`.
inline size_t brute_force_distance(const CodeReport &report, size_t max_weight) {
    const size_t n = report.n;
    std::vector<PauliVector> checks = report.stabilizers.rows();
    for (const PauliVector &g : report.gauge) {
        checks.push_back(g);
    }
    Matrix rows(report.mod(), 0, 2 * n);
    for (const PauliVector &g : checks) {
        rows.append_row(g.xz());
    }
    size_t base = rank(rows);
    const int d = report.mod().d();
    for (size_t w = 1; w <= max_weight && w <= n; w++) {
        std::vector<size_t> support(w);
        for (size_t i = 0; i < w; i++) {
            support[i] = i;
        }
        while (true) {
            size_t total = 1;
            for (size_t i = 0; i < w; i++) {
                total *= static_cast<size_t>(d * d - 1);
            }
            for (size_t code = 0; code < total; code++) {
                PauliVector p(report.mod(), n);
                size_t c = code;
                for (size_t l : support) {
                    int local = 1 + static_cast<int>(c % (d * d - 1));
                    c /= d * d - 1;
                    p.set(l, local / d, local % d);
                }
                bool commutes = true;
                for (const PauliVector &s : checks) {
                    if (symplectic_product(p, s) != 0) {
                        commutes = false;
                        break;
                    }
                }
                if (!commutes) {
                    continue;
                }
                Matrix extended = rows;
                extended.append_row(p.xz());
                if (rank(extended) != base) {
                    return w;
                }
            }
            size_t i = w;
            while (i > 0 && support[i - 1] == n - w + i - 1) {
                i--;
            }
            if (i == 0) {
                break;
            }
            support[i - 1]++;
            for (size_t j = i; j < w; j++) {
                support[j] = support[j - 1] + 1;
            }
        }
    }
    return 0;
}

/// Random connected network of full-rank legos with random edges and a random set of logical legs.
inline TensorNetwork random_network(std::mt19937_64 &rng, const Modulus &mod, size_t instances, bool css = false) {
    TensorNetwork net(mod);
    std::vector<size_t> legs;
    for (size_t i = 0; i < instances; i++) {
        size_t n = 3 + rng() % 3;
        std::string name = "L" + std::to_string(i);
        CheckMatrix state = css ? random_css_state(rng, mod, n) : random_stabilizer_state(rng, mod, n);
        net.add_lego(Lego{name, state, "", {}});
        net.add_instance("t" + std::to_string(i), name);
        legs.push_back(n);
    }
    std::vector<std::vector<bool>> used(instances);
    for (size_t i = 0; i < instances; i++) {
        used[i].assign(legs[i], false);
    }
    auto free_leg = [&](size_t i) -> std::optional<size_t> {
        std::vector<size_t> options;
        for (size_t l = 0; l < legs[i]; l++) {
            if (!used[i][l]) {
                options.push_back(l);
            }
        }
        if (options.empty()) {
            return std::nullopt;
        }
        return options[rng() % options.size()];
    };
    auto connect = [&](size_t i, size_t j) {
        auto a = free_leg(i);
        if (!a) {
            return;
        }
        used[i][*a] = true;
        auto b = free_leg(j);
        if (!b) {
            used[i][*a] = false;
            return;
        }
        used[j][*b] = true;
        net.add_edge({"t" + std::to_string(i), *a}, {"t" + std::to_string(j), *b});
    };
    for (size_t i = 1; i < instances; i++) {
        connect(rng() % i, i);
    }
    size_t extra = rng() % (instances + 1);
    for (size_t e = 0; e < extra; e++) {
        size_t i = rng() % instances, j = rng() % instances;
        connect(i, j);
    }
    net.set_default_role(Role::Physical);
    std::vector<LegRef> dangling = net.dangling_legs();
    for (const LegRef &leg : dangling) {
        if (rng() % 4 == 0 && dangling.size() > 2) {
            net.set_role(leg, Role::Logical);
        }
    }
    return net;
}

inline std::vector<PauliVector> paulis(const std::vector<std::string> &texts, const Modulus &mod = Modulus(2)) {
    std::vector<PauliVector> out;
    for (const std::string &t : texts) {
        out.push_back(PauliVector::parse(t, mod));
    }
    return out;
}

inline CodeReport steane_report() {
    CheckMatrix code = CheckMatrix::from_strings(
        {"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"}, Modulus(2));
    return report_from_code(code, paulis({"XXXXXXX"}), paulis({"ZZZZZZZ"}));
}

inline CodeReport five_qubit_report() {
    CheckMatrix code = CheckMatrix::from_strings({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}, Modulus(2));
    return report_from_code(code, paulis({"XXXXX"}), paulis({"ZZZZZ"}));
}

}  // namespace qlego::testing

#endif
