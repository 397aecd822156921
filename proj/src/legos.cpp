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

#include "qlego/legos.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <regex>
#include <set>

#include "qlego/duality.hpp"
#include "qlego/trace.hpp"

namespace qlego {

namespace {

const Modulus &qubit() {
    static const Modulus mod(2);
    return mod;
}

void require_qubits(const std::string &name, const Modulus &mod) {
    if (mod.d() != 2) {
        throw UsageError("lego '" + name + "' is only defined for qubits");
    }
}

std::vector<PauliVector> parse_all(const std::vector<std::string> &rows, const Modulus &mod) {
    std::vector<PauliVector> out;
    for (const std::string &s : rows) {
        out.push_back(PauliVector::parse(s, mod));
    }
    return out;
}

Lego state_lego(const std::string &name, const std::vector<PauliVector> &rows, size_t n, const Modulus &mod) {
    CheckMatrix state(rows, mod, n);
    if (state.rank() != n) {
        throw std::logic_error("catalog block '" + name + "' is not a full-rank state");
    }
    return Lego{name, state, name, {}};
}

/// Lowest-weight conjugate pair for a code with one logical qubit, by direct search.
std::pair<PauliVector, PauliVector> search_logical_pair(const CheckMatrix &code) {
    const Modulus &mod = code.mod();
    size_t n = code.n_legs();
    std::vector<PauliVector> candidates;
    size_t total = 1;
    for (size_t i = 0; i < n; i++) {
        total *= 4;
    }
    for (size_t t = 1; t < total; t++) {
        PauliVector p(mod, n);
        size_t s = t;
        for (size_t q = 0; q < n; q++) {
            int v = static_cast<int>(s % 4);
            s /= 4;
            p.set(q, v & 1, v >> 1);
        }
        if (code.commutes_with(p) && !code.contains(p)) {
            candidates.push_back(p);
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const PauliVector &a, const PauliVector &b) {
        if (a.weight() != b.weight()) {
            return a.weight() < b.weight();
        }
        return a.str() < b.str();
    });
    for (size_t i = 0; i < candidates.size(); i++) {
        for (size_t j = i + 1; j < candidates.size(); j++) {
            if (symplectic_product(candidates[i], candidates[j]) == 1) {
                return {candidates[i], candidates[j]};
            }
        }
    }
    throw std::logic_error("no logical pair found");
}

Lego repetition(size_t r, char type, const Modulus &mod) {
    if (r < 1) {
        throw UsageError("repetition length must be positive");
    }
    std::vector<PauliVector> rows;
    for (size_t i = 0; i + 1 < r; i++) {
        PauliVector p(mod, r);
        if (type == 'Z') {
            p.set(i, 0, 1);
            p.set(i + 1, 0, mod.neg(1));
        } else {
            p.set(i, 1, 0);
            p.set(i + 1, mod.neg(1), 0);
        }
        rows.push_back(p);
    }
    PauliVector all(mod, r);
    for (size_t i = 0; i < r; i++) {
        all.set(i, type == 'Z' ? 1 : 0, type == 'Z' ? 0 : 1);
    }
    rows.push_back(all);
    std::string name = "repetition(" + std::to_string(r) + "," + type + ")";
    return state_lego(name, rows, r, mod);
}

Lego reed_muller(bool flipped) {
    const Modulus &mod = qubit();
    std::vector<std::string> xs, zs;
    auto row_for = [](auto pred) {
        std::string s(15, 'I');
        for (int q = 1; q <= 15; q++) {
            if (pred(q)) {
                s[q - 1] = '?';
            }
        }
        return s;
    };
    for (int b = 0; b < 4; b++) {
        std::string s = row_for([b](int q) { return (q >> b) & 1; });
        std::replace(s.begin(), s.end(), '?', 'X');
        xs.push_back(s);
        std::replace(s.begin(), s.end(), 'X', 'Z');
        zs.push_back(s);
    }
    for (int b1 = 0; b1 < 4; b1++) {
        for (int b2 = b1 + 1; b2 < 4; b2++) {
            std::string s = row_for([b1, b2](int q) { return ((q >> b1) & 1) && ((q >> b2) & 1); });
            std::replace(s.begin(), s.end(), '?', 'Z');
            zs.push_back(s);
        }
    }
    std::vector<std::string> stabilizers = xs;
    stabilizers.insert(stabilizers.end(), zs.begin(), zs.end());
    std::string name = flipped ? "reed_muller_15_1_3_flipped" : "reed_muller_15_1_3";
    Lego lego = code_lego(name, stabilizers, {std::string(15, 'X')}, {std::string(15, 'Z')}, mod);
    std::vector<std::string> tdag(16, "T"), t(16, "Tdag"), id(16, "I");
    if (flipped) {
        // An X gate on the logical leg conjugates its label.
        tdag[15] = "Tdag";
        t[15] = "T";
    }
    lego.ups = {{"identity", id}, {"logical_Tdag", tdag}, {"logical_T", t}};
    return lego;
}

Lego hadamard_rank2(const Modulus &mod) {
    PauliVector a(mod, 2), b(mod, 2);
    a.set(0, 0, 1);
    a.set(1, 1, 0);
    b.set(0, 1, 0);
    b.set(1, 0, 1);
    Lego lego = state_lego("hadamard_rank2", {a, b}, 2, mod);
    if (mod.d() == 2) {
        lego.ups = {{"identity", {"I", "I"}}, {"hadamard", {"H", "H"}}};
    }
    return lego;
}

Lego code_422() {
    Lego lego = code_lego("code_422", {"XXXX", "ZZZZ"}, {"XXII", "IXXI"}, {"IZZI", "ZZII"}, qubit());
    return lego;
}

Lego code_422_h() {
    CheckMatrix traced = single_trace(code_422().state, hadamard_rank2(qubit()).state, 5, 0).matrix;
    return Lego{"code_422_h", traced, "code_422_h", {}};
}

Lego twist_code() {
    CheckMatrix code = CheckMatrix::from_strings({"XXIX", "ZIZZ", "YYYI"}, qubit());
    auto [lx, lz] = search_logical_pair(code);
    AugmentedCode aug = augment(code, {lx}, {lz});
    return Lego{"twist_code_4qubit", aug.state, "twist_code_4qubit", {}};
}

}  // namespace

Lego code_lego(const std::string &name, const std::vector<std::string> &stabilizers,
               const std::vector<std::string> &logical_x, const std::vector<std::string> &logical_z,
               const Modulus &mod) {
    CheckMatrix code = CheckMatrix::from_strings(stabilizers, mod);
    AugmentedCode aug = augment(code, parse_all(logical_x, mod), parse_all(logical_z, mod));
    return Lego{name, aug.state, name, {}};
}

Lego builtin(const std::string &name, const Modulus &mod) {
    static const std::regex rep_re(R"(repetition\((\d+),([XZ])\))");
    std::smatch match;
    if (std::regex_match(name, match, rep_re)) {
        return repetition(std::stoul(match[1].str()), match[2].str()[0], mod);
    }
    if (name == "stopper_x" || name == "stopper_z" || name == "zero_state_rank1") {
        PauliVector p(mod, 1);
        p.set(0, name == "stopper_x" ? 1 : 0, name == "stopper_x" ? 0 : 1);
        return state_lego(name, {p}, 1, mod);
    }
    if (name == "hadamard_rank2") {
        return hadamard_rank2(mod);
    }
    if (name == "rep2_encoder_rank3") {
        Lego lego = repetition(3, 'Z', mod);
        lego.name = lego.builtin = name;
        return lego;
    }
    if (name == "identity_rank2") {
        PauliVector a(mod, 2), b(mod, 2);
        a.set(0, 1, 0);
        a.set(1, 1, 0);
        b.set(0, 0, 1);
        b.set(1, 0, mod.neg(1));
        return state_lego(name, {a, b}, 2, mod);
    }
    require_qubits(name, mod);
    if (name == "code_422") {
        return code_422();
    }
    if (name == "code_422_h") {
        return code_422_h();
    }
    if (name == "code_513_perfect") {
        return code_lego(name, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}, {"XXXXX"}, {"ZZZZZ"}, mod);
    }
    if (name == "steane_713") {
        return code_lego(name, {"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"}, {"XXXXXXX"},
                         {"ZZZZZZZ"}, mod);
    }
    if (name == "reed_muller_15_1_3") {
        return reed_muller(false);
    }
    if (name == "reed_muller_15_1_3_flipped") {
        return reed_muller(true);
    }
    if (name == "x_gate_rank2") {
        Lego lego = builtin("identity_rank2", mod);
        lego.name = lego.builtin = name;
        lego.ups = {{"identity", {"I", "I"}}, {"T_T", {"T", "T"}}, {"Tdag_Tdag", {"Tdag", "Tdag"}}};
        return lego;
    }
    if (name == "twist_code_4qubit") {
        return twist_code();
    }
    throw UsageError("unknown catalog block '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"code_422",           "code_422_h",       "code_513_perfect",           "steane_713",
            "reed_muller_15_1_3", "reed_muller_15_1_3_flipped", "repetition(r,X|Z)", "stopper_x",
            "stopper_z",          "zero_state_rank1", "hadamard_rank2",             "identity_rank2",
            "x_gate_rank2",       "rep2_encoder_rank3", "twist_code_4qubit"};
}

std::string site_id(int i, int j) {
    return "t" + std::to_string(i) + "_" + std::to_string(j);
}

namespace {

enum Dir { N, E, S, W };
constexpr int kDi[4] = {0, 1, 0, -1};
constexpr int kDj[4] = {1, 0, -1, 0};
const char *const kDirName[4] = {"n", "e", "s", "w"};

/// In-plane leg facing `dir`. Even sites read (W, N, E, S) as legs 0..3, odd sites (N, E, S, W).
size_t plane_leg(int i, int j, Dir dir) {
    bool even = ((i + j) % 2 + 2) % 2 == 0;
    if (even) {
        static constexpr size_t map[4] = {1, 2, 3, 0};
        return map[dir];
    }
    static constexpr size_t map[4] = {0, 1, 2, 3};
    return map[dir];
}

using Site = std::pair<int, int>;

/// The two faces touching the leg of site (i, j) facing `dir`, by their lower-left corner.
std::array<Site, 2> faces_of_leg(int i, int j, Dir dir) {
    switch (dir) {
        case N:
            return {Site{i - 1, j}, Site{i, j}};
        case E:
            return {Site{i, j}, Site{i, j - 1}};
        case S:
            return {Site{i - 1, j - 1}, Site{i, j - 1}};
        default:
            return {Site{i - 1, j}, Site{i - 1, j - 1}};
    }
}

bool is_even(int v) {
    return ((v % 2) + 2) % 2 == 0;
}

struct Lattice {
    std::map<Site, std::string> lego;
    std::function<std::optional<Site>(Site)> wrap;

    std::optional<Site> neighbor(Site s, Dir dir) const {
        Site t{s.first + kDi[dir], s.second + kDj[dir]};
        if (wrap) {
            return wrap(t);
        }
        if (!lego.count(t)) {
            return std::nullopt;
        }
        return t;
    }
};

struct DanglingLeg {
    Site site;
    Dir dir;
};

/// Adds one instance per site and an edge for every adjacent pair. Returns the open in-plane legs.
std::vector<DanglingLeg> add_lattice(TensorNetwork &net, const Lattice &lattice) {
    for (const auto &[site, lego] : lattice.lego) {
        net.add_instance(site_id(site.first, site.second), lego);
    }
    std::vector<DanglingLeg> open;
    for (const auto &[site, lego] : lattice.lego) {
        for (Dir dir : {N, E, S, W}) {
            std::optional<Site> other = lattice.neighbor(site, dir);
            if (!other) {
                open.push_back({site, dir});
                continue;
            }
            if (dir == N || dir == E) {
                Dir back = dir == N ? S : W;
                net.add_edge({site_id(site.first, site.second), plane_leg(site.first, site.second, dir)},
                             {site_id(other->first, other->second), plane_leg(other->first, other->second, back)});
            }
        }
    }
    return open;
}

void set_site_roles(TensorNetwork &net, const Lattice &lattice, Role up, Role down) {
    for (const auto &[site, lego] : lattice.lego) {
        std::string id = site_id(site.first, site.second);
        net.set_role({id, 4}, up);
        net.set_role({id, 5}, down);
    }
}

void add_catalog(TensorNetwork &net, const std::vector<std::string> &names) {
    for (const std::string &name : names) {
        if (!net.legos().count(name)) {
            net.add_lego(builtin(name, net.dimension()));
        }
    }
}

/// Attaches a single-leg stopper or a repetition block to an open leg.
void cap_leg(TensorNetwork &net, const LegRef &leg, const std::string &tag, char type, const SurfaceBoundary &boundary) {
    if (boundary.kind == BoundaryKind::Bare) {
        net.set_role(leg, Role::Physical);
        return;
    }
    if (boundary.kind == BoundaryKind::Stoppers) {
        std::string name = type == 'X' ? "stopper_x" : "stopper_z";
        add_catalog(net, {name});
        std::string id = "stop_" + tag;
        net.add_instance(id, name);
        net.add_edge(leg, {id, 0});
        return;
    }
    std::string name = "repetition(" + std::to_string(boundary.r) + "," + type + ")";
    add_catalog(net, {name});
    std::string id = "rep_" + tag;
    net.add_instance(id, name);
    net.add_edge(leg, {id, 0});
    for (size_t k = 1; k < boundary.r; k++) {
        net.set_role({id, k}, Role::Physical);
    }
}

std::string leg_tag(const DanglingLeg &d) {
    return site_id(d.site.first, d.site.second).substr(1) + "_" + kDirName[d.dir];
}

/// Site layout of the planar surface code: horizontal edges h(x, y) and vertical edges v(x, y) of the primal lattice.
Lattice surface_lattice(size_t M, size_t N) {
    Lattice lattice;
    int m = static_cast<int>(M), n = static_cast<int>(N);
    for (int x = 0; x < n; x++) {
        for (int y = 0; y < m; y++) {
            lattice.lego[{x + y, x - y}] = "code_422";
        }
    }
    for (int x = 1; x < n; x++) {
        for (int y = 0; y + 1 < m; y++) {
            lattice.lego[{x + y, x - y - 1}] = "code_422";
        }
    }
    return lattice;
}

bool surface_face_exists(size_t M, size_t N, Site face) {
    auto [i, j] = face;
    int m = static_cast<int>(M), n = static_cast<int>(N);
    if (is_even(i + j)) {
        int a = (i + j) / 2 + 1, b = (i - j) / 2;
        return a >= 1 && a <= n - 1 && b >= 0 && b <= m - 1;
    }
    int x = (i + j + 1) / 2, y = (i - j - 1) / 2;
    return x >= 0 && x < n && y >= 0 && y < m - 1;
}

/// Stopper type for an open leg: X when the star it borders is present, else Z.
char surface_stopper(size_t M, size_t N, const DanglingLeg &d) {
    auto faces = faces_of_leg(d.site.first, d.site.second, d.dir);
    Site star = is_even(faces[0].first + faces[0].second) ? faces[0] : faces[1];
    Site plaquette = star == faces[0] ? faces[1] : faces[0];
    if (surface_face_exists(M, N, star)) {
        return 'X';
    }
    (void)plaquette;
    return 'Z';
}

}  // namespace

TensorNetwork build_toric(size_t L) {
    if (L < 2) {
        throw UsageError("toric lattice needs L >= 2");
    }
    TensorNetwork net(qubit());
    add_catalog(net, {"code_422"});
    int l = static_cast<int>(L);
    Lattice lattice;
    for (int i = 0; i < 2 * l; i++) {
        for (int j = 0; j < l; j++) {
            lattice.lego[{i, j}] = "code_422";
        }
    }
    lattice.wrap = [l](Site s) -> std::optional<Site> {
        auto [i, j] = s;
        while (j >= l) {
            i -= l;
            j -= l;
        }
        while (j < 0) {
            i += l;
            j += l;
        }
        i = ((i % (2 * l)) + 2 * l) % (2 * l);
        return Site{i, j};
    };
    add_lattice(net, lattice);
    set_site_roles(net, lattice, Role::Logical, Role::Physical);
    return net;
}

TensorNetwork build_surface(size_t M, size_t N, SurfaceBoundary boundary) {
    if (M < 2 || N < 2) {
        throw UsageError("surface patch needs M, N >= 2");
    }
    if (boundary.kind == BoundaryKind::Repetition && boundary.r < 2) {
        throw UsageError("repetition boundary needs r >= 2");
    }
    TensorNetwork net(qubit());
    add_catalog(net, {"code_422"});
    Lattice lattice = surface_lattice(M, N);
    std::vector<DanglingLeg> open = add_lattice(net, lattice);
    set_site_roles(net, lattice, Role::Logical, Role::Physical);
    for (const DanglingLeg &d : open) {
        LegRef leg{site_id(d.site.first, d.site.second), plane_leg(d.site.first, d.site.second, d.dir)};
        cap_leg(net, leg, leg_tag(d), surface_stopper(M, N, d), boundary);
    }
    return net;
}

TensorNetwork build_bacon_shor(size_t M, size_t N) {
    TensorNetwork net = build_surface(M, N, {BoundaryKind::Stoppers, 2});
    int m = static_cast<int>(M), n = static_cast<int>(N);
    for (int x = 1; x < n; x++) {
        for (int y = 0; y + 1 < m; y++) {
            net.set_role({site_id(x + y, x - y - 1), 5}, Role::Logical);
        }
    }
    return net;
}

TensorNetwork build_1d_dual() {
    TensorNetwork net = build_surface(3, 3, {BoundaryKind::Bare, 2});
    for (const Instance &inst : net.instances()) {
        net.set_role({inst.id, 4}, Role::Logical);
        net.set_role({inst.id, 5}, Role::Logical);
    }
    return net;
}

TensorNetwork build_xzzx(size_t M, size_t N) {
    if (M < 2 || N < 2) {
        throw UsageError("XZZX patch needs M, N >= 2");
    }
    TensorNetwork net(qubit());
    add_catalog(net, {"code_422", "code_422_h", "stopper_x", "stopper_z"});
    Lattice lattice;
    for (int i = 0; i < static_cast<int>(N); i++) {
        for (int j = 0; j < static_cast<int>(M); j++) {
            lattice.lego[{i, j}] = is_even(i + j) ? "code_422" : "code_422_h";
        }
    }
    std::vector<DanglingLeg> open = add_lattice(net, lattice);
    set_site_roles(net, lattice, Role::Logical, Role::Physical);
    for (const DanglingLeg &d : open) {
        LegRef leg{site_id(d.site.first, d.site.second), plane_leg(d.site.first, d.site.second, d.dir)};
        // Top and bottom legs take X stoppers, left and right legs take Z stoppers.
        char type = (d.dir == Dir::N || d.dir == Dir::S) ? 'X' : 'Z';
        cap_leg(net, leg, leg_tag(d), type, {BoundaryKind::Stoppers, 2});
    }
    return net;
}

TensorNetwork build_chain(size_t m) {
    if (m < 2) {
        throw UsageError("chain needs m >= 2");
    }
    TensorNetwork net(qubit());
    add_catalog(net, {"code_422"});
    for (size_t t = 0; t + 1 < m; t++) {
        std::string id = "c" + std::to_string(t);
        net.add_instance(id, "code_422");
        net.set_role({id, 4}, Role::Logical);
        net.set_role({id, 5}, Role::Logical);
        if (t > 0) {
            net.add_edge({"c" + std::to_string(t - 1), 1}, {id, 3});
        }
    }
    net.set_default_role(Role::Physical);
    return net;
}

TensorNetwork build_code_642() {
    return build_chain(3);
}

TensorNetwork build_steane_from_422() {
    TensorNetwork net(qubit());
    add_catalog(net, {"code_422"});
    net.add_instance("a", "code_422");
    net.add_instance("b", "code_422");
    net.add_edge({"a", 4}, {"b", 4});
    net.add_edge({"a", 5}, {"b", 5});
    net.set_role({"b", 3}, Role::Logical);
    net.set_default_role(Role::Physical);
    return net;
}

TensorNetwork build_double_trace() {
    TensorNetwork net(qubit());
    add_catalog(net, {"code_422"});
    net.add_instance("a", "code_422");
    net.add_instance("b", "code_422");
    net.add_edge({"a", 1}, {"b", 3});
    net.add_edge({"a", 2}, {"b", 2});
    for (const char *id : {"a", "b"}) {
        net.set_role({id, 4}, Role::Logical);
        net.set_role({id, 5}, Role::Logical);
    }
    net.set_default_role(Role::Physical);
    return net;
}

TensorNetwork build_flat_perfect(size_t L) {
    if (L < 1) {
        throw UsageError("flat network needs L >= 1");
    }
    TensorNetwork net(qubit());
    add_catalog(net, {"code_513_perfect"});
    int l = static_cast<int>(L);
    for (int i = 0; i < l; i++) {
        for (int j = 0; j < l; j++) {
            std::string id = site_id(i, j);
            net.add_instance(id, "code_513_perfect");
            net.set_role({id, 5}, Role::Logical);
        }
    }
    // Legs 0..3 face E, N, W, S.
    for (int i = 0; i < l; i++) {
        for (int j = 0; j < l; j++) {
            if (i + 1 < l) {
                net.add_edge({site_id(i, j), 0}, {site_id(i + 1, j), 2});
            }
            if (j + 1 < l) {
                net.add_edge({site_id(i, j), 1}, {site_id(i, j + 1), 3});
            }
        }
    }
    net.set_default_role(Role::Physical);
    return net;
}

TensorNetwork build_rm_pair(RmVariant variant) {
    TensorNetwork net(qubit());
    add_catalog(net, {"reed_muller_15_1_3"});
    net.add_instance("a", "reed_muller_15_1_3");
    if (variant == RmVariant::FlippedCatalog) {
        add_catalog(net, {"reed_muller_15_1_3_flipped"});
        net.add_instance("b", "reed_muller_15_1_3_flipped");
    } else {
        net.add_instance("b", "reed_muller_15_1_3");
    }
    net.add_edge({"a", 0}, {"b", 0});
    net.set_role({"a", 15}, Role::Logical);
    if (variant == RmVariant::XGate) {
        add_catalog(net, {"x_gate_rank2"});
        net.add_instance("x", "x_gate_rank2");
        net.add_edge({"b", 15}, {"x", 0});
        net.set_role({"x", 1}, Role::Logical);
    } else {
        net.set_role({"b", 15}, Role::Logical);
    }
    net.set_default_role(Role::Physical);
    return net;
}

std::string cubic_id(int x, int y, int z) {
    return "v" + std::to_string(x) + "_" + std::to_string(y) + "_" + std::to_string(z);
}

namespace {

const std::map<std::string, size_t> &cubic_leg_map() {
    static const std::map<std::string, size_t> map = {{"+x", 5}, {"-x", 0}, {"+y", 4},
                                                      {"-y", 1}, {"+z", 3}, {"-z", 2}};
    return map;
}

std::string rotate_direction(const std::string &dir) {
    // A quarter turn about z: world +x is local -y, world +y is local +x.
    static const std::map<std::string, std::string> rot = {{"+x", "-y"}, {"-x", "+y"}, {"+y", "+x"},
                                                           {"-y", "-x"}, {"+z", "+z"}, {"-z", "-z"}};
    return rot.at(dir);
}

}  // namespace

size_t cubic_leg(int x, int y, int z, const std::string &direction) {
    if (!cubic_leg_map().count(direction)) {
        throw UsageError("unknown direction '" + direction + "'");
    }
    std::string local = is_even(x + y + z) ? direction : rotate_direction(direction);
    return cubic_leg_map().at(local);
}

std::vector<CubicBoundaryItem> corner_boundary() {
    return {
        {{0, 0, 0}, "-x", "Z", {}, ""},
        {{0, 0, 0}, "-y", "Z", {}, ""},
        {{0, 0, 0}, "-z", "Z", {}, ""},
        {{1, 0, 0}, "-y", "", {0, 1, 0}, "-x"},
    };
}

TensorNetwork build_3d_steane(size_t Lx, size_t Ly, size_t Lz, const std::vector<CubicBoundaryItem> &boundary) {
    if (Lx < 1 || Ly < 1 || Lz < 1) {
        throw UsageError("cubic lattice sizes must be positive");
    }
    TensorNetwork net(qubit());
    add_catalog(net, {"steane_713"});
    int lx = static_cast<int>(Lx), ly = static_cast<int>(Ly), lz = static_cast<int>(Lz);
    auto inside = [&](std::array<int, 3> s) {
        return s[0] >= 0 && s[0] < lx && s[1] >= 0 && s[1] < ly && s[2] >= 0 && s[2] < lz;
    };
    for (int x = 0; x < lx; x++) {
        for (int y = 0; y < ly; y++) {
            for (int z = 0; z < lz; z++) {
                std::string id = cubic_id(x, y, z);
                net.add_instance(id, "steane_713");
                net.set_role({id, 6}, Role::Physical);
                net.set_role({id, 7}, Role::Logical);
            }
        }
    }
    const std::array<std::pair<std::string, std::array<int, 3>>, 3> forward = {
        {{"+x", {1, 0, 0}}, {"+y", {0, 1, 0}}, {"+z", {0, 0, 1}}}};
    for (int x = 0; x < lx; x++) {
        for (int y = 0; y < ly; y++) {
            for (int z = 0; z < lz; z++) {
                for (const auto &[dir, step] : forward) {
                    std::array<int, 3> t{x + step[0], y + step[1], z + step[2]};
                    if (!inside(t)) {
                        continue;
                    }
                    std::string back = "-" + dir.substr(1);
                    net.add_edge({cubic_id(x, y, z), cubic_leg(x, y, z, dir)},
                                 {cubic_id(t[0], t[1], t[2]), cubic_leg(t[0], t[1], t[2], back)});
                }
            }
        }
    }
    add_catalog(net, {"stopper_x", "stopper_z"});
    size_t stoppers = 0;
    for (const CubicBoundaryItem &item : boundary) {
        if (!inside(item.site)) {
            throw UsageError("boundary item names a site outside the lattice");
        }
        LegRef leg{cubic_id(item.site[0], item.site[1], item.site[2]),
                   cubic_leg(item.site[0], item.site[1], item.site[2], item.direction)};
        if (!item.stopper.empty()) {
            if (item.stopper != "X" && item.stopper != "Z") {
                throw UsageError("stopper must be X or Z");
            }
            std::string id = "stop" + std::to_string(stoppers++);
            net.add_instance(id, item.stopper == "X" ? "stopper_x" : "stopper_z");
            net.add_edge(leg, {id, 0});
        } else {
            if (!inside(item.other_site)) {
                throw UsageError("boundary contraction names a site outside the lattice");
            }
            net.add_edge(leg, {cubic_id(item.other_site[0], item.other_site[1], item.other_site[2]),
                               cubic_leg(item.other_site[0], item.other_site[1], item.other_site[2],
                                         item.other_direction)});
        }
    }
    net.set_default_role(Role::Physical);
    net.validate();
    return net;
}

bool verify_cz_synthesis(int d) {
    Modulus mod(d);
    TensorNetwork net(mod);
    add_catalog(net, {"repetition(3,Z)", "hadamard_rank2"});
    net.add_instance("r1", "repetition(3,Z)");
    net.add_instance("r2", "repetition(3,Z)");
    net.add_instance("h", "hadamard_rank2");
    net.add_edge({"r1", 1}, {"h", 0});
    net.add_edge({"r2", 1}, {"h", 1});
    net.set_default_role(Role::Physical);
    BuiltState state = build(net);
    // Column order of the expected Choi state: B, D, o1, o2.
    const std::vector<LegRef> order = {{"r1", 2}, {"r2", 2}, {"r1", 0}, {"r2", 0}};
    std::vector<size_t> columns;
    for (const LegRef &leg : order) {
        columns.push_back(state.leg_index.at(leg));
    }
    Matrix built = state.matrix.matrix().select_columns(leg_columns(4, columns));
    auto row = [&](std::vector<std::pair<size_t, std::pair<int, int>>> entries) {
        PauliVector p(mod, 4);
        for (auto [leg, xz] : entries) {
            p.set(leg, xz.first, xz.second);
        }
        return p;
    };
    int minus = mod.neg(1);
    CheckMatrix expected({row({{0, {0, 1}}, {2, {0, minus}}}), row({{1, {0, 1}}, {3, {0, minus}}}),
                          row({{0, {1, 0}}, {2, {1, 0}}, {3, {0, 1}}}), row({{1, {1, 0}}, {3, {1, 0}}, {2, {0, 1}}})},
                         mod, 4);
    return same_row_space(built, expected.matrix());
}

TensorNetwork build_triangle_twist() {
    constexpr int s = 2;
    TensorNetwork net(qubit());
    add_catalog(net, {"code_422", "twist_code_4qubit", "hadamard_rank2", "stopper_x", "stopper_z"});
    // A (2s+1) x (2s+1) square with the lower-right quadrant cut away. The cut edges are glued by a quarter
    // turn, so the site below (t, 0) is (-1, -t).
    auto present = [](int x, int y) {
        return x >= -s && x <= s && y >= -s && y <= s && !(x >= 0 && y < 0);
    };
    auto leg = [](int x, int y, Dir dir) -> LegRef {
        if (x == 0 && y == 0) {
            static constexpr size_t twist_leg[4] = {0, 1, SIZE_MAX, 2};
            return {site_id(0, 0), twist_leg[dir]};
        }
        return {site_id(x, y), plane_leg(x, y, dir)};
    };
    for (int x = -s; x <= s; x++) {
        for (int y = -s; y <= s; y++) {
            if (!present(x, y)) {
                continue;
            }
            std::string id = site_id(x, y);
            if (x == 0 && y == 0) {
                net.add_instance(id, "twist_code_4qubit");
                net.set_role({id, 3}, Role::Physical);
                net.set_role({id, 4}, Role::Logical);
            } else {
                net.add_instance(id, "code_422");
                net.set_role({id, 4}, Role::Logical);
                net.set_role({id, 5}, Role::Physical);
            }
        }
    }
    size_t hadamards = 0;
    for (int x = -s; x <= s; x++) {
        for (int y = -s; y <= s; y++) {
            if (!present(x, y)) {
                continue;
            }
            if (present(x + 1, y)) {
                net.add_edge(leg(x, y, E), leg(x + 1, y, W));
            }
            if (present(x, y + 1)) {
                net.add_edge(leg(x, y, N), leg(x, y + 1, S));
            }
            if (x == -1 && y < 0) {
                std::string id = "h" + std::to_string(hadamards++);
                net.add_instance(id, "hadamard_rank2");
                net.add_edge(leg(x, y, E), {id, 0});
                net.add_edge({id, 1}, leg(-y, 0, S));
            }
            for (Dir dir : {N, E, S, W}) {
                int tx = x + kDi[dir], ty = y + kDj[dir];
                bool glued = (x == -1 && y < 0 && dir == E) || (x > 0 && y == 0 && dir == S);
                if (present(tx, ty) || glued || (x == 0 && y == 0 && dir == S)) {
                    continue;
                }
                // Top and bottom sides take Z stoppers, left and right sides take X stoppers.
                bool vertical = dir == N || dir == S;
                DanglingLeg d{{x, y}, dir};
                cap_leg(net, leg(x, y, dir), leg_tag(d), vertical ? 'Z' : 'X', {BoundaryKind::Stoppers, 2});
            }
        }
    }
    return net;
}

}  // namespace qlego
