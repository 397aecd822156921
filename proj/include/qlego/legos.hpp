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

#ifndef QLEGO_LEGOS_HPP
#define QLEGO_LEGOS_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qlego/network.hpp"

namespace qlego {

/// Looks up a catalog block by spelling, e.g. "steane_713" or "repetition(3,Z)".
/// Throws UsageError for unknown names or blocks that do not exist in dimension `mod`.
Lego builtin(const std::string &name, const Modulus &mod = Modulus(2));

std::vector<std::string> catalog_names();

/// Wraps a code as a lego whose last legs carry the given logical pairs.
Lego code_lego(const std::string &name, const std::vector<std::string> &stabilizers,
               const std::vector<std::string> &logical_x, const std::vector<std::string> &logical_z,
               const Modulus &mod);

enum class BoundaryKind { Bare, Stoppers, Repetition };

struct SurfaceBoundary {
    BoundaryKind kind = BoundaryKind::Stoppers;
    /// Repetition length for BoundaryKind::Repetition.
    size_t r = 2;
};

/// Periodic 2L x L array of [[4,2,2]] sites. Leg 4 of each site is logical and leg 5 physical;
/// in-plane legs are (W, N, E, S) = 0..3 on even sites and (N, E, S, W) on odd ones.
TensorNetwork build_toric(size_t L);
/// Unrotated planar patch; M = N = 3 with stoppers gives the 13-qubit code.
TensorNetwork build_surface(size_t M, size_t N, SurfaceBoundary boundary = {});
/// Rotated M x N patch of XZZX sites with stoppers X on north/south and Z on east/west open legs.
TensorNetwork build_xzzx(size_t M, size_t N);
/// 19-qubit triangular patch with a twist defect, distance 5.
TensorNetwork build_triangle_twist();
/// Same graph as build_surface(M, N); every other row of physical legs becomes logical.
TensorNetwork build_bacon_shor(size_t M, size_t N);
TensorNetwork build_1d_dual();
/// m - 1 blocks of the [[4,2,2]] lego joined c(t-1).1 to c(t).3, encoding [[2m, 2m-2, 2]].
TensorNetwork build_chain(size_t m);
/// Two [[4,2,2]] legos joined on legs 4 and 5; b.3 is the logical leg.
TensorNetwork build_steane_from_422();
TensorNetwork build_double_trace();
TensorNetwork build_code_642();
TensorNetwork build_flat_perfect(size_t L);

enum class RmVariant { Plain, XGate, FlippedCatalog };
/// Two [[15,1,3]] tiles joined on physical leg 0; leg 15 of each tile is logical.
/// XGate appends an X block on the second logical leg, FlippedCatalog swaps in a tile whose
/// operator entries carry the conjugate label on leg 15.
TensorNetwork build_rm_pair(RmVariant variant = RmVariant::Plain);

/// A boundary instruction for the cubic lattice: either a stopper on one leg or a contraction of two legs.
struct CubicBoundaryItem {
    std::array<int, 3> site;
    std::string direction;
    /// "X" or "Z" for a stopper; empty for a contraction with `other_site`/`other_direction`.
    std::string stopper;
    std::array<int, 3> other_site{};
    std::string other_direction;
};

/// Named example networks with string parameters, as exposed on the command line.
TensorNetwork demo_network(const std::string &name, const std::map<std::string, std::string> &params);
std::vector<std::string> demo_names();

/// Corner boundary used by default for the cubic lattice.
std::vector<CubicBoundaryItem> corner_boundary();

/// Directions are "+x", "-x", "+y", "-y", "+z", "-z". Open legs not named in `boundary` are physical.
TensorNetwork build_3d_steane(size_t Lx, size_t Ly, size_t Lz, const std::vector<CubicBoundaryItem> &boundary);

/// Instance id of the cubic-lattice vertex (x, y, z).
std::string cubic_id(int x, int y, int z);
/// Leg of the cubic-lattice vertex pointing in `direction`, after the parity rotation.
size_t cubic_leg(int x, int y, int z, const std::string &direction);

/// Contracts two repetition encoders through a Hadamard state and compares against the controlled-phase Choi state.
bool verify_cz_synthesis(int d);

/// Instance id for a site of the square-lattice builders.
std::string site_id(int i, int j);

}  // namespace qlego

#endif
