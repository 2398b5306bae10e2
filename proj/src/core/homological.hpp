// Copyright 2026 the deloop authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "module.hpp"

namespace deloop {

// Direct sum of corner projectives e_t A, kept with enough bookkeeping to
// move between the module picture and algebra-element entries: per summand
// the idempotent type, a basis of e_t A inside A, and the coordinates of
// the generator e_t in that basis.
struct ProjectiveModule {
  ModuleRep rep;
  std::vector<size_t> types;
  std::vector<Matrix> comp_basis;            // [s]: rows span e_{t_s} A in A
  std::vector<size_t> offsets;               // block offset per summand
  std::vector<std::vector<Rat>> gen_coords;  // [s]: e_{t_s} in comp_basis[s]

  size_t summands() const { return types.size(); }
  // Row vector of rep picking out the generator of summand s.
  std::vector<Rat> generator_row(size_t s) const;
};

ProjectiveModule projective_module(AlgebraPtr alg, const std::vector<size_t>& types);

// eA for each designated idempotent, with inclusion into the regular module.
struct ProjectiveSummand {
  size_t idempotent_index;
  ProjectiveModule proj;
};
std::vector<ProjectiveSummand> projective_summands(AlgebraPtr alg);

struct CoverResult {
  ProjectiveModule p;
  Matrix pi;  // p.rep.dim x m.dim, surjective, kernel inside rad(P)
};
// Minimal projective cover P = sum (e_i A)^{c_i} with c_i = dim((M/MJ) e_i).
// Surjectivity and minimality (ker pi inside P*J) are checked.
CoverResult projective_cover(const ModuleRep& m);

struct SyzygyResult {
  ModuleRep omega;
  Matrix inclusion;  // omega.dim x p.rep.dim
  CoverResult cover;
};
SyzygyResult syzygy(const ModuleRep& m);
ModuleRep omega_n(const ModuleRep& m, size_t n);

// Matrix over the algebra describing a map between direct sums of corner
// projectives: entry (r,c) lies in e_{col_type} A e_{row_type} and acts by
// left multiplication, mapping summand r of the source into summand c of
// the target (row-vector convention).
struct ProjMatrix {
  AlgebraPtr alg;
  std::vector<size_t> row_types, col_types;
  std::vector<std::vector<AlgElt>> entries;  // [r][c]
};

// Linear realization of a ProjMatrix between explicit projective modules.
Matrix proj_matrix_linear(const ProjMatrix& d, const ProjectiveModule& src,
                          const ProjectiveModule& dst);

// Minimal presentation P1 -> P0 -> M -> 0 built from two covers; exactness
// and minimality at both stages are certified.
struct Presentation {
  ProjectiveModule p0, p1;
  ProjMatrix d;
  Matrix pi;
};
Presentation minimal_presentation(const ModuleRep& m);

// Auslander-Bridger transpose: apply Hom(-, A) to the minimal presentation
// through the corner identification Hom(e A, A) = A e and take the cokernel
// over the opposite algebra. Tr(projective) = 0.
ModuleRep transpose_module(const ModuleRep& m);

// Left adjoint of the syzygy functor on the stable category, computed as
// Tr Omega Tr with minimal presentations at every stage.
ModuleRep sigma(const ModuleRep& m);
ModuleRep sigma_n(const ModuleRep& m, size_t n);

struct TorsionlessQuotient {
  ModuleRep quot;
  Matrix projection;
  size_t kernel_dim = 0;
};
// M modulo the common kernel of all maps into the regular module; the
// result embeds into A^r, which is checked.
TorsionlessQuotient torsionless_quotient(const ModuleRep& m);

// Dimensions of Ext^i(M, A) for i = 1..i_max from a minimal projective
// resolution, with Hom(-, A) computed through the corner spaces.
std::vector<size_t> ext_against_algebra(const ModuleRep& m, size_t i_max);

struct PdimResult {
  bool bounded = false;
  size_t value = 0;               // the projective dimension when bounded
  std::string method;             // "syzygy-iteration" or "local-radical"
  std::vector<size_t> syzygy_dims;
};
// Iterates syzygies and reports the first d with Omega^d projective, or
// "at least n_max+1". Over a local algebra a non-projective module cannot
// have finite projective dimension (a free submodule of rad(P) would
// survive multiplication by the last nonzero radical power), so the scan
// short-circuits; force_iterate disables that shortcut for cross-checks.
PdimResult pdim_bounded(const ModuleRep& m, size_t n_max, bool force_iterate = false);

}  // namespace deloop
