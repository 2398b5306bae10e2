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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace deloop {

// Finitely generated right module as one action matrix per algebra basis
// element, in the row-vector convention: m * rho(a) is the action of a.
// Construction verifies rho(1) = id and rho(b_i) rho(b_j) = sum of
// c(i,j,l) rho(b_l) against the full structure constant table.
struct ModuleRep {
  AlgebraPtr alg;
  size_t dim = 0;
  std::vector<Matrix> action;  // one per algebra basis element
  std::vector<std::string> labels;

  Matrix act_elt(const AlgElt& v) const;  // rho extended linearly
};

// row * rho(a) without materializing rho(a).
std::vector<Rat> act_row(const ModuleRep& m, const std::vector<Rat>& row, const AlgElt& a);

ModuleRep make_module(AlgebraPtr alg, std::vector<Matrix> action,
                      std::vector<std::string> labels = {}, bool check = true);
void require_module_axioms(const ModuleRep& m);

// A module map f: src -> tgt is a src.dim x tgt.dim matrix applied on the
// right of row vectors; equivariance means rho_src(b) f == f rho_tgt(b).
bool is_morphism(const ModuleRep& src, const ModuleRep& tgt, const Matrix& f);
void require_morphism(const ModuleRep& src, const ModuleRep& tgt, const Matrix& f,
                      const std::string& what);

ModuleRep zero_module(AlgebraPtr alg);
ModuleRep regular_module(AlgebraPtr alg);
// The one-dimensional top of e_k A for split basic algebras.
ModuleRep simple_module(AlgebraPtr alg, size_t idempotent_index);

// The three-dimensional module on basis v, v', v'' with v x = alpha v',
// v y = v', v z = v'' and v', v'' annihilated by x, y, z; the actions of
// yx and zx are completed as matrix products.
ModuleRep build_m_alpha(AlgebraPtr lambda, const Rat& alpha);

// Basis of the solution space of the equivariance system.
std::vector<Matrix> hom_space(const ModuleRep& x, const ModuleRep& y);

// Explicit isomorphism witness, or nullopt as a certified negative (the
// generic determinant over the hom space expands to the zero polynomial).
// Beyond the symbolic caps (hom dim <= 6, module dim <= 12), random
// sampling may still return a witness, but a negative outcome throws
// instead of guessing.
std::optional<Matrix> is_isomorphic(const ModuleRep& x, const ModuleRep& y,
                                    uint64_t seed = 0);

struct DirectSum {
  ModuleRep rep;
  std::vector<size_t> offsets;  // one per summand
  std::vector<size_t> dims;
  Matrix injection(size_t k) const;
  Matrix projection(size_t k) const;
};
DirectSum direct_sum(AlgebraPtr alg, const std::vector<ModuleRep>& parts);

struct SubmoduleResult {
  ModuleRep sub;
  Matrix inclusion;  // sub.dim x m.dim
};
// Smallest submodule containing the given row vectors.
SubmoduleResult submodule_generated(const ModuleRep& m, const Matrix& generators);

struct QuotientResult {
  ModuleRep quot;
  Matrix projection;  // m.dim x quot.dim
  // Standard coordinates that section the projection: placing quotient
  // coordinates at these columns of m gives a preimage.
  std::vector<size_t> section_cols;
};
// Quotient by an action-closed row space. check_closed can be dropped by
// callers that obtained the subspace from a closure computation.
QuotientResult quotient(const ModuleRep& m, const Matrix& submodule_rows,
                        bool check_closed = true);

SubmoduleResult radical_submodule(const ModuleRep& m);  // M * J
QuotientResult top(const ModuleRep& m);                 // M / MJ

// Vector space dual as a module over the opposite algebra: actions are the
// transposes. An exact contravariant involution up to natural isomorphism.
ModuleRep dual_module(const ModuleRep& m);

// Pull the action back along a subalgebra embedding (the embedding must be
// unital, which make_embedding enforces).
ModuleRep restrict_module(const ModuleRep& m, const SubalgebraEmbedding& emb);

struct GammaFreeness {
  bool free = false;
  size_t rank = 0;  // meaningful when free
};
// Over k[x]/(x^2) a module is free iff rank rho(x) = dim/2. Throws
// std::invalid_argument when the algebra is not of that shape.
GammaFreeness is_gamma_free(const ModuleRep& m);

// Re-attach a module to a structurally equal algebra object.
ModuleRep rebase(const ModuleRep& m, AlgebraPtr target);

}  // namespace deloop
