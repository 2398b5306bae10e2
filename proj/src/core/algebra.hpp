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

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace deloop {

// Element of an algebra as a coefficient vector over its basis.
using AlgElt = std::vector<Rat>;

// A defining relation kept alongside a constructed algebra: a formal linear
// combination of words in the basis elements that must evaluate to zero in
// the multiplication table. Words are sequences of basis indices.
struct Relation {
  std::string label;
  std::vector<std::pair<std::vector<size_t>, Rat>> terms;
};

// Finite-dimensional associative unital algebra given by structure
// constants, with a designated complete set of primitive orthogonal
// idempotents. All algebras here are split basic: every simple module is
// one-dimensional, which is checked at construction.
struct Algebra {
  std::string name;  // internal handle, e.g. "lambda(2)"; not serialized
  std::vector<std::string> basis;
  size_t unit = 0;
  // table[i][j] = coefficients of b_i * b_j over the basis
  std::vector<std::vector<AlgElt>> table;
  std::vector<AlgElt> idempotents;
  std::map<std::string, Rat> params;
  std::vector<Relation> relations;

  size_t dim() const { return basis.size(); }
  AlgElt unit_elt() const;
  AlgElt basis_elt(size_t i) const;
  AlgElt mult(const AlgElt& u, const AlgElt& v) const;
  AlgElt eval_word(const std::vector<size_t>& word) const;
  // Right multiplication by b_j as a matrix on row vectors: u |-> u * b_j.
  Matrix right_mult(size_t j) const;
  Matrix right_mult_elt(const AlgElt& v) const;
  Matrix left_mult(size_t i) const;
  Matrix left_mult_elt(const AlgElt& v) const;
  size_t index_of(const std::string& label) const;  // throws if absent
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct ValidationReport {
  bool ok = true;
  size_t assoc_triples = 0;
  std::vector<std::string> violations;
};

// Checks associativity on all dim^3 triples, the unit law, the idempotent
// axioms (e_i^2 = e_i, e_i e_j = 0, sum e_i = 1) and any stored relations.
// Failures become report entries, never exceptions.
ValidationReport validate(const Algebra& a);

// Wraps an algebra after running validate (throws std::invalid_argument on
// any violation) and checking the split-basic property.
AlgebraPtr finalize_algebra(Algebra a);
// Escape hatch for mutation tests: no checks at all.
AlgebraPtr make_algebra_unchecked(Algebra a);

bool same_table(const Algebra& a, const Algebra& b);

// Basis of the Jacobson radical as echelon rows, computed from the radical
// of the trace form T(a,b) = tr(L_a L_b) of the left regular representation
// (valid in characteristic zero). Postconditions checked: the result is a
// two-sided ideal and nilpotent.
Matrix radical_basis(const Algebra& a);

AlgebraPtr opposite(AlgebraPtr a);

// Builders.
AlgebraPtr make_field_algebra();  // k itself
AlgebraPtr make_dual_numbers();   // k[x]/(x^2)

// The six-dimensional local algebra on basis 1, x, y, z, yx, zx with
// relations x^2, y^2, z^2, zy, yx + q*xy, zx - xz, yz - xz. Requires q to
// have infinite multiplicative order; over Q that excludes exactly 0, 1, -1.
AlgebraPtr build_lambda(const Rat& q);

struct SubalgebraEmbedding {
  AlgebraPtr ambient;
  AlgebraPtr sub;
  Matrix inclusion;  // rows: sub basis expressed in the ambient basis
};

// The subalgebra of lambda generated by x, with basis {1, x}. The embedding
// is verified multiplicative and unital.
SubalgebraEmbedding build_gamma(AlgebraPtr lambda);

// Generic embedding constructor with multiplicativity/unit checks.
SubalgebraEmbedding make_embedding(AlgebraPtr ambient, AlgebraPtr sub,
                                   Matrix inclusion, bool check = true);

}  // namespace deloop
