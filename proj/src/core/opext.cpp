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

#include "opext.hpp"

#include <set>
#include <stdexcept>

namespace deloop {

OnePointExtension one_point_extension(AlgebraPtr a, const ModuleRep& m) {
  if (!same_table(*a, *m.alg))
    throw std::invalid_argument("one_point_extension: module is not over the base algebra");
  const size_t da = a->dim(), dm = m.dim;
  const size_t dim = 1 + da + dm;

  OnePointExtension ext;
  ext.base = a;
  ext.ext_module = m;
  ext.eps_index = 0;

  // Index layout: 0 = eps, 1..da = A basis slots (unit slot holds 1_B),
  // da+1..da+dm = M basis.
  auto a_slot = [&](size_t j) { return 1 + j; };
  auto m_slot = [&](size_t k) { return 1 + da + k; };
  const size_t unit_b = a_slot(a->unit);

  Algebra b;
  b.name = a->name + "[M]";
  b.unit = unit_b;
  b.params = a->params;
  b.basis.push_back("eps");
  std::set<std::string> seen = {"eps"};
  for (size_t j = 0; j < da; ++j) {
    std::string l = a->basis[j];
    while (seen.count(l)) l += "'";
    seen.insert(l);
    b.basis.push_back(l);
  }
  for (size_t k = 0; k < dm; ++k) {
    std::string l = (m.labels.size() == dm) ? m.labels[k] : ("m" + std::to_string(k));
    while (seen.count(l)) l += "'";
    seen.insert(l);
    b.basis.push_back(l);
  }

  // 1_A maps to 1_B - eps.
  ext.base_embed = Matrix(da, dim);
  for (size_t j = 0; j < da; ++j) {
    if (j == a->unit) {
      ext.base_embed.at(j, unit_b) = 1;
      ext.base_embed.at(j, 0) = -1;
    } else {
      ext.base_embed.at(j, a_slot(j)) = 1;
    }
  }
  ext.module_embed = Matrix(dm, dim);
  for (size_t k = 0; k < dm; ++k) ext.module_embed.at(k, m_slot(k)) = 1;

  b.table.assign(dim, std::vector<AlgElt>(dim, AlgElt(dim)));
  auto put = [&](size_t i, size_t j, AlgElt v) { b.table[i][j] = std::move(v); };
  AlgElt eps(dim);
  eps[0] = 1;

  // Unit row/column and eps * eps.
  for (size_t i = 0; i < dim; ++i) {
    AlgElt ei(dim);
    ei[i] = 1;
    put(unit_b, i, ei);
    if (i != unit_b) put(i, unit_b, std::move(ei));
  }
  put(0, 0, eps);

  // A times A through the embedding (unit coefficients split as 1_B - eps).
  for (size_t i = 0; i < da; ++i) {
    if (i == a->unit) continue;
    for (size_t j = 0; j < da; ++j) {
      if (j == a->unit) continue;
      const AlgElt& prod = a->table[i][j];
      AlgElt v(dim);
      for (size_t l = 0; l < da; ++l) {
        if (prod[l] == 0) continue;
        if (l == a->unit) {
          v[unit_b] += prod[l];
          v[0] -= prod[l];
        } else {
          v[a_slot(l)] += prod[l];
        }
      }
      put(a_slot(i), a_slot(j), std::move(v));
    }
  }

  // eps kills A on both sides; eps * m = m, m * eps = 0.
  for (size_t j = 0; j < da; ++j) {
    if (j == a->unit) continue;
    put(0, a_slot(j), AlgElt(dim));
    put(a_slot(j), 0, AlgElt(dim));
  }
  for (size_t k = 0; k < dm; ++k) {
    AlgElt mk(dim);
    mk[m_slot(k)] = 1;
    put(0, m_slot(k), std::move(mk));
    put(m_slot(k), 0, AlgElt(dim));
  }

  // m * a through the module action; a * m = 0; m * m' = 0.
  for (size_t k = 0; k < dm; ++k)
    for (size_t j = 0; j < da; ++j) {
      if (j == a->unit) continue;
      AlgElt v(dim);
      for (size_t l = 0; l < dm; ++l) {
        const Rat& c = m.action[j].at(k, l);
        if (c != 0) v[m_slot(l)] = c;
      }
      put(m_slot(k), a_slot(j), std::move(v));
    }
  for (size_t j = 0; j < da; ++j) {
    if (j == a->unit) continue;
    for (size_t k = 0; k < dm; ++k) put(a_slot(j), m_slot(k), AlgElt(dim));
  }
  for (size_t k = 0; k < dm; ++k)
    for (size_t l = 0; l < dm; ++l) put(m_slot(k), m_slot(l), AlgElt(dim));

  // Designated idempotents: eps together with the embedded set of A.
  b.idempotents.push_back(eps);
  for (const AlgElt& e : a->idempotents) b.idempotents.push_back(ext.base_embed.apply_row(e));

  ext.result = finalize_algebra(std::move(b));

  // The embedding must be multiplicative with iota(1_A) idempotent.
  for (size_t i = 0; i < da; ++i)
    for (size_t j = 0; j < da; ++j) {
      AlgElt lhs = ext.result->mult(ext.base_embed.row(i), ext.base_embed.row(j));
      AlgElt rhs = ext.base_embed.apply_row(a->table[i][j]);
      if (lhs != rhs)
        throw std::runtime_error("one-point extension does not embed the base algebra");
    }
  return ext;
}

namespace {

ModuleRep inflate_impl(const OnePointExtension& ext, const ModuleRep& n, AlgebraPtr target,
                       bool over_opposite) {
  const AlgebraPtr& a = ext.base;
  if (over_opposite) {
    AlgebraPtr aop = opposite(a);
    if (!same_table(*n.alg, *aop))
      throw std::invalid_argument("inflate_opposite: module is not over op(base)");
    if (!same_table(*target, *opposite(ext.result)))
      throw std::invalid_argument("inflate_opposite: target is not op(B)");
  } else {
    if (!same_table(*n.alg, *a))
      throw std::invalid_argument("inflate: module is not over the base algebra");
  }
  const size_t da = a->dim(), dm = ext.ext_module.dim;
  const size_t dim = 1 + da + dm;
  std::vector<Matrix> act(dim, Matrix(n.dim, n.dim));
  act[1 + a->unit] = Matrix::identity(n.dim);  // 1_B
  for (size_t j = 0; j < da; ++j) {
    if (j == a->unit) continue;
    act[1 + j] = n.action[j];
  }
  // eps and the M slots act by zero.
  return make_module(std::move(target), std::move(act), n.labels);
}

}  // namespace

ModuleRep inflate(const OnePointExtension& ext, const ModuleRep& n) {
  return inflate_impl(ext, n, ext.result, false);
}

ModuleRep inflate_opposite(const OnePointExtension& ext, const ModuleRep& n,
                           AlgebraPtr op_result) {
  return inflate_impl(ext, n, std::move(op_result), true);
}

ModuleRep simple_at_extension_vertex(const OnePointExtension& ext) {
  const size_t dim = ext.result->dim();
  std::vector<Matrix> act(dim, Matrix(1, 1));
  act[ext.eps_index].at(0, 0) = 1;
  act[ext.result->unit].at(0, 0) = 1;
  return make_module(ext.result, std::move(act), {"s_eps"});
}

}  // namespace deloop
