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

#include "module.hpp"

#include <random>
#include <stdexcept>

#include "poly.hpp"

namespace deloop {

namespace {

void require_same_algebra(const ModuleRep& x, const ModuleRep& y, const char* what) {
  if (x.alg.get() == y.alg.get()) return;
  if (!same_table(*x.alg, *y.alg))
    throw std::invalid_argument(std::string(what) + ": modules live over different algebras");
}

}  // namespace

Matrix ModuleRep::act_elt(const AlgElt& v) const {
  Matrix m(dim, dim);
  for (size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    m = m + action[j].scaled(v[j]);
  }
  return m;
}

std::vector<Rat> act_row(const ModuleRep& m, const std::vector<Rat>& row, const AlgElt& a) {
  std::vector<Rat> out(m.dim);
  for (size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0) continue;
    std::vector<Rat> w = m.action[j].apply_row(row);
    for (size_t k = 0; k < m.dim; ++k)
      if (w[k] != 0) out[k] += a[j] * w[k];
  }
  return out;
}

void require_module_axioms(const ModuleRep& m) {
  const Algebra& a = *m.alg;
  if (m.action.size() != a.dim())
    throw std::invalid_argument("module must carry one action matrix per basis element");
  for (const Matrix& mat : m.action)
    if (mat.rows() != m.dim || mat.cols() != m.dim)
      throw std::invalid_argument("action matrix shape mismatch");
  if (!m.action[a.unit].is_identity())
    throw std::invalid_argument("unit does not act as the identity");
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) {
      Matrix lhs = m.action[i] * m.action[j];
      Matrix rhs(m.dim, m.dim);
      for (size_t l = 0; l < a.dim(); ++l) {
        const Rat& c = a.table[i][j][l];
        if (c == 0) continue;
        rhs = rhs + m.action[l].scaled(c);
      }
      if (lhs != rhs)
        throw std::invalid_argument("module axiom fails at (" + a.basis[i] + ", " +
                                    a.basis[j] + ")");
    }
}

ModuleRep make_module(AlgebraPtr alg, std::vector<Matrix> action,
                      std::vector<std::string> labels, bool check) {
  ModuleRep m;
  m.alg = std::move(alg);
  m.dim = action.empty() ? 0 : action[0].rows();
  m.action = std::move(action);
  m.labels = std::move(labels);
  if (m.action.empty() && m.alg->dim() > 0) {
    m.action.assign(m.alg->dim(), Matrix(0, 0));
    m.dim = 0;
  }
  if (check) require_module_axioms(m);
  return m;
}

bool is_morphism(const ModuleRep& src, const ModuleRep& tgt, const Matrix& f) {
  if (f.rows() != src.dim || f.cols() != tgt.dim) return false;
  for (size_t b = 0; b < src.alg->dim(); ++b)
    if (src.action[b] * f != f * tgt.action[b]) return false;
  return true;
}

void require_morphism(const ModuleRep& src, const ModuleRep& tgt, const Matrix& f,
                      const std::string& what) {
  require_same_algebra(src, tgt, what.c_str());
  if (!is_morphism(src, tgt, f))
    throw std::runtime_error(what + ": matrix is not a module morphism");
}

ModuleRep zero_module(AlgebraPtr alg) {
  std::vector<Matrix> act(alg->dim(), Matrix(0, 0));
  return make_module(std::move(alg), std::move(act), {}, false);
}

ModuleRep regular_module(AlgebraPtr alg) {
  std::vector<Matrix> act;
  act.reserve(alg->dim());
  for (size_t j = 0; j < alg->dim(); ++j) act.push_back(alg->right_mult(j));
  std::vector<std::string> labels = alg->basis;
  return make_module(std::move(alg), std::move(act), std::move(labels));
}

ModuleRep simple_module(AlgebraPtr alg, size_t idempotent_index) {
  if (idempotent_index >= alg->idempotents.size())
    throw std::invalid_argument("idempotent index out of range");
  const AlgElt& e = alg->idempotents[idempotent_index];
  // b acts on the top of eA by the scalar with e*b = lambda*e (mod J).
  RowSpace jspace(alg->dim());
  jspace.insert_rows(radical_basis(*alg));
  std::vector<Rat> e_red = jspace.reduce(e);
  size_t p = 0;
  while (p < e_red.size() && e_red[p] == 0) ++p;
  if (p == e_red.size())
    throw std::invalid_argument("designated idempotent lies in the radical");
  std::vector<Matrix> act;
  for (size_t b = 0; b < alg->dim(); ++b) {
    std::vector<Rat> v = jspace.reduce(alg->mult(e, alg->basis_elt(b)));
    Rat lambda = v[p] / e_red[p];
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != lambda * e_red[j])
        throw std::runtime_error("top of e*A is not one-dimensional; algebra not split basic");
    Matrix m(1, 1);
    m.at(0, 0) = lambda;
    act.push_back(std::move(m));
  }
  return make_module(std::move(alg), std::move(act), {"s"});
}

ModuleRep build_m_alpha(AlgebraPtr lambda, const Rat& alpha) {
  const size_t ix = lambda->index_of("x");
  const size_t iy = lambda->index_of("y");
  const size_t iz = lambda->index_of("z");
  const size_t iyx = lambda->index_of("yx");
  const size_t izx = lambda->index_of("zx");
  std::vector<Matrix> act(lambda->dim(), Matrix(3, 3));
  act[lambda->unit] = Matrix::identity(3);
  act[ix].at(0, 1) = alpha;
  act[iy].at(0, 1) = 1;
  act[iz].at(0, 2) = 1;
  act[iyx] = act[iy] * act[ix];
  act[izx] = act[iz] * act[ix];
  return make_module(std::move(lambda), std::move(act), {"v", "v'", "v''"});
}

std::vector<Matrix> hom_space(const ModuleRep& x, const ModuleRep& y) {
  require_same_algebra(x, y, "hom_space");
  const size_t dx = x.dim, dy = y.dim;
  if (dx == 0 || dy == 0) return {};
  const size_t nb = x.alg->dim();
  const size_t unknowns = dx * dy;
  // One block of dx*dy equations per non-unit basis element.
  size_t eq_rows = 0;
  for (size_t b = 0; b < nb; ++b)
    if (b != x.alg->unit) eq_rows += dx * dy;
  Matrix e(eq_rows, unknowns);
  size_t row = 0;
  for (size_t b = 0; b < nb; ++b) {
    if (b == x.alg->unit) continue;
    const Matrix& ax = x.action[b];
    const Matrix& ay = y.action[b];
    for (size_t r = 0; r < dx; ++r)
      for (size_t c = 0; c < dy; ++c) {
        for (size_t k = 0; k < dx; ++k)
          if (ax.at(r, k) != 0) e.at(row, k * dy + c) += ax.at(r, k);
        for (size_t k = 0; k < dy; ++k)
          if (ay.at(k, c) != 0) e.at(row, r * dy + k) -= ay.at(k, c);
        ++row;
      }
  }
  KernelBasis kb = kernel_basis(e.transposed());
  std::vector<Matrix> basis;
  basis.reserve(kb.basis.rows());
  for (size_t i = 0; i < kb.basis.rows(); ++i) {
    Matrix h(dx, dy);
    for (size_t r = 0; r < dx; ++r)
      for (size_t c = 0; c < dy; ++c) h.at(r, c) = kb.basis.at(i, r * dy + c);
    basis.push_back(std::move(h));
  }
  return basis;
}

std::optional<Matrix> is_isomorphic(const ModuleRep& x, const ModuleRep& y, uint64_t seed) {
  require_same_algebra(x, y, "is_isomorphic");
  if (x.dim != y.dim) return std::nullopt;
  if (x.dim == 0) return Matrix(0, 0);
  std::vector<Matrix> hom = hom_space(x, y);
  if (hom.empty()) return std::nullopt;
  const size_t h = hom.size(), d = x.dim;

  std::mt19937_64 rng(seed ^ 0x15ca1ab1e5ULL);
  std::uniform_int_distribution<long> dist(-3, 3);
  for (size_t trial = 0; trial < 24; ++trial) {
    Matrix cand(d, d);
    for (size_t i = 0; i < h; ++i) {
      long c = dist(rng);
      if (c != 0) cand = cand + hom[i].scaled(Rat(c));
    }
    if (determinant(cand) != 0) return cand;
  }

  if (h > 6 || d > 12)
    throw std::runtime_error(
        "isomorphism test inconclusive: random sampling found no unit and the "
        "symbolic determinant exceeds the configured size caps");

  // Generic determinant det(sum s_i h_i) as a polynomial in the s_i;
  // identically zero certifies that no isomorphism exists.
  std::vector<std::vector<MPoly>> generic(d, std::vector<MPoly>(d, MPoly(h)));
  for (size_t r = 0; r < d; ++r)
    for (size_t c = 0; c < d; ++c) {
      MPoly entry(h);
      for (size_t i = 0; i < h; ++i)
        if (hom[i].at(r, c) != 0)
          entry = entry + MPoly::variable(h, i).scaled(hom[i].at(r, c));
      generic[r][c] = entry;
    }
  MPoly det = det_poly(generic, h);
  if (det.is_zero()) return std::nullopt;

  // A nonvanishing point exists; widen the sample range until we hit one.
  for (long range = 1; range < 64; ++range) {
    std::uniform_int_distribution<long> wide(-range - 3, range + 3);
    for (size_t trial = 0; trial < 64; ++trial) {
      std::vector<Rat> point(h);
      for (size_t i = 0; i < h; ++i) point[i] = Rat(wide(rng));
      if (det.eval(point) == 0) continue;
      Matrix cand(d, d);
      for (size_t i = 0; i < h; ++i)
        if (point[i] != 0) cand = cand + hom[i].scaled(point[i]);
      return cand;
    }
  }
  throw std::runtime_error("failed to sample a nonvanishing point of a nonzero polynomial");
}

Matrix DirectSum::injection(size_t k) const {
  Matrix m(dims[k], rep.dim);
  for (size_t i = 0; i < dims[k]; ++i) m.at(i, offsets[k] + i) = 1;
  return m;
}

Matrix DirectSum::projection(size_t k) const {
  Matrix m(rep.dim, dims[k]);
  for (size_t i = 0; i < dims[k]; ++i) m.at(offsets[k] + i, i) = 1;
  return m;
}

DirectSum direct_sum(AlgebraPtr alg, const std::vector<ModuleRep>& parts) {
  DirectSum ds;
  std::vector<Matrix> blocks;
  size_t off = 0;
  for (const ModuleRep& p : parts) {
    if (!same_table(*alg, *p.alg))
      throw std::invalid_argument("direct_sum: algebra mismatch");
    ds.offsets.push_back(off);
    ds.dims.push_back(p.dim);
    off += p.dim;
  }
  std::vector<Matrix> act;
  for (size_t b = 0; b < alg->dim(); ++b) {
    std::vector<Matrix> bl;
    for (const ModuleRep& p : parts) bl.push_back(p.action[b]);
    act.push_back(Matrix::block_diag(bl));
  }
  ds.rep = make_module(alg, std::move(act), {}, false);
  return ds;
}

SubmoduleResult submodule_generated(const ModuleRep& m, const Matrix& generators) {
  if (generators.cols() != m.dim)
    throw std::invalid_argument("submodule_generated: generator width " +
                                std::to_string(generators.cols()) +
                                " does not match module dimension " + std::to_string(m.dim));
  RowSpace span(m.dim);
  std::vector<std::vector<Rat>> queue;
  for (size_t i = 0; i < generators.rows(); ++i) {
    std::vector<Rat> v = generators.row(i);
    if (span.insert(v)) queue.push_back(std::move(v));
  }
  while (!queue.empty()) {
    std::vector<Rat> v = std::move(queue.back());
    queue.pop_back();
    for (size_t b = 0; b < m.alg->dim(); ++b) {
      if (b == m.alg->unit) continue;
      std::vector<Rat> w = m.action[b].apply_row(v);
      if (span.insert(w)) queue.push_back(std::move(w));
    }
  }
  Matrix basis = span.basis_matrix();
  SubmoduleResult res;
  std::vector<Matrix> act;
  for (size_t b = 0; b < m.alg->dim(); ++b) {
    Matrix ab(basis.rows(), basis.rows());
    for (size_t i = 0; i < basis.rows(); ++i) {
      std::vector<Rat> w = m.action[b].apply_row(basis.row(i));
      auto c = span.coords(w);
      if (!c) throw std::runtime_error("submodule closure failure");
      ab.set_row(i, *c);
    }
    act.push_back(std::move(ab));
  }
  res.sub = make_module(m.alg, std::move(act));
  res.inclusion = std::move(basis);
  require_morphism(res.sub, m, res.inclusion, "submodule inclusion");
  return res;
}

QuotientResult quotient(const ModuleRep& m, const Matrix& submodule_rows,
                        bool check_closed) {
  if (submodule_rows.cols() != m.dim)
    throw std::invalid_argument("quotient: submodule width mismatch");
  RowSpace u(m.dim);
  u.insert_rows(submodule_rows);
  if (check_closed)
    for (const auto& r : u.rows())
      for (size_t b = 0; b < m.alg->dim(); ++b)
        if (!u.contains(m.action[b].apply_row(r)))
          throw std::invalid_argument("quotient: subspace is not a submodule");
  std::vector<bool> is_pivot(m.dim, false);
  for (size_t p : u.pivots()) is_pivot[p] = true;
  std::vector<size_t> free;
  for (size_t j = 0; j < m.dim; ++j)
    if (!is_pivot[j]) free.push_back(j);
  const size_t qdim = free.size();

  QuotientResult res;
  res.projection = Matrix(m.dim, qdim);
  for (size_t i = 0; i < m.dim; ++i) {
    std::vector<Rat> unit_row(m.dim);
    unit_row[i] = 1;
    std::vector<Rat> red = u.reduce(std::move(unit_row));
    for (size_t j = 0; j < qdim; ++j) res.projection.at(i, j) = red[free[j]];
  }
  std::vector<Matrix> act;
  for (size_t b = 0; b < m.alg->dim(); ++b) {
    Matrix ab(qdim, qdim);
    for (size_t i = 0; i < qdim; ++i) {
      std::vector<Rat> v(m.dim);
      v[free[i]] = 1;
      std::vector<Rat> w = u.reduce(m.action[b].apply_row(v));
      for (size_t j = 0; j < qdim; ++j) ab.at(i, j) = w[free[j]];
    }
    act.push_back(std::move(ab));
  }
  std::vector<std::string> labels;
  if (m.labels.size() == m.dim)
    for (size_t j : free) labels.push_back(m.labels[j] + "~");
  res.quot = make_module(m.alg, std::move(act), std::move(labels));
  res.section_cols = std::move(free);
  require_morphism(m, res.quot, res.projection, "quotient projection");
  return res;
}

SubmoduleResult radical_submodule(const ModuleRep& m) {
  Matrix j = radical_basis(*m.alg);
  std::vector<std::vector<Rat>> rows;
  for (size_t r = 0; r < j.rows(); ++r) {
    Matrix aj = m.act_elt(j.row(r));
    for (size_t i = 0; i < m.dim; ++i) rows.push_back(aj.row(i));
  }
  return submodule_generated(m, Matrix::from_rows(rows, m.dim));
}

QuotientResult top(const ModuleRep& m) {
  return quotient(m, radical_submodule(m).inclusion, /*check_closed=*/false);
}

ModuleRep dual_module(const ModuleRep& m) {
  AlgebraPtr op = opposite(m.alg);
  std::vector<Matrix> act;
  act.reserve(m.action.size());
  for (const Matrix& a : m.action) act.push_back(a.transposed());
  std::vector<std::string> labels;
  if (m.labels.size() == m.dim)
    for (const std::string& l : m.labels) labels.push_back(l + "*");
  return make_module(std::move(op), std::move(act), std::move(labels));
}

ModuleRep restrict_module(const ModuleRep& m, const SubalgebraEmbedding& emb) {
  if (!same_table(*m.alg, *emb.ambient))
    throw std::invalid_argument("restrict: module is not over the ambient algebra");
  if (emb.inclusion.row(emb.sub->unit) != emb.ambient->unit_elt())
    throw std::invalid_argument("restrict: embedding does not preserve the unit");
  std::vector<Matrix> act;
  for (size_t g = 0; g < emb.sub->dim(); ++g)
    act.push_back(m.act_elt(emb.inclusion.row(g)));
  return make_module(emb.sub, std::move(act), m.labels);
}

GammaFreeness is_gamma_free(const ModuleRep& m) {
  const Algebra& a = *m.alg;
  if (a.dim() != 2)
    throw std::invalid_argument("gamma-freeness requires a two-dimensional algebra");
  const size_t o = (a.unit == 0) ? 1 : 0;
  for (const Rat& c : a.table[o][o])
    if (c != 0)
      throw std::invalid_argument("gamma-freeness requires the shape k[x]/(x^2)");
  const size_t r = rank(m.action[o]);
  GammaFreeness res;
  res.free = (m.dim % 2 == 0) && (2 * r == m.dim);
  res.rank = res.free ? r : 0;
  return res;
}

ModuleRep rebase(const ModuleRep& m, AlgebraPtr target) {
  if (!same_table(*m.alg, *target))
    throw std::invalid_argument("rebase: algebras differ structurally");
  ModuleRep r = m;
  r.alg = std::move(target);
  return r;
}

}  // namespace deloop
