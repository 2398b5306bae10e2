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

#include "homological.hpp"

#include <stdexcept>

namespace deloop {

std::vector<Rat> ProjectiveModule::generator_row(size_t s) const {
  std::vector<Rat> v(rep.dim);
  const std::vector<Rat>& g = gen_coords[s];
  for (size_t k = 0; k < g.size(); ++k) v[offsets[s] + k] = g[k];
  return v;
}

ProjectiveModule projective_module(AlgebraPtr alg, const std::vector<size_t>& types) {
  ProjectiveModule p;
  p.types = types;
  std::vector<ModuleRep> parts;
  size_t off = 0;
  for (size_t t : types) {
    if (t >= alg->idempotents.size())
      throw std::invalid_argument("projective summand type out of range");
    const AlgElt& e = alg->idempotents[t];
    RowSpace span(alg->dim());
    for (size_t j = 0; j < alg->dim(); ++j)
      span.insert(alg->mult(e, alg->basis_elt(j)));
    Matrix basis = span.basis_matrix();
    auto gc = span.coords(e);
    if (!gc) throw std::runtime_error("idempotent not inside its own corner");
    std::vector<Matrix> act;
    for (size_t b = 0; b < alg->dim(); ++b) {
      Matrix ab(basis.rows(), basis.rows());
      for (size_t i = 0; i < basis.rows(); ++i) {
        std::vector<Rat> w = alg->mult(basis.row(i), alg->basis_elt(b));
        auto c = span.coords(w);
        if (!c) throw std::runtime_error("corner projective is not action closed");
        ab.set_row(i, *c);
      }
      act.push_back(std::move(ab));
    }
    parts.push_back(make_module(alg, std::move(act), {}, false));
    p.comp_basis.push_back(std::move(basis));
    p.gen_coords.push_back(std::move(*gc));
    p.offsets.push_back(off);
    off += parts.back().dim;
  }
  DirectSum ds = direct_sum(alg, parts);
  p.rep = std::move(ds.rep);
  require_module_axioms(p.rep);
  return p;
}

std::vector<ProjectiveSummand> projective_summands(AlgebraPtr alg) {
  std::vector<ProjectiveSummand> res;
  for (size_t t = 0; t < alg->idempotents.size(); ++t)
    res.push_back({t, projective_module(alg, {t})});
  return res;
}

CoverResult projective_cover(const ModuleRep& m) {
  AlgebraPtr alg = m.alg;
  QuotientResult t = top(m);
  const size_t tdim = t.quot.dim;

  // Split the top into idempotent eigenspaces and lift a basis of each.
  std::vector<size_t> types;
  std::vector<std::vector<Rat>> lifts;  // representatives in M with v = v e_t
  size_t covered = 0;
  for (size_t e = 0; e < alg->idempotents.size(); ++e) {
    Matrix te = t.quot.act_elt(alg->idempotents[e]);
    Matrix basis = image_basis(te);
    for (size_t r = 0; r < basis.rows(); ++r) {
      // Preimage through the section of the top projection, then forced
      // into the e-corner so the summand map kills the complement; this
      // stays a lift because the top vector is an e-eigenvector.
      std::vector<Rat> v(m.dim);
      for (size_t j = 0; j < tdim; ++j) v[t.section_cols[j]] = basis.at(r, j);
      v = act_row(m, v, alg->idempotents[e]);
      types.push_back(e);
      lifts.push_back(std::move(v));
    }
    covered += basis.rows();
  }
  if (covered != tdim)
    throw std::runtime_error("top does not decompose along the designated idempotents");

  ProjectiveModule p = projective_module(alg, types);
  Matrix pi(p.rep.dim, m.dim);
  for (size_t s = 0; s < p.summands(); ++s) {
    // Images of the whole summand from the images of the lift under the
    // algebra basis.
    std::vector<std::vector<Rat>> lift_orbit;
    lift_orbit.reserve(alg->dim());
    for (size_t b = 0; b < alg->dim(); ++b)
      lift_orbit.push_back(m.action[b].apply_row(lifts[s]));
    const Matrix& cb = p.comp_basis[s];
    for (size_t k = 0; k < cb.rows(); ++k) {
      std::vector<Rat> img(m.dim);
      for (size_t b = 0; b < alg->dim(); ++b) {
        const Rat& c = cb.at(k, b);
        if (c == 0) continue;
        for (size_t l = 0; l < m.dim; ++l)
          if (lift_orbit[b][l] != 0) img[l] += c * lift_orbit[b][l];
      }
      pi.set_row(p.offsets[s] + k, img);
    }
  }
  require_morphism(p.rep, m, pi, "projective cover");
  if (rank(pi) != m.dim)
    throw std::runtime_error("projective cover map is not surjective");

  // Minimality: ker(pi) inside P*J = direct sum of the e_t J, block by block.
  KernelBasis ker = kernel_basis(pi);
  Matrix j = radical_basis(*alg);
  std::vector<RowSpace> rad_of_type;
  for (size_t s = 0; s < p.summands(); ++s) {
    RowSpace corner(alg->dim());
    corner.insert_rows(p.comp_basis[s]);
    RowSpace ej(p.comp_basis[s].rows());
    for (size_t r = 0; r < j.rows(); ++r) {
      AlgElt w = alg->mult(alg->idempotents[p.types[s]], j.row(r));
      auto coords = corner.coords(w);
      if (!coords) throw std::runtime_error("e*J escapes the corner projective");
      ej.insert(*coords);
    }
    rad_of_type.push_back(std::move(ej));
  }
  for (size_t r = 0; r < ker.basis.rows(); ++r)
    for (size_t s = 0; s < p.summands(); ++s) {
      std::vector<Rat> block(p.comp_basis[s].rows());
      for (size_t k = 0; k < block.size(); ++k) block[k] = ker.basis.at(r, p.offsets[s] + k);
      if (!rad_of_type[s].contains(block))
        throw std::runtime_error("cover is not minimal: kernel escapes rad(P)");
    }

  return CoverResult{std::move(p), std::move(pi)};
}

SyzygyResult syzygy(const ModuleRep& m) {
  SyzygyResult res;
  if (m.dim == 0) {
    res.omega = zero_module(m.alg);
    res.inclusion = Matrix(0, 0);
    res.cover.p = projective_module(m.alg, {});
    res.cover.pi = Matrix(0, 0);
    return res;
  }
  res.cover = projective_cover(m);
  const ProjectiveModule& p = res.cover.p;
  KernelBasis ker = kernel_basis(res.cover.pi);
  const size_t kdim = ker.basis.rows();
  std::vector<Matrix> act;
  for (size_t b = 0; b < m.alg->dim(); ++b) {
    Matrix ab(kdim, kdim);
    for (size_t i = 0; i < kdim; ++i) {
      std::vector<Rat> w = p.rep.action[b].apply_row(ker.basis.row(i));
      // Kernel basis vectors carry identifying 1s at coord_cols, so
      // coordinates in the basis read off directly.
      for (size_t j = 0; j < kdim; ++j) ab.at(i, j) = w[ker.coord_cols[j]];
    }
    act.push_back(std::move(ab));
  }
  res.omega = make_module(m.alg, std::move(act));
  res.inclusion = std::move(ker.basis);
  require_morphism(res.omega, p.rep, res.inclusion, "syzygy inclusion");
  return res;
}

ModuleRep omega_n(const ModuleRep& m, size_t n) {
  ModuleRep cur = m;
  for (size_t i = 0; i < n; ++i) cur = syzygy(cur).omega;
  return cur;
}

Matrix proj_matrix_linear(const ProjMatrix& d, const ProjectiveModule& src,
                          const ProjectiveModule& dst) {
  const Algebra& a = *d.alg;
  Matrix lin(src.rep.dim, dst.rep.dim);
  std::vector<RowSpace> dst_spaces;
  for (size_t c = 0; c < dst.summands(); ++c) {
    RowSpace rs(a.dim());
    rs.insert_rows(dst.comp_basis[c]);
    dst_spaces.push_back(std::move(rs));
  }
  for (size_t r = 0; r < src.summands(); ++r) {
    const Matrix& cb = src.comp_basis[r];
    for (size_t k = 0; k < cb.rows(); ++k) {
      for (size_t c = 0; c < dst.summands(); ++c) {
        AlgElt img = a.mult(d.entries[r][c], cb.row(k));
        auto coords = dst_spaces[c].coords(img);
        if (!coords) throw std::runtime_error("ProjMatrix image escapes target corner");
        for (size_t l = 0; l < coords->size(); ++l)
          lin.at(src.offsets[r] + k, dst.offsets[c] + l) = (*coords)[l];
      }
    }
  }
  return lin;
}

Presentation minimal_presentation(const ModuleRep& m) {
  Presentation pres;
  SyzygyResult s0 = syzygy(m);
  pres.p0 = std::move(s0.cover.p);
  pres.pi = std::move(s0.cover.pi);

  CoverResult c1 =
      s0.omega.dim > 0 ? projective_cover(s0.omega)
                       : CoverResult{projective_module(m.alg, {}), Matrix(0, s0.omega.dim)};
  pres.p1 = std::move(c1.p);
  Matrix d_lin = c1.pi * s0.inclusion;  // P1 -> Omega -> P0

  // Extract algebra-element entries: the generator of summand r maps to a
  // tuple whose block c has coordinates in comp_basis to pull back into A.
  pres.d.alg = m.alg;
  pres.d.row_types = pres.p1.types;
  pres.d.col_types = pres.p0.types;
  pres.d.entries.assign(pres.p1.summands(), std::vector<AlgElt>());
  const Algebra& a = *m.alg;
  for (size_t r = 0; r < pres.p1.summands(); ++r) {
    std::vector<Rat> gen = pres.p1.generator_row(r);
    std::vector<Rat> img = d_lin.apply_row(gen);
    for (size_t c = 0; c < pres.p0.summands(); ++c) {
      AlgElt w(a.dim());
      const Matrix& cb = pres.p0.comp_basis[c];
      for (size_t k = 0; k < cb.rows(); ++k) {
        const Rat& coeff = img[pres.p0.offsets[c] + k];
        if (coeff == 0) continue;
        for (size_t l = 0; l < a.dim(); ++l)
          if (cb.at(k, l) != 0) w[l] += coeff * cb.at(k, l);
      }
      // Corner membership: w = e_{col} w e_{row}.
      AlgElt chk = a.mult(a.idempotents[pres.d.col_types[c]],
                          a.mult(w, a.idempotents[pres.d.row_types[r]]));
      if (chk != w) throw std::runtime_error("presentation entry escapes its corner");
      pres.d.entries[r].push_back(std::move(w));
    }
  }

  // Exactness: the realized map has image ker(pi) and composes to zero.
  Matrix realized = proj_matrix_linear(pres.d, pres.p1, pres.p0);
  if (realized != d_lin) throw std::runtime_error("presentation entries do not realize d");
  if (!(d_lin * pres.pi).is_zero()) throw std::runtime_error("presentation does not compose to zero");
  if (rank(d_lin) != s0.omega.dim)
    throw std::runtime_error("presentation is not exact at P0");
  return pres;
}

namespace {

// Hom(e A, A) = A e as a right module over the opposite algebra: u . b = b u.
struct DualCorner {
  Matrix basis;  // rows span A e inside A
};

ModuleRep dual_sum_module(AlgebraPtr op, AlgebraPtr a,
                          const std::vector<size_t>& types,
                          std::vector<DualCorner>& corners_out,
                          std::vector<size_t>& offsets_out) {
  std::vector<ModuleRep> parts;
  size_t off = 0;
  for (size_t t : types) {
    const AlgElt& e = a->idempotents[t];
    RowSpace span(a->dim());
    for (size_t j = 0; j < a->dim(); ++j)
      span.insert(a->mult(a->basis_elt(j), e));
    Matrix basis = span.basis_matrix();
    std::vector<Matrix> act;
    for (size_t b = 0; b < a->dim(); ++b) {
      Matrix ab(basis.rows(), basis.rows());
      for (size_t i = 0; i < basis.rows(); ++i) {
        AlgElt w = a->mult(a->basis_elt(b), basis.row(i));
        auto c = span.coords(w);
        if (!c) throw std::runtime_error("A e is not closed under left multiplication");
        ab.set_row(i, *c);
      }
      act.push_back(std::move(ab));
    }
    parts.push_back(make_module(op, std::move(act), {}, false));
    corners_out.push_back(DualCorner{std::move(basis)});
    offsets_out.push_back(off);
    off += parts.back().dim;
  }
  DirectSum ds = direct_sum(op, parts);
  require_module_axioms(ds.rep);
  return ds.rep;
}

}  // namespace

ModuleRep transpose_module(const ModuleRep& m) {
  AlgebraPtr op = opposite(m.alg);
  if (m.dim == 0) return zero_module(op);
  Presentation pres = minimal_presentation(m);
  if (pres.p1.summands() == 0) return zero_module(op);  // m projective

  const Algebra& a = *m.alg;
  std::vector<DualCorner> c0, c1;
  std::vector<size_t> off0, off1;
  ModuleRep p0_dual = dual_sum_module(op, m.alg, pres.p0.types, c0, off0);
  ModuleRep p1_dual = dual_sum_module(op, m.alg, pres.p1.types, c1, off1);

  // d^*: (u_c)_c |-> (sum_c u_c w(r,c))_r on the corner bases.
  std::vector<RowSpace> c1_spaces;
  for (const DualCorner& c : c1) {
    RowSpace rs(a.dim());
    rs.insert_rows(c.basis);
    c1_spaces.push_back(std::move(rs));
  }
  Matrix dstar(p0_dual.dim, p1_dual.dim);
  for (size_t c = 0; c < pres.p0.summands(); ++c) {
    const Matrix& cb = c0[c].basis;
    for (size_t k = 0; k < cb.rows(); ++k) {
      for (size_t r = 0; r < pres.p1.summands(); ++r) {
        AlgElt img = a.mult(cb.row(k), pres.d.entries[r][c]);
        auto coords = c1_spaces[r].coords(img);
        if (!coords) throw std::runtime_error("dual map escapes target corner");
        for (size_t l = 0; l < coords->size(); ++l)
          dstar.at(off0[c] + k, off1[r] + l) = (*coords)[l];
      }
    }
  }
  require_morphism(p0_dual, p1_dual, dstar, "dualized presentation map");
  Matrix image = image_basis(dstar);
  QuotientResult q = quotient(p1_dual, image);
  return q.quot;
}

ModuleRep sigma(const ModuleRep& m) {
  if (m.dim == 0) return m;
  ModuleRep tr = transpose_module(m);
  ModuleRep otr = syzygy(tr).omega;
  ModuleRep t2 = transpose_module(otr);
  return rebase(t2, m.alg);
}

ModuleRep sigma_n(const ModuleRep& m, size_t n) {
  ModuleRep cur = m;
  for (size_t i = 0; i < n; ++i) cur = sigma(cur);
  return cur;
}

TorsionlessQuotient torsionless_quotient(const ModuleRep& m) {
  ModuleRep reg = regular_module(m.alg);
  std::vector<Matrix> maps = hom_space(m, reg);
  Matrix stacked(m.dim, 0);
  for (const Matrix& f : maps) stacked = Matrix::hstack(stacked, f);
  TorsionlessQuotient res;
  if (maps.empty()) {
    // No maps into the regular module: the quotient is zero.
    Matrix full = Matrix::identity(m.dim);
    QuotientResult q = quotient(m, full);
    res.quot = std::move(q.quot);
    res.projection = std::move(q.projection);
    res.kernel_dim = m.dim;
    return res;
  }
  KernelBasis common = kernel_basis(stacked);
  res.kernel_dim = common.basis.rows();
  QuotientResult q = quotient(m, common.basis);
  // The quotient embeds into A^r: the stacked map must drop rank by exactly
  // the kernel dimension.
  if (rank(stacked) != m.dim - res.kernel_dim)
    throw std::runtime_error("torsionless quotient does not embed into A^r");
  res.quot = std::move(q.quot);
  res.projection = std::move(q.projection);
  return res;
}

std::vector<size_t> ext_against_algebra(const ModuleRep& m, size_t i_max) {
  if (i_max < 1) throw std::invalid_argument("ext_against_algebra requires i_max >= 1");
  AlgebraPtr op = opposite(m.alg);
  const Algebra& a = *m.alg;

  // Minimal resolution to depth i_max + 1, as ProjMatrices d_i: P_i -> P_{i-1}.
  std::vector<std::vector<size_t>> types;    // per P_i
  std::vector<ProjMatrix> maps;              // d_1 .. d_{i_max+1}
  {
    ModuleRep cur = m;
    Presentation pres = minimal_presentation(m);
    types.push_back(pres.p0.types);
    types.push_back(pres.p1.types);
    maps.push_back(pres.d);
    ModuleRep om = syzygy(m).omega;
    for (size_t i = 2; i <= i_max + 1; ++i) {
      if (om.dim == 0) break;
      Presentation pr = minimal_presentation(om);
      types.push_back(pr.p1.types);
      maps.push_back(pr.d);
      om = syzygy(om).omega;
    }
  }

  // Dualize: D_i = Hom(P_i, A) with the induced maps; complex property holds.
  std::vector<size_t> dual_dims;
  std::vector<Matrix> dual_maps;  // M_i: D_{i-1} -> D_i
  std::vector<std::vector<DualCorner>> corners(types.size());
  std::vector<std::vector<size_t>> offs(types.size());
  std::vector<ModuleRep> duals;
  for (size_t i = 0; i < types.size(); ++i) {
    duals.push_back(dual_sum_module(op, m.alg, types[i], corners[i], offs[i]));
    dual_dims.push_back(duals.back().dim);
  }
  for (size_t i = 1; i < types.size(); ++i) {
    const ProjMatrix& d = maps[i - 1];
    std::vector<RowSpace> tgt;
    for (const DualCorner& c : corners[i]) {
      RowSpace rs(a.dim());
      rs.insert_rows(c.basis);
      tgt.push_back(std::move(rs));
    }
    Matrix mi(dual_dims[i - 1], dual_dims[i]);
    for (size_t c = 0; c < types[i - 1].size(); ++c) {
      const Matrix& cb = corners[i - 1][c].basis;
      for (size_t k = 0; k < cb.rows(); ++k)
        for (size_t r = 0; r < types[i].size(); ++r) {
          AlgElt img = a.mult(cb.row(k), d.entries[r][c]);
          auto coords = tgt[r].coords(img);
          if (!coords) throw std::runtime_error("Ext dual map escapes corner");
          for (size_t l = 0; l < coords->size(); ++l)
            mi.at(offs[i - 1][c] + k, offs[i][r] + l) = (*coords)[l];
        }
    }
    dual_maps.push_back(std::move(mi));
  }
  for (size_t i = 0; i + 1 < dual_maps.size(); ++i)
    if (!(dual_maps[i] * dual_maps[i + 1]).is_zero())
      throw std::runtime_error("dualized resolution is not a complex");

  std::vector<size_t> ext(i_max, 0);
  for (size_t i = 1; i <= i_max; ++i) {
    if (i >= types.size()) break;  // resolution terminated, Ext vanishes
    size_t rank_in = rank(dual_maps[i - 1]);
    size_t rank_out = (i < dual_maps.size()) ? rank(dual_maps[i]) : 0;
    ext[i - 1] = dual_dims[i] - rank_out - rank_in;
  }
  return ext;
}

PdimResult pdim_bounded(const ModuleRep& m, size_t n_max, bool force_iterate) {
  PdimResult res;
  res.syzygy_dims.push_back(m.dim);
  const bool local = m.alg->idempotents.size() == 1;

  ModuleRep cur = m;
  for (size_t d = 0; d <= n_max; ++d) {
    SyzygyResult s = syzygy(cur);
    if (s.omega.dim == 0) {
      res.bounded = true;
      res.value = d;
      res.method = "syzygy-iteration";
      return res;
    }
    res.syzygy_dims.push_back(s.omega.dim);
    if (local && !force_iterate) {
      // Not projective over a local algebra: no finite resolution exists.
      res.bounded = false;
      res.method = "local-radical";
      return res;
    }
    cur = std::move(s.omega);
  }
  res.bounded = false;
  res.method = "syzygy-iteration";
  return res;
}

}  // namespace deloop
