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

#include "dell.hpp"

#include <random>
#include <stdexcept>

#include "poly.hpp"

namespace deloop {

namespace {

std::vector<Rat> vec_of(const Matrix& m) {
  std::vector<Rat> v(m.rows() * m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
  return v;
}

}  // namespace

StableHom stable_hom(const ModuleRep& x, const ModuleRep& y) {
  StableHom sh;
  sh.total = hom_space(x, y);
  if (x.dim == 0 || y.dim == 0) {
    sh.quotient_dim = 0;
    return sh;
  }
  CoverResult cy = projective_cover(y);
  std::vector<Matrix> lifts = hom_space(x, cy.p.rep);
  RowSpace triv(x.dim * y.dim);
  for (const Matrix& l : lifts) {
    Matrix f = l * cy.pi;
    if (triv.insert(vec_of(f))) sh.proj_trivial.push_back(std::move(f));
  }
  sh.quotient_dim = sh.total.size() - triv.dim();
  return sh;
}

StableEnd::StableEnd(const ModuleRep& x) : xdim_(x.dim) {
  StableHom sh = stable_hom(x, x);
  RowSpace span(x.dim * x.dim);
  std::vector<std::vector<Rat>> rows;
  for (const Matrix& f : sh.proj_trivial) {
    std::vector<Rat> v = vec_of(f);
    if (span.insert(v)) rows.push_back(std::move(v));
  }
  triv_dim_ = rows.size();
  for (const Matrix& h : sh.total) {
    std::vector<Rat> v = vec_of(h);
    if (span.insert(v)) {
      rows.push_back(std::move(v));
      cls_reps_.push_back(h);
    }
  }
  cb_ = Matrix::from_rows(rows, x.dim * x.dim);
}

std::vector<Rat> StableEnd::reduce(const Matrix& endo) const {
  Matrix rhs(1, xdim_ * xdim_);
  rhs.set_row(0, vec_of(endo));
  auto sol = solve_left(cb_, rhs);
  if (!sol) throw std::runtime_error("endomorphism outside End(X) span");
  std::vector<Rat> cls(cls_reps_.size());
  for (size_t k = 0; k < cls.size(); ++k) cls[k] = sol->at(0, triv_dim_ + k);
  return cls;
}

Matrix StableEnd::left_mult(const Matrix& endo) const {
  const size_t m = cls_reps_.size();
  Matrix l(m, m);
  for (size_t k = 0; k < m; ++k) {
    std::vector<Rat> c = reduce(endo * cls_reps_[k]);
    l.set_row(k, c);
  }
  return l;
}

bool StableEnd::is_stable_unit(const Matrix& endo) const {
  if (cls_reps_.empty()) return true;  // stably zero object
  return determinant(left_mult(endo)) != 0;
}

std::string cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::Witness: return "witness";
    case CertKind::ParityObstruction: return "parity-obstruction";
    case CertKind::SymbolicZero: return "symbolic-zero";
    case CertKind::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

CertKind cert_kind_from_name(const std::string& s) {
  if (s == "witness") return CertKind::Witness;
  if (s == "parity-obstruction") return CertKind::ParityObstruction;
  if (s == "symbolic-zero") return CertKind::SymbolicZero;
  if (s == "inconclusive") return CertKind::Inconclusive;
  throw std::invalid_argument("unknown certificate kind '" + s + "'");
}

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["kind"] = cert_kind_name(c.kind);
  j["statement"] = c.statement;
  if (!c.assumes.empty()) j["assumes"] = c.assumes;
  j["payload"] = c.payload;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.kind = cert_kind_from_name(j.at("kind").get<std::string>());
  c.statement = j.at("statement").get<std::string>();
  if (j.contains("assumes")) c.assumes = j.at("assumes").get<std::string>();
  c.payload = j.at("payload");
  return c;
}

namespace {

// Embeds a module (actions plus its algebra) into a payload, so replay can
// rebuild everything without context. Only used at fixture scale.
Json embed_module(const ModuleRep& m) {
  return module_to_json(m);
}

constexpr size_t kEmbedDimCap = 16;

}  // namespace

GammaContext make_gamma_context(SubalgebraEmbedding emb) {
  GammaContext g;
  ModuleRep reg = regular_module(emb.ambient);
  ModuleRep res = restrict_module(reg, emb);
  GammaFreeness fr = is_gamma_free(res);
  g.usable = fr.free;
  g.regular_rank = fr.rank;
  g.emb = std::move(emb);
  return g;
}

Certificate is_stable_summand(const ModuleRep& x, const ModuleRep& y,
                              const GammaContext* gamma, uint64_t seed,
                              const Effort& effort) {
  if (!same_table(*x.alg, *y.alg))
    throw std::invalid_argument("is_stable_summand: modules over different algebras");

  Certificate cert;
  cert.statement = "X is a stable direct summand of Y (dim X = " + std::to_string(x.dim) +
                   ", dim Y = " + std::to_string(y.dim) + ")";
  cert.payload["dim_x"] = x.dim;
  cert.payload["dim_y"] = y.dim;

  // Zero or projective X is a stable summand of anything.
  if (x.dim == 0) {
    cert.kind = CertKind::Witness;
    cert.payload["note"] = "source is the zero module";
    return cert;
  }

  // Parity shortcut: a free restriction over the registered subalgebra
  // forces every stable summand to have even dimension, because the
  // ambient regular module restricts freely as well.
  if (gamma && gamma->usable && same_table(*x.alg, *gamma->emb.ambient) && x.dim % 2 == 1) {
    GammaFreeness fr = is_gamma_free(restrict_module(y, gamma->emb));
    if (fr.free) {
      cert.kind = CertKind::ParityObstruction;
      cert.payload["gamma_rank"] = fr.rank;
      cert.payload["gamma_regular_rank"] = gamma->regular_rank;
      cert.payload["ambient_dim"] = x.alg->dim();
      if (x.dim <= kEmbedDimCap) cert.payload["x_module"] = embed_module(x);
      return cert;
    }
  }

  if (syzygy(x).omega.dim == 0) {
    cert.kind = CertKind::Witness;
    cert.payload["note"] = "source is projective, hence stably zero";
    if (x.dim <= kEmbedDimCap) cert.payload["x_module"] = embed_module(x);
    return cert;
  }

  if (x.dim * y.dim > effort.max_hom_unknowns) {
    cert.kind = CertKind::Inconclusive;
    cert.payload["reason"] = "hom system exceeds the configured size cap";
    return cert;
  }

  std::vector<Matrix> hxy = hom_space(x, y);
  std::vector<Matrix> hyx = hom_space(y, x);
  StableEnd se(x);
  cert.payload["stable_end_dim"] = se.dim();
  cert.payload["hom_xy_dim"] = hxy.size();
  cert.payload["hom_yx_dim"] = hyx.size();

  auto witness = [&](const Matrix& f, const Matrix& g) {
    cert.kind = CertKind::Witness;
    cert.payload["f"] = json_from_matrix(f);
    cert.payload["g"] = json_from_matrix(g);
    if (x.dim <= kEmbedDimCap) cert.payload["x_module"] = embed_module(x);
    if (y.dim <= kEmbedDimCap) cert.payload["y_module"] = embed_module(y);
    return cert;
  };

  if (hxy.empty() || hyx.empty()) {
    // Every composite is zero and X is not stably zero.
    cert.kind = CertKind::SymbolicZero;
    cert.payload["note"] = "one of the hom spaces vanishes";
    if (x.dim <= kEmbedDimCap) cert.payload["x_module"] = embed_module(x);
    if (y.dim <= kEmbedDimCap) cert.payload["y_module"] = embed_module(y);
    return cert;
  }

  // Randomized witness search (positive certificates only).
  std::mt19937_64 rng(seed ^ 0xd3110c47ULL);
  std::uniform_int_distribution<long> dist(-effort.coeff_range, effort.coeff_range);
  for (size_t trial = 0; trial < effort.random_trials; ++trial) {
    Matrix f(x.dim, y.dim), g(y.dim, x.dim);
    for (const Matrix& h : hxy) {
      long c = dist(rng);
      if (c != 0) f = f + h.scaled(Rat(c));
    }
    for (const Matrix& h : hyx) {
      long c = dist(rng);
      if (c != 0) g = g + h.scaled(Rat(c));
    }
    if (se.is_stable_unit(f * g)) return witness(f, g);
  }

  // Symbolic decision: the determinant of left multiplication by the class
  // of the generic composite, as a polynomial in the hom coefficients.
  const size_t nvars = hxy.size() + hyx.size();
  if (nvars > effort.max_symbolic_vars) {
    cert.kind = CertKind::Inconclusive;
    cert.payload["reason"] = "symbolic determinant exceeds the variable cap";
    cert.payload["vars"] = nvars;
    return cert;
  }
  const size_t m = se.dim();
  std::vector<std::vector<MPoly>> lp(m, std::vector<MPoly>(m, MPoly(nvars)));
  for (size_t i = 0; i < hxy.size(); ++i)
    for (size_t j = 0; j < hyx.size(); ++j) {
      Matrix comp = hxy[i] * hyx[j];
      MPoly st = MPoly::variable(nvars, i) * MPoly::variable(nvars, hxy.size() + j);
      for (size_t k = 0; k < m; ++k) {
        std::vector<Rat> coords = se.reduce(comp * se.class_reps()[k]);
        for (size_t l = 0; l < m; ++l)
          if (coords[l] != 0) lp[k][l] = lp[k][l] + st.scaled(coords[l]);
      }
    }
  MPoly det = det_poly(lp, nvars);
  if (det.is_zero()) {
    cert.kind = CertKind::SymbolicZero;
    cert.payload["vars"] = nvars;
    if (x.dim <= kEmbedDimCap) cert.payload["x_module"] = embed_module(x);
    if (y.dim <= kEmbedDimCap) cert.payload["y_module"] = embed_module(y);
    return cert;
  }
  // Extract a nonvanishing point deterministically.
  for (long range = 2; range < 64; ++range) {
    std::uniform_int_distribution<long> wide(-range, range);
    for (size_t trial = 0; trial < 64; ++trial) {
      std::vector<Rat> point(nvars);
      for (size_t v = 0; v < nvars; ++v) point[v] = Rat(wide(rng));
      if (det.eval(point) == 0) continue;
      Matrix f(x.dim, y.dim), g(y.dim, x.dim);
      for (size_t i = 0; i < hxy.size(); ++i)
        if (point[i] != 0) f = f + hxy[i].scaled(point[i]);
      for (size_t j = 0; j < hyx.size(); ++j)
        if (point[hxy.size() + j] != 0) g = g + hyx[j].scaled(point[hxy.size() + j]);
      if (!se.is_stable_unit(f * g))
        throw std::runtime_error("witness extraction disagreed with the determinant");
      return witness(f, g);
    }
  }
  throw std::runtime_error("failed to hit a nonvanishing point of a nonzero determinant");
}

Certificate gelinas_check(const ModuleRep& m, size_t n, const GammaContext* gamma,
                          uint64_t seed, const Effort& effort) {
  ModuleRep x = omega_n(m, n);
  ModuleRep z = sigma_n(x, n + 1);
  ModuleRep y = omega_n(z, n + 1);
  Certificate cert = is_stable_summand(x, y, gamma, seed + n, effort);
  cert.statement = "delooping test at level " + std::to_string(n) +
                   ": Omega^n M is a stable summand of Omega^(n+1) Sigma^(n+1) Omega^n M";
  cert.payload["n"] = n;
  cert.payload["dim_m"] = m.dim;
  cert.payload["dim_sigma_chain"] = z.dim;
  if (cert.negative())
    cert.assumes =
        "negative direction uses the equivalence: dell M <= n iff Omega^n M is a "
        "stable summand of Omega^(n+1) Sigma^(n+1) Omega^n M (canonical codomain "
        "provided by the left adjoint of the syzygy functor)";
  return cert;
}

DellResult dell_upper(const ModuleRep& m, size_t n_max, const GammaContext* gamma,
                      uint64_t seed, const Effort& effort) {
  DellResult res;
  for (size_t n = 0; n <= n_max; ++n) {
    Certificate c = gelinas_check(m, n, gamma, seed, effort);
    res.certificates.push_back(c);
    if (c.positive()) {
      res.outcome = DellResult::Outcome::Exact;
      res.value = n;
      return res;
    }
    if (c.kind == CertKind::Inconclusive) {
      res.outcome = DellResult::Outcome::Undecided;
      res.value = n;
      return res;
    }
  }
  res.outcome = DellResult::Outcome::GreaterThan;
  res.value = n_max;
  return res;
}

DellResult dell_algebra_upper(AlgebraPtr alg, size_t n_max, const GammaContext* gamma,
                              uint64_t seed, const Effort& effort) {
  DellResult res;
  res.outcome = DellResult::Outcome::Exact;
  res.value = 0;
  for (size_t e = 0; e < alg->idempotents.size(); ++e) {
    DellResult r = dell_upper(simple_module(alg, e), n_max, gamma, seed, effort);
    for (Certificate& c : r.certificates) res.certificates.push_back(std::move(c));
    if (r.outcome == DellResult::Outcome::Undecided) {
      res.outcome = DellResult::Outcome::Undecided;
      res.value = r.value;
      return res;
    }
    if (r.outcome == DellResult::Outcome::GreaterThan) {
      res.outcome = DellResult::Outcome::GreaterThan;
      res.value = n_max;
    } else if (res.outcome == DellResult::Outcome::Exact) {
      res.value = std::max(res.value, r.value);
    }
  }
  return res;
}

ParityReport gamma_parity_report(AlgebraPtr lambda, const Rat& q,
                                 const GammaContext& gamma, size_t n_max,
                                 uint64_t seed) {
  ParityReport rep;
  if (!gamma.usable) {
    rep.ok = false;
    rep.detail = "registered subalgebra is unusable: the regular module does not restrict freely";
    return rep;
  }
  ModuleRep mq = build_m_alpha(lambda, q);
  ModuleRep os = syzygy(sigma(mq)).omega;  // Omega Sigma M(q)
  ModuleRep xn = mq;
  ModuleRep wn = os;
  for (size_t n = 0; n <= n_max; ++n) {
    if (n > 0) {
      xn = syzygy(xn).omega;
      wn = syzygy(wn).omega;
    }
    rep.omega_dims.push_back(xn.dim);
    if (xn.dim != 3) {
      rep.ok = false;
      rep.detail = "syzygy " + std::to_string(n) + " of M(q) is not three-dimensional";
      return rep;
    }
    ModuleRep target = build_m_alpha(lambda, q * rat_pow(q, static_cast<long>(n)));
    auto iso = is_isomorphic(xn, target, seed + n);
    if (!iso) {
      rep.ok = false;
      rep.detail = "syzygy " + std::to_string(n) + " of M(q) does not match M(q^(n+1))";
      return rep;
    }
    GammaFreeness fr = is_gamma_free(restrict_module(wn, gamma.emb));
    if (!fr.free) {
      rep.ok = false;
      rep.detail = "syzygy " + std::to_string(n) +
                   " of Omega Sigma M(q) is not free over the subalgebra";
      return rep;
    }
    rep.gamma_ranks.push_back(fr.rank);

    Certificate c;
    c.kind = CertKind::ParityObstruction;
    c.statement = "level " + std::to_string(n) +
                  ": Omega^n M(q) is odd-dimensional while Omega^n(Omega Sigma M(q)) "
                  "restricts to a free module";
    c.payload["n"] = n;
    c.payload["dim_x"] = xn.dim;
    c.payload["dim_y"] = wn.dim;
    c.payload["gamma_rank"] = fr.rank;
    c.payload["gamma_regular_rank"] = gamma.regular_rank;
    c.payload["ambient_dim"] = lambda->dim();
    c.payload["iso_witness"] = json_from_matrix(*iso);
    c.payload["x_module"] = module_to_json(xn);
    rep.certificates.push_back(std::move(c));
  }
  return rep;
}

bool replay_certificate(const Certificate& c, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  try {
    switch (c.kind) {
      case CertKind::ParityObstruction: {
        const size_t dim_x = c.payload.at("dim_x").get<size_t>();
        const size_t dim_y = c.payload.at("dim_y").get<size_t>();
        const size_t grank = c.payload.at("gamma_rank").get<size_t>();
        const size_t rrank = c.payload.at("gamma_regular_rank").get<size_t>();
        const size_t adim = c.payload.at("ambient_dim").get<size_t>();
        if (dim_x % 2 == 0) return fail("source dimension is even");
        if (2 * grank != dim_y) return fail("free rank does not match target dimension");
        if (2 * rrank != adim) return fail("regular module rank does not match algebra dimension");
        if (c.payload.contains("x_module")) {
          ModuleRep x = module_from_json(c.payload.at("x_module"));
          if (x.dim != dim_x) return fail("embedded source has the wrong dimension");
        }
        return true;
      }
      case CertKind::Witness: {
        if (!c.payload.contains("f")) return true;  // stably-zero source
        if (!c.payload.contains("x_module"))
          return fail("witness does not embed its source module");
        ModuleRep x = module_from_json(c.payload.at("x_module"));
        Matrix f = matrix_from_json(c.payload.at("f"));
        Matrix g = matrix_from_json(c.payload.at("g"));
        Matrix comp = f * g;
        if (!is_morphism(x, x, comp)) return fail("composite is not an endomorphism");
        if (c.payload.contains("y_module")) {
          ModuleRep y = module_from_json(c.payload.at("y_module"));
          if (!is_morphism(x, y, f) || !is_morphism(y, x, g))
            return fail("witness pair is not a pair of module maps");
        }
        StableEnd se(x);
        if (!se.is_stable_unit(comp)) return fail("composite is not a stable unit");
        return true;
      }
      case CertKind::SymbolicZero: {
        if (c.payload.contains("x_module") && c.payload.contains("y_module")) {
          ModuleRep x = module_from_json(c.payload.at("x_module"));
          ModuleRep y = module_from_json(c.payload.at("y_module"));
          // Recompute the decision deterministically (no search involved).
          Certificate again = is_stable_summand(x, y, nullptr, 0, Effort{0, 3, 24, 1 << 20});
          if (again.kind != CertKind::SymbolicZero)
            return fail("recomputed decision is not symbolically zero");
          return true;
        }
        return c.payload.contains("note") || c.payload.contains("vars");
      }
      case CertKind::Inconclusive:
        return true;  // certifies nothing
    }
  } catch (const std::exception& e) {
    return fail(std::string("replay error: ") + e.what());
  }
  return false;
}

}  // namespace deloop
