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
#include <string>
#include <vector>

#include "homological.hpp"
#include "serialize.hpp"

namespace deloop {

// Hom(X, Y) together with the subspace of maps that factor through a
// projective module. A map factors through some projective iff it lifts
// along the cover of its target, which is how the subspace is computed.
struct StableHom {
  std::vector<Matrix> total;
  std::vector<Matrix> proj_trivial;
  size_t quotient_dim = 0;
};
StableHom stable_hom(const ModuleRep& x, const ModuleRep& y);

// Stable endomorphism algebra of X with explicit class representatives.
// Units are detected by the determinant of left multiplication on the
// class basis, avoiding any local-ring analysis.
class StableEnd {
 public:
  explicit StableEnd(const ModuleRep& x);
  size_t dim() const { return cls_reps_.size(); }
  const std::vector<Matrix>& class_reps() const { return cls_reps_; }
  std::vector<Rat> reduce(const Matrix& endo) const;  // class coordinates
  Matrix left_mult(const Matrix& endo) const;
  bool is_stable_unit(const Matrix& endo) const;

 private:
  size_t xdim_;
  Matrix cb_;  // rows: projectively-trivial basis then class representatives
  size_t triv_dim_;
  std::vector<Matrix> cls_reps_;
};

enum class CertKind { Witness, ParityObstruction, SymbolicZero, Inconclusive };

std::string cert_kind_name(CertKind k);
CertKind cert_kind_from_name(const std::string& s);

// Machine-checkable outcome of a stable-summand decision. Payloads embed
// enough data (including the source module and the algebra) to re-validate
// without re-running any search. Negative delooping certificates record
// the canonical-codomain equivalence they rely on in 'assumes'.
struct Certificate {
  CertKind kind = CertKind::Inconclusive;
  std::string statement;
  std::string assumes;
  Json payload = Json::object();

  bool positive() const { return kind == CertKind::Witness; }
  bool negative() const {
    return kind == CertKind::ParityObstruction || kind == CertKind::SymbolicZero;
  }
};

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

// Re-validates a certificate from its payload alone. Witnesses recompose
// and must be stable units; parity payloads must be arithmetically
// consistent with an embedded odd-dimensional source.
bool replay_certificate(const Certificate& c, std::string* why = nullptr);

// Registered parity subalgebra. Usable only when the ambient regular
// module restricts to a free module, which is what makes the parity
// obstruction sound (projective summands then have even dimension too).
struct GammaContext {
  SubalgebraEmbedding emb;
  bool usable = false;
  size_t regular_rank = 0;
};
GammaContext make_gamma_context(SubalgebraEmbedding emb);

struct Effort {
  size_t random_trials = 24;
  long coeff_range = 3;
  size_t max_symbolic_vars = 12;
  size_t max_hom_unknowns = 2500;
};

// Decides whether maps X -> Y -> X exist whose composite is a unit of the
// stable endomorphism algebra of X. Ladder: parity shortcut (negative),
// randomized witness search (positive only), symbolic determinant
// (either), then inconclusive once the effort caps are exceeded.
Certificate is_stable_summand(const ModuleRep& x, const ModuleRep& y,
                              const GammaContext* gamma, uint64_t seed,
                              const Effort& effort = {});

// Decides the canonical delooping test at level n: whether Omega^n M is a
// stable summand of Omega^(n+1) Sigma^(n+1) Omega^n M. Positive certifies
// dell M <= n; negative certifies dell M > n.
Certificate gelinas_check(const ModuleRep& m, size_t n, const GammaContext* gamma,
                          uint64_t seed, const Effort& effort = {});

struct DellResult {
  enum class Outcome { Exact, GreaterThan, Undecided } outcome = Outcome::Undecided;
  size_t value = 0;  // the level for Exact, the scanned bound for GreaterThan
  std::vector<Certificate> certificates;
};
// Scans n = 0..n_max; the first positive level is exact. Inconclusive
// certificates abort the scan as Undecided, never silently as negative.
DellResult dell_upper(const ModuleRep& m, size_t n_max, const GammaContext* gamma,
                      uint64_t seed, const Effort& effort = {});

// Convenience wrapper: maximum of dell_upper over the simple modules.
DellResult dell_algebra_upper(AlgebraPtr alg, size_t n_max, const GammaContext* gamma,
                              uint64_t seed, const Effort& effort = {});

// The parity backbone for the module family M(alpha): for each n <= n_max
// verifies that the n-th syzygy of M(q) is three-dimensional and matches
// M(q^{n+1}) with a witness, and that the n-th syzygy of Omega Sigma M(q)
// restricts to a free module over gamma; one certificate per n.
struct ParityReport {
  bool ok = true;
  std::string detail;
  std::vector<Certificate> certificates;
  std::vector<size_t> omega_dims;       // dim of Omega^n M(q)
  std::vector<size_t> gamma_ranks;      // rank of the free restriction per n
};
ParityReport gamma_parity_report(AlgebraPtr lambda, const Rat& q,
                                 const GammaContext& gamma, size_t n_max,
                                 uint64_t seed);

}  // namespace deloop
