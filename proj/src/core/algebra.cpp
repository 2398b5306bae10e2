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

#include "algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace deloop {

AlgElt Algebra::unit_elt() const { return basis_elt(unit); }

AlgElt Algebra::basis_elt(size_t i) const {
  AlgElt e(dim());
  e[i] = 1;
  return e;
}

AlgElt Algebra::mult(const AlgElt& u, const AlgElt& v) const {
  AlgElt r(dim());
  for (size_t i = 0; i < dim(); ++i) {
    if (u[i] == 0) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (v[j] == 0) continue;
      const Rat c = u[i] * v[j];
      const AlgElt& t = table[i][j];
      for (size_t l = 0; l < dim(); ++l)
        if (t[l] != 0) r[l] += c * t[l];
    }
  }
  return r;
}

AlgElt Algebra::eval_word(const std::vector<size_t>& word) const {
  AlgElt acc = unit_elt();
  for (size_t i : word) acc = mult(acc, basis_elt(i));
  return acc;
}

Matrix Algebra::right_mult(size_t j) const {
  Matrix m(dim(), dim());
  for (size_t i = 0; i < dim(); ++i)
    for (size_t l = 0; l < dim(); ++l) m.at(i, l) = table[i][j][l];
  return m;
}

Matrix Algebra::right_mult_elt(const AlgElt& v) const {
  Matrix m(dim(), dim());
  for (size_t j = 0; j < dim(); ++j) {
    if (v[j] == 0) continue;
    for (size_t i = 0; i < dim(); ++i)
      for (size_t l = 0; l < dim(); ++l)
        if (table[i][j][l] != 0) m.at(i, l) += v[j] * table[i][j][l];
  }
  return m;
}

Matrix Algebra::left_mult(size_t i) const {
  Matrix m(dim(), dim());
  for (size_t j = 0; j < dim(); ++j)
    for (size_t l = 0; l < dim(); ++l) m.at(j, l) = table[i][j][l];
  return m;
}

Matrix Algebra::left_mult_elt(const AlgElt& v) const {
  Matrix m(dim(), dim());
  for (size_t i = 0; i < dim(); ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < dim(); ++j)
      for (size_t l = 0; l < dim(); ++l)
        if (table[i][j][l] != 0) m.at(j, l) += v[i] * table[i][j][l];
  }
  return m;
}

size_t Algebra::index_of(const std::string& label) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == label) return i;
  throw std::invalid_argument("no basis element labelled '" + label + "' in " + name);
}

namespace {

std::string elt_str(const Algebra& a, const AlgElt& v) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!first) os << " + ";
    os << rat_to_string(v[i]) << "*" << a.basis[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

bool is_zero_elt(const AlgElt& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

ValidationReport validate(const Algebra& a) {
  ValidationReport rep;
  const size_t n = a.dim();
  if (a.table.size() != n)
    throw std::invalid_argument("structure constant table has wrong shape");
  for (size_t i = 0; i < n; ++i) {
    if (a.table[i].size() != n)
      throw std::invalid_argument("structure constant table has wrong shape");
    for (size_t j = 0; j < n; ++j)
      if (a.table[i][j].size() != n)
        throw std::invalid_argument("structure constant table has wrong shape");
  }

  // Unit law.
  for (size_t i = 0; i < n; ++i) {
    AlgElt ei = a.basis_elt(i);
    if (a.table[a.unit][i] != ei) {
      rep.ok = false;
      rep.violations.push_back("unit law fails on the left at " + a.basis[i]);
    }
    if (a.table[i][a.unit] != ei) {
      rep.ok = false;
      rep.violations.push_back("unit law fails on the right at " + a.basis[i]);
    }
  }

  // Associativity, exhaustively.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const AlgElt& ij = a.table[i][j];
      for (size_t l = 0; l < n; ++l) {
        ++rep.assoc_triples;
        AlgElt lhs = a.mult(ij, a.basis_elt(l));
        AlgElt rhs = a.mult(a.basis_elt(i), a.table[j][l]);
        if (lhs != rhs) {
          rep.ok = false;
          rep.violations.push_back("associativity fails on (" + a.basis[i] + ", " +
                                   a.basis[j] + ", " + a.basis[l] + ")");
        }
      }
    }

  // Idempotent axioms.
  const size_t ne = a.idempotents.size();
  if (ne == 0) {
    rep.ok = false;
    rep.violations.push_back("no designated idempotents");
  }
  AlgElt total(n);
  for (size_t i = 0; i < ne; ++i) {
    const AlgElt& e = a.idempotents[i];
    if (a.mult(e, e) != e) {
      rep.ok = false;
      rep.violations.push_back("idempotent " + std::to_string(i) + " fails e^2 = e");
    }
    for (size_t j = 0; j < ne; ++j) {
      if (i == j) continue;
      if (!is_zero_elt(a.mult(e, a.idempotents[j]))) {
        rep.ok = false;
        rep.violations.push_back("idempotents " + std::to_string(i) + ", " +
                                 std::to_string(j) + " are not orthogonal");
      }
    }
    for (size_t l = 0; l < n; ++l) total[l] += e[l];
  }
  if (ne > 0 && total != a.unit_elt()) {
    rep.ok = false;
    rep.violations.push_back("designated idempotents do not sum to 1");
  }

  // Stored defining relations must evaluate to zero in the table.
  for (const Relation& rel : a.relations) {
    AlgElt acc(n);
    for (const auto& [word, coeff] : rel.terms) {
      AlgElt w = a.eval_word(word);
      for (size_t l = 0; l < n; ++l) acc[l] += coeff * w[l];
    }
    if (!is_zero_elt(acc)) {
      rep.ok = false;
      rep.violations.push_back("relation " + rel.label +
                               " does not vanish: " + elt_str(a, acc));
    }
  }

  return rep;
}

namespace {

void check_split_basic(const Algebra& a) {
  Matrix j = radical_basis(a);
  // dim(A/J) must equal the number of idempotents, and each e_i(A/J) must be
  // one-dimensional: dim(e_i A) - dim(e_i J) == 1.
  if (a.dim() - j.rows() != a.idempotents.size())
    throw std::invalid_argument("algebra " + a.name + " is not split basic: dim(A/J) = " +
                                std::to_string(a.dim() - j.rows()) + " but " +
                                std::to_string(a.idempotents.size()) + " idempotents");
  for (size_t k = 0; k < a.idempotents.size(); ++k) {
    Matrix le = a.left_mult_elt(a.idempotents[k]);
    // e_i A = row space of the left multiplication, e_i J likewise on J.
    size_t dim_ea = rank(le);
    Matrix ej(j.rows(), a.dim());
    for (size_t r = 0; r < j.rows(); ++r)
      ej.set_row(r, a.mult(a.idempotents[k], j.row(r)));
    size_t dim_ej = rank(ej);
    if (dim_ea - dim_ej != 1)
      throw std::invalid_argument("algebra " + a.name + " is not split basic at idempotent " +
                                  std::to_string(k));
  }
}

}  // namespace

AlgebraPtr finalize_algebra(Algebra a) {
  ValidationReport rep = validate(a);
  if (!rep.ok) {
    std::string msg = "algebra " + a.name + " fails validation:";
    for (const std::string& v : rep.violations) msg += "\n  " + v;
    throw std::invalid_argument(msg);
  }
  check_split_basic(a);
  return std::make_shared<const Algebra>(std::move(a));
}

AlgebraPtr make_algebra_unchecked(Algebra a) {
  return std::make_shared<const Algebra>(std::move(a));
}

bool same_table(const Algebra& a, const Algebra& b) {
  return a.basis == b.basis && a.unit == b.unit && a.table == b.table &&
         a.idempotents == b.idempotents;
}

Matrix radical_basis(const Algebra& a) {
  const size_t n = a.dim();
  // Gram matrix of the trace form: G[i][j] = tr(L_{b_i b_j}).
  std::vector<Rat> tr(n);
  for (size_t l = 0; l < n; ++l) {
    Rat s(0);
    for (size_t j = 0; j < n; ++j) s += a.table[l][j][j];
    tr[l] = s;
  }
  Matrix gram(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rat s(0);
      for (size_t l = 0; l < n; ++l)
        if (a.table[i][j][l] != 0) s += a.table[i][j][l] * tr[l];
      gram.at(i, j) = s;
    }
  KernelBasis kb = kernel_basis(gram);
  Matrix j = image_basis(kb.basis);

  // Postconditions: two-sided ideal, nilpotent.
  RowSpace jspace(n);
  jspace.insert_rows(j);
  for (size_t r = 0; r < j.rows(); ++r)
    for (size_t i = 0; i < n; ++i) {
      if (!jspace.contains(a.mult(j.row(r), a.basis_elt(i))))
        throw std::runtime_error("radical candidate is not a right ideal in " + a.name);
      if (!jspace.contains(a.mult(a.basis_elt(i), j.row(r))))
        throw std::runtime_error("radical candidate is not a left ideal in " + a.name);
    }
  Matrix power = j;
  for (size_t k = 0; k + 1 < n + 2 && power.rows() > 0; ++k) {
    RowSpace next(n);
    for (size_t r = 0; r < power.rows(); ++r)
      for (size_t s = 0; s < j.rows(); ++s)
        next.insert(a.mult(power.row(r), j.row(s)));
    power = next.basis_matrix();
    if (power.rows() == 0) return j;
  }
  if (power.rows() > 0)
    throw std::runtime_error("radical candidate is not nilpotent in " + a.name);
  return j;
}

AlgebraPtr opposite(AlgebraPtr a) {
  Algebra op;
  op.name = "op(" + a->name + ")";
  op.basis = a->basis;
  op.unit = a->unit;
  op.params = a->params;
  op.idempotents = a->idempotents;
  const size_t n = a->dim();
  op.table.assign(n, std::vector<AlgElt>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) op.table[i][j] = a->table[j][i];
  for (const Relation& rel : a->relations) {
    Relation r;
    r.label = rel.label + "^op";
    for (const auto& [word, coeff] : rel.terms) {
      std::vector<size_t> rev(word.rbegin(), word.rend());
      r.terms.emplace_back(std::move(rev), coeff);
    }
    op.relations.push_back(std::move(r));
  }
  return finalize_algebra(std::move(op));
}

AlgebraPtr make_field_algebra() {
  Algebra a;
  a.name = "k";
  a.basis = {"1"};
  a.unit = 0;
  a.table = {{{Rat(1)}}};
  a.idempotents = {{Rat(1)}};
  return finalize_algebra(std::move(a));
}

AlgebraPtr make_dual_numbers() {
  Algebra a;
  a.name = "k[x]/(x^2)";
  a.basis = {"1", "x"};
  a.unit = 0;
  AlgElt zero(2), one(2), x(2);
  one[0] = 1;
  x[1] = 1;
  a.table = {{one, x}, {x, zero}};
  a.idempotents = {one};
  a.relations.push_back({"x^2", {{{1, 1}, Rat(1)}}});
  return finalize_algebra(std::move(a));
}

AlgebraPtr build_lambda(const Rat& q) {
  if (q == 0 || q == 1 || q == -1)
    throw std::invalid_argument(
        "q must have infinite multiplicative order; over Q this excludes 0, 1 and -1 "
        "(got q = " + rat_to_string(q) + ")");

  Algebra a;
  a.name = "lambda(" + rat_to_string(q) + ")";
  a.basis = {"1", "x", "y", "z", "yx", "zx"};
  a.unit = 0;
  a.params["q"] = q;
  const size_t n = 6;
  const size_t I1 = 0, IX = 1, IY = 2, IZ = 3, IYX = 4, IZX = 5;
  a.table.assign(n, std::vector<AlgElt>(n, AlgElt(n)));
  auto set = [&](size_t i, size_t j, size_t l, const Rat& c) { a.table[i][j][l] = c; };
  // Unit row and column.
  for (size_t i = 0; i < n; ++i) {
    set(I1, i, i, Rat(1));
    if (i != I1) set(i, I1, i, Rat(1));
  }
  // Normal forms of the generator products; every other product of radical
  // basis elements is zero (the radical cubes to zero).
  set(IX, IY, IYX, Rat(-1) / q);
  set(IY, IX, IYX, Rat(1));
  set(IX, IZ, IZX, Rat(1));
  set(IZ, IX, IZX, Rat(1));
  set(IY, IZ, IZX, Rat(1));

  a.idempotents = {a.basis_elt(I1)};

  auto rel1 = [](std::string label, std::vector<size_t> w) {
    return Relation{std::move(label), {{std::move(w), Rat(1)}}};
  };
  a.relations.push_back(rel1("x^2", {IX, IX}));
  a.relations.push_back(rel1("y^2", {IY, IY}));
  a.relations.push_back(rel1("z^2", {IZ, IZ}));
  a.relations.push_back(rel1("zy", {IZ, IY}));
  a.relations.push_back({"yx+q*xy", {{{IY, IX}, Rat(1)}, {{IX, IY}, q}}});
  a.relations.push_back({"zx-xz", {{{IZ, IX}, Rat(1)}, {{IX, IZ}, Rat(-1)}}});
  a.relations.push_back({"yz-xz", {{{IY, IZ}, Rat(1)}, {{IX, IZ}, Rat(-1)}}});

  return finalize_algebra(std::move(a));
}

SubalgebraEmbedding make_embedding(AlgebraPtr ambient, AlgebraPtr sub,
                                   Matrix inclusion, bool check) {
  if (inclusion.rows() != sub->dim() || inclusion.cols() != ambient->dim())
    throw std::invalid_argument("embedding matrix has wrong shape");
  if (check) {
    if (rank(inclusion) != sub->dim())
      throw std::invalid_argument("embedding is not injective");
    // iota(1_sub) must be 1_ambient and iota(ab) = iota(a) iota(b).
    if (inclusion.row(sub->unit) != ambient->unit_elt())
      throw std::invalid_argument("embedding does not preserve the unit");
    for (size_t i = 0; i < sub->dim(); ++i)
      for (size_t j = 0; j < sub->dim(); ++j) {
        AlgElt lhs = ambient->mult(inclusion.row(i), inclusion.row(j));
        AlgElt rhs = inclusion.apply_row(sub->table[i][j]);
        if (lhs != rhs)
          throw std::invalid_argument("embedding is not multiplicative at (" +
                                      sub->basis[i] + ", " + sub->basis[j] + ")");
      }
  }
  return SubalgebraEmbedding{std::move(ambient), std::move(sub), std::move(inclusion)};
}

SubalgebraEmbedding build_gamma(AlgebraPtr lambda) {
  AlgebraPtr gamma = make_dual_numbers();
  Matrix incl(2, lambda->dim());
  incl.at(0, lambda->unit) = 1;
  incl.at(1, lambda->index_of("x")) = 1;
  return make_embedding(std::move(lambda), std::move(gamma), std::move(incl));
}

}  // namespace deloop
