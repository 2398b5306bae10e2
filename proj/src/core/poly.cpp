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

#include "poly.hpp"

#include <stdexcept>
#include <unordered_map>

namespace deloop {

MPoly MPoly::constant(size_t nvars, const Rat& c) {
  MPoly p(nvars);
  p.add_term(std::vector<uint32_t>(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(size_t nvars, size_t index) {
  if (index >= nvars) throw std::invalid_argument("variable index out of range");
  MPoly p(nvars);
  std::vector<uint32_t> e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Rat(1));
  return p;
}

void MPoly::add_term(const std::vector<uint32_t>& expo, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(expo);
  if (it == terms_.end()) {
    terms_.emplace(expo, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly MPoly::scaled(const Rat& c) const {
  MPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<uint32_t> e(nvars_);
      for (size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("eval point size mismatch");
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < nvars_; ++i)
      for (uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

namespace {

MPoly det_rec(const std::vector<std::vector<MPoly>>& m, size_t nvars, uint64_t colmask,
              size_t row, std::unordered_map<uint64_t, MPoly>& memo) {
  if (colmask == 0) return MPoly::constant(nvars, Rat(1));
  auto it = memo.find(colmask);
  if (it != memo.end()) return it->second;
  MPoly acc(nvars);
  int sign = 1;
  for (size_t c = 0, seen = 0; c < 64; ++c) {
    if (!(colmask & (uint64_t(1) << c))) continue;
    if (!m[row][c].is_zero()) {
      MPoly minor = det_rec(m, nvars, colmask & ~(uint64_t(1) << c), row + 1, memo);
      MPoly term = m[row][c] * minor;
      acc = (sign > 0) ? acc + term : acc - term;
    }
    sign = -sign;
    ++seen;
  }
  memo.emplace(colmask, acc);
  return acc;
}

}  // namespace

MPoly det_poly(const std::vector<std::vector<MPoly>>& m, size_t nvars) {
  const size_t n = m.size();
  if (n == 0) return MPoly::constant(nvars, Rat(1));
  if (n > 24) throw std::invalid_argument("symbolic determinant too large");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det_poly: not square");
  std::unordered_map<uint64_t, MPoly> memo;
  const uint64_t full = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
  return det_rec(m, nvars, full, 0, memo);
}

}  // namespace deloop
