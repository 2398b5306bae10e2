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
#include <map>
#include <vector>

#include "rational.hpp"

namespace deloop {

// Sparse multivariate polynomial over Q. Only needed for small symbolic
// determinants (generic isomorphism tests and stable endomorphism units),
// so a term map is plenty.
class MPoly {
 public:
  MPoly() : nvars_(0) {}
  explicit MPoly(size_t nvars) : nvars_(nvars) {}
  static MPoly constant(size_t nvars, const Rat& c);
  static MPoly variable(size_t nvars, size_t index);

  size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  MPoly scaled(const Rat& c) const;

  Rat eval(const std::vector<Rat>& point) const;

  bool operator==(const MPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

 private:
  void add_term(const std::vector<uint32_t>& expo, const Rat& c);
  size_t nvars_;
  std::map<std::vector<uint32_t>, Rat> terms_;
};

// Determinant of a square polynomial matrix via Laplace expansion with
// memoization on column subsets (fine for the sizes used here).
MPoly det_poly(const std::vector<std::vector<MPoly>>& m, size_t nvars);

}  // namespace deloop
