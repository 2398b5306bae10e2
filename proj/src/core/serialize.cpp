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

#include "serialize.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace deloop {

namespace {

std::vector<Rat> rats_from_json(const Json& j) {
  std::vector<Rat> v;
  v.reserve(j.size());
  for (const auto& s : j) v.push_back(rat_from_string(s.get<std::string>()));
  return v;
}

Json json_from_rats(const std::vector<Rat>& v) {
  Json j = Json::array();
  for (const Rat& x : v) j.push_back(rat_to_string(x));
  return j;
}

}  // namespace

Json json_from_matrix(const Matrix& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) rows.push_back(json_from_rats(m.row(i)));
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix JSON must be an array of rows");
  const size_t rows = j.size();
  size_t cols = rows > 0 ? j[0].size() : 0;
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw std::invalid_argument("ragged matrix JSON");
    m.set_row(i, rats_from_json(j[i]));
  }
  return m;
}

Json algebra_to_json(const Algebra& a) {
  Json j;
  j["basis"] = a.basis;
  j["unit"] = a.unit;
  Json constants = Json::array();
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t k = 0; k < a.dim(); ++k) {
      Json entry = Json::array();
      entry.push_back(i);
      entry.push_back(k);
      entry.push_back(json_from_rats(a.table[i][k]));
      constants.push_back(std::move(entry));
    }
  j["constants"] = std::move(constants);
  Json idem = Json::array();
  for (const AlgElt& e : a.idempotents) idem.push_back(json_from_rats(e));
  j["idempotents"] = std::move(idem);
  Json params = Json::object();
  for (const auto& [k, v] : a.params) params[k] = rat_to_string(v);
  j["params"] = std::move(params);
  return j;
}

AlgebraPtr algebra_from_json(const Json& j, bool check) {
  Algebra a;
  a.name = "file-algebra";
  for (const auto& l : j.at("basis")) a.basis.push_back(l.get<std::string>());
  a.unit = j.at("unit").get<size_t>();
  const size_t n = a.dim();
  if (a.unit >= n) throw std::invalid_argument("unit index out of range");
  a.table.assign(n, std::vector<AlgElt>(n, AlgElt(n)));
  for (const auto& entry : j.at("constants")) {
    const size_t i = entry.at(0).get<size_t>();
    const size_t k = entry.at(1).get<size_t>();
    if (i >= n || k >= n) throw std::invalid_argument("constant index out of range");
    std::vector<Rat> v = rats_from_json(entry.at(2));
    if (v.size() != n) throw std::invalid_argument("constant vector has wrong length");
    a.table[i][k] = std::move(v);
  }
  for (const auto& e : j.at("idempotents")) {
    std::vector<Rat> v = rats_from_json(e);
    if (v.size() != n) throw std::invalid_argument("idempotent vector has wrong length");
    a.idempotents.push_back(std::move(v));
  }
  if (j.contains("params"))
    for (const auto& [k, v] : j.at("params").items())
      a.params[k] = rat_from_string(v.get<std::string>());
  return check ? finalize_algebra(std::move(a)) : make_algebra_unchecked(std::move(a));
}

namespace {

// Completes missing basis actions: whenever b_i b_j has exactly one unknown
// component with nonzero coefficient, that action is determined.
std::vector<Matrix> complete_actions(const Algebra& a,
                                     std::map<std::string, Matrix> given, size_t dim) {
  std::vector<Matrix> act(a.dim());
  std::vector<bool> known(a.dim(), false);
  for (size_t i = 0; i < a.dim(); ++i) {
    auto it = given.find(a.basis[i]);
    if (it != given.end()) {
      if (it->second.rows() != dim || it->second.cols() != dim)
        throw std::invalid_argument("action matrix for " + a.basis[i] + " has wrong shape");
      act[i] = it->second;
      known[i] = true;
    }
  }
  if (!known[a.unit]) {
    act[a.unit] = Matrix::identity(dim);
    known[a.unit] = true;
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t i = 0; i < a.dim(); ++i) {
      if (!known[i]) continue;
      for (size_t j = 0; j < a.dim(); ++j) {
        if (!known[j]) continue;
        const AlgElt& prod = a.table[i][j];
        size_t unknown = a.dim();
        bool single = true;
        for (size_t l = 0; l < a.dim(); ++l) {
          if (prod[l] == 0 || known[l]) continue;
          if (unknown != a.dim()) {
            single = false;
            break;
          }
          unknown = l;
        }
        if (!single || unknown == a.dim()) continue;
        Matrix rhs = act[i] * act[j];
        for (size_t l = 0; l < a.dim(); ++l) {
          if (l == unknown || prod[l] == 0) continue;
          rhs = rhs - act[l].scaled(prod[l]);
        }
        act[unknown] = rhs.scaled(Rat(1) / prod[unknown]);
        known[unknown] = true;
        progress = true;
      }
    }
  }
  for (size_t i = 0; i < a.dim(); ++i)
    if (!known[i])
      throw std::invalid_argument("action of basis element '" + a.basis[i] +
                                  "' is neither given nor derivable");
  return act;
}

}  // namespace

Json module_to_json(const ModuleRep& m, const std::string& algebra_ref) {
  Json j;
  if (algebra_ref.empty())
    j["algebra"] = algebra_to_json(*m.alg);
  else
    j["algebra"] = algebra_ref;
  j["dim"] = m.dim;
  Json action = Json::object();
  for (size_t b = 0; b < m.alg->dim(); ++b)
    action[m.alg->basis[b]] = json_from_matrix(m.action[b]);
  j["action"] = std::move(action);
  j["labels"] = m.labels;
  return j;
}

ModuleRep module_from_json(const Json& j, AlgebraPtr algebra, const std::string& base_dir) {
  AlgebraPtr alg = algebra;
  if (!alg) {
    const Json& aj = j.at("algebra");
    if (aj.is_string()) {
      std::string path = aj.get<std::string>();
      if (!base_dir.empty() && !path.empty() && path[0] != '/')
        path = base_dir + "/" + path;
      alg = algebra_from_json(load_json_file(path));
    } else {
      alg = algebra_from_json(aj);
    }
  }
  const size_t dim = j.at("dim").get<size_t>();
  std::map<std::string, Matrix> given;
  for (const auto& [label, mat] : j.at("action").items()) {
    // Unknown labels are a format violation, reported with their location.
    bool found = false;
    for (const std::string& b : alg->basis) found = found || (b == label);
    if (!found)
      throw std::invalid_argument("action references unknown basis label '" + label + "'");
    given[label] = matrix_from_json(mat);
  }
  std::vector<Matrix> act = complete_actions(*alg, std::move(given), dim);
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  return make_module(std::move(alg), std::move(act), std::move(labels));
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error("cannot parse " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace deloop
