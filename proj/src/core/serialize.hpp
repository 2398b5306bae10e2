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

#include <json.hpp>

#include <string>

#include "module.hpp"

namespace deloop {

using Json = nlohmann::ordered_json;

// Scalars serialize as canonical "p" or "p/q" strings in every format.
Json json_from_matrix(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// Algebra file format:
//   {basis: [labels], unit: index, constants: [[i, j, [coeffs]], ...],
//    idempotents: [[coeffs], ...], params: {name: value}}
// constants lists all dim^2 pairs in row-major order so dumps are
// byte-stable.
Json algebra_to_json(const Algebra& a);
AlgebraPtr algebra_from_json(const Json& j, bool check = true);

// Module file format:
//   {algebra: <inline object or file-ref string>, dim: n,
//    action: {basis_label: [[entries]]}, labels: [...]}
// Actions may be given for a generating subset of the basis; the rest are
// completed through the structure constants.
Json module_to_json(const ModuleRep& m, const std::string& algebra_ref = "");
ModuleRep module_from_json(const Json& j, AlgebraPtr algebra = nullptr,
                           const std::string& base_dir = "");

// Canonical dump: two-space indent, trailing newline. Used everywhere a
// file is written so re-dumps are byte-identical.
std::string canonical_dump(const Json& j);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace deloop
