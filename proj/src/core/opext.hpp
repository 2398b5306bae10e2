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

#include "module.hpp"

namespace deloop {

// One-point extension B = A[M]: the upper-triangular matrix algebra with
// diagonal k and A and the (k,A)-bimodule M off the diagonal (scalars act
// on M through k). Basis order: the new corner idempotent eps first, then
// the A basis with the unit slot holding the unit of B, then the M basis;
// 1_A corresponds to 1_B - eps. Serialized artifacts use this order.
struct OnePointExtension {
  AlgebraPtr base;
  ModuleRep ext_module;
  AlgebraPtr result;  // dim = 1 + dim A + dim M
  size_t eps_index = 0;
  Matrix base_embed;    // dim A x dim B, multiplicative unital embedding
  Matrix module_embed;  // dim M x dim B
};

OnePointExtension one_point_extension(AlgebraPtr a, const ModuleRep& m);

// The B-module (0, N): eps acts by zero, A acts through N, M acts by zero.
ModuleRep inflate(const OnePointExtension& ext, const ModuleRep& n);

// Same recipe over the opposite algebras: sends a module over op(A) to a
// module over op(B). Realizes the column modules of the lower-triangular
// presentation of op(B).
ModuleRep inflate_opposite(const OnePointExtension& ext, const ModuleRep& n,
                           AlgebraPtr op_result);

// The simple module at the extension vertex: eps acts by one, everything
// in A and M by zero.
ModuleRep simple_at_extension_vertex(const OnePointExtension& ext);

}  // namespace deloop
