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

#include <gmpxx.h>

#include <string>

namespace deloop {

// Exact rational scalar. Everything in this library is computed over Q,
// stored in lowest terms with positive denominator (GMP canonical form);
// no floating point appears anywhere.
using Rat = mpq_class;

// Parses "p" or "p/q" in base 10. Input need not be in lowest terms.
// Throws std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rat_to_string(const Rat& x);

// x^e with e possibly negative. Throws std::invalid_argument on 0^(e<0).
Rat rat_pow(const Rat& x, long e);

}  // namespace deloop
