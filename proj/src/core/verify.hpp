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

#include "dell.hpp"
#include "opext.hpp"

namespace deloop {

const char* tool_version();

enum class CheckStatus { Pass, Fail, Undecided };
std::string check_status_name(CheckStatus s);

// Deliberate corruption modes for the negative-control regression tests:
// DropQSign flips the sign of the x*y structure constant (caught by the
// defining relations), ParityNonFree feeds the parity machinery a
// subalgebra over which the regular module is not free (the certificates
// degrade to inconclusive instead of silently staying negative).
enum class Mutation { None, DropQSign, ParityNonFree };
Mutation mutation_from_name(const std::string& s);
std::string mutation_name(Mutation m);

struct CheckRecord {
  std::string id;
  std::string statement;
  CheckStatus status = CheckStatus::Fail;
  double wall_ms = 0.0;
  Json details = Json::object();
  std::vector<Certificate> certificates;
};

struct VerifyOptions {
  Rat q = Rat(2);
  size_t n_max = 8;
  uint64_t seed = 0;
  Mutation mutation = Mutation::None;
};

struct Report {
  VerifyOptions options;
  std::vector<CheckRecord> checks;
  bool aborted = false;
  std::string abort_reason;

  bool all_pass() const;
};

// Rebuilds every object and runs every check in a fixed order; a failing
// structural check aborts the run. Deterministic for fixed (q, n_max, seed)
// up to wall times.
Report verify_all(const VerifyOptions& opts);

Json report_to_json(const Report& r);
std::string render_report_text(const Json& report_json);
bool report_all_pass(const Json& report_json);

struct ReplayResult {
  bool ok = true;
  size_t certificates = 0;
  size_t failed = 0;
  std::vector<std::string> messages;
};
// Re-validates every embedded certificate from its payload alone.
ReplayResult replay_report(const Json& report_json);
Json replay_result_to_json(const ReplayResult& r);

// Writes the golden object files (byte-stable across runs).
void dump_fixtures(const Rat& q, const std::string& dir);

}  // namespace deloop
