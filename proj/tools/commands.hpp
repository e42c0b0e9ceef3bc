// Copyright 2026 The qorder Authors
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
#include <optional>
#include <string>
#include <vector>

#include "qorder/crit.hpp"

namespace qorder::cli {

struct RunConfig {
  Tolerances tol;
  std::uint64_t seed = 0;
  int anchor = 1;  // y2 setting used for the identity slot of the hat estimator
  int threads = 1;
};

// Reads tolerances and friends from a JSON object; unknown keys are rejected.
RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {});
// --config wins over the QORDER_CONFIG environment variable.
RunConfig load_config(const std::string& path);

nlohmann::json read_json(const std::string& path);
// Writes to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

struct Families {
  std::string family1, family2;  // empty means Pauli
};
Scheme load_scheme(const Families& f);

struct SimulateArgs {
  std::string strategy, preset, out, csv;
  double lambda = 0.5;
  Families families;
  std::optional<std::uint64_t> shots;
  bool born = false;
  bool allow_quasi = false;
};
int cmd_simulate(const SimulateArgs& a, const RunConfig& cfg);

struct ReconstructArgs {
  std::string dist, out, direction = "1to2", estimator = "hat";
  Families families;
};
int cmd_reconstruct(const ReconstructArgs& a, const RunConfig& cfg);

struct ClassifyArgs {
  std::string dist, out;
  Families families;
};
int cmd_classify(const ClassifyArgs& a, const RunConfig& cfg);

struct ScanArgs {
  std::string family, grid, out;
  std::vector<std::string> params;  // fixed "name=value" entries
};
int cmd_scan(const ScanArgs& a, const RunConfig& cfg);

struct VerifyArgs {
  std::string suite = "all";
  long samples = 0;  // 0 keeps each suite's default
};
int cmd_verify(const VerifyArgs& a, const RunConfig& cfg);

struct CountArgs {
  std::string dims = "2,2,2,2";
  Families families;
  bool json = false;
};
int cmd_count_dim(const CountArgs& a);

// Verification suites shared with cmd_verify.
struct SuiteResult {
  std::string name;
  long checked = 0;
  long skipped = 0;  // inside the eigenvalue band
  long failures = 0;
  double worst = 0.0;  // largest residual seen, suite specific
  std::string note;
  bool ok() const { return failures == 0; }
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, long samples, const RunConfig& cfg);

}  // namespace qorder::cli
