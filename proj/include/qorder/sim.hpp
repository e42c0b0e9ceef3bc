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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qorder/measure.hpp"
#include "qorder/strat.hpp"

namespace qorder {

// P(x1,x2|y1,y2) over the enlarged setting sets. Setting index 0 is
// "do nothing" and only outcome 0 is populated there. Outcome ranges are
// padded to d on every setting.
struct JointDistribution {
  int d1 = 2, d2 = 2;
  int n1 = 4, n2 = 4;  // settings including 0
  bool is_signed = false;
  std::vector<double> p;

  JointDistribution() = default;
  JointDistribution(int d1_, int d2_, int n1_, int n2_);

  int outcomes1(int y1) const { return y1 == 0 ? 1 : d1; }
  int outcomes2(int y2) const { return y2 == 0 ? 1 : d2; }
  double& at(int y1, int x1, int y2, int x2) {
    return p[((size_t(y1) * d1 + x1) * n2 + y2) * d2 + x2];
  }
  double at(int y1, int x1, int y2, int x2) const {
    return p[((size_t(y1) * d1 + x1) * n2 + y2) * d2 + x2];
  }
  // Sum over outcomes of one (y1,y2) block.
  double block_sum(int y1, int y2) const;
};

double normalization_residual(const JointDistribution& P);
double sup_norm_diff(const JointDistribution& a, const JointDistribution& b);
JointDistribution swap_parties(const JointDistribution& P);

// Direct evolution with the projection postulate.
JointDistribution simulate_exact(const Strategy& s, const ProjectiveFamily& f1,
                                 const ProjectiveFamily& f2,
                                 bool allow_quasi = false);

// Contraction of the process matrix against instrument Choi matrices.
// Supports Individual, Parallel and SeqMemoryless.
JointDistribution simulate_born(const Strategy& s, const ProjectiveFamily& f1,
                                const ProjectiveFamily& f2,
                                bool allow_quasi = false);

// Process matrix on I1 (x) O1 (x) I2 (x) O2.
CMatrix process_matrix(const Strategy& s, int d1, int d2);

struct ShotRecord {
  int y1, x1, y2, x2;
};

struct SampleSet {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> counts;  // same layout as JointDistribution::p
  std::vector<ShotRecord> records;    // in shot order, when requested
  JointDistribution empirical;        // per-block normalized
};

// Settings are uniform over the enlarged sets; outcomes follow the block.
// Each shot draws from its own counter-keyed stream, so results do not depend
// on the thread count.
SampleSet sample(const JointDistribution& P, std::uint64_t shots,
                 std::uint64_t seed, int threads = 1, bool keep_records = false);

std::string records_to_csv(const SampleSet& s);

// Total variation distance between the (y1,y2) blocks of two tables.
double block_tv(const JointDistribution& a, const JointDistribution& b, int y1,
                int y2);

struct Conditionals {
  // p1[y1][x1] = P(x1|y1) from the y2 = 0 rows
  std::vector<std::vector<double>> p1;
  // p2_0[y2][x2] = P(x2|0,y2)
  std::vector<std::vector<double>> p2_0;
  // cond(y1,x1,y2,x2) = P(x2|x1,y1,y2); zero where undefined
  JointDistribution cond;
  bool c0 = true;
  double min_p1 = 1.0;
};

// Throws C0Degenerate when strict and some P(x1|y1), y1 != 0, is <= tol.
Conditionals conditionals(const JointDistribution& P, bool strict = false,
                          double tol = 1e-12);

nlohmann::ordered_json distribution_to_json(const JointDistribution& P);
JointDistribution distribution_from_json(const nlohmann::json& j);

}  // namespace qorder
