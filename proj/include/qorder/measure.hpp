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

#include <string>
#include <vector>

#include "qorder/qmat.hpp"

namespace qorder {

// Nontrivial settings only; the "do nothing" setting is handled by callers as
// setting index 0 with a single dummy outcome.
struct ProjectiveFamily {
  int d = 0;
  std::vector<int> labels;                       // y label per setting
  std::vector<std::vector<CVector>> vectors;     // vectors[s][x] = |x,y>

  int num_settings() const { return int(labels.size()); }
  int num_outcomes(int s) const { return int(vectors.at(s).size()); }
  CMatrix effect(int s, int x) const { return projector(vectors.at(s).at(x)); }
};

struct ContrastScheme {
  // g[s][z][x]
  std::vector<std::vector<std::vector<double>>> g;
};

struct MeasurementSetup {
  ProjectiveFamily family;
  ContrastScheme contrasts;
};

// Index t = 0 is the identity; t >= 1 enumerates (setting, contrast) pairs.
struct OperatorBasis {
  int d = 0;
  std::vector<CMatrix> G;
  std::vector<CMatrix> H;
  Eigen::MatrixXd h;        // Tr H_t H_t'
  Eigen::MatrixXd gram;     // Tr G_t G_t'
  double gram_cond = 0.0;
  bool complete = false;
  std::vector<int> setting;   // -1 for t = 0
  std::vector<int> contrast;  // -1 for t = 0
  std::vector<std::vector<double>> g;  // g[t][x]; all ones for t = 0

  int size() const { return int(G.size()); }
};

struct Verdict {
  bool ok = false;
  double residual = 0.0;
};

MeasurementSetup build_pauli_family();

MeasurementSetup family_from_json(const nlohmann::json& j);
nlohmann::ordered_json family_to_json(const MeasurementSetup& m);
MeasurementSetup load_family(const std::string& path);

// First outcome minus each other outcome, made traceless.
ContrastScheme default_contrasts(const ProjectiveFamily& f);

// Throws A1Violation when the G_t do not form a basis of the Hermitian space,
// unless require_a1 is false; then H and h are left empty.
OperatorBasis build_operator_basis(const ProjectiveFamily& f,
                                   const ContrastScheme& c,
                                   bool require_a1 = true);
OperatorBasis pauli_basis();

Verdict check_A1(const OperatorBasis& b);
Verdict check_A2(const OperatorBasis& b);
Verdict check_A3(const ProjectiveFamily& f);

// Largest deviation of sum_x |x,y><x,y| from identity and of <x|x'> from delta.
double orthonormality_residual(const ProjectiveFamily& f);

}  // namespace qorder
