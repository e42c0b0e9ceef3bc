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

#include "qorder/measure.hpp"
#include "qorder/sim.hpp"

namespace qorder {

// Bases for the two parties. Both must satisfy (A1) for the reconstructions.
struct Bases {
  OperatorBasis b1, b2;
};

Bases pauli_bases();

// Setting index (into the enlarged set) probed by basis element t.
inline int setting_of(const OperatorBasis& b, int t) { return b.setting[t] + 1; }

// m(t1,t2) = <G_t1 (x) G_t2>
Eigen::MatrixXd moments(const JointDistribution& P, const Bases& b);

CMatrix pdm(const JointDistribution& P, const Bases& b);
CMatrix rho1(const JointDistribution& P, const Bases& b);
CMatrix rho2(const JointDistribution& P, const Bases& b);

// Jordan-inverse Choi matrix, stored input (x) output. For TwoToOne the
// input is Bob's system. Throws SingularAnchor.
CMatrix tilde_choi(const JointDistribution& P, const Bases& b, Direction dir,
                   double tol_pd = 1e-10);

struct HatChoi {
  CMatrix choi;           // input (x) output
  double anchor_spread;   // max change over the choice of y2 in the t2 = 0 slot
};

// Direct-formula Choi matrix. Throws C0Degenerate.
HatChoi hat_choi_full(const JointDistribution& P, const Bases& b, Direction dir,
                      double tol_c0 = 1e-12, int anchor = 1);
inline CMatrix hat_choi(const JointDistribution& P, const Bases& b, Direction dir) {
  return hat_choi_full(P, b, dir).choi;
}

}  // namespace qorder
