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

#include "qorder/sim.hpp"
#include "qorder/strat.hpp"

namespace qorder {

// Coefficients of I(x)I + s1 s1(x)I + s2 I(x)s1 + sum_j tau_j s_j(x)s_j.
struct LL31Params {
  double s1 = 0, s2 = 0;
  std::array<double, 3> tau{0, 0, 0};
};

bool ll31_psd(const LL31Params& p);
// The operator itself, for numeric cross-checks.
CMatrix ll31_operator(const LL31Params& p);

// Directional conditions on a canonical form; tol bounds the products that
// must vanish.
bool lbu1_D1(const Eigen::Vector3d& c1, const QubitCanonicalForm& f, double tol = 1e-9);
bool lbu2_D2(const QubitCanonicalForm& f, double tol = 1e-9);

// Positivity of the forward Choi matrix, of the reconstructed reverse Choi
// matrix and of the reconstructed pseudo-density matrix, valid once D1 and D2
// hold. Equality at the boundary counts as positive.
bool lbu0_forward_psd(const QubitCanonicalForm& f);
bool lbu3_reverse_psd(const Eigen::Vector3d& c1, const QubitCanonicalForm& f);
bool ll29A_pdm_psd(const Eigen::Vector3d& c1, const QubitCanonicalForm& f);

// The explicit operators the three case lists describe.
CMatrix reverse_tilde_choi_from_form(const Eigen::Vector3d& c1, const QubitCanonicalForm& f);
CMatrix pdm_from_form(const Eigen::Vector3d& c1, const QubitCanonicalForm& f);

struct DConditions {
  bool D1 = false, D2 = false, D3 = false;
  bool all() const { return D1 && D2 && D3; }
};

// Pauli channel with lambdas as in choi_from_lambdas, input (I + kappa s1)/2.
DConditions pauli_D_conditions(double kappa, double l1, double l2, double l3,
                               double tol = 1e-12);

enum class DampingAxis { Sigma1, Sigma3 };
// Sigma1: lambda1 = 1 with free (l2, l3). Sigma3: lambda3 = 1, lambda2 = -lambda1,
// free l1 passed as `a` (b ignored).
bool phase_damping_D3(DampingAxis axis, double kappa, double a, double b = 0.0,
                      double tol = 1e-12);

struct KappaBound {
  double kappa_max = 1.0;
  bool open_interval = false;  // |kappa| < kappa_max rather than <=
};

KappaBound depol_D3_bound(double mu);
bool depol_D3(double mu, double kappa, double tol = 1e-12);
bool depol_indistinguishable(double mu, double kappa, double tol = 1e-12);

// Symmetric conditional model on Pauli settings. Index 0 of each array is
// setting y = 1.
struct SymmetricModel {
  std::array<double, 3> lambda{0, 0, 0};
  std::array<double, 3> eta{0, 0, 0};
  std::array<double, 3> zeta{0, 0, 0};
};

JointDistribution symmetric_model_distribution(const SymmetricModel& m);

}  // namespace qorder
