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

#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qorder/qmat.hpp"

namespace qorder {

enum class Direction { OneToTwo, TwoToOne };

const char* to_string(Direction d);
Direction direction_from_string(const std::string& s);

// Choi matrices are stored on input (x) output with
// C[L] = sum_ab |a><b| (x) L(|a><b|).

struct Individual {
  CMatrix rho1, rho2;
};

struct Parallel {
  CMatrix rho12;
  int d1 = 2, d2 = 2;
};

// For TwoToOne, rho is Bob's input state and choi maps Bob's output to
// Alice's input (still stored input (x) output).
struct SeqMemoryless {
  Direction dir = Direction::OneToTwo;
  CMatrix rho;
  CMatrix choi;
};

// rho on I1 (x) M; processor is a Choi matrix on (O1 (x) M) (x) I2.
struct SeqQuantumMemory {
  CMatrix rho;
  CMatrix processor;
  int d_mem = 2;
};

struct Mixture {
  std::vector<double> weights;
  std::vector<SeqMemoryless> components;
};

using Strategy =
    std::variant<Individual, Parallel, SeqMemoryless, SeqQuantumMemory, Mixture>;

struct StrategyDims {
  int d1 = 0, d2 = 0;
};
StrategyDims strategy_dims(const Strategy& s);

struct ValidationReport {
  bool ok = true;      // structurally sound and trace-preserving
  bool quasi = false;  // some Choi matrix is Hermitian TP but not PSD
  std::vector<std::pair<std::string, double>> residuals;
  std::vector<std::string> problems;
};
ValidationReport validate(const Strategy& s, double tol_psd = 1e-9);

// Channel plumbing.
CMatrix choi_of_map(const std::function<CMatrix(const CMatrix&)>& f, int d_in);
CMatrix choi_of_kraus(const std::vector<CMatrix>& kraus);
CMatrix apply_channel(const CMatrix& choi, const CMatrix& rho);
double tp_residual(const CMatrix& choi, int d_in);
CMatrix identity_choi(int d);

// Qubit channel from its Bloch action: L(I/2) = (I + t.sigma)/2 and
// L(sigma_i) = sum_j T(i,j) sigma_j.
CMatrix choi_from_bloch(const Eigen::Matrix3d& T, const Eigen::Vector3d& t);
// C = I(x)I/2 + sum_j lambda_j/2 sigma_j (x) sigma_j; lambda_2 carries the
// sign picked up from sigma_2^T = -sigma_2.
CMatrix choi_from_lambdas(const Eigen::Vector3d& lambda);
Eigen::Vector3d pauli_lambdas(const std::vector<double>& p);
CMatrix choi_from_pauli_probs(const std::vector<double>& p);
CMatrix depolarizing_choi(double mu);

CMatrix bloch_state(const Eigen::Vector3d& c);

struct QubitCanonicalForm {
  Eigen::Matrix3d T;          // T(i,j) = Tr[(s_i (x) s_j) C^{T1}] / 2
  Eigen::Vector3d c2;         // output Bloch vector of L(I/2)
  int t = 0;
  Eigen::Vector3d lambda;     // singular values, descending
  Eigen::Matrix3d A;          // row j = Bloch coefficients of alpha_j
  Eigen::Matrix3d B;          // row j = Bloch coefficients of beta_j
  int orientation = 1;        // det(U) det(V) for T = U diag(lambda) V^T
  bool borderline = false;    // a singular value sits near the rank threshold

  CMatrix alpha(int j) const;
  CMatrix beta(int j) const;
  // I (x) rho2 + sum_j lambda_j/2 alpha_j (x) beta_j
  CMatrix reconstruct_choi_t1() const;
};

QubitCanonicalForm canonical_qubit_form(const CMatrix& choi,
                                        double rank_tol = 1e-10);

// Named preset strategies: "ExB", "Ex1prime", "Ex1" (needs lambda).
Strategy preset(const std::string& name, double lambda = 0.5);

// Channel families: "depolarizing" {mu}, "pauli" {p0,p1,p2,p3},
// "pd1" {lambda3} (lambda1 = 1, lambda2 = -lambda3),
// "pd3" {lambda1} (lambda3 = 1, lambda2 = -lambda1).
CMatrix family_choi(const std::string& name,
                    const std::map<std::string, double>& params);
SeqMemoryless family_strategy(const std::string& name,
                              const std::map<std::string, double>& params,
                              const Eigen::Vector3d& bloch1);

nlohmann::ordered_json strategy_to_json(const Strategy& s);
Strategy strategy_from_json(const nlohmann::json& j);

}  // namespace qorder
