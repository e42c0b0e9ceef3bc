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


#include "qorder/qubit.hpp"

#include <algorithm>
#include <cmath>

namespace qorder {

namespace {

// Slack so that exact boundary points do not flip on rounding.
constexpr double kSlack = 1e-12;

double sq(double x) { return x * x; }

bool t3_max_form(const Eigen::Vector3d& l) {
  const double m = std::max({-l(0) + l(1) + l(2), l(0) - l(1) + l(2), l(0) + l(1) - l(2)});
  return 1.0 >= m - kSlack;
}

bool t3_sum_form(const Eigen::Vector3d& l) { return 1.0 >= l.sum() - kSlack; }

// Shared case list of the forward and reverse Choi matrices; c is the Bloch
// vector of the marginal that sits next to the identity.
bool choi_case(const QubitCanonicalForm& f, const Eigen::Vector3d& c) {
  const auto& l = f.lambda;
  switch (f.t) {
    case 3: return f.orientation > 0 ? t3_max_form(l) : t3_sum_form(l);
    case 2: return 1.0 >= sq(l(0) + l(1)) + c.squaredNorm() - kSlack;
    case 1: return 1.0 >= sq(l(0)) + c.squaredNorm() - kSlack;
    default: return true;
  }
}

bool orthogonal_to_rows(const Eigen::Vector3d& c, const Eigen::Matrix3d& rows, int t,
                        double tol) {
  for (int j = 0; j < t; ++j)
    for (int i = 0; i < 3; ++i)
      if (std::abs(c(i) * rows(j, i)) > tol) return false;
  return true;
}

}  // namespace

bool ll31_psd(const LL31Params& p) {
  const double s1 = p.s1, s2 = p.s2, t1 = p.tau[0], t2 = p.tau[1], t3 = p.tau[2];
  return 1 + t1 + s1 + s2 >= 0 && 1 - t1 - s1 + s2 >= 0 &&
         sq(1 - t1) >= sq(s1 - s2) + sq(t2 + t3) && sq(1 + t1) >= sq(s1 + s2) + sq(t2 - t3);
}

CMatrix ll31_operator(const LL31Params& p) {
  const CMatrix I = sigma(0);
  CMatrix m = kron(I, I) + p.s1 * kron(sigma(1), I) + p.s2 * kron(I, sigma(1));
  for (int j = 0; j < 3; ++j) m += p.tau[j] * kron(sigma(j + 1), sigma(j + 1));
  return m;
}

bool lbu1_D1(const Eigen::Vector3d& c1, const QubitCanonicalForm& f, double tol) {
  return orthogonal_to_rows(c1, f.A, f.t, tol);
}

bool lbu2_D2(const QubitCanonicalForm& f, double tol) {
  return orthogonal_to_rows(f.c2, f.B, f.t, tol);
}

bool lbu0_forward_psd(const QubitCanonicalForm& f) { return choi_case(f, f.c2); }

bool lbu3_reverse_psd(const Eigen::Vector3d& c1, const QubitCanonicalForm& f) {
  return choi_case(f, c1);
}

bool ll29A_pdm_psd(const Eigen::Vector3d& c1, const QubitCanonicalForm& f) {
  const auto& l = f.lambda;
  const double room = (1.0 - c1.squaredNorm()) * (1.0 - f.c2.squaredNorm());
  switch (f.t) {
    // no transpose here, so the orientation roles swap
    case 3: return f.orientation > 0 ? t3_sum_form(l) : t3_max_form(l);
    case 2: return room >= sq(l(0) + l(1)) - kSlack;
    case 1: return room >= sq(l(0)) - kSlack;
    default: return true;
  }
}

CMatrix reverse_tilde_choi_from_form(const Eigen::Vector3d& c1, const QubitCanonicalForm& f) {
  CMatrix m = kron(bloch_state(c1), sigma(0));
  for (int j = 0; j < f.t; ++j) m += 0.5 * f.lambda(j) * kron(f.alpha(j), f.beta(j));
  return partial_transpose(m, {2, 2}, 1);
}

CMatrix pdm_from_form(const Eigen::Vector3d& c1, const QubitCanonicalForm& f) {
  CMatrix m = kron(bloch_state(c1), bloch_state(f.c2));
  for (int j = 0; j < f.t; ++j) m += 0.25 * f.lambda(j) * kron(f.alpha(j), f.beta(j));
  return m;
}

DConditions pauli_D_conditions(double kappa, double l1, double l2, double l3, double tol) {
  if (std::abs(kappa) > 1 + tol || std::abs(l1) > 1 + tol || std::abs(l2) > 1 + tol ||
      std::abs(l3) > 1 + tol)
    throw Error(ErrorKind::InvalidArgument, "kappa and lambdas must lie in [-1,1]");
  DConditions d;
  const bool k0 = std::abs(kappa) <= tol;
  const bool kpm1 = std::abs(std::abs(kappa) - 1) <= tol;
  d.D1 = std::abs(kappa * l1) <= tol;
  d.D2 = std::abs(l1) <= tol || k0 || (kpm1 && l1 < 1 - tol);
  if (kpm1) {
    d.D3 = std::abs(l2) <= tol && std::abs(l3) <= tol;
  } else {
    const double den = sq(kappa) * sq(l1) - 1;
    LL31Params p;
    p.s1 = kappa * (sq(l1) - 1) / den;
    p.s2 = 0;
    p.tau = {l1 * (sq(kappa) - 1) / den, l2, l3};
    d.D3 = ll31_psd(p);
  }
  return d;
}

bool phase_damping_D3(DampingAxis axis, double kappa, double a, double b, double tol) {
  const double ak = std::abs(kappa);
  if (axis == DampingAxis::Sigma1) {
    const double l2 = a, l3 = b;
    if (std::abs(ak - 1) <= tol) return std::abs(l2) <= tol && std::abs(l3) <= tol;
    return ak < 1 && std::abs(l2 + l3) <= tol && std::abs(l3) < 1 - tol;
  }
  const double l1 = a;
  return ak <= tol || (std::abs(std::abs(l1) - 1) <= tol && sq(kappa) < 1 - tol);
}

KappaBound depol_D3_bound(double mu) {
  if (!(mu >= 0 && mu <= 1)) throw Error(ErrorKind::InvalidArgument, "mu must lie in [0,1]");
  if (mu == 0) return {1.0, true};
  if (mu == 1) return {1.0, false};
  const double v = (4 - 3 * mu) / ((3 - 2 * mu) * (2 * mu * mu - 5 * mu + 4));
  return {std::sqrt(v), false};
}

bool depol_D3(double mu, double kappa, double tol) {
  const auto b = depol_D3_bound(mu);
  const double ak = std::abs(kappa);
  return b.open_interval ? ak < b.kappa_max - tol : ak <= b.kappa_max + tol;
}

bool depol_indistinguishable(double mu, double kappa, double tol) {
  return std::abs(mu - 1) <= tol || std::abs(kappa) <= tol;
}

JointDistribution symmetric_model_distribution(const SymmetricModel& m) {
  for (int y = 0; y < 3; ++y)
    if (m.lambda[y] < 0 || m.lambda[y] > 1 || std::abs(m.eta[y]) > 1 || std::abs(m.zeta[y]) > 1)
      throw Error(ErrorKind::InvalidArgument, "symmetric model parameter out of range");
  JointDistribution P(2, 2, 4, 4);
  auto p1 = [&](int y1, int x1) { return 0.5 * (1 - m.eta[y1 - 1]) + m.eta[y1 - 1] * x1; };
  auto p2 = [&](int y2, int x2) { return 0.5 * (1 - m.zeta[y2 - 1]) + m.zeta[y2 - 1] * x2; };
  auto cond = [&](int y1, int x1, int y2, int x2) {
    if (y1 != y2) return 0.5;
    const double l = m.lambda[y1 - 1];
    return 0.5 * (1 - l) + l * (x1 == x2 ? 1.0 : 0.0);
  };
  P.at(0, 0, 0, 0) = 1.0;
  for (int y = 1; y < 4; ++y)
    for (int x = 0; x < 2; ++x) {
      P.at(y, x, 0, 0) = p1(y, x);
      P.at(0, 0, y, x) = p2(y, x);
    }
  for (int y1 = 1; y1 < 4; ++y1)
    for (int y2 = 1; y2 < 4; ++y2)
      for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2) P.at(y1, x1, y2, x2) = p1(y1, x1) * cond(y1, x1, y2, x2);
  return P;
}

}  // namespace qorder
