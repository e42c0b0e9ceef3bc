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

#include "qorder/recon.hpp"

namespace qorder {

Bases pauli_bases() {
  auto b = pauli_basis();
  return {b, b};
}

namespace {

void require_a1(const Bases& b) {
  if (!b.b1.complete || !b.b2.complete)
    throw Error(ErrorKind::A1Violation, "reconstruction needs complete operator bases");
}

void require_shape(const JointDistribution& P, const Bases& b) {
  if (P.d1 != b.b1.d || P.d2 != b.b2.d)
    throw Error(ErrorKind::DimensionMismatch, "distribution and bases disagree on d");
  for (int t = 1; t < b.b1.size(); ++t)
    if (setting_of(b.b1, t) >= P.n1)
      throw Error(ErrorKind::DimensionMismatch, "Alice basis refers to a missing setting");
  for (int t = 1; t < b.b2.size(); ++t)
    if (setting_of(b.b2, t) >= P.n2)
      throw Error(ErrorKind::DimensionMismatch, "Bob basis refers to a missing setting");
}

Bases swapped(const Bases& b) { return {b.b2, b.b1}; }

}  // namespace

Eigen::MatrixXd moments(const JointDistribution& P, const Bases& b) {
  require_shape(P, b);
  const int T1 = b.b1.size(), T2 = b.b2.size();
  Eigen::MatrixXd m(T1, T2);
  for (int t1 = 0; t1 < T1; ++t1) {
    const int y1 = setting_of(b.b1, t1);
    for (int t2 = 0; t2 < T2; ++t2) {
      const int y2 = setting_of(b.b2, t2);
      double s = 0.0;
      for (int x1 = 0; x1 < P.outcomes1(y1); ++x1)
        for (int x2 = 0; x2 < P.outcomes2(y2); ++x2)
          s += b.b1.g[t1][x1] * b.b2.g[t2][x2] * P.at(y1, x1, y2, x2);
      m(t1, t2) = s;
    }
  }
  return m;
}

CMatrix pdm(const JointDistribution& P, const Bases& b) {
  require_a1(b);
  const Eigen::MatrixXd m = moments(P, b);
  CMatrix R = CMatrix::Zero(P.d1 * P.d2, P.d1 * P.d2);
  for (int t1 = 0; t1 < b.b1.size(); ++t1)
    for (int t2 = 0; t2 < b.b2.size(); ++t2) R += m(t1, t2) * kron(b.b1.H[t1], b.b2.H[t2]);
  return hermitian_part(R);
}

CMatrix rho1(const JointDistribution& P, const Bases& b) {
  return partial_trace(pdm(P, b), {P.d1, P.d2}, {0});
}

CMatrix rho2(const JointDistribution& P, const Bases& b) {
  return partial_trace(pdm(P, b), {P.d1, P.d2}, {1});
}

CMatrix tilde_choi(const JointDistribution& P, const Bases& b, Direction dir,
                   double tol_pd) {
  if (dir == Direction::TwoToOne)
    return tilde_choi(swap_parties(P), swapped(b), Direction::OneToTwo, tol_pd);
  const CMatrix R = pdm(P, b);
  const CMatrix r1 = partial_trace(R, {P.d1, P.d2}, {0});
  const CMatrix X = jordan_inverse(kron(r1, identity(P.d2)), R, tol_pd);
  return hermitian_part(partial_transpose(X, {P.d1, P.d2}, 0));
}

namespace {

CMatrix hat_with_anchor(const JointDistribution& P, const Bases& b,
                        const Conditionals& c, int anchor) {
  const auto& B1 = b.b1;
  const auto& B2 = b.b2;
  const int T1 = B1.size(), T2 = B2.size();
  // y2 used for the t2 = 0 slot, where g is identically 1
  auto y_of2 = [&](int t2) { return t2 == 0 ? anchor : setting_of(B2, t2); };
  auto g2 = [&](int t2, int x2) { return t2 == 0 ? 1.0 : B2.g[t2][x2]; };
  // sum_{x1,x2} g g P(x2|x1,y(t1),y(t2))
  auto corr = [&](int t1, int t2) {
    const int y1 = setting_of(B1, t1), y2 = y_of2(t2);
    double s = 0.0;
    for (int x1 = 0; x1 < P.outcomes1(y1); ++x1)
      for (int x2 = 0; x2 < P.outcomes2(y2); ++x2)
        s += B1.g[t1][x1] * g2(t2, x2) * c.cond.at(y1, x1, y2, x2);
    return s;
  };
  std::vector<double> mean1(T1, 0.0);
  for (int t1 = 1; t1 < T1; ++t1) {
    const int y1 = setting_of(B1, t1);
    for (int x1 = 0; x1 < P.outcomes1(y1); ++x1) mean1[t1] += B1.g[t1][x1] * c.p1[y1][x1];
  }
  Eigen::MatrixXd K(T1, T2);
  for (int t1 = 1; t1 < T1; ++t1)
    for (int t2 = 0; t2 < T2; ++t2) K(t1, t2) = corr(t1, t2);

  CMatrix C = CMatrix::Zero(P.d1 * P.d2, P.d1 * P.d2);
  for (int t1 = 1; t1 < T1; ++t1)
    for (int t2 = 0; t2 < T2; ++t2)
      C += K(t1, t2) * kron(B1.H[t1].transpose(), B2.H[t2]);
  const CMatrix I1 = identity(P.d1);
  for (int t2 = 0; t2 < T2; ++t2) {
    const int y2 = y_of2(t2);
    double k = 0.0;
    for (int x2 = 0; x2 < P.outcomes2(y2); ++x2) k += g2(t2, x2) * c.p2_0[y2][x2];
    for (int t1 = 1; t1 < T1; ++t1)
      for (int t1p = 1; t1p < T1; ++t1p) k -= mean1[t1] * B1.h(t1, t1p) * K(t1p, t2);
    C += k * kron(I1, B2.H[t2]);
  }
  return hermitian_part(C);
}

}  // namespace

HatChoi hat_choi_full(const JointDistribution& P, const Bases& b, Direction dir,
                      double tol_c0, int anchor) {
  if (dir == Direction::TwoToOne)
    return hat_choi_full(swap_parties(P), swapped(b), Direction::OneToTwo, tol_c0, anchor);
  require_a1(b);
  require_shape(P, b);
  if (anchor < 1 || anchor >= P.n2)
    throw Error(ErrorKind::InvalidArgument, "anchor setting out of range");
  const Conditionals c = conditionals(P, true, tol_c0);
  HatChoi out;
  out.choi = hat_with_anchor(P, b, c, anchor);
  out.anchor_spread = 0.0;
  for (int a = 1; a < P.n2; ++a)
    if (a != anchor)
      out.anchor_spread =
          std::max(out.anchor_spread, max_abs_diff(out.choi, hat_with_anchor(P, b, c, a)));
  return out;
}

}  // namespace qorder
