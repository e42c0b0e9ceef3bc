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


#include "qorder/random.hpp"

#include <algorithm>
#include <numeric>

namespace qorder {

namespace {

CMatrix ginibre(Rng& rng, int r, int c) {
  std::normal_distribution<double> n(0.0, 1.0);
  CMatrix g(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) g(i, j) = {n(rng), n(rng)};
  return g;
}

// Unit vector uniformly distributed in the span of the given coordinates.
Eigen::Vector3d random_unit_in(Rng& rng, const std::vector<int>& coords) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  for (int i : coords) v(i) = n(rng);
  return v.normalized();
}

// Rows 0..t-1 orthonormal inside span(free coords); remaining rows complete
// the basis.
Eigen::Matrix3d rows_avoiding(Rng& rng, const std::vector<int>& free, int t) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  if (int(free.size()) == 3) {
    m = random_orthogonal(rng);
    return m;
  }
  // orthonormal set in the free subspace
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<Eigen::Vector3d> rows;
  for (int j = 0; j < t; ++j) {
    Eigen::Vector3d v = random_unit_in(rng, free);
    for (const auto& r : rows) v -= v.dot(r) * r;
    rows.push_back(v.normalized());
  }
  while (rows.size() < 3) {
    Eigen::Vector3d v(n(rng), n(rng), n(rng));
    for (const auto& r : rows) v -= v.dot(r) * r;
    rows.push_back(v.normalized());
  }
  for (int j = 0; j < 3; ++j) m.row(j) = rows[j].transpose();
  if (std::bernoulli_distribution(0.5)(rng)) m.row(2) *= -1.0;
  return m;
}

// Bloch vector supported on `support`, length uniform-ish in the unit ball.
Eigen::Vector3d random_bloch_on(Rng& rng, const std::vector<int>& support) {
  if (support.empty()) return Eigen::Vector3d::Zero();
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return random_unit_in(rng, support) * std::cbrt(u(rng));
}

// Coordinates carrying the Bloch vector; at most 3 - t of them.
std::vector<int> random_support(Rng& rng, int t) {
  std::vector<int> all{0, 1, 2};
  std::shuffle(all.begin(), all.end(), rng);
  const int k = std::uniform_int_distribution<int>(0, 3 - t)(rng);
  std::vector<int> s(all.begin(), all.begin() + k);
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<int> complement(const std::vector<int>& s) {
  std::vector<int> c;
  for (int i = 0; i < 3; ++i)
    if (std::find(s.begin(), s.end(), i) == s.end()) c.push_back(i);
  return c;
}

}  // namespace

CMatrix random_state(Rng& rng, int d) {
  const CMatrix g = ginibre(rng, d, d);
  CMatrix r = g * g.adjoint();
  return hermitian_part(r / r.trace().real());
}

CMatrix random_pure_state(Rng& rng, int d) {
  const CVector v = ginibre(rng, d, 1).col(0).normalized();
  return v * v.adjoint();
}

CMatrix random_channel(Rng& rng, int d_in, int d_out, int kraus_rank) {
  const int k = kraus_rank > 0 ? kraus_rank : d_in * d_out;
  // isometry from the polar part of a Ginibre matrix
  const CMatrix g = ginibre(rng, d_out * k, d_in);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(g.adjoint() * g);
  const CMatrix inv_sqrt = es.eigenvectors() *
                           es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                           es.eigenvectors().adjoint();
  const CMatrix v = g * inv_sqrt;
  std::vector<CMatrix> kraus;
  for (int i = 0; i < k; ++i) kraus.push_back(v.block(i * d_out, 0, d_out, d_in));
  return choi_of_kraus(kraus);
}

Eigen::Matrix3d random_orthogonal(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Matrix3d g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = n(rng);
  Eigen::HouseholderQR<Eigen::Matrix3d> qr(g);
  Eigen::Matrix3d q = qr.householderQ();
  const Eigen::Matrix3d r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 3; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  return q;
}

SeqMemoryless random_seq(Rng& rng, Direction dir, int d) {
  SeqMemoryless s;
  s.dir = dir;
  s.rho = random_state(rng, d);
  s.choi = random_channel(rng, d, d);
  return s;
}

RandomForm random_constrained_form(Rng& rng, int t) {
  if (t < 0 || t > 3) throw Error(ErrorKind::InvalidArgument, "rank must be 0..3");
  RandomForm out;
  auto& f = out.form;
  f.t = t;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> l(3, 0.0);
  for (int j = 0; j < t; ++j) l[j] = 1.0 - u(rng);  // in (0, 1]
  std::sort(l.begin(), l.end(), std::greater<>());
  f.lambda = Eigen::Vector3d(l[0], l[1], l[2]);

  const auto s1 = random_support(rng, t);
  const auto s2 = random_support(rng, t);
  out.c1 = random_bloch_on(rng, s1);
  f.c2 = random_bloch_on(rng, s2);
  f.A = rows_avoiding(rng, complement(s1), t);
  f.B = rows_avoiding(rng, complement(s2), t);
  f.orientation = f.A.determinant() * f.B.determinant() < 0 ? -1 : 1;
  f.T = f.A.transpose() * f.lambda.asDiagonal() * f.B;
  return out;
}

}  // namespace qorder
