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


// Small reference computations used by the tests. They avoid the library's
// own tensor helpers so that a bug there cannot hide itself.
#pragma once

#include <cmath>
#include <complex>

#include "doctest.h"
#include "qorder/sim.hpp"

namespace oracle {

using cd = std::complex<double>;
using qorder::CMatrix;

inline CMatrix pauli(int k) {
  CMatrix m = CMatrix::Zero(2, 2);
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, cd(0, -1), cd(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

// Index-by-index Kronecker product.
inline CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  CMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return m;
}

// Pauli-basis vectors: |x,1> = (|0> + (-1)^x |1>)/sqrt2, |x,2> with i, |x,3> computational.
inline qorder::CVector pauli_ket(int y, int x) {
  qorder::CVector v(2);
  const double s = x == 0 ? 1.0 : -1.0;
  const double r = 1.0 / std::sqrt(2.0);
  if (y == 1) v << r, s * r;
  else if (y == 2) v << r, cd(0, s * r);
  else v << (x == 0 ? 1.0 : 0.0), (x == 0 ? 0.0 : 1.0);
  return v;
}

inline CMatrix pauli_proj(int y, int x) {
  const auto v = pauli_ket(y, x);
  return v * v.adjoint();
}

// Applies a channel given by its Choi matrix stored input (x) output,
// L(rho) = sum_{ab} rho_{ab} C_{(a,.),(b,.)} block.
inline CMatrix apply_choi(const CMatrix& choi, const CMatrix& rho) {
  const int din = int(rho.rows()), dout = int(choi.rows()) / din;
  CMatrix out = CMatrix::Zero(dout, dout);
  for (int a = 0; a < din; ++a)
    for (int b = 0; b < din; ++b) out += rho(a, b) * choi.block(a * dout, b * dout, dout, dout);
  return out;
}

// Direct textbook probabilities of a forward memoryless strategy under Pauli
// measurements; y = 0 means no measurement.
inline qorder::JointDistribution seq12_table(const CMatrix& rho, const CMatrix& choi) {
  qorder::JointDistribution P(2, 2, 4, 4);
  for (int y1 = 0; y1 < 4; ++y1)
    for (int x1 = 0; x1 < (y1 ? 2 : 1); ++x1) {
      CMatrix post = rho;
      if (y1) {
        const CMatrix E = pauli_proj(y1, x1);
        post = E * rho * E;
      }
      const CMatrix out = apply_choi(choi, post);
      for (int y2 = 0; y2 < 4; ++y2)
        for (int x2 = 0; x2 < (y2 ? 2 : 1); ++x2) {
          const double p = y2 ? (pauli_proj(y2, x2) * out).trace().real() : out.trace().real();
          P.at(y1, x1, y2, x2) = p;
        }
    }
  return P;
}

inline double max_diff(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline double min_eig(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

inline CMatrix phi_plus() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return m;
}

inline CMatrix swap4() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = m(3, 3) = 1;
  m(1, 2) = m(2, 1) = 1;
  return m;
}

}  // namespace oracle
