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

#include <complex>
#include <vector>

#include <Eigen/Dense>
#include "json.hpp"

#include "qorder/error.hpp"

namespace qorder {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using SystemDims = std::vector<int>;

CMatrix identity(int n);
// sigma(0) is the identity, sigma(1..3) the Pauli matrices.
CMatrix sigma(int j);
CMatrix ket_bra(const CVector& a, const CVector& b);
CMatrix projector(const CVector& v);
CMatrix swap_op(int d);
// |Phi+><Phi+| on d x d, normalized.
CMatrix bell_state(int d);

CMatrix kron(const CMatrix& a, const CMatrix& b);

// Subsystem indices are 0-based throughout.
CMatrix partial_trace(const CMatrix& m, const SystemDims& dims,
                      const std::vector<int>& keep);
CMatrix partial_transpose(const CMatrix& m, const SystemDims& dims, int sys);
// Reorders tensor factors: output factor k is input factor perm[k].
CMatrix permute_systems(const CMatrix& m, const SystemDims& dims,
                        const std::vector<int>& perm);

CMatrix jordan(const CMatrix& a, const CMatrix& b);
// Solves jordan(X, m) = r for Hermitian X given positive definite m.
CMatrix jordan_inverse(const CMatrix& m, const CMatrix& r,
                       double tol_pd = 1e-10);

double hermiticity_residual(const CMatrix& m);
CMatrix hermitian_part(const CMatrix& m);
std::vector<double> herm_eigvals(const CMatrix& m, double herm_tol = 1e-8);
double min_eigval(const CMatrix& m);

struct PsdResult {
  bool ok = false;
  double min_eig = 0.0;
};
PsdResult is_psd(const CMatrix& m, double tol = 1e-9);

double max_abs(const CMatrix& m);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

nlohmann::ordered_json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);
// Column vectors accept either a dim x 1 matrix object or a {"re","im"} pair
// of flat arrays.
CVector vector_from_json(const nlohmann::json& j);

}  // namespace qorder
