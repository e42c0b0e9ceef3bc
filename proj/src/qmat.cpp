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

#include "qorder/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qorder {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonHermitian: return "NonHermitian";
    case ErrorKind::SingularAnchor: return "SingularAnchor";
    case ErrorKind::NonOrthonormalBasis: return "NonOrthonormalBasis";
    case ErrorKind::BadContrastRank: return "BadContrastRank";
    case ErrorKind::A1Violation: return "A1Violation";
    case ErrorKind::A3Violation: return "A3Violation";
    case ErrorKind::C0Degenerate: return "C0Degenerate";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::IO: return "IO";
  }
  return "Unknown";
}

CMatrix identity(int n) { return CMatrix::Identity(n, n); }

CMatrix sigma(int j) {
  CMatrix s = CMatrix::Zero(2, 2);
  const cplx i(0.0, 1.0);
  switch (j) {
    case 0: s(0, 0) = 1.0; s(1, 1) = 1.0; break;
    case 1: s(0, 1) = 1.0; s(1, 0) = 1.0; break;
    case 2: s(0, 1) = -i; s(1, 0) = i; break;
    case 3: s(0, 0) = 1.0; s(1, 1) = -1.0; break;
    default: throw Error(ErrorKind::InvalidArgument, "Pauli index out of range");
  }
  return s;
}

CMatrix ket_bra(const CVector& a, const CVector& b) { return a * b.adjoint(); }

CMatrix projector(const CVector& v) { return v * v.adjoint(); }

CMatrix swap_op(int d) {
  CMatrix s = CMatrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) s(a * d + b, b * d + a) = 1.0;
  return s;
}

CMatrix bell_state(int d) {
  CVector v = CVector::Zero(d * d);
  for (int a = 0; a < d; ++a) v(a * d + a) = 1.0 / std::sqrt(double(d));
  return projector(v);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace {

long total_dim(const SystemDims& dims) {
  long n = 1;
  for (int d : dims) {
    if (d < 1) throw Error(ErrorKind::DimensionMismatch, "subsystem dim < 1");
    n *= d;
  }
  return n;
}

void check_square(const CMatrix& m, const SystemDims& dims) {
  if (m.rows() != m.cols() || m.rows() != total_dim(dims))
    throw Error(ErrorKind::DimensionMismatch,
                "matrix size does not match subsystem dims");
}

// Mixed-radix digits, most significant factor first.
std::vector<int> digits(long idx, const SystemDims& dims) {
  std::vector<int> out(dims.size());
  for (int k = int(dims.size()) - 1; k >= 0; --k) {
    out[k] = int(idx % dims[k]);
    idx /= dims[k];
  }
  return out;
}

long undigits(const std::vector<int>& dg, const SystemDims& dims) {
  long idx = 0;
  for (size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + dg[k];
  return idx;
}

}  // namespace

CMatrix partial_trace(const CMatrix& m, const SystemDims& dims,
                      const std::vector<int>& keep) {
  check_square(m, dims);
  std::vector<bool> kept(dims.size(), false);
  for (int k : keep) {
    if (k < 0 || k >= int(dims.size()))
      throw Error(ErrorKind::DimensionMismatch, "keep index out of range");
    kept[k] = true;
  }
  SystemDims kd;
  for (size_t k = 0; k < dims.size(); ++k)
    if (kept[k]) kd.push_back(dims[k]);
  long nk = 1;
  for (int d : kd) nk *= d;
  CMatrix out = CMatrix::Zero(nk, nk);
  const long n = m.rows();
  for (long r = 0; r < n; ++r) {
    auto dr = digits(r, dims);
    for (long c = 0; c < n; ++c) {
      auto dc = digits(c, dims);
      bool diag = true;
      for (size_t k = 0; k < dims.size() && diag; ++k)
        if (!kept[k] && dr[k] != dc[k]) diag = false;
      if (!diag) continue;
      long rr = 0, cc = 0;
      for (size_t k = 0; k < dims.size(); ++k)
        if (kept[k]) {
          rr = rr * dims[k] + dr[k];
          cc = cc * dims[k] + dc[k];
        }
      out(rr, cc) += m(r, c);
    }
  }
  return out;
}

CMatrix partial_transpose(const CMatrix& m, const SystemDims& dims, int sys) {
  check_square(m, dims);
  if (sys < 0 || sys >= int(dims.size()))
    throw Error(ErrorKind::DimensionMismatch, "subsystem index out of range");
  const long n = m.rows();
  CMatrix out(n, n);
  for (long r = 0; r < n; ++r) {
    auto dr = digits(r, dims);
    for (long c = 0; c < n; ++c) {
      auto dc = digits(c, dims);
      std::swap(dr[sys], dc[sys]);
      out(undigits(dr, dims), undigits(dc, dims)) = m(r, c);
      std::swap(dr[sys], dc[sys]);
    }
  }
  return out;
}

CMatrix permute_systems(const CMatrix& m, const SystemDims& dims,
                        const std::vector<int>& perm) {
  check_square(m, dims);
  if (perm.size() != dims.size())
    throw Error(ErrorKind::DimensionMismatch, "permutation size");
  SystemDims nd(dims.size());
  for (size_t k = 0; k < perm.size(); ++k) nd[k] = dims[perm[k]];
  const long n = m.rows();
  std::vector<long> map(n);
  for (long i = 0; i < n; ++i) {
    auto di = digits(i, dims);
    std::vector<int> ndg(dims.size());
    for (size_t k = 0; k < perm.size(); ++k) ndg[k] = di[perm[k]];
    map[i] = undigits(ndg, nd);
  }
  CMatrix out(n, n);
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) out(map[r], map[c]) = m(r, c);
  return out;
}

CMatrix jordan(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "jordan operands differ in size");
  return 0.5 * (a * b + b * a);
}

CMatrix jordan_inverse(const CMatrix& m, const CMatrix& r, double tol_pd) {
  if (m.rows() != r.rows() || m.cols() != r.cols() || m.rows() != m.cols())
    throw Error(ErrorKind::DimensionMismatch, "jordan_inverse operands");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(m));
  const Eigen::VectorXd& mu = es.eigenvalues();
  if (mu.minCoeff() <= tol_pd)
    throw Error(ErrorKind::SingularAnchor,
                "anchor has eigenvalue " + std::to_string(mu.minCoeff()));
  const CMatrix& U = es.eigenvectors();
  CMatrix rh = U.adjoint() * r * U;
  for (Eigen::Index i = 0; i < rh.rows(); ++i)
    for (Eigen::Index j = 0; j < rh.cols(); ++j) rh(i, j) *= 2.0 / (mu(i) + mu(j));
  return U * rh * U.adjoint();
}

double hermiticity_residual(const CMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

std::vector<double> herm_eigvals(const CMatrix& m, double herm_tol) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::DimensionMismatch, "eigvals of non-square matrix");
  const double scale = std::max(1.0, max_abs(m));
  if (hermiticity_residual(m) > herm_tol * scale)
    throw Error(ErrorKind::NonHermitian, "matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(m),
                                            Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(),
                         es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.begin(), ev.end());
  return ev;
}

double min_eigval(const CMatrix& m) {
  auto ev = herm_eigvals(m);
  return ev.empty() ? 0.0 : ev.front();
}

PsdResult is_psd(const CMatrix& m, double tol) {
  PsdResult r;
  r.min_eig = min_eigval(m);
  r.ok = r.min_eig >= -tol;
  return r;
}

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  return max_abs(a - b);
}

nlohmann::ordered_json matrix_to_json(const CMatrix& m) {
  nlohmann::ordered_json j;
  j["dim"] = m.rows();
  nlohmann::ordered_json re = nlohmann::ordered_json::array();
  nlohmann::ordered_json im = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::ordered_json rr = nlohmann::ordered_json::array();
    nlohmann::ordered_json ii = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      // +0.0 keeps "-0" out of golden files.
      rr.push_back(m(r, c).real() + 0.0);
      ii.push_back(m(r, c).imag() + 0.0);
    }
    re.push_back(rr);
    im.push_back(ii);
  }
  j["re"] = re;
  j["im"] = im;
  return j;
}

namespace {

std::vector<std::vector<double>> read_grid(const nlohmann::json& j,
                                           const char* key) {
  std::vector<std::vector<double>> g;
  if (!j.contains(key)) return g;
  const auto& a = j.at(key);
  if (!a.is_array()) throw Error(ErrorKind::Parse, std::string(key) + " not an array");
  for (const auto& row : a) {
    if (row.is_number()) {
      g.push_back({row.get<double>()});
    } else if (row.is_array()) {
      std::vector<double> r;
      for (const auto& v : row) {
        if (!v.is_number()) throw Error(ErrorKind::Parse, "non-numeric entry");
        r.push_back(v.get<double>());
      }
      g.push_back(r);
    } else {
      throw Error(ErrorKind::Parse, "bad matrix row");
    }
  }
  return g;
}

}  // namespace

CMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("re"))
    throw Error(ErrorKind::Parse, "matrix object needs \"re\"");
  auto re = read_grid(j, "re");
  auto im = read_grid(j, "im");
  const long rows = long(re.size());
  const long cols = rows ? long(re[0].size()) : 0;
  if (j.contains("dim") && j.at("dim").get<long>() != rows)
    throw Error(ErrorKind::Parse, "dim does not match row count");
  if (!im.empty() && long(im.size()) != rows)
    throw Error(ErrorKind::Parse, "re/im row count mismatch");
  CMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    if (long(re[r].size()) != cols || (!im.empty() && long(im[r].size()) != cols))
      throw Error(ErrorKind::Parse, "ragged matrix");
    for (long c = 0; c < cols; ++c) {
      const double x = re[r][c];
      const double y = im.empty() ? 0.0 : im[r][c];
      if (!std::isfinite(x) || !std::isfinite(y))
        throw Error(ErrorKind::Parse, "non-finite matrix entry");
      m(r, c) = cplx(x, y);
    }
  }
  return m;
}

CVector vector_from_json(const nlohmann::json& j) {
  CMatrix m = matrix_from_json(j);
  if (m.cols() == 1) return m.col(0);
  if (m.rows() == 1) return m.row(0).transpose();
  throw Error(ErrorKind::Parse, "expected a column vector");
}

}  // namespace qorder
