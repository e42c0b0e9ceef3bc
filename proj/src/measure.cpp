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

#include "qorder/measure.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qorder {

namespace {

constexpr double kOrthoTol = 1e-12;
constexpr double kCondMax = 1e8;

}  // namespace

MeasurementSetup build_pauli_family() {
  MeasurementSetup m;
  auto& f = m.family;
  f.d = 2;
  f.labels = {1, 2, 3};
  const double r = 1.0 / std::sqrt(2.0);
  const cplx i(0.0, 1.0);
  CVector p(2), q(2);
  // sigma_1 eigenbasis, outcome x has eigenvalue (-1)^x
  p << r, r;
  q << r, -r;
  f.vectors.push_back({p, q});
  p << r, i * r;
  q << r, -i * r;
  f.vectors.push_back({p, q});
  p << 1.0, 0.0;
  q << 0.0, 1.0;
  f.vectors.push_back({p, q});
  for (int s = 0; s < 3; ++s) m.contrasts.g.push_back({{1.0, -1.0}});
  return m;
}

double orthonormality_residual(const ProjectiveFamily& f) {
  double res = 0.0;
  for (int s = 0; s < f.num_settings(); ++s) {
    CMatrix sum = CMatrix::Zero(f.d, f.d);
    for (int x = 0; x < f.num_outcomes(s); ++x) {
      for (int x2 = 0; x2 < f.num_outcomes(s); ++x2) {
        cplx ip = f.vectors[s][x].dot(f.vectors[s][x2]);
        res = std::max(res, std::abs(ip - (x == x2 ? 1.0 : 0.0)));
      }
      sum += f.effect(s, x);
    }
    res = std::max(res, max_abs(sum - identity(f.d)));
  }
  return res;
}

ContrastScheme default_contrasts(const ProjectiveFamily& f) {
  ContrastScheme c;
  for (int s = 0; s < f.num_settings(); ++s) {
    const int n = f.num_outcomes(s);
    std::vector<std::vector<double>> rows;
    for (int z = 1; z < n; ++z) {
      std::vector<double> g(n, 0.0);
      g[0] = 1.0;
      g[z] = -1.0;
      rows.push_back(g);
    }
    c.g.push_back(rows);
  }
  return c;
}

namespace {

void validate_family(const ProjectiveFamily& f) {
  if (f.d < 1) throw Error(ErrorKind::InvalidArgument, "family dimension < 1");
  if (f.vectors.size() != f.labels.size())
    throw Error(ErrorKind::InvalidArgument, "labels/vectors size mismatch");
  for (size_t s = 0; s < f.labels.size(); ++s) {
    if (f.labels[s] == 0)
      throw Error(ErrorKind::InvalidArgument, "setting label 0 is reserved");
    if (int(f.vectors[s].size()) != f.d)
      throw Error(ErrorKind::NonOrthonormalBasis,
                  "setting needs exactly d rank-one effects");
    for (const auto& v : f.vectors[s])
      if (v.size() != f.d)
        throw Error(ErrorKind::NonOrthonormalBasis, "vector has wrong length");
  }
  const double r = orthonormality_residual(f);
  if (r > kOrthoTol)
    throw Error(ErrorKind::NonOrthonormalBasis,
                "orthonormality residual " + std::to_string(r));
}

// Projects each row to traceless and checks the rows plus the all-ones row
// are independent.
ContrastScheme normalize_contrasts(const ProjectiveFamily& f,
                                   const ContrastScheme& in) {
  if (int(in.g.size()) != f.num_settings())
    throw Error(ErrorKind::BadContrastRank, "one contrast block per setting");
  ContrastScheme out = in;
  for (int s = 0; s < f.num_settings(); ++s) {
    const int n = f.num_outcomes(s);
    auto& rows = out.g[s];
    if (int(rows.size()) != n - 1)
      throw Error(ErrorKind::BadContrastRank, "need |X_y| - 1 contrast rows");
    Eigen::MatrixXd M(n, n);
    for (int z = 0; z < n - 1; ++z) {
      if (int(rows[z].size()) != n)
        throw Error(ErrorKind::BadContrastRank, "contrast row length");
      double mean = 0.0;
      for (double v : rows[z]) mean += v;
      mean /= n;
      for (int x = 0; x < n; ++x) {
        rows[z][x] -= mean;
        M(z, x) = rows[z][x];
      }
    }
    M.row(n - 1).setOnes();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
    lu.setThreshold(1e-10);
    if (lu.rank() < n)
      throw Error(ErrorKind::BadContrastRank, "contrast rows are dependent");
  }
  return out;
}

}  // namespace

OperatorBasis build_operator_basis(const ProjectiveFamily& f,
                                   const ContrastScheme& c0, bool require_a1) {
  validate_family(f);
  const ContrastScheme c = normalize_contrasts(f, c0);
  OperatorBasis b;
  b.d = f.d;
  b.G.push_back(identity(f.d));
  b.setting.push_back(-1);
  b.contrast.push_back(-1);
  b.g.push_back({1.0});
  for (int s = 0; s < f.num_settings(); ++s) {
    for (size_t z = 0; z < c.g[s].size(); ++z) {
      CMatrix G = CMatrix::Zero(f.d, f.d);
      for (int x = 0; x < f.num_outcomes(s); ++x) G += c.g[s][z][x] * f.effect(s, x);
      b.G.push_back(G);
      b.setting.push_back(s);
      b.contrast.push_back(int(z));
      b.g.push_back(c.g[s][z]);
    }
  }
  const int T = b.size();
  b.gram.resize(T, T);
  for (int t = 0; t < T; ++t)
    for (int u = 0; u < T; ++u) b.gram(t, u) = (b.G[t] * b.G[u]).trace().real();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(b.gram);
  const auto& sv = svd.singularValues();
  b.gram_cond = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
  b.complete = (T == f.d * f.d) && b.gram_cond <= kCondMax;
  if (!b.complete) {
    if (require_a1)
      throw Error(ErrorKind::A1Violation,
                  std::to_string(T) + " operators for a " +
                      std::to_string(f.d * f.d) +
                      "-dim Hermitian space, Gram condition " +
                      std::to_string(b.gram_cond));
    return b;
  }
  b.h = b.gram.inverse();
  for (int t = 0; t < T; ++t) {
    CMatrix H = CMatrix::Zero(f.d, f.d);
    for (int u = 0; u < T; ++u) H += b.h(t, u) * b.G[u];
    b.H.push_back(hermitian_part(H));
  }
  return b;
}

OperatorBasis pauli_basis() {
  auto m = build_pauli_family();
  return build_operator_basis(m.family, m.contrasts);
}

Verdict check_A1(const OperatorBasis& b) {
  return {b.complete, b.gram_cond};
}

Verdict check_A2(const OperatorBasis& b) {
  double res = 0.0;
  for (int t = 1; t < b.size(); ++t) {
    const CMatrix G2 = b.G[t] * b.G[t];
    const double c = G2.trace().real() / b.d;
    res = std::max(res, max_abs(G2 - c * identity(b.d)));
  }
  return {res <= 1e-10, res};
}

Verdict check_A3(const ProjectiveFamily& f) {
  double res = 0.0;
  for (int s = 0; s < f.num_settings(); ++s)
    for (int x = 0; x < f.num_outcomes(s); ++x) {
      const CMatrix E = f.effect(s, x);
      res = std::max(res, std::abs(E.trace() - 1.0));
      res = std::max(res, max_abs(E * E - E));
    }
  return {res <= 1e-10, res};
}

MeasurementSetup family_from_json(const nlohmann::json& j) {
  MeasurementSetup m;
  try {
    m.family.d = j.at("d").get<int>();
    for (const auto& st : j.at("settings")) {
      m.family.labels.push_back(st.at("y").get<int>());
      std::vector<CVector> vs;
      for (const auto& v : st.at("vectors")) vs.push_back(vector_from_json(v));
      m.family.vectors.push_back(vs);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("family: ") + e.what());
  }
  validate_family(m.family);
  if (j.contains("contrasts")) {
    const auto& cj = j.at("contrasts");
    for (int s = 0; s < m.family.num_settings(); ++s) {
      const std::string key = std::to_string(m.family.labels[s]);
      if (!cj.contains(key))
        throw Error(ErrorKind::BadContrastRank, "missing contrasts for y=" + key);
      m.contrasts.g.push_back(
          cj.at(key).get<std::vector<std::vector<double>>>());
    }
  } else {
    m.contrasts = default_contrasts(m.family);
  }
  m.contrasts = normalize_contrasts(m.family, m.contrasts);
  return m;
}

nlohmann::ordered_json family_to_json(const MeasurementSetup& m) {
  nlohmann::ordered_json j;
  j["d"] = m.family.d;
  nlohmann::ordered_json settings = nlohmann::ordered_json::array();
  for (int s = 0; s < m.family.num_settings(); ++s) {
    nlohmann::ordered_json st;
    st["y"] = m.family.labels[s];
    nlohmann::ordered_json vs = nlohmann::ordered_json::array();
    for (const auto& v : m.family.vectors[s]) vs.push_back(matrix_to_json(CMatrix(v)));
    st["vectors"] = vs;
    settings.push_back(st);
  }
  j["settings"] = settings;
  nlohmann::ordered_json c;
  for (int s = 0; s < m.family.num_settings(); ++s)
    c[std::to_string(m.family.labels[s])] = m.contrasts.g[s];
  j["contrasts"] = c;
  return j;
}

MeasurementSetup load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IO, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
  return family_from_json(j);
}

}  // namespace qorder
