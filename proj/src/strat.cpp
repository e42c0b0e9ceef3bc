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

#include "qorder/strat.hpp"

#include <cmath>

namespace qorder {

const char* to_string(Direction d) {
  return d == Direction::OneToTwo ? "1to2" : "2to1";
}

Direction direction_from_string(const std::string& s) {
  if (s == "1to2") return Direction::OneToTwo;
  if (s == "2to1") return Direction::TwoToOne;
  throw Error(ErrorKind::Parse, "direction must be 1to2 or 2to1, got " + s);
}

CMatrix choi_of_map(const std::function<CMatrix(const CMatrix&)>& f, int d_in) {
  CMatrix out;
  for (int a = 0; a < d_in; ++a)
    for (int b = 0; b < d_in; ++b) {
      CMatrix e = CMatrix::Zero(d_in, d_in);
      e(a, b) = 1.0;
      CMatrix term = kron(e, f(e));
      if (out.size() == 0) out = CMatrix::Zero(term.rows(), term.cols());
      out += term;
    }
  return out;
}

CMatrix choi_of_kraus(const std::vector<CMatrix>& kraus) {
  if (kraus.empty()) throw Error(ErrorKind::InvalidArgument, "no Kraus operators");
  return choi_of_map(
      [&](const CMatrix& x) {
        CMatrix y = CMatrix::Zero(kraus[0].rows(), kraus[0].rows());
        for (const auto& k : kraus) y += k * x * k.adjoint();
        return y;
      },
      int(kraus[0].cols()));
}

CMatrix apply_channel(const CMatrix& choi, const CMatrix& rho) {
  const int din = int(rho.rows());
  if (din == 0 || choi.rows() % din != 0)
    throw Error(ErrorKind::DimensionMismatch, "channel input dimension");
  const int dout = int(choi.rows() / din);
  CMatrix m = kron(rho.transpose(), identity(dout)) * choi;
  return partial_trace(m, {din, dout}, {1});
}

double tp_residual(const CMatrix& choi, int d_in) {
  if (d_in <= 0 || choi.rows() % d_in != 0) return INFINITY;
  const int dout = int(choi.rows() / d_in);
  return max_abs(partial_trace(choi, {d_in, dout}, {0}) - identity(d_in));
}

CMatrix identity_choi(int d) { return double(d) * bell_state(d); }

CMatrix choi_from_bloch(const Eigen::Matrix3d& T, const Eigen::Vector3d& t) {
  CMatrix ct1 = kron(sigma(0), sigma(0));
  for (int j = 0; j < 3; ++j) {
    ct1 += t(j) * kron(sigma(0), sigma(j + 1));
    for (int i = 0; i < 3; ++i) ct1 += T(i, j) * kron(sigma(i + 1), sigma(j + 1));
  }
  ct1 *= 0.5;
  return partial_transpose(ct1, {2, 2}, 0);
}

CMatrix choi_from_lambdas(const Eigen::Vector3d& lambda) {
  CMatrix c = 0.5 * kron(sigma(0), sigma(0));
  for (int j = 0; j < 3; ++j) c += 0.5 * lambda(j) * kron(sigma(j + 1), sigma(j + 1));
  return c;
}

Eigen::Vector3d pauli_lambdas(const std::vector<double>& p) {
  if (p.size() != 4) throw Error(ErrorKind::InvalidArgument, "need p0..p3");
  double s = 0.0;
  for (double v : p) {
    if (!(v >= -1e-12)) throw Error(ErrorKind::InvalidArgument, "negative probability");
    s += v;
  }
  if (std::abs(s - 1.0) > 1e-10)
    throw Error(ErrorKind::InvalidArgument, "probabilities must sum to 1");
  return {2 * p[0] + 2 * p[1] - 1, -2 * p[0] - 2 * p[2] + 1, 2 * p[0] + 2 * p[3] - 1};
}

CMatrix choi_from_pauli_probs(const std::vector<double>& p) {
  return choi_from_lambdas(pauli_lambdas(p));
}

CMatrix depolarizing_choi(double mu) {
  if (!(mu >= 0.0 && mu <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "mu outside [0,1]");
  return choi_from_pauli_probs({1 - 0.75 * mu, 0.25 * mu, 0.25 * mu, 0.25 * mu});
}

CMatrix bloch_state(const Eigen::Vector3d& c) {
  if (c.norm() > 1.0 + 1e-12)
    throw Error(ErrorKind::InvalidArgument, "Bloch vector longer than 1");
  CMatrix r = sigma(0);
  for (int j = 0; j < 3; ++j) r += c(j) * sigma(j + 1);
  return 0.5 * r;
}

namespace {

CMatrix pauli_combo(const Eigen::Vector3d& v) {
  CMatrix m = CMatrix::Zero(2, 2);
  for (int i = 0; i < 3; ++i) m += v(i) * sigma(i + 1);
  return m;
}

}  // namespace

CMatrix QubitCanonicalForm::alpha(int j) const { return pauli_combo(A.row(j)); }
CMatrix QubitCanonicalForm::beta(int j) const { return pauli_combo(B.row(j)); }

CMatrix QubitCanonicalForm::reconstruct_choi_t1() const {
  CMatrix m = kron(sigma(0), bloch_state(c2));
  for (int j = 0; j < t; ++j) m += 0.5 * lambda(j) * kron(alpha(j), beta(j));
  return m;
}

QubitCanonicalForm canonical_qubit_form(const CMatrix& choi, double rank_tol) {
  if (choi.rows() != 4 || choi.cols() != 4)
    throw Error(ErrorKind::DimensionMismatch, "qubit channel Choi must be 4x4");
  if (tp_residual(choi, 2) > 1e-10)
    throw Error(ErrorKind::InvalidArgument, "Choi matrix is not trace preserving");
  const CMatrix ct1 = partial_transpose(choi, {2, 2}, 0);
  QubitCanonicalForm f;
  for (int i = 0; i < 3; ++i) {
    f.c2(i) = 0.5 * (kron(sigma(0), sigma(i + 1)) * ct1).trace().real();
    for (int j = 0; j < 3; ++j)
      f.T(i, j) = 0.5 * (kron(sigma(i + 1), sigma(j + 1)) * ct1).trace().real();
  }
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(f.T, Eigen::ComputeFullU | Eigen::ComputeFullV);
  f.lambda = svd.singularValues();
  const Eigen::Matrix3d U = svd.matrixU(), V = svd.matrixV();
  f.A = U.transpose();
  f.B = V.transpose();
  f.orientation = (U.determinant() * V.determinant() < 0) ? -1 : 1;
  f.t = 0;
  for (int j = 0; j < 3; ++j) {
    if (f.lambda(j) > rank_tol) ++f.t;
    if (f.lambda(j) > rank_tol * 1e-2 && f.lambda(j) < rank_tol * 1e2) f.borderline = true;
  }
  return f;
}

StrategyDims strategy_dims(const Strategy& s) {
  return std::visit(
      [](const auto& v) -> StrategyDims {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Individual>) {
          return {int(v.rho1.rows()), int(v.rho2.rows())};
        } else if constexpr (std::is_same_v<T, Parallel>) {
          return {v.d1, v.d2};
        } else if constexpr (std::is_same_v<T, SeqMemoryless>) {
          const int din = int(v.rho.rows());
          const int dout = din ? int(v.choi.rows() / din) : 0;
          if (v.dir == Direction::OneToTwo) return {din, dout};
          return {dout, din};
        } else if constexpr (std::is_same_v<T, SeqQuantumMemory>) {
          const int d1 = v.d_mem ? int(v.rho.rows() / v.d_mem) : 0;
          const int dd = d1 * v.d_mem;
          return {d1, dd ? int(v.processor.rows() / dd) : 0};
        } else {
          if (v.components.empty()) return {0, 0};
          return strategy_dims(Strategy(v.components.front()));
        }
      },
      s);
}

namespace {

void check_state(const CMatrix& rho, const std::string& name, double tol_psd,
                 ValidationReport& r) {
  if (rho.rows() == 0 || rho.rows() != rho.cols()) {
    r.ok = false;
    r.problems.push_back(name + ": not a square matrix");
    return;
  }
  const double h = hermiticity_residual(rho);
  r.residuals.push_back({name + ".hermiticity", h});
  if (h > 1e-12) {
    r.ok = false;
    r.problems.push_back(name + ": not Hermitian");
    return;
  }
  const double tr = std::abs(rho.trace() - 1.0);
  r.residuals.push_back({name + ".trace", tr});
  if (tr > 1e-12) {
    r.ok = false;
    r.problems.push_back(name + ": trace differs from 1");
  }
  const double me = min_eigval(rho);
  r.residuals.push_back({name + ".min_eig", me});
  if (me < -tol_psd) {
    r.ok = false;
    r.problems.push_back(name + ": not positive semidefinite");
  }
}

void check_choi(const CMatrix& c, int din, const std::string& name,
                double tol_psd, ValidationReport& r) {
  if (din <= 0 || c.rows() != c.cols() || c.rows() % din != 0) {
    r.ok = false;
    r.problems.push_back(name + ": dimensions inconsistent with input");
    return;
  }
  const double h = hermiticity_residual(c);
  r.residuals.push_back({name + ".hermiticity", h});
  if (h > 1e-10) {
    r.ok = false;
    r.problems.push_back(name + ": not Hermitian");
    return;
  }
  const double tp = tp_residual(c, din);
  r.residuals.push_back({name + ".tp", tp});
  if (tp > 1e-10) {
    r.ok = false;
    r.problems.push_back(name + ": not trace preserving");
  }
  const double me = min_eigval(c);
  r.residuals.push_back({name + ".min_eig", me});
  if (me < -tol_psd) {
    r.quasi = true;
    r.problems.push_back(name + ": quasi (not completely positive)");
  }
}

void validate_seq(const SeqMemoryless& s, const std::string& name, double tol,
                  ValidationReport& r) {
  check_state(s.rho, name + ".rho", tol, r);
  check_choi(s.choi, int(s.rho.rows()), name + ".choi", tol, r);
}

}  // namespace

ValidationReport validate(const Strategy& s, double tol_psd) {
  ValidationReport r;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Individual>) {
          check_state(v.rho1, "rho1", tol_psd, r);
          check_state(v.rho2, "rho2", tol_psd, r);
        } else if constexpr (std::is_same_v<T, Parallel>) {
          if (long(v.d1) * v.d2 != v.rho12.rows()) {
            r.ok = false;
            r.problems.push_back("rho12: size differs from d1*d2");
          }
          check_state(v.rho12, "rho12", tol_psd, r);
        } else if constexpr (std::is_same_v<T, SeqMemoryless>) {
          validate_seq(v, "seq", tol_psd, r);
        } else if constexpr (std::is_same_v<T, SeqQuantumMemory>) {
          check_state(v.rho, "rho", tol_psd, r);
          if (v.d_mem <= 0 || v.rho.rows() % v.d_mem != 0) {
            r.ok = false;
            r.problems.push_back("rho: size not a multiple of d_mem");
            return;
          }
          check_choi(v.processor, int(v.rho.rows()), "processor", tol_psd, r);
        } else {
          if (v.weights.size() != v.components.size() || v.components.empty()) {
            r.ok = false;
            r.problems.push_back("mixture: weights/components mismatch");
            return;
          }
          double sum = 0.0;
          for (double w : v.weights) {
            if (w < 0) {
              r.ok = false;
              r.problems.push_back("mixture: negative weight");
            }
            sum += w;
          }
          r.residuals.push_back({"mixture.weight_sum", std::abs(sum - 1.0)});
          if (std::abs(sum - 1.0) > 1e-12) {
            r.ok = false;
            r.problems.push_back("mixture: weights do not sum to 1");
          }
          const auto dims = strategy_dims(Strategy(v.components.front()));
          for (size_t k = 0; k < v.components.size(); ++k) {
            const auto dk = strategy_dims(Strategy(v.components[k]));
            if (dk.d1 != dims.d1 || dk.d2 != dims.d2) {
              r.ok = false;
              r.problems.push_back("mixture: component dimensions differ");
            }
            validate_seq(v.components[k], "component" + std::to_string(k), tol_psd, r);
          }
        }
      },
      s);
  return r;
}

Strategy preset(const std::string& name, double lambda) {
  if (name == "ExB") {
    SeqQuantumMemory q;
    q.d_mem = 2;
    q.rho = bell_state(2);
    // discard O1, hand the memory to Bob: I_{O1} (x) C[id]_{M -> I2}
    q.processor = kron(identity(2), identity_choi(2));
    return q;
  }
  if (name == "Ex1prime" || name == "Ex1") {
    const bool prime = name == "Ex1prime";
    if (!prime) {
      if (!(lambda >= 0.0 && lambda <= 1.0))
        throw Error(ErrorKind::InvalidArgument, "Ex1 needs lambda in [0,1]");
      if (lambda == 0.0 || lambda == 1.0)
        throw Error(ErrorKind::C0Degenerate,
                    "Ex1 with lambda in {0,1} leaves an outcome with zero probability");
    }
    Mixture m;
    for (int X = 0; X < 2; ++X) {
      SeqMemoryless s;
      s.dir = Direction::OneToTwo;
      CVector v = CVector::Zero(2);
      v(X) = 1.0;
      s.rho = projector(v);
      const CMatrix u = sigma(X);
      s.choi = choi_of_map(
          [&](const CMatrix& x) {
            CMatrix y = u * x * u.adjoint();
            if (prime) y = 0.5 * y + 0.25 * y.trace() * identity(2);
            return y;
          },
          2);
      m.components.push_back(s);
      m.weights.push_back(prime ? 0.5 : (X == 0 ? lambda : 1.0 - lambda));
    }
    return m;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown preset " + name);
}

namespace {

double param(const std::map<std::string, double>& p, const std::string& k) {
  auto it = p.find(k);
  if (it == p.end()) throw Error(ErrorKind::InvalidArgument, "missing parameter " + k);
  return it->second;
}

void check_unit(double v, const std::string& k) {
  if (!(v >= -1.0 && v <= 1.0))
    throw Error(ErrorKind::InvalidArgument, k + " outside [-1,1]");
}

}  // namespace

CMatrix family_choi(const std::string& name,
                    const std::map<std::string, double>& params) {
  if (name == "depolarizing") return depolarizing_choi(param(params, "mu"));
  if (name == "pauli")
    return choi_from_pauli_probs({param(params, "p0"), param(params, "p1"),
                                  param(params, "p2"), param(params, "p3")});
  if (name == "pd1") {
    const double l3 = param(params, "lambda3");
    check_unit(l3, "lambda3");
    return choi_from_lambdas({1.0, -l3, l3});
  }
  if (name == "pd3") {
    const double l1 = param(params, "lambda1");
    check_unit(l1, "lambda1");
    return choi_from_lambdas({l1, -l1, 1.0});
  }
  throw Error(ErrorKind::InvalidArgument, "unknown channel family " + name);
}

SeqMemoryless family_strategy(const std::string& name,
                              const std::map<std::string, double>& params,
                              const Eigen::Vector3d& bloch1) {
  SeqMemoryless s;
  s.dir = Direction::OneToTwo;
  s.rho = bloch_state(bloch1);
  s.choi = family_choi(name, params);
  return s;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson seq_to_json(const SeqMemoryless& s) {
  ojson j;
  j["class"] = "seq";
  j["direction"] = to_string(s.dir);
  j["rho"] = matrix_to_json(s.rho);
  j["choi"] = matrix_to_json(s.choi);
  return j;
}

SeqMemoryless seq_from_json(const nlohmann::json& j) {
  SeqMemoryless s;
  s.dir = direction_from_string(j.value("direction", std::string("1to2")));
  if (j.contains("family")) {
    const auto& f = j.at("family");
    std::map<std::string, double> params;
    Eigen::Vector3d c = Eigen::Vector3d::Zero();
    if (f.contains("params"))
      for (auto it = f.at("params").begin(); it != f.at("params").end(); ++it) {
        if (it.key() == "bloch") {
          auto v = it.value().get<std::vector<double>>();
          if (v.size() != 3) throw Error(ErrorKind::Parse, "bloch needs 3 entries");
          c = Eigen::Vector3d(v[0], v[1], v[2]);
        } else {
          params[it.key()] = it.value().get<double>();
        }
      }
    if (params.count("kappa")) c(0) = params["kappa"];
    auto fs = family_strategy(f.at("name").get<std::string>(), params, c);
    fs.dir = s.dir;
    return fs;
  }
  s.rho = matrix_from_json(j.at("rho"));
  s.choi = matrix_from_json(j.at("choi"));
  return s;
}

}  // namespace

ojson strategy_to_json(const Strategy& s) {
  return std::visit(
      [](const auto& v) -> ojson {
        using T = std::decay_t<decltype(v)>;
        ojson j;
        if constexpr (std::is_same_v<T, Individual>) {
          j["class"] = "individual";
          j["rho1"] = matrix_to_json(v.rho1);
          j["rho2"] = matrix_to_json(v.rho2);
        } else if constexpr (std::is_same_v<T, Parallel>) {
          j["class"] = "parallel";
          j["d"] = {v.d1, v.d2};
          j["rho12"] = matrix_to_json(v.rho12);
        } else if constexpr (std::is_same_v<T, SeqMemoryless>) {
          j = seq_to_json(v);
        } else if constexpr (std::is_same_v<T, SeqQuantumMemory>) {
          j["class"] = "seq_qmem";
          j["direction"] = "1to2";
          j["d_mem"] = v.d_mem;
          j["rho"] = matrix_to_json(v.rho);
          j["processor"] = matrix_to_json(v.processor);
        } else {
          j["class"] = "mixture";
          j["weights"] = v.weights;
          ojson comps = ojson::array();
          for (const auto& c : v.components) comps.push_back(seq_to_json(c));
          j["components"] = comps;
        }
        return j;
      },
      s);
}

Strategy strategy_from_json(const nlohmann::json& j) {
  try {
    if (j.contains("family")) {
      const std::string name = j.at("family").at("name").get<std::string>();
      if (name == "ExB" || name == "Ex1prime" || name == "Ex1") {
        double lambda = 0.5;
        if (j.at("family").contains("params"))
          lambda = j.at("family").at("params").value("lambda", 0.5);
        return preset(name, lambda);
      }
    }
    const std::string cls = j.at("class").get<std::string>();
    if (cls == "individual")
      return Individual{matrix_from_json(j.at("rho1")), matrix_from_json(j.at("rho2"))};
    if (cls == "parallel") {
      Parallel p;
      p.rho12 = matrix_from_json(j.at("rho12"));
      if (j.contains("d")) {
        auto d = j.at("d").get<std::vector<int>>();
        if (d.size() != 2) throw Error(ErrorKind::Parse, "parallel d needs two entries");
        p.d1 = d[0];
        p.d2 = d[1];
      } else {
        const int n = int(std::lround(std::sqrt(double(p.rho12.rows()))));
        p.d1 = p.d2 = n;
      }
      return p;
    }
    if (cls == "seq") return seq_from_json(j);
    if (cls == "seq_qmem") {
      if (j.value("direction", std::string("1to2")) != "1to2")
        throw Error(ErrorKind::Parse, "seq_qmem supports direction 1to2 only");
      SeqQuantumMemory q;
      q.d_mem = j.value("d_mem", 2);
      q.rho = matrix_from_json(j.at("rho"));
      q.processor = matrix_from_json(j.at("processor"));
      return q;
    }
    if (cls == "mixture") {
      Mixture m;
      m.weights = j.at("weights").get<std::vector<double>>();
      for (const auto& c : j.at("components")) m.components.push_back(seq_from_json(c));
      return m;
    }
    throw Error(ErrorKind::Parse, "unknown strategy class " + cls);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("strategy: ") + e.what());
  }
}

}  // namespace qorder
