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

#include "qorder/sim.hpp"

#include <cmath>
#include <sstream>
#include <thread>

namespace qorder {

JointDistribution::JointDistribution(int d1_, int d2_, int n1_, int n2_)
    : d1(d1_), d2(d2_), n1(n1_), n2(n2_),
      p(size_t(n1_) * d1_ * n2_ * d2_, 0.0) {}

double JointDistribution::block_sum(int y1, int y2) const {
  double s = 0.0;
  for (int x1 = 0; x1 < outcomes1(y1); ++x1)
    for (int x2 = 0; x2 < outcomes2(y2); ++x2) s += at(y1, x1, y2, x2);
  return s;
}

double normalization_residual(const JointDistribution& P) {
  double r = 0.0;
  for (int y1 = 0; y1 < P.n1; ++y1)
    for (int y2 = 0; y2 < P.n2; ++y2)
      r = std::max(r, std::abs(P.block_sum(y1, y2) - 1.0));
  return r;
}

double sup_norm_diff(const JointDistribution& a, const JointDistribution& b) {
  if (a.p.size() != b.p.size() || a.d1 != b.d1 || a.n1 != b.n1) return INFINITY;
  double r = 0.0;
  for (size_t i = 0; i < a.p.size(); ++i) r = std::max(r, std::abs(a.p[i] - b.p[i]));
  return r;
}

JointDistribution swap_parties(const JointDistribution& P) {
  JointDistribution Q(P.d2, P.d1, P.n2, P.n1);
  Q.is_signed = P.is_signed;
  for (int y1 = 0; y1 < P.n1; ++y1)
    for (int x1 = 0; x1 < P.d1; ++x1)
      for (int y2 = 0; y2 < P.n2; ++y2)
        for (int x2 = 0; x2 < P.d2; ++x2) Q.at(y2, x2, y1, x1) = P.at(y1, x1, y2, x2);
  return Q;
}

namespace {

ProjectiveFamily checked(const ProjectiveFamily& f, int d, const char* who) {
  if (f.d != d)
    throw Error(ErrorKind::DimensionMismatch,
                std::string(who) + " family dimension does not match strategy");
  return f;
}

void ensure_valid(const Strategy& s, bool allow_quasi) {
  auto rep = validate(s);
  if (!rep.ok) {
    std::string msg = "invalid strategy";
    for (const auto& p : rep.problems) msg += "; " + p;
    throw Error(ErrorKind::InvalidArgument, msg);
  }
  if (rep.quasi && !allow_quasi)
    throw Error(ErrorKind::InvalidArgument,
                "strategy contains a non-CP Choi matrix; signed simulation not requested");
}

// Fills the table from Bob's unnormalized conditional input states.
template <class BobState>
JointDistribution from_bob_states(const ProjectiveFamily& f1,
                                  const ProjectiveFamily& f2, BobState&& bob) {
  JointDistribution P(f1.d, f2.d, f1.num_settings() + 1, f2.num_settings() + 1);
  for (int y1 = 0; y1 < P.n1; ++y1)
    for (int x1 = 0; x1 < P.outcomes1(y1); ++x1) {
      const CMatrix sig = y1 == 0 ? bob(nullptr) : bob(&f1.vectors[y1 - 1][x1]);
      P.at(y1, x1, 0, 0) = sig.trace().real();
      for (int y2 = 1; y2 < P.n2; ++y2)
        for (int x2 = 0; x2 < P.d2; ++x2) {
          const CVector& v = f2.vectors[y2 - 1][x2];
          P.at(y1, x1, y2, x2) = (v.adjoint() * sig * v)(0, 0).real();
        }
    }
  return P;
}

JointDistribution simulate_seq(const SeqMemoryless& s, const ProjectiveFamily& f1,
                               const ProjectiveFamily& f2) {
  if (s.dir == Direction::TwoToOne)
    return swap_parties(simulate_seq({Direction::OneToTwo, s.rho, s.choi}, f2, f1));
  return from_bob_states(f1, f2, [&](const CVector* v) {
    if (!v) return apply_channel(s.choi, s.rho);
    const CMatrix E = projector(*v);
    return apply_channel(s.choi, E * s.rho * E);
  });
}

}  // namespace

JointDistribution simulate_exact(const Strategy& s, const ProjectiveFamily& f1,
                                 const ProjectiveFamily& f2, bool allow_quasi) {
  ensure_valid(s, allow_quasi);
  const auto dims = strategy_dims(s);
  checked(f1, dims.d1, "Alice");
  checked(f2, dims.d2, "Bob");
  JointDistribution P = std::visit(
      [&](const auto& v) -> JointDistribution {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Individual>) {
          return from_bob_states(f1, f2, [&](const CVector* u) -> CMatrix {
            if (!u) return v.rho2;
            return (u->adjoint() * v.rho1 * *u)(0, 0).real() * v.rho2;
          });
        } else if constexpr (std::is_same_v<T, Parallel>) {
          return from_bob_states(f1, f2, [&](const CVector* u) -> CMatrix {
            if (!u) return partial_trace(v.rho12, {v.d1, v.d2}, {1});
            const CMatrix E = kron(projector(*u), identity(v.d2));
            return partial_trace(E * v.rho12, {v.d1, v.d2}, {1});
          });
        } else if constexpr (std::is_same_v<T, SeqMemoryless>) {
          return simulate_seq(v, f1, f2);
        } else if constexpr (std::is_same_v<T, SeqQuantumMemory>) {
          return from_bob_states(f1, f2, [&](const CVector* u) -> CMatrix {
            if (!u) return apply_channel(v.processor, v.rho);
            const CMatrix E = kron(projector(*u), identity(v.d_mem));
            return apply_channel(v.processor, E * v.rho * E);
          });
        } else {
          JointDistribution acc;
          for (size_t k = 0; k < v.components.size(); ++k) {
            JointDistribution part = simulate_seq(v.components[k], f1, f2);
            if (k == 0) {
              acc = part;
              for (double& x : acc.p) x *= v.weights[0];
            } else {
              for (size_t i = 0; i < acc.p.size(); ++i) acc.p[i] += v.weights[k] * part.p[i];
            }
          }
          return acc;
        }
      },
      s);
  P.is_signed = allow_quasi && validate(s).quasi;
  return P;
}

CMatrix process_matrix(const Strategy& s, int d1, int d2) {
  return std::visit(
      [&](const auto& v) -> CMatrix {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Individual>) {
          return kron(kron(v.rho1, identity(d1)), kron(v.rho2, identity(d2)));
        } else if constexpr (std::is_same_v<T, Parallel>) {
          CMatrix w = kron(v.rho12, identity(d1 * d2));
          return permute_systems(w, {d1, d2, d1, d2}, {0, 2, 1, 3});
        } else if constexpr (std::is_same_v<T, SeqMemoryless>) {
          if (v.dir == Direction::OneToTwo) return kron(kron(v.rho, v.choi), identity(d2));
          // C on (O2, I1), rho on I2, identity on O1
          CMatrix w = kron(kron(v.choi, v.rho), identity(d1));
          return permute_systems(w, {d2, d1, d2, d1}, {1, 3, 2, 0});
        } else {
          throw Error(ErrorKind::InvalidArgument,
                      "Born contraction supports individual, parallel and "
                      "memoryless sequential strategies");
        }
      },
      s);
}

namespace {

// Choi of the measure-and-prepare instrument element. Summing W entrywise
// against A(x)B gives Tr[W (A(x)B)^T]. y = 0 is the identity channel.
CMatrix instrument_choi(const ProjectiveFamily& f, int y, int x) {
  if (y == 0) return identity_choi(f.d);
  const CMatrix E = f.effect(y - 1, x);
  return kron(E.transpose(), E);
}

}  // namespace

JointDistribution simulate_born(const Strategy& s, const ProjectiveFamily& f1,
                                const ProjectiveFamily& f2, bool allow_quasi) {
  ensure_valid(s, allow_quasi);
  const auto dims = strategy_dims(s);
  checked(f1, dims.d1, "Alice");
  checked(f2, dims.d2, "Bob");
  const CMatrix W = process_matrix(s, dims.d1, dims.d2);
  JointDistribution P(f1.d, f2.d, f1.num_settings() + 1, f2.num_settings() + 1);
  std::vector<std::vector<CMatrix>> A(P.n1), B(P.n2);
  for (int y = 0; y < P.n1; ++y)
    for (int x = 0; x < P.outcomes1(y); ++x) A[y].push_back(instrument_choi(f1, y, x));
  for (int y = 0; y < P.n2; ++y)
    for (int x = 0; x < P.outcomes2(y); ++x) B[y].push_back(instrument_choi(f2, y, x));
  for (int y1 = 0; y1 < P.n1; ++y1)
    for (int x1 = 0; x1 < P.outcomes1(y1); ++x1)
      for (int y2 = 0; y2 < P.n2; ++y2)
        for (int x2 = 0; x2 < P.outcomes2(y2); ++x2)
          P.at(y1, x1, y2, x2) = W.cwiseProduct(kron(A[y1][x1], B[y2][x2])).sum().real();
  P.is_signed = allow_quasi && validate(s).quasi;
  return P;
}

namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform(std::uint64_t seed, std::uint64_t shot, int k) {
  const std::uint64_t key = splitmix(seed) ^ splitmix(shot * 4 + std::uint64_t(k));
  return double(splitmix(key) >> 11) * 0x1.0p-53;
}

}  // namespace

SampleSet sample(const JointDistribution& P, std::uint64_t shots,
                 std::uint64_t seed, int threads, bool keep_records) {
  if (shots == 0) throw Error(ErrorKind::InvalidArgument, "shot count must be positive");
  if (P.is_signed) throw Error(ErrorKind::InvalidArgument, "cannot sample a signed table");
  for (double v : P.p)
    if (v < -1e-12) throw Error(ErrorKind::InvalidArgument, "negative probability");
  const int nb = P.n1 * P.n2;
  // per block: cumulative weights over (x1,x2) in table order
  std::vector<std::vector<std::pair<double, std::array<int, 2>>>> cum(nb);
  for (int y1 = 0; y1 < P.n1; ++y1)
    for (int y2 = 0; y2 < P.n2; ++y2) {
      auto& c = cum[y1 * P.n2 + y2];
      double acc = 0.0;
      for (int x1 = 0; x1 < P.outcomes1(y1); ++x1)
        for (int x2 = 0; x2 < P.outcomes2(y2); ++x2) {
          acc += std::max(0.0, P.at(y1, x1, y2, x2));
          c.push_back({acc, {x1, x2}});
        }
      if (acc <= 0) throw Error(ErrorKind::InvalidArgument, "empty block");
      for (auto& e : c) e.first /= acc;
    }
  SampleSet out;
  out.shots = shots;
  out.seed = seed;
  out.counts.assign(P.p.size(), 0);
  if (keep_records) out.records.resize(shots);
  threads = std::max(1, threads);
  std::vector<std::vector<std::uint64_t>> local(threads,
                                                std::vector<std::uint64_t>(P.p.size(), 0));
  auto work = [&](int tid) {
    const std::uint64_t lo = shots * tid / threads, hi = shots * (tid + 1) / threads;
    for (std::uint64_t n = lo; n < hi; ++n) {
      const int b = std::min(nb - 1, int(uniform(seed, n, 0) * nb));
      const int y1 = b / P.n2, y2 = b % P.n2;
      const double u = uniform(seed, n, 1);
      const auto& c = cum[b];
      size_t k = 0;
      while (k + 1 < c.size() && u >= c[k].first) ++k;
      const int x1 = c[k].second[0], x2 = c[k].second[1];
      local[tid][((size_t(y1) * P.d1 + x1) * P.n2 + y2) * P.d2 + x2]++;
      if (keep_records) out.records[n] = {y1, x1, y2, x2};
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (int t = 0; t < threads; ++t)
    for (size_t i = 0; i < out.counts.size(); ++i) out.counts[i] += local[t][i];
  out.empirical = JointDistribution(P.d1, P.d2, P.n1, P.n2);
  for (int y1 = 0; y1 < P.n1; ++y1)
    for (int y2 = 0; y2 < P.n2; ++y2) {
      std::uint64_t tot = 0;
      for (int x1 = 0; x1 < P.outcomes1(y1); ++x1)
        for (int x2 = 0; x2 < P.outcomes2(y2); ++x2)
          tot += out.counts[((size_t(y1) * P.d1 + x1) * P.n2 + y2) * P.d2 + x2];
      if (tot == 0) continue;
      for (int x1 = 0; x1 < P.outcomes1(y1); ++x1)
        for (int x2 = 0; x2 < P.outcomes2(y2); ++x2)
          out.empirical.at(y1, x1, y2, x2) =
              double(out.counts[((size_t(y1) * P.d1 + x1) * P.n2 + y2) * P.d2 + x2]) / tot;
    }
  return out;
}

std::string records_to_csv(const SampleSet& s) {
  std::ostringstream os;
  os << "y1,x1,y2,x2\n";
  for (const auto& r : s.records) os << r.y1 << ',' << r.x1 << ',' << r.y2 << ',' << r.x2 << '\n';
  return os.str();
}

double block_tv(const JointDistribution& a, const JointDistribution& b, int y1, int y2) {
  double s = 0.0;
  for (int x1 = 0; x1 < a.outcomes1(y1); ++x1)
    for (int x2 = 0; x2 < a.outcomes2(y2); ++x2)
      s += std::abs(a.at(y1, x1, y2, x2) - b.at(y1, x1, y2, x2));
  return 0.5 * s;
}

Conditionals conditionals(const JointDistribution& P, bool strict, double tol) {
  Conditionals c;
  c.p1.assign(P.n1, std::vector<double>(P.d1, 0.0));
  c.p2_0.assign(P.n2, std::vector<double>(P.d2, 0.0));
  c.cond = JointDistribution(P.d1, P.d2, P.n1, P.n2);
  c.cond.is_signed = P.is_signed;
  for (int y1 = 0; y1 < P.n1; ++y1)
    for (int x1 = 0; x1 < P.outcomes1(y1); ++x1) {
      c.p1[y1][x1] = P.at(y1, x1, 0, 0);
      if (y1 > 0) {
        c.min_p1 = std::min(c.min_p1, c.p1[y1][x1]);
        if (c.p1[y1][x1] <= tol) c.c0 = false;
      }
    }
  for (int y2 = 0; y2 < P.n2; ++y2)
    for (int x2 = 0; x2 < P.outcomes2(y2); ++x2) c.p2_0[y2][x2] = P.at(0, 0, y2, x2);
  for (int y1 = 0; y1 < P.n1; ++y1)
    for (int x1 = 0; x1 < P.outcomes1(y1); ++x1)
      for (int y2 = 0; y2 < P.n2; ++y2) {
        double den = 0.0;
        for (int x2 = 0; x2 < P.outcomes2(y2); ++x2) den += P.at(y1, x1, y2, x2);
        if (std::abs(den) <= tol) {
          if (y1 > 0) c.c0 = false;
          continue;
        }
        for (int x2 = 0; x2 < P.outcomes2(y2); ++x2)
          c.cond.at(y1, x1, y2, x2) = P.at(y1, x1, y2, x2) / den;
      }
  if (strict && !c.c0)
    throw Error(ErrorKind::C0Degenerate,
                "some P(x1|y1) vanishes (min " + std::to_string(c.min_p1) + ")");
  return c;
}

nlohmann::ordered_json distribution_to_json(const JointDistribution& P) {
  nlohmann::ordered_json j;
  j["d"] = {P.d1, P.d2};
  j["settings"] = {P.n1 - 1, P.n2 - 1};
  j["signed"] = P.is_signed;
  nlohmann::ordered_json t = nlohmann::ordered_json::array();
  for (int y1 = 0; y1 < P.n1; ++y1) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (int x1 = 0; x1 < P.outcomes1(y1); ++x1) {
      nlohmann::ordered_json b = nlohmann::ordered_json::array();
      for (int y2 = 0; y2 < P.n2; ++y2) {
        nlohmann::ordered_json c = nlohmann::ordered_json::array();
        for (int x2 = 0; x2 < P.outcomes2(y2); ++x2) c.push_back(P.at(y1, x1, y2, x2) + 0.0);
        b.push_back(c);
      }
      a.push_back(b);
    }
    t.push_back(a);
  }
  j["table"] = t;
  return j;
}

JointDistribution distribution_from_json(const nlohmann::json& j) {
  try {
    auto d = j.at("d").get<std::vector<int>>();
    auto s = j.at("settings").get<std::vector<int>>();
    if (d.size() != 2 || s.size() != 2 || d[0] < 1 || d[1] < 1 || s[0] < 0 || s[1] < 0)
      throw Error(ErrorKind::Parse, "d and settings need two positive entries");
    JointDistribution P(d[0], d[1], s[0] + 1, s[1] + 1);
    P.is_signed = j.value("signed", false);
    const auto& t = j.at("table");
    if (!t.is_array() || int(t.size()) != P.n1) throw Error(ErrorKind::Parse, "table y1 extent");
    for (int y1 = 0; y1 < P.n1; ++y1) {
      const auto& a = t[y1];
      if (!a.is_array() || (int(a.size()) != P.outcomes1(y1) && int(a.size()) != P.d1))
        throw Error(ErrorKind::Parse, "table x1 extent");
      for (int x1 = 0; x1 < int(a.size()); ++x1) {
        const auto& b = a[x1];
        if (!b.is_array() || int(b.size()) != P.n2) throw Error(ErrorKind::Parse, "table y2 extent");
        for (int y2 = 0; y2 < P.n2; ++y2) {
          const auto& c = b[y2];
          if (!c.is_array() || (int(c.size()) != P.outcomes2(y2) && int(c.size()) != P.d2))
            throw Error(ErrorKind::Parse, "table x2 extent");
          for (int x2 = 0; x2 < int(c.size()); ++x2) {
            const double v = c[x2].get<double>();
            if (!std::isfinite(v)) throw Error(ErrorKind::Parse, "non-finite probability");
            const bool padding = x1 >= P.outcomes1(y1) || x2 >= P.outcomes2(y2);
            if (padding) {
              if (v != 0.0) throw Error(ErrorKind::Parse, "do-nothing rows admit outcome 0 only");
              continue;
            }
            P.at(y1, x1, y2, x2) = v;
          }
        }
      }
    }
    return P;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("distribution: ") + e.what());
  }
}

}  // namespace qorder
