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


#include <cmath>
#include <random>

#include "commands.hpp"
#include "qorder/qubit.hpp"
#include "qorder/random.hpp"

namespace qorder::cli {

namespace {

constexpr double kBand = 1e-9;

long pick(long samples, long fallback) { return samples > 0 ? samples : fallback; }

// Compares a closed-form verdict with the sign of a numeric minimum eigenvalue.
void tally(SuiteResult& r, bool formula, double min_eig) {
  if (std::abs(min_eig) <= kBand) {
    ++r.skipped;
    return;
  }
  ++r.checked;
  if (formula != (min_eig > 0)) {
    ++r.failures;
    r.worst = std::max(r.worst, std::abs(min_eig));
  }
}

SuiteResult suite_ll31(long n, const RunConfig& cfg) {
  SuiteResult r;
  r.name = "ll31";
  Rng rng(cfg.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (long i = 0; i < n; ++i) {
    LL31Params p;
    p.s1 = u(rng);
    p.s2 = u(rng);
    for (auto& t : p.tau) t = u(rng);
    tally(r, ll31_psd(p), min_eigval(ll31_operator(p)));
  }
  return r;
}

SuiteResult suite_lbu(long n, const RunConfig& cfg) {
  SuiteResult r;
  r.name = "lbu";
  Rng rng(cfg.seed);
  for (int t = 1; t <= 3; ++t)
    for (long i = 0; i < n; ++i) {
      const auto rf = random_constrained_form(rng, t);
      const auto& f = rf.form;
      if (!lbu1_D1(rf.c1, f) || !lbu2_D2(f)) {
        ++r.failures;
        r.note = "generated form violates the directional conditions";
        continue;
      }
      const CMatrix C = partial_transpose(f.reconstruct_choi_t1(), {2, 2}, 0);
      tally(r, lbu0_forward_psd(f), min_eigval(C));
      tally(r, lbu3_reverse_psd(rf.c1, f), min_eigval(reverse_tilde_choi_from_form(rf.c1, f)));
      tally(r, ll29A_pdm_psd(rf.c1, f), min_eigval(pdm_from_form(rf.c1, f)));
    }
  return r;
}

// kappa on a 21-point line, Pauli probabilities on a simplex lattice of step 1/13.
SuiteResult suite_pauli(long, const RunConfig& cfg) {
  SuiteResult r;
  r.name = "pauli";
  const Scheme sc = pauli_scheme();
  const int m = 13;
  for (int k = 0; k <= 20; ++k) {
    const double kappa = k == 10 ? 0.0 : -1.0 + 0.1 * k;
    for (int a = 0; a <= m; ++a)
      for (int b = 0; a + b <= m; ++b)
        for (int c = 0; a + b + c <= m; ++c) {
          const std::vector<double> p{double(m - a - b - c) / m, double(a) / m, double(b) / m,
                                      double(c) / m};
          const Eigen::Vector3d l = pauli_lambdas(p);
          SeqMemoryless s{Direction::OneToTwo, bloch_state({kappa, 0, 0}),
                          choi_from_pauli_probs(p)};
          const auto P = simulate_exact(s, sc.m1.family, sc.m2.family);
          const auto d = d1d2d3(P, sc, cfg.tol);
          if (!d.D3.decided()) {
            ++r.skipped;
            continue;
          }
          tally(r, pauli_D_conditions(kappa, l(0), l(1), l(2)).D3, d.min_eig_tilde21);
        }
  }
  return r;
}

double depol_min_eig(double mu, double kappa, const Scheme& sc, double tol_pd) {
  const auto s = family_strategy("depolarizing", {{"mu", mu}}, {kappa, 0, 0});
  const auto P = simulate_exact(s, sc.m1.family, sc.m2.family);
  return min_eigval(tilde_choi(P, sc.bases, Direction::TwoToOne, tol_pd));
}

SuiteResult suite_depol(long, const RunConfig& cfg) {
  SuiteResult r;
  r.name = "depol";
  const Scheme sc = pauli_scheme();
  for (int i = 1; i <= 19; ++i) {
    const double mu = 0.05 * i;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-9) {
      const double mid = 0.5 * (lo + hi);
      (depol_min_eig(mu, mid, sc, cfg.tol.pd) >= 0 ? lo : hi) = mid;
    }
    const double gap = std::abs(0.5 * (lo + hi) - depol_D3_bound(mu).kappa_max);
    ++r.checked;
    r.worst = std::max(r.worst, gap);
    if (gap > 1e-6) ++r.failures;
  }
  return r;
}

SuiteResult suite_born(long n, const RunConfig& cfg) {
  SuiteResult r;
  r.name = "born";
  Rng rng(cfg.seed);
  const auto f = build_pauli_family().family;
  for (long i = 0; i < n; ++i) {
    Strategy s;
    switch (i % 4) {
      case 0: s = Individual{random_state(rng, 2), random_state(rng, 2)}; break;
      case 1: s = Parallel{random_state(rng, 4), 2, 2}; break;
      case 2: s = random_seq(rng, Direction::OneToTwo); break;
      default: s = random_seq(rng, Direction::TwoToOne); break;
    }
    const double gap = sup_norm_diff(simulate_exact(s, f, f), simulate_born(s, f, f));
    ++r.checked;
    r.worst = std::max(r.worst, gap);
    if (gap > 1e-12) ++r.failures;
  }
  return r;
}

SuiteResult suite_roundtrip(long n, const RunConfig& cfg) {
  SuiteResult r;
  r.name = "roundtrip";
  Rng rng(cfg.seed);
  const Scheme sc = pauli_scheme();
  for (Direction dir : {Direction::OneToTwo, Direction::TwoToOne})
    for (long i = 0; i < n; ++i) {
      const auto s = random_seq(rng, dir);
      const auto P = simulate_exact(s, sc.m1.family, sc.m2.family);
      const auto m = dir == Direction::OneToTwo ? membership_N12(P, sc, cfg.tol)
                                                : membership_N21(P, sc, cfg.tol);
      const double th8 = max_abs_diff(m.choi, s.choi);
      const double worst = std::max({m.roundtrip, th8, m.c1.residual});
      ++r.checked;
      r.worst = std::max(r.worst, worst);
      if (!m.member.is_true() || !(worst <= 1e-9)) ++r.failures;
    }
  return r;
}

SuiteResult suite_symmetric(long n, const RunConfig& cfg) {
  SuiteResult r;
  r.name = "symmetric";
  Rng rng(cfg.seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0), u11(-1.0, 1.0);
  for (long i = 0; i < n; ++i) {
    SymmetricModel m;
    for (int y = 0; y < 3; ++y) {
      m.lambda[y] = u01(rng);
      // keep P(x1|y1) away from zero so C1 is defined
      m.eta[y] = 0.9 * u11(rng);
      m.zeta[y] = u11(rng);
    }
    const auto P = symmetric_model_distribution(m);
    const auto c1 = check_C1_qubit(P, cfg.tol.eq);
    double zmax = 0, elmax = 0;
    for (int y = 0; y < 3; ++y) {
      zmax = std::max(zmax, std::abs(m.zeta[y]));
      elmax = std::max(elmax, std::abs(m.eta[y] * m.lambda[y]));
    }
    ++r.checked;
    if (zmax > 0.05 && c1.residual <= 1e-3) ++r.failures;
    if (c1.ok && markov_y1y2x2(P, cfg.tol.eq).ok && elmax > 1e-9) ++r.failures;
  }
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"ll31", "lbu", "pauli", "depol", "born", "roundtrip", "symmetric"};
}

SuiteResult run_suite(const std::string& name, long samples, const RunConfig& cfg) {
  if (name == "ll31") return suite_ll31(pick(samples, 100000), cfg);
  if (name == "lbu") return suite_lbu(pick(samples, 10000), cfg);
  if (name == "pauli") return suite_pauli(samples, cfg);
  if (name == "depol") return suite_depol(samples, cfg);
  if (name == "born") return suite_born(pick(samples, 1000), cfg);
  if (name == "roundtrip") return suite_roundtrip(pick(samples, 200), cfg);
  if (name == "symmetric") return suite_symmetric(pick(samples, 1000), cfg);
  throw Error(ErrorKind::InvalidArgument, "unknown suite " + name);
}

}  // namespace qorder::cli
