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


#include <random>

#include "oracle.hpp"
#include "qorder/crit.hpp"
#include "qorder/qubit.hpp"
#include "qorder/random.hpp"

using namespace qorder;

namespace {

// Partial transpose of the first qubit, by index shuffling.
CMatrix pt1(const CMatrix& m) {
  CMatrix out(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int e = 0; e < 2; ++e) out(b * 2 + c, a * 2 + e) = m(a * 2 + c, b * 2 + e);
  return out;
}

CMatrix ll31_direct(const LL31Params& p) {
  using oracle::pauli;
  using oracle::tensor;
  CMatrix m = tensor(pauli(0), pauli(0)) + p.s1 * tensor(pauli(1), pauli(0)) +
              p.s2 * tensor(pauli(0), pauli(1));
  for (int j = 0; j < 3; ++j) m += p.tau[j] * tensor(pauli(j + 1), pauli(j + 1));
  return m;
}

const Scheme& ps() {
  static const Scheme s = pauli_scheme();
  return s;
}

}  // namespace

TEST_CASE("two-parameter positivity test") {
  std::mt19937_64 g(51);
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  int pos = 0;
  for (int k = 0; k < 20000; ++k) {
    LL31Params p{u(g), u(g), {u(g), u(g), u(g)}};
    const double me = oracle::min_eig(ll31_direct(p));
    if (std::abs(me) < 1e-9) continue;
    CHECK(ll31_psd(p) == (me > 0));
    pos += me > 0;
  }
  CHECK(pos > 100);
  LL31Params edge{0, 0, {1, -1, 1}};
  CHECK(oracle::max_diff(ll31_operator(edge), ll31_direct(edge)) < 1e-15);
  CHECK(ll31_psd(edge));
}

TEST_CASE("constrained canonical forms") {
  Rng g(52);
  for (int t = 1; t <= 3; ++t)
    for (int k = 0; k < 500; ++k) {
      const auto rf = random_constrained_form(g, t);
      const auto& f = rf.form;
      REQUIRE(f.t == t);
      CHECK(lbu1_D1(rf.c1, f));
      CHECK(lbu2_D2(f));
      const double fwd = oracle::min_eig(pt1(f.reconstruct_choi_t1()));
      const double rev = oracle::min_eig(reverse_tilde_choi_from_form(rf.c1, f));
      const double pdm = oracle::min_eig(pdm_from_form(rf.c1, f));
      if (std::abs(fwd) > 1e-9) CHECK(lbu0_forward_psd(f) == (fwd > 0));
      if (std::abs(rev) > 1e-9) CHECK(lbu3_reverse_psd(rf.c1, f) == (rev > 0));
      if (std::abs(pdm) > 1e-9) CHECK(ll29A_pdm_psd(rf.c1, f) == (pdm > 0));
    }
}

TEST_CASE("Pauli channel conditions agree with reconstruction") {
  std::mt19937_64 g(53);
  std::uniform_real_distribution<double> u(0, 1);
  std::exponential_distribution<double> e(1.0);
  for (int k = 0; k < 300; ++k) {
    std::vector<double> p(4);
    double s = 0;
    for (auto& v : p) s += (v = e(g));
    for (auto& v : p) v /= s;
    const auto l = pauli_lambdas(p);
    const double kappa = k % 5 == 0 ? 0.0 : 2 * u(g) - 1;
    SeqMemoryless st{Direction::OneToTwo, bloch_state({kappa, 0, 0}), choi_from_lambdas(l)};
    const auto P = simulate_exact(st, ps().m1.family, ps().m2.family);
    const auto d = d1d2d3(P, ps());
    const auto a = pauli_D_conditions(kappa, l(0), l(1), l(2));
    CHECK(d.D1.is_true() == a.D1);
    CHECK(d.D2.is_true() == a.D2);
    if (std::abs(d.min_eig_tilde21) > 1e-9) CHECK(d.D3.is_true() == a.D3);
  }
}

TEST_CASE("depolarizing bound") {
  CHECK(depol_D3_bound(0.4).kappa_max == doctest::Approx(std::sqrt(2.8 / (2.2 * 2.32))));
  CHECK(depol_D3_bound(0.0).open_interval);
  CHECK(depol_D3(1.0, 1.0));
  CHECK_THROWS_AS(depol_D3_bound(-0.1), Error);
  // numerically, the reverse Choi matrix crosses zero at the bound
  for (double mu : {0.2, 0.5, 0.8}) {
    const double kb = depol_D3_bound(mu).kappa_max;
    for (double dk : {-1e-4, 1e-4}) {
      SeqMemoryless st{Direction::OneToTwo, bloch_state({kb + dk, 0, 0}), depolarizing_choi(mu)};
      const auto P = simulate_exact(st, ps().m1.family, ps().m2.family);
      const double me = oracle::min_eig(tilde_choi(P, ps().bases, Direction::TwoToOne));
      CHECK((me >= 0) == (dk < 0));
      CHECK(depol_D3(mu, kb + dk) == (dk < 0));
    }
  }
  CHECK(depol_indistinguishable(0.3, 0.0));
  CHECK_FALSE(depol_indistinguishable(0.3, 0.2));
}

TEST_CASE("phase damping") {
  std::mt19937_64 g(54);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int k = 0; k < 200; ++k) {
    const double kappa = u(g), a = u(g);
    SeqMemoryless st{Direction::OneToTwo, bloch_state({kappa, 0, 0}), choi_from_lambdas({a, -a, 1})};
    const auto P = simulate_exact(st, ps().m1.family, ps().m2.family);
    const double me = oracle::min_eig(tilde_choi(P, ps().bases, Direction::TwoToOne));
    if (std::abs(me) > 1e-9) CHECK(phase_damping_D3(DampingAxis::Sigma3, kappa, a) == (me > 0));
  }
}

TEST_CASE("symmetric model") {
  SymmetricModel m{{0.5, 0.2, 0.9}, {0.3, -0.4, 0.1}, {0.15, -0.08, 0.09}};
  const auto P = symmetric_model_distribution(m);
  CHECK(normalization_residual(P) < 1e-14);
  CHECK(markov_x1y1y2(P, 1e-12).ok);
  CHECK(check_C1_qubit(P, 1e-9).ok);
  m.zeta[0] = 0.0;
  CHECK_FALSE(check_C1_qubit(symmetric_model_distribution(m), 1e-9).ok);
  m.lambda[1] = 1.5;
  CHECK_THROWS_AS(symmetric_model_distribution(m), Error);
}
