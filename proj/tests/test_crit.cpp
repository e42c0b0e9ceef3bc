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


#include "oracle.hpp"
#include "qorder/crit.hpp"
#include "qorder/random.hpp"

using namespace qorder;
using oracle::max_diff;

namespace {

const Scheme& ps() {
  static const Scheme s = pauli_scheme();
  return s;
}

JointDistribution table(const Strategy& s) {
  return simulate_exact(s, ps().m1.family, ps().m2.family);
}

// Pauli coefficient Tr[(s_i (x) s_j) M] / 2.
double coeff(const CMatrix& m, int i, int j) {
  return (oracle::tensor(oracle::pauli(i), oracle::pauli(j)) * m).trace().real() / 2.0;
}

}  // namespace

TEST_CASE("memoryless strategies are recognised in their own direction") {
  Rng g(41);
  for (int k = 0; k < 20; ++k) {
    const auto P = table(random_seq(g, Direction::OneToTwo));
    CHECK(markov_x1y1y2(P, 1e-12).ok);
    const auto m = membership_N12(P, ps());
    CHECK(m.member.is_true());
    CHECK(m.roundtrip < 1e-10);
    CHECK(m.c1.ok);
    const auto Q = table(random_seq(g, Direction::TwoToOne));
    CHECK(markov_y1y2x2(Q, 1e-12).ok);
    CHECK(membership_N21(Q, ps()).member.is_true());
  }
}

TEST_CASE("signalling tables fail the Markov condition") {
  Rng g(42);
  const auto P = table(random_seq(g, Direction::OneToTwo));
  // Bob's marginal depends on Alice's setting
  CHECK_FALSE(markov_y1y2x2(P, 1e-9).ok);
  CHECK(markov_y1y2x2(P, 1e-9).residual > 1e-3);
  CHECK_FALSE(markov_full_chain(P, 1e-9).ok);
}

TEST_CASE("product states are individual") {
  Rng g(43);
  const auto P = table(Individual{random_state(g, 2), random_state(g, 2)});
  CHECK(markov_full_chain(P, 1e-12).ok);
  CHECK(membership_individual(P).is_true());
  CHECK(membership_parallel(P, ps()).member.is_true());
}

TEST_CASE("classical mixture fails the conditional constraint") {
  const auto P = table(preset("Ex1prime"));
  const auto c0 = check_C0(P);
  CHECK(c0.ok);
  CHECK(c0.residual == doctest::Approx(0.5));
  const auto c1 = check_C1(P, ps().bases, 1e-9);
  CHECK_FALSE(c1.ok);
  CHECK(c1.witness == std::array<int, 3>{1, 3, 0});
  CHECK(c1.lhs == doctest::Approx(1.0));
  CHECK(c1.rhs == doctest::Approx(1.5));
  const auto q = check_C1_qubit(P, 1e-9);
  CHECK(q.witness == c1.witness);
  CHECK(q.residual == doctest::Approx(c1.residual));

  const auto r = classify(P, ps());
  CHECK(r.status == "classified");
  CHECK(r.markov_X1Y1Y2.ok);
  CHECK(r.member_N12.state == Check::State::False);
  CHECK(r.psd_hatC_12.is_true());
  CHECK(r.fg1vs_literal_mismatch);
  const auto j = report_to_json(r);
  CHECK(j.begin().key() == "status");
  CHECK(j["C1"]["witness"]["y1"] == 1);
  CHECK(j["D1"]["verdict"] == "inconclusive:not_member_N12");
}

TEST_CASE("Bell pair through memory is parallel only") {
  const auto P = table(preset("ExB"));
  const auto r = classify(P, ps());
  CHECK(r.member_parallel.is_true());
  CHECK(r.member_N12.state == Check::State::False);
  CHECK(r.member_N21.state == Check::State::False);
  CHECK(r.psd_hatC_12.residual == doctest::Approx(-1.0));
  const auto par = membership_parallel(P, ps());
  CHECK(max_diff(par.R, oracle::phi_plus()) < 1e-12);
}

TEST_CASE("zero-probability outcome leaves the verdict open") {
  Mixture m = std::get<Mixture>(preset("Ex1", 0.5));
  m.weights = {0.0, 1.0};
  const auto P = table(m);
  CHECK_FALSE(check_C0(P).ok);
  const auto s = membership_N12(P, ps());
  CHECK_FALSE(s.member.decided());
  CHECK(s.member.label() == "inconclusive:C0");
  const auto r = classify(P, ps());
  CHECK(r.status.rfind("inconclusive:", 0) == 0);
}

TEST_CASE("reverse reconstruction of a depolarized input") {
  const double mu = 0.4, kappa = 0.3, l = 1 - mu;
  SeqMemoryless s{Direction::OneToTwo, bloch_state({kappa, 0, 0}), depolarizing_choi(mu)};
  const auto P = table(s);
  const CMatrix t21 = tilde_choi(P, ps().bases, Direction::TwoToOne);
  // stored Bob (x) Alice
  const double den = kappa * kappa * l * l - 1;
  CHECK(coeff(t21, 0, 1) == doctest::Approx(kappa * (l * l - 1) / den));
  CHECK(coeff(t21, 1, 1) == doctest::Approx(l * (kappa * kappa - 1) / den));
  CHECK(coeff(t21, 0, 1) == doctest::Approx(0.198429).epsilon(1e-5));
  const auto d = d1d2d3(P, ps());
  // a biased input with a full-rank channel always leaves a trace of the order
  CHECK(d.D1.state == Check::State::False);
  // Bob's marginal is biased too
  CHECK(d.D2.state == Check::State::False);
  CHECK(d.D3.is_true());
  CHECK(d.indistinguishable.state == Check::State::False);
  CHECK(d.min_eig_tilde21 == doctest::Approx(oracle::min_eig(t21)));
}

TEST_CASE("strong bias makes the reverse Choi matrix non-positive") {
  SeqMemoryless s{Direction::OneToTwo, bloch_state({0.9, 0, 0}), depolarizing_choi(0.4)};
  const auto d = d1d2d3(table(s), ps());
  CHECK(d.D3.state == Check::State::False);
  CHECK(d.min_eig_tilde21 < 0);
  SeqMemoryless u{Direction::OneToTwo, identity(2) / 2.0, depolarizing_choi(0.4)};
  const auto e = d1d2d3(table(u), ps());
  CHECK(e.indistinguishable.is_true());
}
