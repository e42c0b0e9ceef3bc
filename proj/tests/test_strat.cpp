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
#include "qorder/random.hpp"
#include "qorder/strat.hpp"

using namespace qorder;
using oracle::max_diff;

TEST_CASE("identity channel Choi matrix") {
  const CMatrix c = identity_choi(2);
  CHECK(max_diff(c, 2.0 * oracle::phi_plus()) < 1e-15);
  CHECK(max_diff(choi_of_kraus({identity(2)}), c) < 1e-15);
  CHECK(max_diff(choi_from_bloch(Eigen::Matrix3d::Identity(), Eigen::Vector3d::Zero()), c) < 1e-15);
  CHECK(max_diff(choi_from_lambdas({1, -1, 1}), c) < 1e-15);
  CHECK(tp_residual(c, 2) < 1e-15);
}

TEST_CASE("apply_channel agrees with the block formula") {
  Rng g(11);
  for (int k = 0; k < 20; ++k) {
    const CMatrix c = random_channel(g, 2, 3);
    const CMatrix r = random_state(g, 2);
    CHECK(tp_residual(c, 2) < 1e-12);
    CHECK(oracle::min_eig(c) > -1e-12);
    CHECK(max_diff(apply_channel(c, r), oracle::apply_choi(c, r)) < 1e-12);
  }
}

TEST_CASE("Pauli channel from probabilities") {
  const std::vector<double> p{0.4, 0.3, 0.2, 0.1};
  std::vector<CMatrix> kraus;
  for (int k = 0; k < 4; ++k) kraus.push_back(std::sqrt(p[k]) * oracle::pauli(k));
  CHECK(max_diff(choi_from_pauli_probs(p), choi_of_kraus(kraus)) < 1e-15);
  const auto l = pauli_lambdas(p);
  CHECK(l(0) == doctest::Approx(0.4));
  CHECK(l(1) == doctest::Approx(-0.2));
  CHECK(l(2) == doctest::Approx(0.0));
  CHECK_THROWS_AS(pauli_lambdas({0.5, 0.5, 0.5, -0.5}), Error);
}

TEST_CASE("depolarizing channel") {
  Rng g(12);
  const double mu = 0.37;
  const CMatrix c = depolarizing_choi(mu);
  for (int k = 0; k < 5; ++k) {
    const CMatrix r = random_state(g, 2);
    CHECK(max_diff(oracle::apply_choi(c, r), (1 - mu) * r + mu * oracle::pauli(0) / 2.0) < 1e-14);
  }
  CHECK_THROWS_AS(depolarizing_choi(1.5), Error);
}

TEST_CASE("canonical qubit form reproduces the channel") {
  Rng g(13);
  for (int k = 0; k < 50; ++k) {
    const CMatrix c = random_channel(g, 2, 2);
    const auto f = canonical_qubit_form(c);
    CHECK(f.t == 3);
    CHECK(f.lambda(0) >= f.lambda(1));
    CHECK(f.lambda(1) >= f.lambda(2));
    CHECK(max_diff(partial_transpose(f.reconstruct_choi_t1(), {2, 2}, 0), c) < 1e-12);
    // Bloch action of the channel
    const CMatrix out = oracle::apply_choi(c, oracle::pauli(0) / 2.0);
    for (int j = 0; j < 3; ++j)
      CHECK(f.c2(j) == doctest::Approx((out * oracle::pauli(j + 1)).trace().real()));
    CHECK(f.orientation * f.A.determinant() * f.B.determinant() > 0);
  }
  // completely dephasing channel has rank one
  const auto f1 = canonical_qubit_form(choi_from_lambdas({0, 0, 1}));
  CHECK(f1.t == 1);
  CHECK(f1.lambda(0) == doctest::Approx(1.0));
}

TEST_CASE("validation flags quasi channels") {
  SeqMemoryless s;
  s.rho = identity(2) / 2.0;
  s.choi = choi_from_lambdas({1, 1, 1});  // transpose map
  const auto r = validate(Strategy(s));
  CHECK(r.ok);
  CHECK(r.quasi);
  s.choi = 0.5 * identity_choi(2);
  CHECK_FALSE(validate(Strategy(s)).ok);
  s.choi = identity_choi(2);
  const auto r2 = validate(Strategy(s));
  CHECK(r2.ok);
  CHECK_FALSE(r2.quasi);
}

TEST_CASE("presets") {
  CHECK(validate(preset("ExB")).ok);
  const auto e = preset("Ex1prime");
  CHECK(std::holds_alternative<Mixture>(e));
  CHECK(validate(e).ok);
  CHECK(validate(preset("Ex1", 0.25)).ok);
  try {
    preset("Ex1", 0.0);
    FAIL("no throw");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::C0Degenerate);
  }
  CHECK_THROWS_AS(preset("nope"), Error);
  CHECK_THROWS_AS(family_choi("pd1", {{"lambda3", 1.5}}), Error);
}

TEST_CASE("strategy JSON round trip") {
  std::vector<Strategy> all{preset("ExB"), preset("Ex1prime"),
                            Individual{identity(2) / 2.0, bloch_state({0, 0, 1})},
                            Parallel{bell_state(2), 2, 2}};
  Rng g(14);
  all.push_back(random_seq(g, Direction::TwoToOne));
  for (const auto& s : all) {
    const auto j = strategy_to_json(s);
    const auto back = strategy_from_json(nlohmann::json::parse(j.dump()));
    CHECK(strategy_to_json(back).dump() == j.dump());
  }
  const auto fam = strategy_from_json(nlohmann::json::parse(
      R"({"class":"seq","family":{"name":"depolarizing","params":{"mu":0.5,"kappa":0.3}}})"));
  const auto& seq = std::get<SeqMemoryless>(fam);
  CHECK(max_diff(seq.rho, bloch_state({0.3, 0, 0})) < 1e-15);
  CHECK(max_diff(seq.choi, depolarizing_choi(0.5)) < 1e-15);
  CHECK_THROWS_AS(strategy_from_json(nlohmann::json::parse(R"({"class":"bogus"})")), Error);
}
