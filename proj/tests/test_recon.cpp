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
#include "qorder/random.hpp"
#include "qorder/recon.hpp"

using namespace qorder;
using oracle::max_diff;

namespace {

const ProjectiveFamily& pf() {
  static const ProjectiveFamily f = build_pauli_family().family;
  return f;
}

JointDistribution table(const Strategy& s) { return simulate_exact(s, pf(), pf()); }

}  // namespace

TEST_CASE("round trip on random memoryless strategies") {
  Rng g(31);
  const auto B = pauli_bases();
  for (int k = 0; k < 40; ++k) {
    const auto dir = k % 2 ? Direction::TwoToOne : Direction::OneToTwo;
    const auto s = random_seq(g, dir);
    const auto P = table(s);
    const auto h = hat_choi_full(P, B, dir);
    CHECK(max_diff(h.choi, s.choi) < 1e-10);
    CHECK(h.anchor_spread < 1e-10);
    CHECK(max_diff(tilde_choi(P, B, dir), s.choi) < 1e-10);
    const CMatrix first = dir == Direction::OneToTwo ? rho1(P, B) : rho2(P, B);
    CHECK(max_diff(first, s.rho) < 1e-12);
  }
}

TEST_CASE("pseudo-density matrix") {
  Rng g(32);
  const CMatrix a = random_state(g, 2), b = random_state(g, 2);
  const auto B = pauli_bases();
  CHECK(max_diff(pdm(table(Individual{a, b}), B), oracle::tensor(a, b)) < 1e-12);
  const CMatrix r = random_state(g, 4);
  CHECK(max_diff(pdm(table(Parallel{r, 2, 2}), B), r) < 1e-12);
  // maximally mixed qubit through the identity channel
  SeqMemoryless s{Direction::OneToTwo, identity(2) / 2.0, identity_choi(2)};
  const CMatrix R = pdm(table(s), B);
  CHECK(max_diff(R, oracle::swap4() / 2.0) < 1e-12);
  CHECK(oracle::min_eig(R) == doctest::Approx(-0.5));
}

TEST_CASE("moments of a product state") {
  const auto B = pauli_bases();
  const auto P = table(Individual{bloch_state({0.2, 0, 0}), bloch_state({0, 0, -0.6})});
  const auto m = moments(P, B);
  CHECK(m(0, 0) == doctest::Approx(1.0));
  CHECK(m(1, 0) == doctest::Approx(0.2));
  CHECK(m(0, 3) == doctest::Approx(-0.6));
  CHECK(m(1, 3) == doctest::Approx(-0.12));
  CHECK(m(2, 2) == doctest::Approx(0.0));
}

TEST_CASE("classical mixture example") {
  const auto B = pauli_bases();
  const auto P = table(preset("Ex1prime"));
  const auto m = moments(P, B);
  CHECK(m(0, 3) == doctest::Approx(0.5));
  CHECK(m(1, 1) == doctest::Approx(0.5));
  CMatrix expect(4, 4);
  expect << 0.75, 0, 0, 0.25, 0, 0.25, 0.25, 0, 0, 0.25, 0.75, 0, 0.25, 0, 0, 0.25;
  CHECK(max_diff(hat_choi(P, B, Direction::OneToTwo), expect) < 1e-12);
  CHECK(oracle::min_eig(expect) > 0.14);
}

TEST_CASE("Bell pair through memory reconstructs to SWAP") {
  const auto B = pauli_bases();
  const auto P = table(preset("ExB"));
  const CMatrix h = hat_choi(P, B, Direction::OneToTwo);
  CHECK(max_diff(h, oracle::swap4()) < 1e-12);
  CHECK(max_diff(pdm(P, B), oracle::phi_plus()) < 1e-12);
}

TEST_CASE("error paths") {
  const auto B = pauli_bases();
  const auto P = table(Individual{bloch_state({0, 0, 1}), identity(2) / 2.0});
  try {
    tilde_choi(P, B, Direction::OneToTwo);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularAnchor);
  }
  try {
    hat_choi(P, B, Direction::OneToTwo);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::C0Degenerate);
  }
  const auto Q = table(preset("Ex1prime"));
  CHECK_THROWS_AS(hat_choi_full(Q, B, Direction::OneToTwo, 1e-12, 4), Error);
  CHECK_NOTHROW(hat_choi_full(Q, B, Direction::OneToTwo, 1e-12, 3));
}
