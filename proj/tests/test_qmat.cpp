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
#include "qorder/qmat.hpp"

using namespace qorder;
using oracle::max_diff;

namespace {

CMatrix random_herm(std::mt19937_64& g, int n) {
  std::normal_distribution<double> d;
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = {d(g), d(g)};
  return 0.5 * (m + m.adjoint());
}

CMatrix random_pd(std::mt19937_64& g, int n) {
  CMatrix a = random_herm(g, n);
  return a * a + 0.1 * CMatrix::Identity(n, n);
}

}  // namespace

TEST_CASE("kron on Pauli matrices") {
  CHECK(max_diff(kron(identity(2), identity(2)), CMatrix::Identity(4, 4)) == 0.0);
  CMatrix anti = CMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) anti(i, 3 - i) = 1;
  CHECK(max_diff(kron(sigma(1), sigma(1)), anti) == 0.0);
  CMatrix d = CMatrix::Zero(4, 4);
  d.diagonal() << 1, -1, -1, 1;
  CHECK(max_diff(kron(sigma(3), sigma(3)), d) == 0.0);
  std::mt19937_64 g(1);
  const CMatrix a = random_herm(g, 3), b = random_herm(g, 2);
  CHECK(max_diff(kron(a, b), oracle::tensor(a, b)) < 1e-15);
}

TEST_CASE("partial trace") {
  CHECK(max_diff(partial_trace(bell_state(2), {2, 2}, {0}), identity(2) / 2.0) < 1e-15);
  std::mt19937_64 g(2);
  const CMatrix a = random_herm(g, 3), b = random_herm(g, 2);
  CHECK(max_diff(partial_trace(oracle::tensor(a, b), {3, 2}, {0}), a * b.trace()) < 1e-12);
  CHECK(max_diff(partial_trace(oracle::tensor(a, b), {3, 2}, {1}), b * a.trace()) < 1e-12);
  CHECK(max_diff(partial_trace(oracle::swap4(), {2, 2}, {1}), identity(2)) < 1e-15);
  // three factors, keep the outer two
  const CMatrix c = random_herm(g, 2);
  const CMatrix abc = oracle::tensor(oracle::tensor(a, b), c);
  CHECK(max_diff(partial_trace(abc, {3, 2, 2}, {0, 2}), oracle::tensor(a, c) * b.trace()) < 1e-12);
}

TEST_CASE("partial transpose") {
  std::mt19937_64 g(3);
  const CMatrix a = random_herm(g, 2), b = random_herm(g, 3);
  CHECK(max_diff(partial_transpose(oracle::tensor(a, b), {2, 3}, 1),
                 oracle::tensor(a, b.transpose())) < 1e-15);
  const CMatrix m = random_herm(g, 6);
  CHECK(max_diff(partial_transpose(partial_transpose(m, {2, 3}, 0), {2, 3}, 0), m) == 0.0);
  // unnormalized Choi of the identity, sum |a><b| (x) |a><b|
  const CMatrix cid = 2.0 * oracle::phi_plus();
  CHECK(max_diff(partial_transpose(cid, {2, 2}, 1), oracle::swap4()) < 1e-15);
}

TEST_CASE("permute systems swaps factors") {
  std::mt19937_64 g(4);
  const CMatrix a = random_herm(g, 2), b = random_herm(g, 3), c = random_herm(g, 2);
  const CMatrix abc = oracle::tensor(oracle::tensor(a, b), c);
  const CMatrix cab = oracle::tensor(oracle::tensor(c, a), b);
  CHECK(max_diff(permute_systems(abc, {2, 3, 2}, {2, 0, 1}), cab) < 1e-15);
}

TEST_CASE("jordan product") {
  std::mt19937_64 g(5);
  const CMatrix x = random_herm(g, 2);
  CHECK(max_diff(jordan(identity(2), x), x) < 1e-15);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(max_diff(jordan(sigma(j), sigma(i)), (i == j ? 1.0 : 0.0) * identity(2)) < 1e-15);
}

TEST_CASE("jordan inverse") {
  std::mt19937_64 g(6);
  const CMatrix r = random_herm(g, 4);
  CHECK(max_diff(jordan_inverse(kron(identity(2) / 2.0, identity(2)), r), 2.0 * r) < 1e-12);
  for (int k = 0; k < 20; ++k) {
    const CMatrix x = random_herm(g, 4), m = random_pd(g, 4);
    CHECK(max_diff(jordan_inverse(m, jordan(x, m)), x) < 1e-9);
  }
  CMatrix sing = CMatrix::Zero(2, 2);
  sing(0, 0) = 1;
  try {
    jordan_inverse(sing, identity(2));
    FAIL("expected SingularAnchor");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularAnchor);
  }
}

TEST_CASE("eigenvalues and positivity") {
  const auto ev = herm_eigvals(oracle::swap4());
  REQUIRE(ev.size() == 4);
  CHECK(ev[0] == doctest::Approx(-1.0));
  for (int i = 1; i < 4; ++i) CHECK(ev[i] == doctest::Approx(1.0));
  CMatrix c(4, 4);
  c << 0.75, 0, 0, 0.25, 0, 0.25, 0.25, 0, 0, 0.25, 0.75, 0, 0.25, 0, 0, 0.25;
  const auto e2 = herm_eigvals(c);
  const double lo = 0.5 - std::sqrt(2.0) / 4, hi = 0.5 + std::sqrt(2.0) / 4;
  CHECK(std::abs(e2[0] - lo) < 1e-12);
  CHECK(std::abs(e2[1] - lo) < 1e-12);
  CHECK(std::abs(e2[2] - hi) < 1e-12);
  CHECK(std::abs(e2[3] - hi) < 1e-12);
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 3;
  d(1, 1) = -2;
  CHECK(herm_eigvals(d) == std::vector<double>{-2.0, 3.0});

  CHECK(is_psd(oracle::phi_plus()).ok);
  const auto s = is_psd(oracle::swap4());
  CHECK_FALSE(s.ok);
  CHECK(s.min_eig == doctest::Approx(-1.0));
  const auto z = is_psd(CMatrix::Zero(3, 3));
  CHECK(z.ok);
  CHECK(z.min_eig == 0.0);
}

TEST_CASE("non-Hermitian input is rejected") {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1;
  CHECK_THROWS_AS(herm_eigvals(m), Error);
  CHECK(hermiticity_residual(m) == 1.0);
}

TEST_CASE("matrix JSON round trip") {
  std::mt19937_64 g(7);
  const CMatrix m = random_herm(g, 3);
  const auto j = matrix_to_json(m);
  CHECK(j.begin().key() == "dim");
  CHECK(j["re"].size() == 3);
  CHECK(j["im"].size() == 3);
  CHECK(max_diff(matrix_from_json(nlohmann::json::parse(j.dump())), m) == 0.0);
  // negative zero never shows up in the text
  CMatrix z = CMatrix::Zero(2, 2);
  z(0, 0) = cplx(-0.0, -0.0);
  CHECK(matrix_to_json(z).dump().find("-0") == std::string::npos);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"dim":2,"re":[[1]]})")), Error);
}
