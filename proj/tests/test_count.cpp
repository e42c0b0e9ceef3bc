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
#include "qorder/count.hpp"
#include "qorder/random.hpp"

using namespace qorder;

namespace {

// Rank of the real span of process matrices of random memoryless strategies
// in both orders.
long span_dim(int d, int draws) {
  Rng g(61);
  const long n = long(d) * d * d * d;
  Eigen::MatrixXd M(2 * n * n, 2 * draws);
  for (int k = 0; k < 2 * draws; ++k) {
    const auto s = random_seq(g, k % 2 ? Direction::TwoToOne : Direction::OneToTwo, d);
    const CMatrix W = process_matrix(s, d, d);
    for (long i = 0; i < n * n; ++i) {
      M(i, k) = W(i / n, i % n).real();
      M(n * n + i, k) = W(i / n, i % n).imag();
    }
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(M);
  qr.setThreshold(1e-9);
  return qr.rank();
}

}  // namespace

TEST_CASE("quotient dimension matches the span of ordered processes") {
  CHECK(quotient_dim({}) == 88);
  CHECK(span_dim(2, 80) == 88);
}

TEST_CASE("quotient dimension closed form") {
  CHECK(quotient_dim({1, 1, 1, 1}) == 1);
  // one trivial party leaves just the other one's channels plus its input
  CHECK(quotient_dim({2, 2, 1, 1}) == 4 * 4 - 4 * 3);
  CHECK(quotient_dim({3, 3, 3, 3}) == 81 * 17 - 9 * 8 - 9 * 8);
  CHECK_THROWS_AS(quotient_dim({0, 2, 2, 2}), Error);
}

TEST_CASE("Pauli counting") {
  const auto f = build_pauli_family().family;
  CHECK(accessible_count(f, f) == 49);
  const auto r = count_report(f, f, {});
  CHECK(r.impossible);
  CHECK(r.text == "49 < 88: reconstruction impossible");
  const auto j = count_report_to_json(r, {});
  CHECK(j["quotient_dim"] == 88);
  CHECK(j["accessible_count"] == 49);
  CHECK(j["impossible"] == true);
}
