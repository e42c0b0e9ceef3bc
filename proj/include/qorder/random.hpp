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


#pragma once

#include <random>

#include "qorder/strat.hpp"

namespace qorder {

using Rng = std::mt19937_64;

// Ginibre-distributed draws; full rank with probability one.
CMatrix random_state(Rng& rng, int d);
CMatrix random_pure_state(Rng& rng, int d);
CMatrix random_channel(Rng& rng, int d_in, int d_out, int kraus_rank = 0);
Eigen::Matrix3d random_orthogonal(Rng& rng);

// Random memoryless strategy with full-rank state and channel.
SeqMemoryless random_seq(Rng& rng, Direction dir, int d = 2);

// Canonical qubit form of rank t whose Bloch vectors c1 (returned) and c2
// satisfy the directional constraints: each nonzero component c_i needs the
// matching coordinate of every alpha_j (beta_j for c2) to vanish.
struct RandomForm {
  QubitCanonicalForm form;
  Eigen::Vector3d c1;
};
RandomForm random_constrained_form(Rng& rng, int t);

}  // namespace qorder
