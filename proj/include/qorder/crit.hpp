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

#include <array>
#include <string>

#include "qorder/recon.hpp"

namespace qorder {

struct Tolerances {
  double eq = 1e-9;    // equality residuals
  double psd = 1e-9;   // eigenvalue floor for positivity
  double c0 = 1e-12;   // smallest admissible P(x1|y1)
  double pd = 1e-10;   // anchor eigenvalue floor for the Jordan inverse
};

// Measurement setups of both parties plus their operator bases.
struct Scheme {
  MeasurementSetup m1, m2;
  Bases bases;
};

Scheme make_scheme(const MeasurementSetup& m1, const MeasurementSetup& m2);
Scheme pauli_scheme();
Scheme swap_scheme(const Scheme& s);

// A verdict that can also be undecided when a precondition fails.
struct Check {
  enum class State { True, False, Inconclusive };
  State state = State::False;
  std::string reason;     // set when inconclusive
  double residual = 0.0;  // residual or minimum eigenvalue, per check

  static Check of(bool ok, double residual) {
    return {ok ? State::True : State::False, {}, residual};
  }
  static Check undecided(std::string why) { return {State::Inconclusive, std::move(why), 0.0}; }
  bool is_true() const { return state == State::True; }
  bool decided() const { return state != State::Inconclusive; }
  std::string label() const;  // "true", "false" or "inconclusive:<reason>"
};

Verdict markov_x1y1y2(const JointDistribution& P, double tol);
Verdict markov_y1y2x2(const JointDistribution& P, double tol);
Verdict markov_full_chain(const JointDistribution& P, double tol);

// residual is the smallest P(x1|y1) over nontrivial settings.
Verdict check_C0(const JointDistribution& P, double tol_c0 = 1e-12);

struct C1Result {
  bool ok = false;
  double residual = 0.0;
  std::array<int, 3> witness{0, 0, 0};  // (y1, y2, x2) of the largest gap
  double lhs = 0.0, rhs = 0.0;          // both sides at the witness
};

// Throws C0Degenerate when some P(x1|y1) vanishes.
C1Result check_C1(const JointDistribution& P, const Bases& b, double tol,
                  double tol_c0 = 1e-12);
// Two-qubit Pauli shortcut; settings 1..3 must be sigma_1..sigma_3.
C1Result check_C1_qubit(const JointDistribution& P, double tol, double tol_c0 = 1e-12);
// Role-exchanged C1.
C1Result check_C2(const JointDistribution& P, const Bases& b, double tol,
                  double tol_c0 = 1e-12);

struct SeqMembership {
  Check member;
  Verdict markov;
  C1Result c1;
  Check psd_hat;          // residual = min eigenvalue of the hat Choi matrix
  double anchor_spread = 0.0;
  CMatrix rho;            // reconstructed input state of the first party
  CMatrix choi;           // reconstructed channel
  double roundtrip = -1.0;  // re-simulation gap when member, else -1
};

SeqMembership membership_N12(const JointDistribution& P, const Scheme& s,
                             const Tolerances& tol = {});
SeqMembership membership_N21(const JointDistribution& P, const Scheme& s,
                             const Tolerances& tol = {});

struct ParallelMembership {
  Check member;
  Check psd_R;      // residual = min eigenvalue of R
  double roundtrip = -1.0;
  CMatrix R;
};

ParallelMembership membership_parallel(const JointDistribution& P, const Scheme& s,
                                       const Tolerances& tol = {});
Check membership_individual(const JointDistribution& P, const Tolerances& tol = {});

struct ReverseCompat {
  Check D1, D2, D3, indistinguishable;
  double min_eig_tilde21 = 0.0;
};

// Intended for members of the 1->2 class. D2 runs the reverse strategy built
// from rho2[P] and the 2->1 tilde Choi matrix, which may be non-positive, so
// the re-simulated table can be signed.
ReverseCompat d1d2d3(const JointDistribution& P, const Scheme& s,
                     const Tolerances& tol = {});

struct ClassificationReport {
  std::string status;  // "classified" or "inconclusive:<reason>"
  Tolerances tol;
  Verdict markov_X1Y1Y2, markov_Y1Y2X2, markov_full;
  Verdict C0;
  Check C1, C2;
  std::array<int, 3> C1_witness{0, 0, 0};
  double C1_lhs = 0.0, C1_rhs = 0.0;
  std::array<int, 3> C2_witness{0, 0, 0};
  Check psd_R, psd_hatC_12, psd_hatC_21, psd_tildeC_12, psd_tildeC_21;
  Check member_N12, member_N21, member_parallel, member_individual;
  Check D1, D2, D3, order_indistinguishable;
  bool fg1vs_literal_mismatch = false;
};

ClassificationReport classify(const JointDistribution& P, const Scheme& s,
                              const Tolerances& tol = {});
nlohmann::ordered_json report_to_json(const ClassificationReport& r);

}  // namespace qorder
