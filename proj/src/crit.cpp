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


#include "qorder/crit.hpp"

#include <cmath>
#include <functional>

namespace qorder {

Scheme make_scheme(const MeasurementSetup& m1, const MeasurementSetup& m2) {
  Scheme s{m1, m2, {}};
  s.bases.b1 = build_operator_basis(m1.family, m1.contrasts);
  s.bases.b2 = build_operator_basis(m2.family, m2.contrasts);
  return s;
}

Scheme pauli_scheme() {
  const auto m = build_pauli_family();
  return make_scheme(m, m);
}

Scheme swap_scheme(const Scheme& s) { return {s.m2, s.m1, {s.bases.b2, s.bases.b1}}; }

std::string Check::label() const {
  switch (state) {
    case State::True: return "true";
    case State::False: return "false";
    default: return "inconclusive:" + reason;
  }
}

namespace {

// P(x1|y1,y2) summed over x2, normalized by the block weight.
double marginal1(const JointDistribution& P, int y1, int x1, int y2) {
  double s = 0.0;
  for (int x2 = 0; x2 < P.outcomes2(y2); ++x2) s += P.at(y1, x1, y2, x2);
  const double w = P.block_sum(y1, y2);
  return w != 0.0 ? s / w : s;
}

double marginal2(const JointDistribution& P, int y1, int y2, int x2) {
  double s = 0.0;
  for (int x1 = 0; x1 < P.outcomes1(y1); ++x1) s += P.at(y1, x1, y2, x2);
  const double w = P.block_sum(y1, y2);
  return w != 0.0 ? s / w : s;
}

std::string reason_of(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::C0Degenerate: return "C0";
    case ErrorKind::SingularAnchor: return "SingularAnchor";
    case ErrorKind::A1Violation: return "A1";
    case ErrorKind::A3Violation: return "A3";
    default: return to_string(e.kind());
  }
}

void scan_C1(C1Result& r, int y1, int y2, int x2, double lhs, double rhs) {
  const double gap = std::abs(lhs - rhs);
  // small margin so that ties keep the lexicographically first triple
  if (gap > r.residual + 1e-12) {
    r.residual = gap;
    r.witness = {y1, y2, x2};
    r.lhs = lhs;
    r.rhs = rhs;
  }
}

void seed_witness(C1Result& r, const JointDistribution& P, const Conditionals& c,
                  const std::function<double(int, int)>& rhs_at) {
  // the first triple is reported even when nothing is violated
  double lhs = 0.0;
  for (int x1 = 0; x1 < P.outcomes1(1); ++x1) lhs += c.cond.at(1, x1, 1, 0);
  r.witness = {1, 1, 0};
  r.lhs = lhs;
  r.rhs = rhs_at(1, 0);
  r.residual = std::abs(lhs - r.rhs);
}

}  // namespace

Verdict markov_x1y1y2(const JointDistribution& P, double tol) {
  double res = 0.0;
  for (int y1 = 0; y1 < P.n1; ++y1)
    for (int x1 = 0; x1 < P.outcomes1(y1); ++x1) {
      const double ref = marginal1(P, y1, x1, 0);
      for (int y2 = 1; y2 < P.n2; ++y2)
        res = std::max(res, std::abs(marginal1(P, y1, x1, y2) - ref));
    }
  return {res <= tol, res};
}

Verdict markov_y1y2x2(const JointDistribution& P, double tol) {
  return markov_x1y1y2(swap_parties(P), tol);
}

Verdict markov_full_chain(const JointDistribution& P, double tol) {
  double res = 0.0;
  for (int y1 = 0; y1 < P.n1; ++y1)
    for (int y2 = 0; y2 < P.n2; ++y2)
      for (int x1 = 0; x1 < P.outcomes1(y1); ++x1)
        for (int x2 = 0; x2 < P.outcomes2(y2); ++x2) {
          const double prod = marginal1(P, y1, x1, 0) * marginal2(P, 0, y2, x2);
          res = std::max(res, std::abs(P.at(y1, x1, y2, x2) - prod));
        }
  return {res <= tol, res};
}

Verdict check_C0(const JointDistribution& P, double tol_c0) {
  const auto c = conditionals(P, false, tol_c0);
  return {c.c0, c.min_p1};
}

C1Result check_C1(const JointDistribution& P, const Bases& b, double tol, double tol_c0) {
  const auto& B1 = b.b1;
  if (P.d1 != B1.d || P.d2 != b.b2.d)
    throw Error(ErrorKind::DimensionMismatch, "distribution and bases disagree on d");
  if (!B1.complete) throw Error(ErrorKind::A1Violation, "C1 needs a complete basis for Alice");
  const Conditionals c = conditionals(P, true, tol_c0);
  const int T1 = B1.size();
  const double d = P.d1;
  std::vector<double> mean1(T1, 0.0);
  for (int t1 = 1; t1 < T1; ++t1) {
    const int y = setting_of(B1, t1);
    for (int x1 = 0; x1 < P.outcomes1(y); ++x1) mean1[t1] += B1.g[t1][x1] * c.p1[y][x1];
  }
  auto rhs_at = [&](int y2, int x2) {
    double acc = 0.0;
    for (int tp = 1; tp < T1; ++tp) {
      const int y = setting_of(B1, tp);
      double inner = 0.0;
      for (int x1 = 0; x1 < P.outcomes1(y); ++x1) inner += B1.g[tp][x1] * c.cond.at(y, x1, y2, x2);
      double w = 0.0;
      for (int t1 = 1; t1 < T1; ++t1) w += mean1[t1] * B1.h(t1, tp);
      acc += w * inner;
    }
    return d * c.p2_0[y2][x2] - d * acc;
  };
  C1Result r;
  seed_witness(r, P, c, rhs_at);
  for (int y1 = 1; y1 < P.n1; ++y1)
    for (int y2 = 1; y2 < P.n2; ++y2)
      for (int x2 = 0; x2 < P.d2; ++x2) {
        double lhs = 0.0;
        for (int x1 = 0; x1 < P.d1; ++x1) lhs += c.cond.at(y1, x1, y2, x2);
        scan_C1(r, y1, y2, x2, lhs, rhs_at(y2, x2));
      }
  r.ok = r.residual <= tol;
  return r;
}

C1Result check_C1_qubit(const JointDistribution& P, double tol, double tol_c0) {
  if (P.d1 != 2 || P.d2 != 2 || P.n1 != 4 || P.n2 != 4)
    throw Error(ErrorKind::DimensionMismatch, "qubit C1 needs two qubits with three settings each");
  const Conditionals c = conditionals(P, true, tol_c0);
  auto rhs_at = [&](int y2, int x2) {
    double acc = 2.0 * c.p2_0[y2][x2];
    for (int y = 1; y <= 3; ++y) {
      const double mean = c.p1[y][0] - c.p1[y][1];
      acc -= mean * (c.cond.at(y, 0, y2, x2) - c.cond.at(y, 1, y2, x2));
    }
    return acc;
  };
  C1Result r;
  seed_witness(r, P, c, rhs_at);
  for (int y1 = 1; y1 <= 3; ++y1)
    for (int y2 = 1; y2 <= 3; ++y2)
      for (int x2 = 0; x2 < 2; ++x2)
        scan_C1(r, y1, y2, x2, c.cond.at(y1, 0, y2, x2) + c.cond.at(y1, 1, y2, x2),
                rhs_at(y2, x2));
  r.ok = r.residual <= tol;
  return r;
}

C1Result check_C2(const JointDistribution& P, const Bases& b, double tol, double tol_c0) {
  return check_C1(swap_parties(P), {b.b2, b.b1}, tol, tol_c0);
}

SeqMembership membership_N12(const JointDistribution& P, const Scheme& s,
                             const Tolerances& tol) {
  SeqMembership m;
  m.markov = markov_x1y1y2(P, tol.eq);
  if (!check_C0(P, tol.c0).ok) {
    m.member = Check::undecided("C0");
    m.psd_hat = Check::undecided("C0");
    return m;
  }
  try {
    m.c1 = check_C1(P, s.bases, tol.eq, tol.c0);
    const HatChoi hc = hat_choi_full(P, s.bases, Direction::OneToTwo, tol.c0);
    m.choi = hc.choi;
    m.anchor_spread = hc.anchor_spread;
    m.rho = rho1(P, s.bases);
  } catch (const Error& e) {
    m.member = Check::undecided(reason_of(e));
    m.psd_hat = Check::undecided(reason_of(e));
    return m;
  }
  const auto psd = is_psd(m.choi, tol.psd);
  m.psd_hat = Check::of(psd.ok, psd.min_eig);
  const bool ok = m.markov.ok && m.c1.ok && psd.ok;
  m.member = Check::of(ok, std::max({m.markov.residual, m.c1.residual,
                                     psd.min_eig < 0 ? -psd.min_eig : 0.0}));
  if (ok) {
    // consistency: the reconstructed pair must reproduce the table
    SeqMemoryless back{Direction::OneToTwo, m.rho, m.choi};
    try {
      m.roundtrip = sup_norm_diff(simulate_exact(back, s.m1.family, s.m2.family, true), P);
    } catch (const Error&) {
      m.roundtrip = INFINITY;
    }
  }
  return m;
}

SeqMembership membership_N21(const JointDistribution& P, const Scheme& s,
                             const Tolerances& tol) {
  return membership_N12(swap_parties(P), swap_scheme(s), tol);
}

ParallelMembership membership_parallel(const JointDistribution& P, const Scheme& s,
                                       const Tolerances& tol) {
  ParallelMembership m;
  try {
    m.R = pdm(P, s.bases);
  } catch (const Error& e) {
    m.member = Check::undecided(reason_of(e));
    m.psd_R = Check::undecided(reason_of(e));
    return m;
  }
  const auto psd = is_psd(m.R, tol.psd);
  m.psd_R = Check::of(psd.ok, psd.min_eig);
  const auto a = markov_x1y1y2(P, tol.eq);
  const auto b = markov_y1y2x2(P, tol.eq);
  bool ok = a.ok && b.ok && psd.ok;
  if (psd.ok) {
    Parallel par{m.R, P.d1, P.d2};
    try {
      m.roundtrip = sup_norm_diff(
          simulate_exact(par, s.m1.family, s.m2.family, true), P);
    } catch (const Error&) {
      m.roundtrip = INFINITY;
    }
    ok = ok && m.roundtrip <= tol.eq;
  }
  m.member = Check::of(ok, std::max({a.residual, b.residual, m.roundtrip < 0 ? 0.0 : m.roundtrip}));
  return m;
}

Check membership_individual(const JointDistribution& P, const Tolerances& tol) {
  const auto v = markov_full_chain(P, tol.eq);
  return Check::of(v.ok, v.residual);
}

ReverseCompat d1d2d3(const JointDistribution& P, const Scheme& s, const Tolerances& tol) {
  ReverseCompat r;
  const auto d1 = markov_y1y2x2(P, tol.eq);
  r.D1 = Check::of(d1.ok, d1.residual);
  try {
    const CMatrix r2 = rho2(P, s.bases);
    const CMatrix ct = tilde_choi(P, s.bases, Direction::TwoToOne, tol.pd);
    const auto psd = is_psd(ct, tol.psd);
    r.min_eig_tilde21 = psd.min_eig;
    r.D3 = Check::of(psd.ok, psd.min_eig);
    SeqMemoryless rev{Direction::TwoToOne, r2, ct};
    const auto Q = simulate_exact(rev, s.m1.family, s.m2.family, true);
    const auto d2 = markov_x1y1y2(Q, tol.eq);
    r.D2 = Check::of(d2.ok, d2.residual);
  } catch (const Error& e) {
    r.D2 = Check::undecided(reason_of(e));
    r.D3 = Check::undecided(reason_of(e));
  }
  const Check* parts[] = {&r.D1, &r.D2, &r.D3};
  bool any_false = false, all_true = true;
  std::string why;
  for (const Check* c : parts) {
    any_false = any_false || c->state == Check::State::False;
    all_true = all_true && c->is_true();
    if (!c->decided() && why.empty()) why = c->reason;
  }
  if (any_false)
    r.indistinguishable = Check::of(false, 0.0);
  else if (all_true)
    r.indistinguishable = Check::of(true, 0.0);
  else
    r.indistinguishable = Check::undecided(why);
  return r;
}

namespace {

Check psd_check(const std::function<CMatrix()>& build, double tol_psd) {
  try {
    const auto p = is_psd(build(), tol_psd);
    return Check::of(p.ok, p.min_eig);
  } catch (const Error& e) {
    return Check::undecided(reason_of(e));
  }
}

}  // namespace

ClassificationReport classify(const JointDistribution& P, const Scheme& s,
                              const Tolerances& tol) {
  ClassificationReport r;
  r.tol = tol;
  r.markov_X1Y1Y2 = markov_x1y1y2(P, tol.eq);
  r.markov_Y1Y2X2 = markov_y1y2x2(P, tol.eq);
  r.markov_full = markov_full_chain(P, tol.eq);
  r.C0 = check_C0(P, tol.c0);

  auto c_check = [&](auto&& run, std::array<int, 3>& w, double* lhs, double* rhs) {
    try {
      const C1Result c = run();
      w = c.witness;
      if (lhs) *lhs = c.lhs;
      if (rhs) *rhs = c.rhs;
      return Check::of(c.ok, c.residual);
    } catch (const Error& e) {
      return Check::undecided(reason_of(e));
    }
  };
  r.C1 = c_check([&] { return check_C1(P, s.bases, tol.eq, tol.c0); }, r.C1_witness,
                 &r.C1_lhs, &r.C1_rhs);
  r.C2 = c_check([&] { return check_C2(P, s.bases, tol.eq, tol.c0); }, r.C2_witness,
                 nullptr, nullptr);

  const auto n12 = membership_N12(P, s, tol);
  const auto n21 = membership_N21(P, s, tol);
  const auto par = membership_parallel(P, s, tol);
  r.psd_R = par.psd_R;
  r.psd_hatC_12 = n12.psd_hat;
  r.psd_hatC_21 = n21.psd_hat;
  r.psd_tildeC_12 = psd_check(
      [&] { return tilde_choi(P, s.bases, Direction::OneToTwo, tol.pd); }, tol.psd);
  r.psd_tildeC_21 = psd_check(
      [&] { return tilde_choi(P, s.bases, Direction::TwoToOne, tol.pd); }, tol.psd);
  r.member_N12 = n12.member;
  r.member_N21 = n21.member;
  r.member_parallel = par.member;
  r.member_individual = membership_individual(P, tol);
  r.fg1vs_literal_mismatch = par.psd_R.is_true() && !par.member.is_true();

  if (n12.member.is_true()) {
    const auto d = d1d2d3(P, s, tol);
    r.D1 = d.D1;
    r.D2 = d.D2;
    r.D3 = d.D3;
    r.order_indistinguishable = d.indistinguishable;
  } else {
    const auto na = Check::undecided("not_member_N12");
    r.D1 = r.D2 = r.D3 = r.order_indistinguishable = na;
  }

  r.status = "classified";
  for (const Check* c : {&r.member_N12, &r.member_N21, &r.member_parallel, &r.member_individual})
    if (!c->decided()) {
      r.status = "inconclusive:" + c->reason;
      break;
    }
  return r;
}

namespace {

nlohmann::ordered_json verdict_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["verdict"] = v.ok;
  j["residual"] = v.residual;
  return j;
}

nlohmann::ordered_json check_json(const Check& c, const char* key = "residual") {
  nlohmann::ordered_json j;
  if (c.decided())
    j["verdict"] = c.is_true();
  else
    j["verdict"] = c.label();
  if (c.decided()) j[key] = c.residual;
  return j;
}

}  // namespace

nlohmann::ordered_json report_to_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["status"] = r.status;
  j["tolerances"] = {{"eq", r.tol.eq}, {"psd", r.tol.psd}, {"c0", r.tol.c0}, {"pd", r.tol.pd}};
  j["markov_X1Y1Y2"] = verdict_json(r.markov_X1Y1Y2);
  j["markov_Y1Y2X2"] = verdict_json(r.markov_Y1Y2X2);
  j["markov_full"] = verdict_json(r.markov_full);
  {
    nlohmann::ordered_json c0;
    c0["verdict"] = r.C0.ok;
    c0["min_prob"] = r.C0.residual;
    j["C0"] = c0;
  }
  auto c1 = check_json(r.C1);
  if (r.C1.decided()) {
    c1["witness"] = {{"y1", r.C1_witness[0]}, {"y2", r.C1_witness[1]}, {"x2", r.C1_witness[2]}};
    c1["lhs"] = r.C1_lhs;
    c1["rhs"] = r.C1_rhs;
  }
  j["C1"] = c1;
  auto c2 = check_json(r.C2);
  if (r.C2.decided())
    c2["witness"] = {{"y2", r.C2_witness[0]}, {"y1", r.C2_witness[1]}, {"x1", r.C2_witness[2]}};
  j["C2"] = c2;
  j["psd_R"] = check_json(r.psd_R, "min_eig");
  j["psd_hatC_12"] = check_json(r.psd_hatC_12, "min_eig");
  j["psd_hatC_21"] = check_json(r.psd_hatC_21, "min_eig");
  j["psd_tildeC_12"] = check_json(r.psd_tildeC_12, "min_eig");
  j["psd_tildeC_21"] = check_json(r.psd_tildeC_21, "min_eig");
  j["member_N12"] = check_json(r.member_N12);
  j["member_N21"] = check_json(r.member_N21);
  j["member_parallel"] = check_json(r.member_parallel);
  j["member_individual"] = check_json(r.member_individual);
  j["D1"] = check_json(r.D1);
  j["D2"] = check_json(r.D2);
  j["D3"] = check_json(r.D3, "min_eig");
  j["order_indistinguishable"] = check_json(r.order_indistinguishable);
  j["fg1vs_literal_mismatch"] = r.fg1vs_literal_mismatch;
  return j;
}

}  // namespace qorder
