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


#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "qorder/count.hpp"
#include "qorder/qubit.hpp"

namespace qorder::cli {

namespace {

std::string fmt(double v) {
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof buf, v + 0.0);
  return std::string(buf, r.ptr);
}

MeasurementSetup load_setup(const std::string& path) {
  return path.empty() ? build_pauli_family() : load_family(path);
}

double parse_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto r = std::from_chars(s.data(), end, v);
  if (r.ec != std::errc() || r.ptr != end)
    throw Error(ErrorKind::Parse, "bad number '" + s + "' in " + what);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

RunConfig config_from_json(const nlohmann::json& j, RunConfig c) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "config must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (k == "tol_eq") c.tol.eq = v.get<double>();
    else if (k == "tol_psd") c.tol.psd = v.get<double>();
    else if (k == "tol_c0") c.tol.c0 = v.get<double>();
    else if (k == "tol_pd") c.tol.pd = v.get<double>();
    else if (k == "seed") c.seed = v.get<std::uint64_t>();
    else if (k == "anchor") c.anchor = v.get<int>();
    else if (k == "threads") c.threads = v.get<int>();
    else throw Error(ErrorKind::Parse, "unknown config key " + k);
  }
  if (!(c.tol.eq > 0 && c.tol.psd > 0 && c.tol.c0 > 0 && c.tol.pd > 0))
    throw Error(ErrorKind::InvalidArgument, "tolerances must be positive");
  if (c.threads < 1) throw Error(ErrorKind::InvalidArgument, "threads must be positive");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::string p = path;
  if (p.empty())
    if (const char* env = std::getenv("QORDER_CONFIG")) p = env;
  if (p.empty()) return {};
  try {
    return config_from_json(read_json(p));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, p + ": " + e.what());
  }
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IO, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IO, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::IO, "write failed for " + path);
}

Scheme load_scheme(const Families& f) {
  return make_scheme(load_setup(f.family1), load_setup(f.family2));
}

namespace {

JointDistribution load_distribution(const std::string& path) {
  const auto j = read_json(path);
  try {
    return distribution_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

}  // namespace

int cmd_simulate(const SimulateArgs& a, const RunConfig& cfg) {
  Strategy s;
  if (!a.preset.empty()) {
    s = preset(a.preset, a.lambda);
  } else {
    const auto j = read_json(a.strategy);
    try {
      s = strategy_from_json(j);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Parse, a.strategy + ": " + e.what());
    }
  }
  const auto f1 = load_setup(a.families.family1);
  const auto f2 = load_setup(a.families.family2);
  const JointDistribution P = a.born ? simulate_born(s, f1.family, f2.family, a.allow_quasi)
                                     : simulate_exact(s, f1.family, f2.family, a.allow_quasi);
  nlohmann::ordered_json out;
  if (a.shots) {
    const auto ss = sample(P, *a.shots, cfg.seed, cfg.threads, !a.csv.empty());
    out = distribution_to_json(ss.empirical);
    out["shots"] = ss.shots;
    out["seed"] = ss.seed;
    if (!a.csv.empty()) write_text(a.csv, records_to_csv(ss));
  } else {
    out = distribution_to_json(P);
  }
  write_text(a.out, out.dump(2) + "\n");
  return 0;
}

int cmd_reconstruct(const ReconstructArgs& a, const RunConfig& cfg) {
  const auto P = load_distribution(a.dist);
  const Scheme sc = load_scheme(a.families);
  const Direction dir = direction_from_string(a.direction);
  CMatrix m;
  if (a.estimator == "hat")
    m = hat_choi_full(P, sc.bases, dir, cfg.tol.c0, cfg.anchor).choi;
  else if (a.estimator == "tilde")
    m = tilde_choi(P, sc.bases, dir, cfg.tol.pd);
  else if (a.estimator == "pdm")
    m = pdm(P, sc.bases);
  else
    throw Error(ErrorKind::InvalidArgument, "estimator must be hat, tilde or pdm");
  write_text(a.out, matrix_to_json(m).dump(2) + "\n");
  return 0;
}

int cmd_classify(const ClassifyArgs& a, const RunConfig& cfg) {
  const auto P = load_distribution(a.dist);
  const Scheme sc = load_scheme(a.families);
  const auto r = classify(P, sc, cfg.tol);
  write_text(a.out, report_to_json(r).dump(2) + "\n");
  return r.status == "classified" ? 0 : 2;
}

namespace {

struct Axis {
  std::string name;
  std::vector<double> values;
};

std::vector<Axis> parse_grid(const std::string& spec) {
  std::vector<Axis> axes;
  for (const auto& part : split(spec, ',')) {
    const auto f = split(part, ':');
    if (f.size() != 4) throw Error(ErrorKind::Parse, "grid axis must be name:min:max:step");
    Axis ax{f[0], {}};
    const double lo = parse_double(f[1], "grid"), hi = parse_double(f[2], "grid");
    const double step = parse_double(f[3], "grid");
    if (!(step > 0) || hi < lo) throw Error(ErrorKind::InvalidArgument, "bad grid range " + part);
    const long n = std::lround(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (long i = 0; i < n; ++i) {
      double v = lo + double(i) * step;
      if (std::abs(v) < 1e-12 * step) v = 0.0;  // keep exact zeros exact
      ax.values.push_back(std::min(v, hi));
    }
    axes.push_back(std::move(ax));
  }
  if (axes.empty()) throw Error(ErrorKind::Parse, "empty grid");
  return axes;
}

Eigen::Vector3d family_lambdas(const std::string& fam, std::map<std::string, double>& p) {
  if (fam == "depolarizing") {
    const double m = 1 - p.at("mu");
    return {m, -m, m};
  }
  if (fam == "pauli") {
    if (!p.count("p0")) p["p0"] = 1 - p["p1"] - p["p2"] - p["p3"];
    return pauli_lambdas({p["p0"], p["p1"], p["p2"], p["p3"]});
  }
  if (fam == "pd1") return {1, -p.at("lambda3"), p.at("lambda3")};
  if (fam == "pd3") return {p.at("lambda1"), -p.at("lambda1"), 1};
  throw Error(ErrorKind::InvalidArgument, "unknown family " + fam);
}

std::vector<std::string> family_params(const std::string& fam) {
  if (fam == "depolarizing") return {"mu"};
  if (fam == "pauli") return {"p1", "p2", "p3"};
  if (fam == "pd1") return {"lambda3"};
  if (fam == "pd3") return {"lambda1"};
  throw Error(ErrorKind::InvalidArgument, "unknown family " + fam);
}

std::string scan_row(const std::string& fam, std::map<std::string, double> p,
                     const std::vector<std::string>& cols, const Scheme& sc,
                     const RunConfig& cfg) {
  const double kappa = p.count("kappa") ? p["kappa"] : 0.0;
  const Eigen::Vector3d l = family_lambdas(fam, p);
  const double tol = 1e-12;
  DConditions d = pauli_D_conditions(kappa, l(0), l(1), l(2), tol);
  bool indist_an = d.all();
  if (fam == "depolarizing") {
    d.D3 = depol_D3(p.at("mu"), kappa, tol);
    indist_an = depol_indistinguishable(p.at("mu"), kappa, tol);
  } else if (fam == "pd1") {
    d.D3 = phase_damping_D3(DampingAxis::Sigma1, kappa, l(1), l(2), tol);
    indist_an = d.all();
  } else if (fam == "pd3") {
    d.D3 = phase_damping_D3(DampingAxis::Sigma3, kappa, l(0), 0.0, tol);
    indist_an = d.all();
  }
  std::map<std::string, double> chan = p;
  chan.erase("kappa");
  const SeqMemoryless s = family_strategy(fam, chan, {kappa, 0, 0});
  const auto P = simulate_exact(s, sc.m1.family, sc.m2.family);
  const auto r = d1d2d3(P, sc, cfg.tol);

  std::string hat, tilde, R;
  try {
    hat = fmt(min_eigval(hat_choi_full(P, sc.bases, Direction::OneToTwo, cfg.tol.c0,
                                       cfg.anchor).choi));
  } catch (const Error&) {
  }
  if (r.D3.decided()) tilde = fmt(r.min_eig_tilde21);
  R = fmt(min_eigval(pdm(P, sc.bases)));

  std::ostringstream os;
  for (const auto& c : cols) os << fmt(c == "kappa" ? kappa : p.at(c)) << ',';
  auto b = [](bool v) { return v ? "true" : "false"; };
  os << b(d.D1) << ',' << b(d.D2) << ',' << b(d.D3) << ',' << b(indist_an) << ','
     << r.indistinguishable.label() << ',' << tilde << ',' << hat << ',' << R << '\n';
  return os.str();
}

}  // namespace

int cmd_scan(const ScanArgs& a, const RunConfig& cfg) {
  const auto axes = parse_grid(a.grid);
  const auto allowed = family_params(a.family);
  auto known = [&](const std::string& n) {
    return n == "kappa" || n == "p0" ||
           std::find(allowed.begin(), allowed.end(), n) != allowed.end();
  };
  std::map<std::string, double> fixed;
  for (const auto& kv : a.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Parse, "param must be name=value");
    const std::string n = kv.substr(0, eq);
    if (!known(n)) throw Error(ErrorKind::InvalidArgument, "unknown parameter " + n);
    fixed[n] = parse_double(kv.substr(eq + 1), "param");
  }
  std::vector<std::string> cols;
  for (const auto& ax : axes) {
    if (!known(ax.name)) throw Error(ErrorKind::InvalidArgument, "unknown parameter " + ax.name);
    cols.push_back(ax.name);
  }
  for (const auto& [n, v] : fixed)
    if (std::find(cols.begin(), cols.end(), n) == cols.end()) cols.push_back(n);
  for (const auto& n : allowed)
    if (std::find(cols.begin(), cols.end(), n) == cols.end())
      throw Error(ErrorKind::InvalidArgument, "parameter " + n + " needs a grid axis or --param");

  // enumerate the grid, last axis fastest
  std::vector<std::map<std::string, double>> points(1, fixed);
  for (const auto& ax : axes) {
    std::vector<std::map<std::string, double>> next;
    for (const auto& base : points)
      for (double v : ax.values) {
        auto m = base;
        m[ax.name] = v;
        next.push_back(std::move(m));
      }
    points = std::move(next);
  }

  const Scheme sc = pauli_scheme();
  std::vector<std::string> rows(points.size());
  std::vector<std::string> errors(points.size());
  auto work = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      try {
        rows[i] = scan_row(a.family, points[i], cols, sc, cfg);
      } catch (const Error& e) {
        errors[i] = e.what();
      } catch (const std::out_of_range&) {
        errors[i] = "missing family parameter";
      }
    }
  };
  const size_t nt = std::min<size_t>(std::max(1, cfg.threads), points.size());
  std::vector<std::thread> pool;
  for (size_t t = 0; t < nt; ++t)
    pool.emplace_back(work, points.size() * t / nt, points.size() * (t + 1) / nt);
  for (auto& th : pool) th.join();
  for (size_t i = 0; i < points.size(); ++i)
    if (!errors[i].empty()) throw Error(ErrorKind::InvalidArgument, "grid point " + std::to_string(i) + ": " + errors[i]);

  std::ostringstream os;
  for (const auto& c : cols) os << c << ',';
  os << "D1,D2,D3,indistinguishable_analytic,indistinguishable_numeric,"
        "min_eig_tildeC21,min_eig_hatC12,min_eig_R\n";
  for (const auto& r : rows) os << r;
  write_text(a.out, os.str());
  return 0;
}

int cmd_verify(const VerifyArgs& a, const RunConfig& cfg) {
  std::vector<std::string> names;
  if (a.suite == "all")
    names = suite_names();
  else
    names = split(a.suite, ',');
  bool all_ok = true;
  for (const auto& n : names) {
    const auto r = run_suite(n, a.samples, cfg);
    all_ok = all_ok && r.ok();
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << ": checked=" << r.checked
              << " skipped=" << r.skipped << " failures=" << r.failures
              << " worst=" << fmt(r.worst);
    if (!r.note.empty()) std::cout << " (" << r.note << ")";
    std::cout << '\n';
  }
  return all_ok ? 0 : 2;
}

int cmd_count_dim(const CountArgs& a) {
  const auto f = split(a.dims, ',');
  if (f.size() != 4) throw Error(ErrorKind::Parse, "--dims needs four comma-separated integers");
  long v[4];
  for (int i = 0; i < 4; ++i) {
    const char* end = f[i].data() + f[i].size();
    auto r = std::from_chars(f[i].data(), end, v[i]);
    if (r.ec != std::errc() || r.ptr != end) throw Error(ErrorKind::Parse, "bad dimension " + f[i]);
  }
  const InterfaceDims d{v[0], v[1], v[2], v[3]};
  const auto f1 = load_setup(a.families.family1);
  const auto f2 = load_setup(a.families.family2);
  const auto rep = count_report(f1.family, f2.family, d);
  if (a.json) {
    std::cout << count_report_to_json(rep, d).dump(2) << '\n';
  } else {
    std::cout << "quotient_dim " << rep.quotient << '\n'
              << "accessible_count " << rep.accessible << '\n'
              << rep.text << '\n';
  }
  return 0;
}

}  // namespace qorder::cli
