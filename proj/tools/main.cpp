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


#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace qorder;
using namespace qorder::cli;

namespace {

int exit_code(const Error& e) {
  return (e.kind() == ErrorKind::IO || e.kind() == ErrorKind::Parse) ? 1 : 2;
}

void add_families(CLI::App* sub, Families& f) {
  sub->add_option("--family1", f.family1, "Alice's measurement family (JSON); Pauli if omitted");
  sub->add_option("--family2", f.family2, "Bob's measurement family (JSON); Pauli if omitted");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qorder: causal-order classification of two-party measurement statistics"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON run configuration (default: $QORDER_CONFIG)");
  std::optional<double> tol_eq, tol_psd;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  app.add_option("--tol-eq", tol_eq, "equality tolerance");
  app.add_option("--tol-psd", tol_psd, "positivity tolerance");
  app.add_option("--seed", seed, "sampling seed");
  app.add_option("--threads", threads, "worker threads");

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "exact or sampled joint distribution of a strategy");
  auto* src = s->add_option_group("source");
  src->add_option("--strategy", sim.strategy, "strategy JSON file");
  src->add_option("--preset", sim.preset, "named strategy: ExB, Ex1prime, Ex1");
  src->require_option(1);
  s->add_option("--lambda", sim.lambda, "mixing weight for Ex1");
  s->add_option("--shots", sim.shots, "sample this many shots instead of the exact table");
  s->add_option("--csv", sim.csv, "write shot records here (with --shots)");
  s->add_option("-o,--out", sim.out, "output file (default stdout)");
  s->add_flag("--born", sim.born, "contract the process matrix instead of direct simulation");
  s->add_flag("--allow-quasi", sim.allow_quasi, "accept non-positive Choi matrices (signed output)");
  add_families(s, sim.families);

  ReconstructArgs rec;
  auto* r = app.add_subcommand("reconstruct", "reconstruct a Choi or pseudo-density matrix");
  r->add_option("dist", rec.dist, "distribution JSON")->required();
  r->add_option("--direction", rec.direction, "1to2 or 2to1")
      ->check(CLI::IsMember({"1to2", "2to1"}));
  r->add_option("--estimator", rec.estimator, "hat, tilde or pdm")
      ->check(CLI::IsMember({"hat", "tilde", "pdm"}));
  r->add_option("-o,--out", rec.out, "output file (default stdout)");
  add_families(r, rec.families);

  ClassifyArgs cls;
  auto* c = app.add_subcommand("classify", "run every criterion and report class membership");
  c->add_option("dist", cls.dist, "distribution JSON")->required();
  c->add_option("-o,--out", cls.out, "output file (default stdout)");
  add_families(c, cls.families);

  ScanArgs scan;
  auto* sc = app.add_subcommand("scan", "grid scan of a qubit channel family");
  sc->add_option("--family", scan.family, "depolarizing, pauli, pd1 or pd3")
      ->required()
      ->check(CLI::IsMember({"depolarizing", "pauli", "pd1", "pd3"}));
  sc->add_option("--grid", scan.grid, "name:min:max:step[,name:min:max:step...]")->required();
  sc->add_option("--param", scan.params, "fixed parameter name=value");
  sc->add_option("-o,--out", scan.out, "CSV output (default stdout)");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "closed forms against numeric oracles");
  v->add_option("--suite", ver.suite, "all or a comma list of suites");
  v->add_option("--samples", ver.samples, "override the per-suite sample count");

  CountArgs cnt;
  auto* cd = app.add_subcommand("count-dim", "dimension count for reconstruction");
  cd->add_option("--dims", cnt.dims, "dI1,dO1,dI2,dO2");
  cd->add_flag("--json", cnt.json, "JSON output");
  add_families(cd, cnt.families);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    RunConfig cfg = load_config(config_path);
    if (tol_eq) cfg.tol.eq = *tol_eq;
    if (tol_psd) cfg.tol.psd = *tol_psd;
    if (seed) cfg.seed = *seed;
    if (threads) cfg.threads = *threads;
    if (!(cfg.tol.eq > 0 && cfg.tol.psd > 0) || cfg.threads < 1)
      throw Error(ErrorKind::InvalidArgument, "tolerances and thread count must be positive");

    if (*s) return cmd_simulate(sim, cfg);
    if (*r) return cmd_reconstruct(rec, cfg);
    if (*c) return cmd_classify(cls, cfg);
    if (*sc) return cmd_scan(scan, cfg);
    if (*v) return cmd_verify(ver, cfg);
    if (*cd) return cmd_count_dim(cnt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: Parse: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
