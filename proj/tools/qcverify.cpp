#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qcv/report.hpp"
#include "qcv/suites.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcverify: exact and numerical verification of qc-geometry identities"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");

  std::string suites_csv, format, config_path;
  int n = 0, degree = 0, trials = 0, workers = 0;
  std::uint64_t samples = 0, seed = 0;
  double fd_step = 0.0, tol = 0.0;
  bool no_timestamp = false;

  auto* o_suites = verify->add_option(
      "--suites", suites_csv,
      "comma list from {algebra,group-pointwise,group-integral,sphere,constants}");
  auto* o_n = verify->add_option("--n", n, "quaternionic dimension (default 2)");
  auto* o_degree = verify->add_option("--degree", degree, "max polynomial degree");
  auto* o_trials = verify->add_option("--trials", trials, "random trials per check");
  auto* o_samples = verify->add_option("--samples", samples, "Monte Carlo sample count");
  auto* o_fd = verify->add_option("--fd-step", fd_step, "finite-difference step");
  auto* o_tol = verify->add_option("--tol", tol, "numerical tolerance");
  auto* o_seed = verify->add_option("--seed", seed, "RNG seed");
  auto* o_format = verify->add_option("--format", format, "json|csv|text (default json)");
  auto* o_workers = verify->add_option("--workers", workers, "worker thread count");
  auto* o_config = verify->add_option("--config", config_path, "flat key=value config file");
  auto* o_nots = verify->add_flag("--no-timestamp", no_timestamp,
                                  "suppress the timestamp field for byte-stable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; usage errors exit 2
  }

  qcv::SuiteConfig cfg;
  try {
    if (o_config->count()) cfg = qcv::parse_config_file(config_path);
    if (o_suites->count()) cfg.suites = split_csv(suites_csv);
    if (o_n->count()) cfg.n = n;
    if (o_degree->count()) cfg.degree = degree;
    if (o_trials->count()) cfg.trials = trials;
    if (o_samples->count()) cfg.samples = samples;
    if (o_fd->count()) cfg.fd_step = fd_step;
    if (o_tol->count()) cfg.tol = tol;
    if (o_seed->count()) cfg.seed = seed;
    if (o_format->count()) cfg.format = format;
    if (o_workers->count()) cfg.workers = workers;
    if (o_nots->count()) cfg.no_timestamp = true;
    if (const char* env = std::getenv("QCVERIFY_WORKERS")) {
      const int w = std::atoi(env);
      if (w < 1) throw std::invalid_argument("QCVERIFY_WORKERS must be a positive integer");
      cfg.workers = w;
    }
    qcv::validate_config(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  const qcv::Report rep = qcv::run_suites(cfg);
  std::cout << qcv::emit_report(rep, qcv::parse_format(cfg.format));
  return rep.fail_count() == 0 ? 0 : 1;
}
