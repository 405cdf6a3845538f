/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 *
 * Command-line surface: parses JSON inputs, dispatches to the library, and
 * emits JSON/CSV reports with enough metadata (version, seed, input hash) to
 * reproduce any run.
 */

#include "coh/channels.hpp"
#include "coh/entropies.hpp"
#include "coh/linalg.hpp"
#include "coh/rates.hpp"
#include "coh/serialize.hpp"
#include "coh/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct RunConfig {
  std::string state_path;
  std::string ensemble_path;
  std::string out_path;
  std::string format = "json";
  std::string suite;
  double epsilon = 0.0;
  int m = 0;
  int members = 0;
  int restarts = 16;
  int max_copies = 10;
  int trials = 100;
  int dim = 4;
  int threads = 1;
  std::uint64_t seed = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw coh::InvariantError("input." + path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

coh::Json parse_json(const std::string& content, const std::string& path) {
  coh::Json j = coh::Json::parse(content, nullptr, false);
  if (j.is_discarded()) throw coh::InvariantError("input." + path, "malformed JSON");
  return j;
}

void emit(const RunConfig& cfg, const std::string& content) {
  if (cfg.out_path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
  } else {
    coh::write_atomic(cfg.out_path, content);
  }
}

coh::Json envelope(const RunConfig& cfg, const std::string& command,
                   const std::string& input_bytes) {
  coh::Json j;
  j["tool"] = "cohtool";
  j["version"] = COHTOOL_VERSION;
  j["command"] = command;
  j["seed"] = cfg.seed;
  j["epsilon"] = cfg.epsilon;
  j["input_hash"] = coh::content_hash(input_bytes);
  return j;
}

int run_pure_rate(const RunConfig& cfg) {
  const std::string bytes = read_file(cfg.state_path);
  const coh::PureState psi = coh::pure_state_from_json(parse_json(bytes, cfg.state_path));
  coh::RateReport report = coh::pure_rate(psi, cfg.epsilon);
  report.seed = cfg.seed;
  coh::Json j = envelope(cfg, "pure-rate", bytes);
  j["report"] = coh::rate_report_to_json(report);
  emit(cfg, j.dump(2));
  return 0;
}

int run_ensemble_rate(const RunConfig& cfg) {
  const std::string bytes = read_file(cfg.ensemble_path);
  const coh::PureEnsemble e = coh::ensemble_from_json(parse_json(bytes, cfg.ensemble_path));
  coh::RateReport report = coh::ensemble_rate(e, cfg.epsilon);
  report.seed = cfg.seed;
  coh::Json j = envelope(cfg, "ensemble-rate", bytes);
  j["report"] = coh::rate_report_to_json(report);
  j["f_min_delta_bits"] = coh::f_min_delta(e);
  emit(cfg, j.dump(2));
  return 0;
}

int run_assisted_rate(const RunConfig& cfg) {
  const std::string bytes = read_file(cfg.state_path);
  const coh::DensityOperator rho = coh::density_from_json(parse_json(bytes, cfg.state_path));
  const int members = cfg.members > 0 ? cfg.members : rho.dim();
  const coh::RateReport report =
      coh::assisted_rate(rho, cfg.epsilon, members, cfg.restarts, cfg.seed);
  coh::Json j = envelope(cfg, "assisted-rate", bytes);
  j["report"] = coh::rate_report_to_json(report);
  j["d_a_closed_form_bits"] = coh::d_a_closed_form(rho);
  emit(cfg, j.dump(2));
  return 0;
}

int run_sweep(const RunConfig& cfg) {
  const std::string bytes = read_file(cfg.ensemble_path);
  const coh::PureEnsemble e = coh::ensemble_from_json(parse_json(bytes, cfg.ensemble_path));
  const std::vector<coh::SweepRow> rows = coh::ncopy_sweep(e, cfg.epsilon, cfg.max_copies);
  if (cfg.format == "csv") {
    emit(cfg, coh::sweep_to_csv(rows));
    return 0;
  }
  coh::Json j = envelope(cfg, "asymptotic-sweep", bytes);
  coh::Json out = coh::Json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"rate_bits", r.rate_bits},
                   {"rate_per_copy", r.rate_per_copy},
                   {"target_avg_bits", r.target_avg_bits},
                   {"target_da_bits", r.target_da_bits}});
  }
  j["rows"] = std::move(out);
  emit(cfg, j.dump(2));
  return 0;
}

int run_build_channel(const RunConfig& cfg) {
  const std::string bytes = read_file(cfg.state_path);
  const coh::PureState psi = coh::pure_state_from_json(parse_json(bytes, cfg.state_path));
  const coh::IncoherentChannel ch = coh::build_concentration_channel(psi, cfg.m);
  emit(cfg, coh::to_json(ch).dump(2));
  return 0;
}

int run_verify(const RunConfig& cfg) {
  coh::Rng rng(cfg.seed);
  const coh::VerifyResult res = coh::run_suite(cfg.suite, cfg.trials, cfg.dim, rng);
  coh::Json j = envelope(cfg, "verify", cfg.suite);
  j["suite"] = res.suite;
  j["trials"] = res.trials;
  j["violations"] = res.violations;
  j["messages"] = res.messages;
  emit(cfg, j.dump(2));
  return res.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-shot coherence concentration rates, channels, and verification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool with_eps = true) {
    if (with_eps) {
      sub->add_option("--epsilon", cfg.epsilon, "error tolerance")
          ->check(CLI::Range(0.0, 0.4999999999))
          ->required();
    }
    sub->add_option("--seed", cfg.seed, "RNG seed (echoed into the report)");
    sub->add_option("--out", cfg.out_path, "output path (stdout if omitted)");
    sub->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--threads", cfg.threads, "worker threads (results are identical)");
  };

  auto* pure = app.add_subcommand("pure-rate", "one-shot pure-state concentration rate");
  pure->add_option("--state", cfg.state_path, "pure state JSON")->required();
  add_common(pure);

  auto* ens = app.add_subcommand("ensemble-rate", "average concentration rate of an ensemble");
  ens->add_option("--ensemble", cfg.ensemble_path, "ensemble JSON")->required();
  add_common(ens);

  auto* assisted = app.add_subcommand("assisted-rate", "one-shot coherence of assistance (lower bound)");
  assisted->add_option("--state", cfg.state_path, "density operator JSON")->required();
  assisted->add_option("--members", cfg.members, "ensemble size (defaults to dim)");
  assisted->add_option("--restarts", cfg.restarts, "random isometry restarts");
  add_common(assisted);

  auto* sweep = app.add_subcommand("asymptotic-sweep", "n-copy rate-per-copy sweep");
  sweep->add_option("--ensemble", cfg.ensemble_path, "ensemble JSON")->required();
  sweep->add_option("--max-copies", cfg.max_copies, "largest n");
  add_common(sweep);

  auto* build = app.add_subcommand("build-channel", "synthesize the concentration channel");
  build->add_option("--state", cfg.state_path, "pure state JSON")->required();
  build->add_option("--M", cfg.m, "target maximally coherent rank")->required();
  add_common(build, false);

  auto* verify = app.add_subcommand("verify", "run a randomized property suite");
  verify->add_option("--suite", cfg.suite, "lemmas | smoothing-oracle | channels | rates")
      ->required()
      ->check(CLI::IsMember({"lemmas", "smoothing-oracle", "channels", "rates"}));
  verify->add_option("--trials", cfg.trials, "trial count");
  verify->add_option("--dim", cfg.dim, "maximum dimension");
  add_common(verify, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (pure->parsed()) return run_pure_rate(cfg);
    if (ens->parsed()) return run_ensemble_rate(cfg);
    if (assisted->parsed()) return run_assisted_rate(cfg);
    if (sweep->parsed()) return run_sweep(cfg);
    if (build->parsed()) return run_build_channel(cfg);
    if (verify->parsed()) return run_verify(cfg);
  } catch (const coh::InvariantError& e) {
    coh::Json err;
    err["error"] = {{"field", e.field()}, {"invariant", e.invariant()}};
    std::cerr << err.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    coh::Json err;
    err["error"] = {{"field", "internal"}, {"invariant", e.what()}};
    std::cerr << err.dump() << '\n';
    return 1;
  }
  return 1;
}
