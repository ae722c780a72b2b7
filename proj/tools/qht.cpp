// Command-line front end: parameter sweeps to CSV and the simulation vs
// closed-form verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical
// failure during evaluation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qht/qht.hpp"

namespace {

int run_sweep_command(const qht::SweepConfig& cfg) {
  const std::vector<qht::SweepRow> rows = qht::run_sweep(cfg);
  if (cfg.out.empty()) {
    qht::write_csv(rows, std::cout);
  } else {
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) throw qht::UsageError("cannot open output file '" + cfg.out + "'");
    qht::write_csv(rows, out);
  }
  return 0;
}

int run_list_command() {
  std::cout << "channels:\n";
  for (const auto& [kind, name] : qht::channel_names()) {
    const char* param = kind == qht::ChannelKind::AmplitudeDampingNonMarkov ? "t" : "p";
    std::cout << "  " << name << "  (parameter " << param << ")\n";
  }
  std::cout << "hypergraphs:\n";
  for (int i = 1; i <= 5; ++i) {
    std::cout << "  H" << i << "  edges:";
    for (const auto& e : qht::canonical_hypergraph(i).edges()) {
      std::cout << " (";
      for (std::size_t k = 0; k < e.size(); ++k) std::cout << (k ? "," : "") << e[k];
      std::cout << ")";
    }
    std::cout << "\n";
  }
  std::cout << "state presets:\n";
  std::cout << "  plus   (|0>+|1>+|2>)/sqrt3\n";
  std::cout << "  zero2  (|0>+|2>)/sqrt2\n";
  std::cout << "  zero   |0>\n";
  std::cout << "  explicit --theta1/--theta2, or --linked (theta1 = 3 theta2 over a theta2 grid)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qutrit teleportation over noisy three-qutrit hypergraph-state channels"};
  app.require_subcommand(1);

  // flag values land here; a config file (if any) is applied to the real
  // config first and flags that were actually given override it
  qht::SweepConfig flags;
  std::vector<std::string> hg_tokens;
  std::string mode = "check";
  std::string config_path;
  bool linked = false;

  CLI::App* sweep = app.add_subcommand("sweep", "sweep a channel parameter and emit CSV");
  sweep->add_option("--channel", flags.channel, "channel name (see `list`)");
  sweep->add_option("--hypergraph", hg_tokens, "hypergraph H1..H5 (repeatable; default all)");
  sweep->add_option("--state", flags.state, "input state preset: plus | zero2 | zero");
  sweep->add_option("--theta1", flags.theta1, "explicit state angle theta1 (radians)");
  sweep->add_option("--theta2", flags.theta2, "explicit state angle theta2 (radians)");
  sweep->add_flag("--linked", linked, "linked family theta1 = 3 theta2 over the theta2 grid");
  sweep->add_option("--theta2-start", flags.theta2_start, "theta2 grid start (linked mode)");
  sweep->add_option("--theta2-stop", flags.theta2_stop, "theta2 grid stop (linked mode)");
  sweep->add_option("--theta2-steps", flags.theta2_steps, "theta2 grid steps (linked mode)");
  sweep->add_option("--param-start", flags.param_start, "channel parameter grid start");
  sweep->add_option("--param-stop", flags.param_stop, "channel parameter grid stop");
  sweep->add_option("--steps", flags.param_steps, "channel parameter grid steps");
  sweep->add_option("--g", flags.g, "spectral width (ad-nonmarkov)");
  sweep->add_option("--gamma", flags.gamma, "spontaneous emission rate (ad-nonmarkov)");
  sweep->add_option("--eta", flags.eta, "dephasing-nonmarkov strength");
  sweep->add_option("--beta", flags.beta, "dephasing-nonmarkov frequency");
  sweep->add_option("--mode", mode, "simulate | closed-form | check");
  sweep->add_option("--out", flags.out, "output CSV path (default stdout)");
  sweep->add_option("--config", config_path, "config file with key=value lines (flags win)");

  std::uint64_t seed = 424243;
  int draws = 20;
  CLI::App* verify = app.add_subcommand("verify", "cross-check simulation against closed forms");
  verify->add_option("--seed", seed, "RNG seed for the random draws");
  verify->add_option("--draws", draws, "draws per formula key");

  CLI::App* list = app.add_subcommand("list", "enumerate channels, hypergraphs and presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sweep->parsed()) {
      qht::SweepConfig cfg;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw qht::UsageError("cannot open config file '" + config_path + "'");
        qht::apply_config_stream(cfg, in);
      }
      // command-line values override the file
      auto given = [&](const char* name) { return sweep->count(name) > 0; };
      if (given("--channel")) cfg.channel = flags.channel;
      if (given("--theta1")) {
        cfg.theta1 = flags.theta1;
        if (!given("--state")) cfg.state = "explicit";
      }
      if (given("--theta2")) {
        cfg.theta2 = flags.theta2;
        if (!given("--state") && cfg.state != "linked") cfg.state = "explicit";
      }
      if (given("--state")) cfg.state = flags.state;
      if (linked) cfg.state = "linked";
      if (given("--theta2-start")) cfg.theta2_start = flags.theta2_start;
      if (given("--theta2-stop")) cfg.theta2_stop = flags.theta2_stop;
      if (given("--theta2-steps")) cfg.theta2_steps = flags.theta2_steps;
      if (given("--param-start")) cfg.param_start = flags.param_start;
      if (given("--param-stop")) cfg.param_stop = flags.param_stop;
      if (given("--steps")) cfg.param_steps = flags.param_steps;
      if (given("--g")) cfg.g = flags.g;
      if (given("--gamma")) cfg.gamma = flags.gamma;
      if (given("--eta")) cfg.eta = flags.eta;
      if (given("--beta")) cfg.beta = flags.beta;
      if (given("--mode")) cfg.mode = qht::sweep_mode_from_name(mode);
      if (given("--out")) cfg.out = flags.out;
      if (!hg_tokens.empty()) {
        cfg.hypergraphs.clear();
        for (const std::string& t : hg_tokens)
          cfg.hypergraphs.push_back(qht::hypergraph_index_from_token(t));
      }
      return run_sweep_command(cfg);
    }
    if (verify->parsed()) {
      if (draws < 1) throw qht::UsageError("--draws must be positive");
      const qht::VerifyReport report = qht::run_verify(seed, draws);
      qht::print_report(report, std::cout);
      return report.passed ? 0 : 1;
    }
    if (list->parsed()) return run_list_command();
  } catch (const qht::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const qht::SweepEvaluationError& e) {
    std::cerr << "numerical failure at " << e.context << ": " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
