#pragma once

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <istream>
#include <mutex>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qht/closed_form.hpp"
#include "qht/teleport.hpp"

namespace qht {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Numerical failure during sweep evaluation, annotated with the offending
/// row so the CLI can print diagnostic context.
struct SweepEvaluationError : std::runtime_error {
  SweepEvaluationError(const std::string& what, std::string row_context)
      : std::runtime_error(what), context(std::move(row_context)) {}
  std::string context;
};

enum class SweepMode { Simulate, ClosedForm, Check };

inline SweepMode sweep_mode_from_name(const std::string& name) {
  if (name == "simulate") return SweepMode::Simulate;
  if (name == "closed-form") return SweepMode::ClosedForm;
  if (name == "check") return SweepMode::Check;
  throw UsageError("unknown mode '" + name + "' (simulate | closed-form | check)");
}

/// One sweep request. The theta2 grid applies only in linked mode
/// (theta1 = 3 theta2); otherwise the state is a preset or explicit pair.
struct SweepConfig {
  std::string channel = "qutrit-flip";
  std::vector<int> hypergraphs = {1, 2, 3, 4, 5};

  std::string state = "plus";  // plus | zero2 | zero | explicit | linked
  double theta1 = 0.0;
  double theta2 = 0.0;

  double theta2_start = 0.0;
  double theta2_stop = std::numbers::pi / 2.0;
  int theta2_steps = 25;

  double param_start = 0.0;
  double param_stop = 1.0;
  int param_steps = 11;

  double g = 1.0;
  double gamma = 10.0;
  double eta = 0.5;
  double beta = 100.0;

  SweepMode mode = SweepMode::Check;
  std::string out;  // CSV path; empty = stdout
};

namespace detail {

inline double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw UsageError("config key '" + key + "': cannot parse '" + value + "' as a number");
  }
}

inline int parse_int(const std::string& key, const std::string& value) {
  const double v = parse_double(key, value);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v)
    throw UsageError("config key '" + key + "': expected an integer, got '" + value + "'");
  return i;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace detail

/// Accepts "1".."5" or "H1".."H5".
inline int hypergraph_index_from_token(const std::string& token) {
  if (token.size() == 1 && token[0] >= '1' && token[0] <= '5') return token[0] - '0';
  try {
    return hypergraph_index_from_name(token);
  } catch (const LabelError& e) {
    throw UsageError(e.what());
  }
}

/// Apply one `key=value` config entry. Keys mirror the CLI flags (without
/// the leading dashes). Unknown keys are usage errors.
inline void apply_config_entry(SweepConfig& cfg, const std::string& key,
                               const std::string& value) {
  if (key == "channel") {
    cfg.channel = value;
  } else if (key == "hypergraph") {
    cfg.hypergraphs.clear();
    std::string token;
    std::istringstream is(value);
    while (std::getline(is, token, ',')) {
      std::istringstream ws(token);
      std::string piece;
      while (ws >> piece) cfg.hypergraphs.push_back(hypergraph_index_from_token(piece));
    }
    if (cfg.hypergraphs.empty()) throw UsageError("config key 'hypergraph': empty list");
  } else if (key == "state") {
    cfg.state = value;
  } else if (key == "theta1") {
    cfg.theta1 = detail::parse_double(key, value);
    if (cfg.state != "linked") cfg.state = "explicit";
  } else if (key == "theta2") {
    cfg.theta2 = detail::parse_double(key, value);
    if (cfg.state != "linked") cfg.state = "explicit";
  } else if (key == "linked") {
    if (value == "true" || value == "1") cfg.state = "linked";
  } else if (key == "theta2-start") {
    cfg.theta2_start = detail::parse_double(key, value);
  } else if (key == "theta2-stop") {
    cfg.theta2_stop = detail::parse_double(key, value);
  } else if (key == "theta2-steps") {
    cfg.theta2_steps = detail::parse_int(key, value);
  } else if (key == "param-start") {
    cfg.param_start = detail::parse_double(key, value);
  } else if (key == "param-stop") {
    cfg.param_stop = detail::parse_double(key, value);
  } else if (key == "steps") {
    cfg.param_steps = detail::parse_int(key, value);
  } else if (key == "g") {
    cfg.g = detail::parse_double(key, value);
  } else if (key == "gamma") {
    cfg.gamma = detail::parse_double(key, value);
  } else if (key == "eta") {
    cfg.eta = detail::parse_double(key, value);
  } else if (key == "beta") {
    cfg.beta = detail::parse_double(key, value);
  } else if (key == "mode") {
    cfg.mode = sweep_mode_from_name(value);
  } else if (key == "out") {
    cfg.out = value;
  } else {
    throw UsageError("unknown config key '" + key + "'");
  }
}

/// Load `key=value` lines ('#' starts a comment, blank lines are skipped)
/// into the config. Command-line flags are applied afterwards by the CLI and
/// therefore win.
inline void apply_config_stream(SweepConfig& cfg, std::istream& in) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
    apply_config_entry(cfg, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
  }
}

struct SweepRow {
  std::string channel;
  int hypergraph = 0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::string param_name;
  double param_value = 0.0;
  std::optional<double> f_sim;
  std::optional<double> f_closed;
  std::optional<double> abs_err;
};

namespace detail {

inline double grid_point(double start, double stop, int steps, int k) {
  return start + static_cast<double>(k) * (stop - start) / static_cast<double>(steps - 1);
}

inline void validate_grid(double start, double stop, int steps, const std::string& what) {
  if (steps < 2) throw UsageError(what + " grid needs at least 2 steps");
  if (!(start < stop)) throw UsageError(what + " grid needs start < stop");
}

/// Run f(0..n-1) on a few worker threads; results must be written by index so
/// ordering stays deterministic. The first exception wins and is rethrown.
template <typename F>
void parallel_for(std::size_t n, F&& f) {
  const unsigned hw = std::thread::hardware_concurrency();
  const unsigned workers = std::min<unsigned>(hw == 0 ? 1 : hw, 8);
  if (n < 16 || workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

inline StateParams resolve_state(const SweepConfig& cfg) {
  if (cfg.state == "plus") return StateParams::plus();
  if (cfg.state == "zero2") return StateParams::zero_two();
  if (cfg.state == "zero") return StateParams::zero();
  if (cfg.state == "explicit") return {cfg.theta1, cfg.theta2};
  throw UsageError("unknown state '" + cfg.state + "' (plus | zero2 | zero | explicit | linked)");
}

/// Evaluate the sweep. Rows are ordered by hypergraph, then theta2 (linked
/// mode only), then parameter; evaluation may run concurrently but the row
/// order is fixed up front.
inline std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  const ChannelKind kind = [&] {
    try {
      return channel_kind_from_name(cfg.channel);
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    }
  }();

  if (cfg.hypergraphs.empty()) throw UsageError("at least one hypergraph is required");
  for (int h : cfg.hypergraphs)
    if (h < 1 || h > 5) throw UsageError("hypergraph index out of range: " + std::to_string(h));

  const bool time_param = ChannelSpec{.kind = kind}.uses_time();
  detail::validate_grid(cfg.param_start, cfg.param_stop, cfg.param_steps, "parameter");
  if (time_param) {
    if (cfg.param_start < 0) throw UsageError("time grid must be nonnegative");
  } else if (cfg.param_start < 0 || cfg.param_stop > 1.0) {
    throw UsageError("probability grid must lie within [0,1]");
  }

  std::vector<std::pair<double, double>> angles;  // (theta1, theta2)
  if (cfg.state == "linked") {
    detail::validate_grid(cfg.theta2_start, cfg.theta2_stop, cfg.theta2_steps, "theta2");
    for (int k = 0; k < cfg.theta2_steps; ++k) {
      const double t2 = detail::grid_point(cfg.theta2_start, cfg.theta2_stop, cfg.theta2_steps, k);
      const StateParams sp = StateParams::linked(t2);
      angles.emplace_back(sp.theta1, sp.theta2);
    }
  } else {
    const StateParams sp = resolve_state(cfg);
    angles.emplace_back(sp.theta1, sp.theta2);
  }

  std::vector<int> hypergraphs = cfg.hypergraphs;
  std::sort(hypergraphs.begin(), hypergraphs.end());
  hypergraphs.erase(std::unique(hypergraphs.begin(), hypergraphs.end()), hypergraphs.end());

  std::vector<SweepRow> rows;
  for (int h : hypergraphs)
    for (const auto& [t1, t2] : angles)
      for (int k = 0; k < cfg.param_steps; ++k) {
        SweepRow row;
        row.channel = cfg.channel;
        row.hypergraph = h;
        row.theta1 = t1;
        row.theta2 = t2;
        row.param_name = time_param ? "t" : "p";
        row.param_value = detail::grid_point(cfg.param_start, cfg.param_stop, cfg.param_steps, k);
        rows.push_back(std::move(row));
      }

  detail::parallel_for(rows.size(), [&](std::size_t i) {
    SweepRow& row = rows[i];
    try {
      ChannelSpec spec;
      spec.kind = kind;
      spec.g = cfg.g;
      spec.gamma = cfg.gamma;
      spec.eta = cfg.eta;
      spec.beta = cfg.beta;
      (time_param ? spec.t : spec.p) = row.param_value;

      if (cfg.mode != SweepMode::ClosedForm)
        row.f_sim = teleport({row.theta1, row.theta2}, row.hypergraph, spec).aggregate;
      if (cfg.mode != SweepMode::Simulate)
        row.f_closed = closed_form_fidelity(spec, row.hypergraph, row.theta1, row.theta2);
      if (cfg.mode == SweepMode::Check) row.abs_err = std::abs(*row.f_sim - *row.f_closed);
    } catch (const std::exception& e) {
      throw SweepEvaluationError(
          e.what(), cfg.channel + " H" + std::to_string(row.hypergraph) + " " + row.param_name +
                        "=" + std::to_string(row.param_value));
    }
  });
  return rows;
}

namespace detail {

inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

/// RFC-4180-style CSV with a header row, '.' decimal separator and 17
/// significant digits. Unpopulated mode-dependent columns stay empty.
inline void write_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
  os << "channel,hypergraph,theta1,theta2,param_name,param_value,F_sim,F_closed,abs_err\n";
  for (const SweepRow& r : rows) {
    os << r.channel << ",H" << r.hypergraph << ',' << detail::format_g17(r.theta1) << ','
       << detail::format_g17(r.theta2) << ',' << r.param_name << ','
       << detail::format_g17(r.param_value) << ','
       << (r.f_sim ? detail::format_g17(*r.f_sim) : "") << ','
       << (r.f_closed ? detail::format_g17(*r.f_closed) : "") << ','
       << (r.abs_err ? detail::format_g17(*r.abs_err) : "") << '\n';
  }
}

}  // namespace qht
