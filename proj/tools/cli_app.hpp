#pragma once

// Command-line front end: `dho <command> [flags]` or `dho --config run.json`.
//
// Exit codes: 0 ok, 2 usage, 3 config schema, 4 domain/regime, 5 numerical
// (tail overflow, step underflow, coarse grid), 6 I/O. Errors go to stderr as
//   dho: error[<category>]: <message>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dho/dho.hpp"

namespace dho::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kSchema = 3,
  kDomain = 4,
  kNumerical = 5,
  kIo = 6,
};

inline constexpr const char* kOutputDirEnv = "DHO_OUTPUT_DIR";

struct RunConfig {
  std::string command;

  // oscillator
  double omega = 1.0;
  double alpha = 0.75;
  double hbar = 1.0;
  double K = 0.0;  // 0: default 1/(2 alpha)

  // shared selectors
  int n = 0;
  int n_max = 5;
  std::string coordinate = "t";
  double time = 0.0;
  double from = 0.0;
  double to = 10.0;
  int samples = 2001;

  // wavefunction grid
  double x_min = -10.0;
  double x_max = 10.0;
  int points = 2001;

  // dynamics
  double t_end = 20.0;
  int modes = 60;
  int m_max = 20;
  double rtol = 1e-9;
  double atol = 1e-12;
  double tail_limit = 1e-6;
  std::vector<int> modes_out;

  // qubit
  std::string kind = "phase";
  std::string unit = "reduced";
  double C = 1.0;
  double R = 1.0;
  double I0 = 1.0;
  double I = 0.0;
  double L = 0.0;
  double delta_x = 0.0;

  // figure
  std::string name;
  bool all = false;

  // output
  std::string output;
  std::string format = "csv";
  std::string output_dir;

  void validate() const {
    for (double v : {omega, alpha, hbar, K, time, from, to, x_min, x_max, t_end, rtol, atol,
                     tail_limit, C, R, I0, I, L, delta_x})
      if (!std::isfinite(v)) throw ConfigError("numeric parameters must be finite");
    if (format != "csv" && format != "json")
      throw ConfigError("output format must be 'csv' or 'json', got '" + format + "'");
    if (coordinate != "t" && coordinate != "tau")
      throw ConfigError("coordinate must be 't' or 'tau', got '" + coordinate + "'");
    if (samples < 1) throw ConfigError("samples must be >= 1");
    if (points < 2) throw ConfigError("points must be >= 2");
    if (!(to >= from)) throw ConfigError("range is empty: to < from");
    if (!(x_max > x_min)) throw ConfigError("x range is empty: x-max <= x-min");
    if (n < 0 || n_max < 0 || m_max < 0 || modes < 1)
      throw ConfigError("mode counts must be non-negative");
  }

  OscillatorParams oscillator() const {
    return OscillatorParams::make(alpha, omega, hbar,
                                  K != 0.0 ? std::optional<double>(K) : std::nullopt);
  }
};

namespace detail {

using Target = std::variant<double*, int*, std::string*, bool*, std::vector<int>*>;

// Every flag is registered once with CLI11 and once here, keyed by its long
// name, so a JSON config can fill whatever the command line left unset.
struct Registry {
  struct Entry {
    Target target;
    CLI::Option* option;
  };
  std::map<std::string, std::map<std::string, Entry>> by_command;

  template <class T>
  void add(CLI::App* sub, const std::string& name, T* target, const std::string& help) {
    CLI::Option* opt = nullptr;
    if constexpr (std::is_same_v<T, bool>) {
      opt = sub->add_flag("--" + name, *target, help);
    } else {
      opt = sub->add_option("--" + name, *target, help);
      if constexpr (!std::is_same_v<T, std::vector<int>>) opt->capture_default_str();
    }
    by_command[sub->get_name()][name] = {target, opt};
  }
};

inline std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return key;
}

inline void assign(const std::string& field, const Target& target, const nlohmann::json& v) {
  std::visit(
      [&](auto* ptr) {
        using T = std::remove_pointer_t<decltype(ptr)>;
        try {
          if constexpr (std::is_same_v<T, double>) {
            if (!v.is_number()) throw ConfigError("field '" + field + "' must be a number");
            *ptr = v.get<double>();
          } else if constexpr (std::is_same_v<T, int>) {
            if (!v.is_number_integer())
              throw ConfigError("field '" + field + "' must be an integer");
            *ptr = v.get<int>();
          } else if constexpr (std::is_same_v<T, bool>) {
            if (!v.is_boolean()) throw ConfigError("field '" + field + "' must be a boolean");
            *ptr = v.get<bool>();
          } else if constexpr (std::is_same_v<T, std::string>) {
            if (!v.is_string()) throw ConfigError("field '" + field + "' must be a string");
            *ptr = v.get<std::string>();
          } else {
            if (!v.is_array()) throw ConfigError("field '" + field + "' must be an integer array");
            std::vector<int> out;
            for (const auto& e : v) {
              if (!e.is_number_integer())
                throw ConfigError("field '" + field + "' must be an integer array");
              out.push_back(e.get<int>());
            }
            *ptr = std::move(out);
          }
        } catch (const nlohmann::json::exception& ex) {
          throw ConfigError("field '" + field + "': " + ex.what());
        }
      },
      target);
}

inline nlohmann::json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& ex) {
    // what() carries "at line L, column C".
    throw ConfigError("config '" + path + "': " + ex.what());
  }
}

class Output {
 public:
  Output(const RunConfig& cfg, std::string default_name, std::ostream& stdout_stream)
      : stdout_(stdout_stream) {
    std::string path = cfg.output.empty() ? std::move(default_name) : cfg.output;
    if (path == "-") return;
    std::filesystem::path p(path);
    if (p.is_relative()) {
      std::string dir = cfg.output_dir;
      if (dir.empty())
        if (const char* env = std::getenv(kOutputDirEnv)) dir = env;
      if (!dir.empty()) p = std::filesystem::path(dir) / p;
    }
    path_ = p;
  }

  void write(const std::string& text) {
    if (path_.empty()) {
      stdout_ << text;
      return;
    }
    std::error_code ec;
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path(), ec);
    std::ofstream f(path_, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write '" + path_.string() + "'");
    f << text;
    if (!f) throw IoError("write failed for '" + path_.string() + "'");
  }

  std::string describe() const { return path_.empty() ? "<stdout>" : path_.string(); }
  bool to_stdout() const { return path_.empty(); }

 private:
  std::ostream& stdout_;
  std::filesystem::path path_;
};

inline std::vector<double> time_samples(const RunConfig& cfg, double lo, double hi) {
  return quad::linspace(lo, hi, static_cast<std::size_t>(cfg.samples));
}

// Summary lines go to stdout unless the data itself does.
struct Summary {
  std::ostream& out;
  std::ostream& err;
  bool data_on_stdout;
  std::ostream& stream() { return data_on_stdout ? err : out; }
};

inline int cmd_spectrum(const RunConfig& cfg, Output& output, Summary summary) {
  const auto p = cfg.oscillator();
  const auto coord = cfg.coordinate == "t" ? TimeCoordinate::t : TimeCoordinate::tau;
  std::vector<EnergyLevel> levels;
  for (double at : time_samples(cfg, cfg.from, cfg.to)) {
    const auto l = ladder(p, cfg.n_max, coord, at);
    levels.insert(levels.end(), l.begin(), l.end());
  }
  std::ostringstream os;
  if (cfg.format == "csv") io::write_spectrum_csv(os, levels);
  else os << io::spectrum_json(levels).dump(1) << '\n';
  output.write(os.str());
  summary.stream() << "spectrum: " << levels.size() << " levels (units of hbar*omega = "
                   << io::format_double(p.hbar * p.omega) << ") -> " << output.describe() << '\n';
  return kOk;
}

inline int cmd_wavefunction(const RunConfig& cfg, Output& output, Summary summary) {
  const auto p = cfg.oscillator();
  const auto x = quad::linspace(cfg.x_min, cfg.x_max, static_cast<std::size_t>(cfg.points));
  const auto sample = cfg.coordinate == "t" ? sample_eigenfunction_t(p, cfg.n, x, cfg.time)
                                            : sample_eigenfunction_tau(p, cfg.n, x, cfg.time);
  std::ostringstream os;
  if (cfg.format == "csv") io::write_wavefunction_csv(os, sample);
  else os << io::wavefunction_json(sample).dump(1) << '\n';
  output.write(os.str());
  const auto norm = quadrature_norm(sample);
  summary.stream() << "wavefunction: n=" << cfg.n << " norm=" << io::format_double(norm.value)
                   << " width=" << io::format_double(position_width(sample))
                   << (norm.support_warning ? " WARNING: grid does not cover the support" : "")
                   << " -> " << output.describe() << '\n';
  return kOk;
}

inline int cmd_evolve(const RunConfig& cfg, Output& output, Summary summary) {
  const auto p = cfg.oscillator();
  IntegrateOptions opts;
  opts.tol = {cfg.rtol, cfg.atol};
  opts.tail_limit = cfg.tail_limit;
  opts.sample_times = time_samples(cfg, 0.0, cfg.t_end);
  const auto traj = integrate(p, cfg.n, cfg.t_end, cfg.modes, opts);
  std::ostringstream os;
  if (cfg.format == "csv") {
    io::write_trajectory_csv(os, traj.samples, cfg.modes_out);
  } else {
    nlohmann::json j{{"omega", p.omega},         {"alpha", p.alpha},
                     {"n0", cfg.n},              {"modes", cfg.modes},
                     {"max_tail", traj.max_tail}, {"tail_flagged", traj.tail_flagged},
                     {"samples", io::trajectory_json(traj.samples, cfg.modes_out)}};
    os << j.dump(1) << '\n';
  }
  output.write(os.str());
  double drift = 0.0;
  for (const auto& s : traj.samples) drift = std::max(drift, std::abs(s.norm_squared() - 1.0));
  summary.stream() << "evolve: regime=" << to_string(classify_regime(p))
                   << " steps=" << traj.stats.accepted << " rejected=" << traj.stats.rejected
                   << " max_norm_drift=" << io::format_double(drift)
                   << " max_tail=" << io::format_double(traj.max_tail) << " -> "
                   << output.describe() << '\n';
  if (traj.tail_flagged)
    summary.err << "dho: warning: truncation tail " << io::format_double(traj.max_tail)
                << " exceeds 1e-12; consider a larger --modes\n";
  return kOk;
}

inline int cmd_closedform(const RunConfig& cfg, Output& output, Summary summary) {
  const auto p = cfg.oscillator();
  if (cfg.n != 0 && cfg.n != 2) throw DomainError("closedform: --n must be 0 or 2");
  std::vector<ModeAmplitudes> traj;
  for (double t : time_samples(cfg, 0.0, cfg.t_end))
    traj.push_back(closed_form_amplitudes(p, cfg.n, cfg.m_max, t));
  std::ostringstream os;
  if (cfg.format == "csv") {
    io::write_trajectory_csv(os, traj, cfg.modes_out);
  } else {
    const auto k = xi_zeta(p);
    nlohmann::json j{{"omega", p.omega},
                     {"alpha", p.alpha},
                     {"n0", cfg.n},
                     {"regime", to_string(k.regime)},
                     {"xi", {k.xi.real(), k.xi.imag()}},
                     {"zeta", {k.zeta.real(), k.zeta.imag()}},
                     {"samples", io::trajectory_json(traj, cfg.modes_out)}};
    os << j.dump(1) << '\n';
  }
  output.write(os.str());
  summary.stream() << "closedform: regime=" << to_string(classify_regime(p))
                   << " samples=" << traj.size() << " -> " << output.describe() << '\n';
  return kOk;
}

inline int cmd_qubit(const RunConfig& cfg, Output& output, Summary summary) {
  RcsjParams q;
  if (cfg.unit == "reduced") q = RcsjParams::reduced();
  else if (cfg.unit == "SI" || cfg.unit == "si") q = RcsjParams::si_units();
  else throw ConfigError("unit must be 'reduced' or 'SI', got '" + cfg.unit + "'");
  QubitKind kind;
  if (cfg.kind == "phase") kind = QubitKind::phase;
  else if (cfg.kind == "flux") kind = QubitKind::flux;
  else throw ConfigError("kind must be 'phase' or 'flux', got '" + cfg.kind + "'");
  q.C = cfg.C;
  q.R = cfg.R;
  q.I0 = cfg.I0;
  q.I = cfg.I;
  q.L = cfg.L;
  q.delta_X = cfg.delta_x;

  const auto mapping =
      map_to_oscillator(q, kind, cfg.K != 0.0 ? std::optional<double>(cfg.K) : std::nullopt);
  const double K = mapping.oscillator.K;
  const double r_crit =
      kind == QubitKind::phase ? critical_resistance_phase(q) : critical_resistance_flux(q);

  nlohmann::json spectrum = nlohmann::json::array();
  std::ostringstream csv;
  csv << "t_or_tau,n,energy\n";
  for (double t : time_samples(cfg, cfg.from, cfg.to)) {
    for (int n = 0; n <= cfg.n_max; ++n) {
      const double e = kind == QubitKind::phase ? energy_phase(q, n, t, K) : energy_flux(q, n, t, K);
      spectrum.push_back({{"t", t}, {"n", n}, {"energy", e}});
      csv << io::format_double(t) << ',' << n << ',' << io::format_double(e) << '\n';
    }
  }
  if (cfg.format == "csv") {
    output.write(csv.str());
  } else {
    nlohmann::json j{
        {"kind", to_string(kind)},
        {"unit", to_string(q.units)},
        {"Omega_P", omega_p(q)},
        {"Omega", mapping.map.Omega},
        {"alpha_q", mapping.map.alpha_q},
        {"offset", mapping.map.offset},
        {"delta_shift", mapping.map.delta_shift},
        {"small_angle_warning", mapping.small_angle_warning},
        {"oscillator", {{"alpha", mapping.oscillator.alpha}, {"omega", mapping.oscillator.omega},
                        {"hbar", mapping.oscillator.hbar}, {"K", K}}},
        {"regime", to_string(classify_regime(mapping.oscillator))},
        {"critical_resistance", r_crit},
        {"spectrum", spectrum}};
    if (kind == QubitKind::flux) j["Omega_F"] = omega_f(q);
    output.write(j.dump(1) + "\n");
  }
  summary.stream() << "qubit: kind=" << to_string(kind)
                   << " regime=" << to_string(classify_regime(mapping.oscillator))
                   << " R_crit=" << io::format_double(r_crit) << " -> " << output.describe()
                   << '\n';
  if (mapping.small_angle_warning)
    summary.err << "dho: warning: |delta_shift| = " << io::format_double(mapping.map.delta_shift)
                << " is outside the small-angle regime (< 0.3)\n";
  return kOk;
}

inline int cmd_figure(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names;
  if (cfg.all) {
    for (auto n : figures::kNames) names.emplace_back(n);
  } else {
    if (cfg.name.empty()) throw CLI::ValidationError("figure: give a figure name or --all");
    if (!figures::is_known(cfg.name))
      throw CLI::ValidationError("figure: unknown figure '" + cfg.name + "'");
    names.push_back(cfg.name);
  }
  for (const auto& name : names) {
    RunConfig one = cfg;
    if (names.size() > 1 || one.output.empty()) one.output = name + ".csv";
    Output o(one, name + ".csv", out);
    o.write(figures::figure_csv(name));
    (o.to_stdout() ? err : out) << "figure: " << name << " -> " << o.describe() << '\n';
  }
  return kOk;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  RunConfig cfg;
  CLI::App app{"Damped harmonic oscillator: time-warp quantization toolkit", "dho"};
  app.require_subcommand(0, 1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON run configuration; flags win on conflict");

  detail::Registry reg;
  auto oscillator_flags = [&](CLI::App* s) {
    reg.add(s, "omega", &cfg.omega, "angular frequency");
    reg.add(s, "alpha", &cfg.alpha, "damping coefficient");
    reg.add(s, "hbar", &cfg.hbar, "action scale");
    reg.add(s, "K", &cfg.K, "warp constant (0: 1/(2 alpha))");
  };
  auto output_flags = [&](CLI::App* s) {
    reg.add(s, "output", &cfg.output, "output file ('-' for stdout)");
    reg.add(s, "format", &cfg.format, "csv or json");
    reg.add(s, "output-dir", &cfg.output_dir, "directory for relative output paths");
  };

  auto* spectrum = app.add_subcommand("spectrum", "energy ladder E_n over a time range");
  oscillator_flags(spectrum);
  reg.add(spectrum, "n-max", &cfg.n_max, "highest level");
  reg.add(spectrum, "coordinate", &cfg.coordinate, "t or tau");
  reg.add(spectrum, "from", &cfg.from, "range start");
  reg.add(spectrum, "to", &cfg.to, "range end");
  reg.add(spectrum, "samples", &cfg.samples, "number of time points");
  output_flags(spectrum);

  auto* wave = app.add_subcommand("wavefunction", "eigenfunction psi_n(x) on a grid");
  oscillator_flags(wave);
  reg.add(wave, "n", &cfg.n, "quantum number");
  reg.add(wave, "coordinate", &cfg.coordinate, "t or tau");
  reg.add(wave, "time", &cfg.time, "time value in the chosen coordinate");
  reg.add(wave, "x-min", &cfg.x_min, "grid start");
  reg.add(wave, "x-max", &cfg.x_max, "grid end");
  reg.add(wave, "points", &cfg.points, "grid points");
  output_flags(wave);

  auto* evolve = app.add_subcommand("evolve", "integrate the coefficient equations from |n>");
  oscillator_flags(evolve);
  reg.add(evolve, "n", &cfg.n, "initial Fock state");
  reg.add(evolve, "t-end", &cfg.t_end, "final time");
  reg.add(evolve, "modes", &cfg.modes, "truncation M");
  reg.add(evolve, "samples", &cfg.samples, "output time points");
  reg.add(evolve, "rtol", &cfg.rtol, "relative tolerance");
  reg.add(evolve, "atol", &cfg.atol, "absolute tolerance");
  reg.add(evolve, "tail-limit", &cfg.tail_limit, "abort when the top-mode occupation exceeds this");
  reg.add(evolve, "modes-out", &cfg.modes_out, "modes to export (default: all)");
  output_flags(evolve);

  auto* closed = app.add_subcommand("closedform", "closed-form amplitudes from |0> or |2>");
  oscillator_flags(closed);
  reg.add(closed, "n", &cfg.n, "initial state (0 or 2)");
  reg.add(closed, "t-end", &cfg.t_end, "final time");
  reg.add(closed, "samples", &cfg.samples, "output time points");
  reg.add(closed, "m-max", &cfg.m_max, "highest mode");
  reg.add(closed, "modes-out", &cfg.modes_out, "modes to export (default: all)");
  output_flags(closed);

  auto* qubit = app.add_subcommand("qubit", "RCSJ phase/flux qubit spectrum and critical R");
  reg.add(qubit, "kind", &cfg.kind, "phase or flux");
  reg.add(qubit, "unit", &cfg.unit, "reduced or SI");
  reg.add(qubit, "C", &cfg.C, "capacitance");
  reg.add(qubit, "R", &cfg.R, "resistance");
  reg.add(qubit, "I0", &cfg.I0, "critical current");
  reg.add(qubit, "I", &cfg.I, "bias current (phase)");
  reg.add(qubit, "L", &cfg.L, "inductance (flux)");
  reg.add(qubit, "delta-x", &cfg.delta_x, "external flux parameter (flux)");
  reg.add(qubit, "K", &cfg.K, "warp constant (0: CR)");
  reg.add(qubit, "n-max", &cfg.n_max, "highest level");
  reg.add(qubit, "from", &cfg.from, "range start");
  reg.add(qubit, "to", &cfg.to, "range end");
  reg.add(qubit, "samples", &cfg.samples, "number of time points");
  output_flags(qubit);

  auto* figure = app.add_subcommand("figure", "regenerate a reference figure data set");
  figure->add_option("name", cfg.name, "fig1a fig1b fig2a fig2b fig2c fig3a fig3b fig3c");
  reg.add(figure, "all", &cfg.all, "all eight presets");
  reg.add(figure, "output", &cfg.output, "output file ('-' for stdout)");
  reg.add(figure, "output-dir", &cfg.output_dir, "directory for relative output paths");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "dho: error[usage]: " << e.what() << '\n';
    return kUsage;
  }

  try {
    std::string command;
    for (auto* sub : app.get_subcommands()) command = sub->get_name();

    nlohmann::json config;
    if (!config_path.empty()) {
      config = detail::load_config(config_path);
      if (!config.is_object()) throw ConfigError("config root must be an object");
      for (const auto& [key, _] : config.items())
        if (key != "command" && key != "params" && key != "output")
          throw ConfigError("unknown field '" + key + "'");
      if (command.empty()) {
        if (!config.contains("command") || !config["command"].is_string())
          throw ConfigError("field 'command' missing or not a string");
        command = config["command"].get<std::string>();
      }
    }
    if (command.empty()) throw CLI::ValidationError("no command given (see --help)");
    if (!reg.by_command.contains(command))
      throw ConfigError("unknown command '" + command + "'");

    if (!config.is_null()) {
      const auto& entries = reg.by_command[command];
      auto apply = [&](const std::string& key, const nlohmann::json& value,
                       const std::string& where) {
        const std::string name = detail::normalize_key(key);
        auto it = entries.find(name);
        if (it == entries.end())
          throw ConfigError("unknown field '" + where + key + "' for command '" + command + "'");
        if (it->second.option->count() > 0) return;  // flag wins
        detail::assign(where + key, it->second.target, value);
      };
      if (config.contains("params")) {
        if (!config["params"].is_object()) throw ConfigError("field 'params' must be an object");
        for (const auto& [key, value] : config["params"].items()) {
          if (command == "figure" && key == "name") {
            if (!value.is_string()) throw ConfigError("field 'params.name' must be a string");
            if (cfg.name.empty()) cfg.name = value.get<std::string>();
            continue;
          }
          apply(key, value, "params.");
        }
      }
      if (config.contains("output")) {
        if (!config["output"].is_object()) throw ConfigError("field 'output' must be an object");
        for (const auto& [key, value] : config["output"].items()) {
          const std::string mapped = key == "path" ? "output" : key == "dir" ? "output-dir" : key;
          apply(mapped, value, "output.");
        }
      }
    }
    cfg.command = command;
    cfg.validate();

    if (command == "figure") return detail::cmd_figure(cfg, out, err);

    const std::string ext = cfg.format == "json" ? ".json" : ".csv";
    detail::Output output(cfg, command + ext, out);
    detail::Summary summary{out, err, output.to_stdout()};
    if (command == "spectrum") return detail::cmd_spectrum(cfg, output, summary);
    if (command == "wavefunction") return detail::cmd_wavefunction(cfg, output, summary);
    if (command == "evolve") return detail::cmd_evolve(cfg, output, summary);
    if (command == "closedform") return detail::cmd_closedform(cfg, output, summary);
    if (command == "qubit") return detail::cmd_qubit(cfg, output, summary);
    throw ConfigError("unknown command '" + command + "'");
  } catch (const CLI::Error& e) {
    err << "dho: error[usage]: " << e.what() << '\n';
    return kUsage;
  } catch (const ConfigError& e) {
    err << "dho: error[" << e.category() << "]: " << e.what() << '\n';
    return kSchema;
  } catch (const IoError& e) {
    err << "dho: error[" << e.category() << "]: " << e.what() << '\n';
    return kIo;
  } catch (const TailOverflowError& e) {
    err << "dho: error[" << e.category() << "]: " << e.what() << '\n';
    return kNumerical;
  } catch (const StepSizeUnderflowError& e) {
    err << "dho: error[" << e.category() << "]: " << e.what() << '\n';
    return kNumerical;
  } catch (const GridTooCoarseError& e) {
    err << "dho: error[" << e.category() << "]: " << e.what() << '\n';
    return kNumerical;
  } catch (const Error& e) {
    err << "dho: error[" << e.category() << "]: " << e.what() << '\n';
    return kDomain;
  }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(std::move(args), out, err);
}

}  // namespace dho::cli
