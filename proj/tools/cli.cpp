#include "cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <optional>
#include <stdexcept>

#include "config.hpp"
#include "csm/analytic_oracle.hpp"
#include "csm/metrology.hpp"
#include "csm/protocol.hpp"
#include "io.hpp"

namespace csm::cli {

namespace {

using nlohmann::json;

constexpr const char* kCommands[] = {"evolve", "sweep", "qfi", "qfi-scan", "scaling",
                                     "oracle-check"};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string backend = "auto";
  std::string out;
  int threads = 0;
  std::string config;
};

struct EvolveOpts {
  int n_sat = 0;
  std::string lambda, g, g_sat, g_c;
  int periods = 100;
  bool half_periods = false;
  std::string init = "+x";
  std::string init_central = "+x";
};

struct SweepOpts {
  int n_sat = 0;
  std::string lambda = "0..4pi:101";
  std::string g = "0..2pi:101";
  std::string quantity = "M_bar";
  int m_window = kDefaultMagnetizationWindow;
  int o_window = kDefaultOrderWindow;
  int z_stride = 0;
  int z_count = 0;
  int qfi_periods = 100;
  double delta = kDefaultQfiDelta;
};

struct QfiOpts {
  std::string n_sat;
  std::string lambda = "pi";
  std::string g = "pi/2";
  std::string periods = "100";
  double delta = kDefaultQfiDelta;
  bool fit = false;
};

struct ScanOpts {
  int n_sat = 0;
  std::string lambda = "0..2pi:101";
  std::string g = "pi/2";
  int periods = 100;
  double delta = kDefaultQfiDelta;
};

struct OracleOpts {
  std::string n_sat = "4..13";
  double tol = 1e-10;
};

struct Outcome {
  std::string summary;
  json config;
  int warnings = 0;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_outputs(const std::string& command, const std::string& path, const std::string& csv,
                   const Outcome& outcome, const json& extra = json::object()) {
  write_file_atomic(path, csv);
  json meta = {{"command", command},
               {"version", CSM_VERSION},
               {"created_utc", utc_timestamp()},
               {"seed", nullptr},
               {"output", path},
               {"config", outcome.config},
               {"conventions",
                {{"period", 1},
                 {"angles", "radians"},
                 {"entropy", "nats"},
                 {"magnetization", "sum of <S^x>; per-spin values divide by n_sat"},
                 {"fields", "g_s = g_c = g unless given separately"},
                 {"G", "det(F)/tr(F)"}}},
               {"warnings", outcome.warnings}};
  for (auto it = extra.begin(); it != extra.end(); ++it) meta[it.key()] = it.value();
  write_file_atomic(path + ".json", meta.dump(2) + "\n");
}

std::string out_path(const Common& c, const std::string& fallback) {
  return c.out.empty() ? fallback : c.out;
}

std::string fmt(double v) { return format_double(v); }

std::string brief(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

BackendChoice backend_of(const Common& c) {
  try {
    return parse_backend_choice(c.backend);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void set_threads(const Common& c) {
  int n = c.threads;
  if (n == 0) {
    if (const char* env = std::getenv("CSM_THREADS"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (*end != '\0' || v < 1) throw UsageError("CSM_THREADS must be a positive integer");
      n = static_cast<int>(v);
    }
  }
  if (n < 0) throw UsageError("--threads must be positive");
  if (n > 0) omp_set_num_threads(n);
}

// --- evolve -----------------------------------------------------------------

Outcome run_evolve(const EvolveOpts& o, const Common& c) {
  DriveParams p;
  p.lambda = parse_angle(o.lambda);
  const double g = o.g.empty() ? 0.0 : parse_angle(o.g);
  if (o.g.empty() && (o.g_sat.empty() || o.g_c.empty())) {
    throw UsageError("give --g, or both --g-sat and --g-c");
  }
  if (!o.g_sat.empty()) {
    const std::vector<double> fields = parse_angle_list(o.g_sat);
    if (fields.size() == 1) {
      p.g_sat = fields.front();
    } else {
      p.g_sat = fields;
    }
  } else {
    p.g_sat = g;
  }
  p.g_c = o.g_c.empty() ? g : parse_angle(o.g_c);
  const Backend backend = resolve_backend(backend_of(c), p, o.n_sat);
  const Axis sat = parse_axis(o.init);
  const Axis cen = parse_axis(o.init_central);
  const SpinState init = new_product_state(o.n_sat, sat, cen, backend);
  const std::string label = std::string(axis_name(sat)) + "^N " + std::string(axis_name(cen));
  const Trajectory traj = run_trajectory(p, init, o.periods, o.half_periods, label);

  CsvTable csv({"period", "time", "half_period", "M_sat", "M_sat_per_spin", "M_central", "entropy",
                "fidelity_to_initial"});
  for (const Observation& r : traj.records) {
    csv.add_row({std::to_string(r.period_index), fmt(r.time()), r.half_period ? "1" : "0",
                 fmt(r.m_sat), fmt(r.m_sat_per_spin), fmt(r.m_central), fmt(r.entropy),
                 fmt(r.fidelity_to_initial)});
  }
  const auto pm = detect_period(traj.m_sat_series(), 1e-8);
  const auto pc = detect_period(traj.m_central_series(), 1e-8);
  auto show = [](std::optional<int> v) { return v ? std::to_string(*v) : std::string("none"); };

  Outcome out;
  json g_sat_json = p.satellites_uniform() ? json(p.satellite_field(0))
                                           : json(std::get<std::vector<double>>(p.g_sat));
  out.config = {{"n_sat", o.n_sat},       {"lambda", p.lambda},         {"g_sat", g_sat_json},
                {"g_c", p.g_c},           {"periods", o.periods},       {"half_periods", o.half_periods},
                {"initial", label},       {"backend", backend_name(backend)}};
  const std::string path = out_path(c, "evolve.csv");
  write_outputs("evolve", path, csv.str(), out);
  out.summary = "evolve: n_sat=" + std::to_string(o.n_sat) + " periods=" +
                std::to_string(o.periods) + " backend=" + backend_name(backend) +
                " records=" + std::to_string(traj.records.size()) + " period(M)=" + show(pm) +
                " period(M_c)=" + show(pc) + " -> " + path;
  return out;
}

// --- sweep ------------------------------------------------------------------

Outcome run_sweep(const SweepOpts& o, const Common& c) {
  SweepSpec spec;
  spec.lambda = parse_angle_range(o.lambda);
  spec.g = parse_angle_range(o.g);
  spec.n_sat = o.n_sat;
  try {
    spec.quantity = parse_sweep_quantity(o.quantity);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  spec.backend = backend_of(c);
  spec.m_window = o.m_window;
  spec.o_window = o.o_window;
  if (o.z_stride > 0 || o.z_count > 0) {
    const ZWindow def = default_z_window(o.n_sat);
    spec.z_window = ZWindow{o.z_stride > 0 ? o.z_stride : def.stride,
                            o.z_count > 0 ? o.z_count : def.count};
  }
  spec.qfi_periods = o.qfi_periods;
  spec.qfi_delta = o.delta;
  if (spec.backend == BackendChoice::Symmetric) {
    // Fields are uniform in a sweep, so the request is always valid.
    spec.backend = BackendChoice::Symmetric;
  }
  const SweepResult result = sweep_grid(spec);

  CsvTable csv({"lambda", "g", "n_sat", "quantity", "value", "error"});
  for (const SweepCell& cell : result.cells) {
    csv.add_row({fmt(cell.lambda), fmt(cell.g), std::to_string(spec.n_sat),
                 sweep_quantity_name(spec.quantity), cell.value ? fmt(*cell.value) : "",
                 cell.error});
  }
  const ZWindow zw = spec.z_window.value_or(default_z_window(spec.n_sat));
  Outcome out;
  out.warnings = result.failures();
  out.config = {{"n_sat", spec.n_sat},
                {"lambda", {{"start", spec.lambda.start}, {"stop", spec.lambda.stop},
                            {"count", spec.lambda.count}}},
                {"g", {{"start", spec.g.start}, {"stop", spec.g.stop}, {"count", spec.g.count}}},
                {"quantity", sweep_quantity_name(spec.quantity)},
                {"backend", backend_choice_name(spec.backend)},
                {"m_window", spec.m_window},
                {"o_window", spec.o_window},
                {"z_stride", zw.stride},
                {"z_count", zw.count},
                {"qfi_periods", spec.qfi_periods},
                {"delta", spec.qfi_delta},
                {"order", "row-major, lambda outer"}};
  const std::string path = out_path(c, "sweep.csv");
  write_outputs("sweep", path, csv.str(), out);
  out.summary = "sweep: " + std::to_string(result.cells.size()) + " cells of " +
                sweep_quantity_name(spec.quantity) + " n_sat=" + std::to_string(spec.n_sat) +
                " warnings=" + std::to_string(out.warnings) + " -> " + path;
  return out;
}

// --- qfi / scaling ------------------------------------------------------------

void add_qfi_row(CsvTable& csv, const QfiMatrix& q) {
  csv.add_row({fmt(q.lambda), fmt(q.g), std::to_string(q.n_periods), std::to_string(q.n_sat),
                fmt(q.f_ll), fmt(q.f_gg), fmt(q.f_lg), fmt(q.f_gl), fmt(q.g_bound), fmt(q.delta),
                q.singular ? "1" : "0", backend_name(q.backend)});
}

const std::vector<std::string> kQfiHeader = {"lambda", "g",   "n_periods", "n_sat",
                                             "F_ll",   "F_gg", "F_lg",     "F_gl",
                                             "G",      "delta", "singular", "backend"};

Outcome run_qfi(const QfiOpts& o, const Common& c, bool force_fit, const std::string& command) {
  if (o.n_sat.empty()) throw UsageError("--n-sat is required");
  const std::vector<int> sizes = parse_int_list(o.n_sat);
  const std::vector<int> periods = parse_int_list(o.periods);
  const double lambda = parse_angle(o.lambda);
  const double g = parse_angle(o.g);
  const BackendChoice backend = backend_of(c);
  const bool fit = o.fit || force_fit;
  std::string axis;
  if (fit) {
    if (sizes.size() > 1 && periods.size() == 1) {
      axis = "n_sat";
    } else if (periods.size() > 1 && sizes.size() == 1) {
      axis = "periods";
    } else {
      throw UsageError("a fit needs a range in exactly one of --n-sat and --periods");
    }
  }

  std::vector<QfiMatrix> results;
  CsvTable csv(kQfiHeader);
  for (const int n_sat : sizes) {
    for (const int n : periods) {
      results.push_back(qfi_matrix(lambda, g, n, n_sat, o.delta, backend));
      add_qfi_row(csv, results.back());
    }
  }

  Outcome out;
  out.config = {{"n_sat", sizes},  {"periods", periods},        {"lambda", lambda},
                {"g", g},          {"delta", o.delta},          {"backend", backend_choice_name(backend)},
                {"fit", fit}};
  const std::string path = out_path(c, command == "scaling" ? "scaling.csv" : "qfi.csv");
  json extra = json::object();
  std::string fit_text;
  if (fit) {
    std::vector<ScalingPoint> points;
    for (const QfiMatrix& q : results) {
      points.push_back({axis == "n_sat" ? static_cast<double>(q.n_sat)
                                        : static_cast<double>(q.n_periods),
                        q.g_bound});
    }
    const ScalingFit f = scaling_fit(points);
    json pts = json::array();
    for (const ScalingPoint& pt : f.points) pts.push_back({{"size", pt.size}, {"value", pt.value}});
    json fit_json = {{"axis", axis},           {"exponent", f.exponent},
                     {"prefactor", f.prefactor}, {"r_squared", f.r_squared},
                     {"reliable", f.reliable},   {"points", pts}};
    write_file_atomic(path + ".fit.json", fit_json.dump(2) + "\n");
    extra["fit"] = fit_json;
    const char* name = axis == "n_sat" ? "beta" : "alpha";
    fit_text = f.reliable ? std::string(" ") + name + "=" + brief(f.exponent) + " r2=" +
                                brief(f.r_squared)
                          : std::string(" ") + name + " not asserted (r2=" + brief(f.r_squared) +
                                " < " + brief(kReliableFit) + ")";
  }
  write_outputs(command, path, csv.str(), out, extra);
  out.summary = command + ": " + std::to_string(results.size()) + " points" + fit_text + " -> " +
                path;
  if (results.size() == 1) out.summary += " G=" + brief(results.front().g_bound);
  return out;
}

// --- qfi-scan -------------------------------------------------------------------

Outcome run_scan(const ScanOpts& o, const Common& c) {
  const std::vector<double> lambdas = parse_angle_range(o.lambda).values();
  const double g = parse_angle(o.g);
  const BackendChoice backend = backend_of(c);
  const std::vector<QfiScanRow> rows =
      qfi_lambda_scan(lambdas, g, o.periods, o.n_sat, o.delta, backend);

  std::vector<std::string> header = kQfiHeader;
  header.insert(header.end(), {"Z_bar", "regime", "error"});
  CsvTable csv(header);
  std::vector<double> gs;
  int failures = 0;
  double best = 0.0, best_lambda = 0.0;
  for (const QfiScanRow& r : rows) {
    if (!r.ok) {
      ++failures;
      std::vector<std::string> fields(header.size());
      fields[0] = fmt(r.lambda);
      fields[1] = fmt(g);
      fields[2] = std::to_string(o.periods);
      fields[3] = std::to_string(o.n_sat);
      fields.back() = r.error;
      csv.add_row(fields);
      continue;
    }
    const QfiMatrix& q = r.qfi;
    std::vector<std::string> fields = {fmt(q.lambda), fmt(q.g), std::to_string(q.n_periods),
                                       std::to_string(q.n_sat), fmt(q.f_ll), fmt(q.f_gg),
                                       fmt(q.f_lg), fmt(q.f_gl), fmt(q.g_bound), fmt(q.delta),
                                       q.singular ? "1" : "0", backend_name(q.backend),
                                       fmt(r.z_bar), r.ho_dtc ? "HO-DTC" : "non-DTC", ""};
    csv.add_row(fields);
    gs.push_back(q.g_bound);
    if (q.g_bound > best) {
      best = q.g_bound;
      best_lambda = q.lambda;
    }
  }
  Outcome out;
  out.warnings = failures;
  out.config = {{"n_sat", o.n_sat},
                {"lambda", lambdas},
                {"g", g},
                {"periods", o.periods},
                {"delta", o.delta},
                {"backend", backend_choice_name(backend)},
                {"regime_threshold_abs_Z_bar", kHoDtcThreshold}};
  const std::string path = out_path(c, "qfi_scan.csv");
  write_outputs("qfi-scan", path, csv.str(), out);
  out.summary = "qfi-scan: " + std::to_string(rows.size()) + " points, " +
                std::to_string(count_local_extrema(gs)) + " local extrema, max G=" + brief(best) +
                " at lambda=" + brief(best_lambda) + " warnings=" + std::to_string(failures) +
                " -> " + path;
  return out;
}

// --- oracle-check ---------------------------------------------------------------

Outcome run_oracle(const OracleOpts& o, const Common& c) {
  const std::vector<int> sizes = parse_int_list(o.n_sat);
  const BackendChoice backend = backend_of(c);
  const std::vector<OracleCheckRow> rows = oracle_check(sizes, o.tol, backend);
  CsvTable csv({"n_sat", "class", "time", "half_periods", "formula", "fidelity",
                "tabulated_fidelity", "entropy", "bell_cat", "pass"});
  int passed = 0, tabulated = 0;
  for (const OracleCheckRow& r : rows) {
    csv.add_row({std::to_string(r.n_sat), "4n+" + std::to_string(r.n_class),
                 format_half_periods(r.half_periods), std::to_string(r.half_periods), r.formula,
                 fmt(r.fidelity), fmt(r.tabulated_fidelity), fmt(r.entropy),
                 r.bell_cat ? "1" : "0", r.pass ? "1" : "0"});
    passed += r.pass ? 1 : 0;
    tabulated += std::abs(1.0 - r.tabulated_fidelity) <= o.tol ? 1 : 0;
  }
  Outcome out;
  out.config = {{"n_sat", sizes},
                {"tol", o.tol},
                {"backend", backend_choice_name(backend)},
                {"lambda", kPi},
                {"g", kPi / 2.0},
                {"initial", "+x^N +x"}};
  const std::string path = out_path(c, "oracle_check.csv");
  write_outputs("oracle-check", path, csv.str(), out,
                {{"tables", {{"pass_fail", "derived"}, {"reported", "tabulated"}}}});
  const std::string counts = std::to_string(passed) + "/" + std::to_string(rows.size());
  out.summary = "oracle-check: " + counts + " pass; tabulated forms match " +
                std::to_string(tabulated) + "/" + std::to_string(rows.size()) + " -> " + path;
  if (passed != static_cast<int>(rows.size())) throw CheckFailed(out.summary);
  return out;
}

void error_record(std::ostream& err, const std::string& kind, const std::string& message,
                  const std::string& command) {
  json rec = {{"error", {{"kind", kind}, {"message", message}, {"command", command}}}};
  err << rec.dump() << "\n";
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  std::string command;
  try {
    // Config file entries are placed before the command-line options so that
    // flags given on the command line win.
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
      if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
    }
    auto is_command = [](const std::string& a) {
      return std::find(std::begin(kCommands), std::end(kCommands), a) != std::end(kCommands);
    };
    auto pos = std::find_if(args.begin(), args.end(), is_command);
    if (!config_path.empty()) {
      ConfigFileArgs file;
      try {
        file = read_config_file(config_path);
      } catch (const CLI::Error& e) {
        throw UsageError("cannot read config file " + config_path + ": " + e.what());
      }
      if (pos == args.end()) {
        if (file.command.empty()) throw UsageError("no subcommand given");
        args.insert(args.begin(), file.command);
        pos = args.begin();
      }
      args.insert(pos + 1, file.tokens.begin(), file.tokens.end());
      pos = std::find_if(args.begin(), args.end(), is_command);
    }
    if (pos != args.end()) command = *pos;

    CLI::App app{"Driven central spin simulator", "csm"};
    app.set_version_flag("--version", CSM_VERSION);
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    Common common;
    auto add_common = [&](CLI::App* sub) {
      sub->add_option("--backend", common.backend, "auto, full or symmetric")
          ->capture_default_str();
      sub->add_option("--out", common.out, "CSV output path (a .json sidecar is written next to it)");
      sub->add_option("--threads", common.threads, "worker threads (default: CSM_THREADS or all)");
      sub->add_option("--config", common.config, "key=value file; command-line flags win");
    };

    EvolveOpts ev;
    auto* evolve = app.add_subcommand("evolve", "stroboscopic trajectory");
    evolve->add_option("--n-sat", ev.n_sat, "satellite count")->required();
    evolve->add_option("--lambda", ev.lambda, "coupling (radians or multiples of pi)")->required();
    evolve->add_option("--g", ev.g, "field on every spin");
    evolve->add_option("--g-sat", ev.g_sat, "satellite field, or a comma list, one per satellite");
    evolve->add_option("--g-c", ev.g_c, "central-spin field");
    evolve->add_option("--periods", ev.periods)->capture_default_str();
    evolve->add_flag("--half-periods", ev.half_periods, "also record the state after each kick");
    evolve->add_option("--init", ev.init, "satellite axis")->capture_default_str();
    evolve->add_option("--init-central", ev.init_central, "central axis")->capture_default_str();
    add_common(evolve);

    SweepOpts sw;
    auto* sweep = app.add_subcommand("sweep", "phase-diagram grid with g_s = g_c = g");
    sweep->add_option("--n-sat", sw.n_sat)->required();
    sweep->add_option("--lambda", sw.lambda, "range a..b:count")->capture_default_str();
    sweep->add_option("--g", sw.g, "range a..b:count")->capture_default_str();
    sweep->add_option("--quantity", sw.quantity, "M_bar, O_bar, Z_bar or G")->capture_default_str();
    sweep->add_option("--m-window", sw.m_window)->capture_default_str();
    sweep->add_option("--o-window", sw.o_window)->capture_default_str();
    sweep->add_option("--z-stride", sw.z_stride, "default 6 (even n_sat) or 12 (odd)");
    sweep->add_option("--z-count", sw.z_count, "default 200 (even n_sat) or 100 (odd)");
    sweep->add_option("--qfi-periods", sw.qfi_periods)->capture_default_str();
    sweep->add_option("--delta", sw.delta)->capture_default_str();
    add_common(sweep);

    QfiOpts qf;
    auto* qfi = app.add_subcommand("qfi", "Fisher information matrix and G");
    auto add_qfi = [&](CLI::App* sub) {
      sub->add_option("--n-sat", qf.n_sat, "integer, a..b[:step] or list")->required();
      sub->add_option("--lambda", qf.lambda)->capture_default_str();
      sub->add_option("--g", qf.g)->capture_default_str();
      sub->add_option("--periods", qf.periods, "integer, a..b[:step] or list")
          ->capture_default_str();
      sub->add_option("--delta", qf.delta)->capture_default_str();
      add_common(sub);
    };
    add_qfi(qfi);
    qfi->add_flag("--fit", qf.fit, "log-log fit over the ranged argument");
    auto* scaling = app.add_subcommand("scaling", "G scaling exponent over n_sat or periods");
    add_qfi(scaling);

    ScanOpts sc;
    auto* scan = app.add_subcommand("qfi-scan", "G against lambda at fixed g");
    scan->add_option("--n-sat", sc.n_sat)->required();
    scan->add_option("--lambda", sc.lambda, "range a..b:count")->capture_default_str();
    scan->add_option("--g", sc.g)->capture_default_str();
    scan->add_option("--periods", sc.periods)->capture_default_str();
    scan->add_option("--delta", sc.delta)->capture_default_str();
    add_common(scan);

    OracleOpts oc;
    auto* oracle = app.add_subcommand("oracle-check", "compare simulation with closed forms");
    oracle->add_option("--n-sat", oc.n_sat)->capture_default_str();
    oracle->add_option("--tol", oc.tol)->capture_default_str();
    add_common(oracle);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::CallForVersion&) {
      out << CSM_VERSION << "\n";
      return 0;
    } catch (const CLI::ParseError& e) {
      throw UsageError(e.what());
    }

    set_threads(common);
    Outcome outcome;
    if (evolve->parsed()) {
      outcome = run_evolve(ev, common);
    } else if (sweep->parsed()) {
      outcome = run_sweep(sw, common);
    } else if (qfi->parsed()) {
      outcome = run_qfi(qf, common, false, "qfi");
    } else if (scaling->parsed()) {
      outcome = run_qfi(qf, common, true, "scaling");
    } else if (scan->parsed()) {
      outcome = run_scan(sc, common);
    } else {
      outcome = run_oracle(oc, common);
    }
    out << outcome.summary << "\n";
    return 0;
  } catch (const UsageError& e) {
    error_record(err, "usage", e.what(), command);
    return 2;
  } catch (const CheckFailed& e) {
    error_record(err, "check_failed", e.what(), command);
    return 1;
  } catch (const std::invalid_argument& e) {
    error_record(err, "invalid_argument", e.what(), command);
    return 2;
  } catch (const std::exception& e) {
    error_record(err, "runtime", e.what(), command);
    return 1;
  }
}

}  // namespace csm::cli
