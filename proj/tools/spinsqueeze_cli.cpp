// Command-line front end: figure presets, config-driven sweeps, two-atom
// closed-form tables, and the oracle selfcheck.
//
// Exit codes: 0 success, 1 config error, 2 selfcheck failure,
//             3 sweep produced only degenerate rows.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinsqueeze/config.hpp"
#include "spinsqueeze/presets.hpp"
#include "spinsqueeze/selfcheck.hpp"

namespace {

using namespace spinsq;

void write_output(const std::string& path, const std::string& body) {
  if (path == "-" || path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::config_error, "cannot open output file '" + path + "'");
  out << body;
}

nlohmann::json json_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

std::string fig1_json(const std::vector<Fig1Row>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Fig1Row& r : rows)
    arr.push_back({{"eta", r.eta},
                   {"s_xprime", json_or_null(r.s_x)},
                   {"s_yprime", json_or_null(r.s_y)},
                   {"s_a_analytic", json_or_null(r.s_a)},
                   {"s_b_analytic", json_or_null(r.s_b)},
                   {"status", r.status == RowStatus::ok ? "ok" : "mean_spin_vanishes"}});
  return arr.dump(2) + "\n";
}

std::string fig3_json(const Fig3Data& data) {
  nlohmann::json doc;
  doc["eta"] = data.eta;
  doc["curves"] = nlohmann::json::array();
  for (const Fig3Curve& c : data.curves) {
    nlohmann::json jc;
    jc["j"] = c.two_j / 2.0;
    jc["minima_count"] = c.minima_count;
    nlohmann::json sx = nlohmann::json::array(), sy = nlohmann::json::array(),
                   st = nlohmann::json::array();
    for (size_t i = 0; i < c.s_x.size(); ++i) {
      sx.push_back(json_or_null(c.s_x[i]));
      sy.push_back(json_or_null(c.s_y[i]));
      st.push_back(c.status[i] == RowStatus::ok ? "ok" : "mean_spin_vanishes");
    }
    jc["s_xprime"] = std::move(sx);
    jc["s_yprime"] = std::move(sy);
    jc["status"] = std::move(st);
    doc["curves"].push_back(std::move(jc));
  }
  return doc.dump(2) + "\n";
}

std::string twoatom_json(const std::vector<TwoAtomRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const TwoAtomRow& r : rows)
    arr.push_back({{"xi", r.xi},
                   {"eta", r.eta},
                   {"var_xprime", json_or_null(r.var.var_x)},
                   {"var_yprime", json_or_null(r.var.var_y)},
                   {"mean_spin_sq", json_or_null(r.var.mean_spin_sq)},
                   {"s_a", json_or_null(r.s_a)},
                   {"s_b", json_or_null(r.s_b)},
                   {"status", r.pole ? "pole" : "ok"}});
  return arr.dump(2) + "\n";
}

struct CommonOpts {
  std::string out = "-";
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--out", opts.out, "Output path ('-' = stdout)");
  cmd->add_option("--format", opts.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collective-spin squeezing simulator"};
  app.require_subcommand(1);

  // fig1
  CommonOpts fig1_opts;
  CLI::App* fig1 = app.add_subcommand(
      "fig1", "Two-atom squeezing vs eta (theta = 0, eta in [0, pi/2) step pi/512)");
  add_common(fig1, fig1_opts);

  // fig2
  CommonOpts fig2_opts;
  std::string fig2_eta = "0.05pi", fig2_phi = "0";
  int fig2_jmax = 25, fig2_workers = 1;
  CLI::App* fig2 =
      app.add_subcommand("fig2", "Squeezing vs j at fixed eta (theta = pi/2)");
  fig2->add_option("--eta", fig2_eta, "Squeeze parameter (radians or '..pi')");
  fig2->add_option("--phi", fig2_phi, "Azimuth of the initial coherent state");
  fig2->add_option("--j-max", fig2_jmax, "Largest j (integer)")->check(CLI::PositiveNumber);
  fig2->add_option("--workers", fig2_workers, "Worker threads")->check(CLI::PositiveNumber);
  add_common(fig2, fig2_opts);

  // fig3
  CommonOpts fig3_opts;
  std::vector<int> fig3_jlist = {4, 15};
  CLI::App* fig3 = app.add_subcommand(
      "fig3", "Squeezing vs eta for several j (theta = phi = 0, step pi/1024)");
  fig3->add_option("--j-list", fig3_jlist, "Integer j values")->delimiter(',');
  add_common(fig3, fig3_opts);

  // two-atom
  CommonOpts ta_opts;
  double ta_xi = 0.0;
  CLI::App* ta = app.add_subcommand("two-atom", "Closed-form two-atom table over eta");
  ta->add_option("--xi", ta_xi, "Real coherent-state parameter xi = tan(theta/2)");
  add_common(ta, ta_opts);

  // sweep
  CommonOpts sweep_opts;
  std::string sweep_config_path, sweep_emit_path;
  int sweep_workers = 0;  // 0 = take from config
  int sweep_two_j = -1;
  std::string sweep_theta = "0", sweep_phi = "0", sweep_eta, sweep_hamiltonian, sweep_t;
  CLI::App* sweep = app.add_subcommand("sweep", "Config-driven sweep (JSON file or flags)");
  sweep->add_option("config", sweep_config_path, "JSON config file");
  sweep->add_option("--workers", sweep_workers, "Override worker count");
  sweep->add_option("--two-j", sweep_two_j, "2j (flag mode)");
  sweep->add_option("--theta", sweep_theta, "Polar angle (flag mode)");
  sweep->add_option("--phi", sweep_phi, "Azimuth (flag mode)");
  sweep->add_option("--eta", sweep_eta, "Eta grid START:STOP:STEPS or single value (flag mode)");
  sweep->add_option("--hamiltonian", sweep_hamiltonian,
                    "two-axis:ZETA | one-axis:GAMMA | lipkin:G1,G2 | lambda:EPS (flag mode)");
  sweep->add_option("--t", sweep_t, "Time grid START:STOP:STEPS (flag mode)");
  sweep->add_option("--emit-config", sweep_emit_path, "Write the effective config JSON here");
  add_common(sweep, sweep_opts);

  // selfcheck
  int sc_maxj = 10;
  std::string sc_conv = "locked";
  CLI::App* sc = app.add_subcommand("selfcheck", "Run the oracle suites");
  sc->add_option("--max-j", sc_maxj, "Largest j exercised")->check(CLI::PositiveNumber);
  sc->add_option("--convention", sc_conv, "locked | naive (naive is a negative control)")
      ->check(CLI::IsMember({"locked", "naive"}));

  try {
    app.parse(argc, argv);

    if (*fig1) {
      const auto rows = fig1_rows();
      write_output(fig1_opts.out, fig1_opts.format == "csv" ? fig1_csv(rows) : fig1_json(rows));
      return 0;
    }

    if (*fig2) {
      const SweepSpec spec =
          fig2_spec(parse_angle(fig2_eta), fig2_jmax, parse_angle(fig2_phi), fig2_workers);
      const auto rows = run_sweep(spec);
      write_output(fig2_opts.out,
                   fig2_opts.format == "csv" ? fig2_csv(rows) : sweep_json(rows, {}));
      return 0;
    }

    if (*fig3) {
      const Fig3Data data = fig3_data(fig3_jlist, 512);
      write_output(fig3_opts.out, fig3_opts.format == "csv" ? fig3_csv(data) : fig3_json(data));
      return 0;
    }

    if (*ta) {
      const auto rows = twoatom_rows(ta_xi, Grid{0.0, M_PI / 2.0, 256});
      write_output(ta_opts.out, ta_opts.format == "csv" ? twoatom_csv(rows) : twoatom_json(rows));
      return 0;
    }

    if (*sweep) {
      SweepConfig cfg;
      if (!sweep_config_path.empty()) {
        cfg = load_sweep_config(sweep_config_path);
      } else {
        if (sweep_two_j < 0) fail(Errc::config_error, "flag mode needs --two-j");
        cfg.spec.two_j_values = {sweep_two_j};
        cfg.spec.theta = parse_angle(sweep_theta);
        cfg.spec.phi = parse_angle(sweep_phi);
        auto parse_grid = [](const std::string& s) {
          Grid g;
          const auto c1 = s.find(':');
          if (c1 == std::string::npos) {
            g = Grid{parse_angle(s), parse_angle(s), 1};
          } else {
            const auto c2 = s.find(':', c1 + 1);
            if (c2 == std::string::npos) fail(Errc::config_error, "grid is START:STOP:STEPS");
            g.start = parse_angle(s.substr(0, c1));
            g.stop = parse_angle(s.substr(c1 + 1, c2 - c1 - 1));
            g.steps = std::stoi(s.substr(c2 + 1));
          }
          return g;
        };
        if (!sweep_eta.empty()) {
          cfg.spec.eta_grid = parse_grid(sweep_eta);
        } else if (!sweep_hamiltonian.empty()) {
          cfg.spec.hamiltonian = parse_hamiltonian_flag(sweep_hamiltonian);
          if (sweep_t.empty()) fail(Errc::config_error, "--hamiltonian needs --t");
          cfg.spec.t_grid = parse_grid(sweep_t);
        } else {
          fail(Errc::config_error, "flag mode needs --eta or --hamiltonian/--t");
        }
        cfg.output.path = sweep_opts.out;
        cfg.output.format = sweep_opts.format;
      }
      if (sweep_workers > 0) cfg.spec.workers = sweep_workers;
      if (sweep_opts.out != "-") cfg.output.path = sweep_opts.out;
      if (sweep->count("--format") > 0) cfg.output.format = sweep_opts.format;
      validate(cfg.spec);

      if (!sweep_emit_path.empty()) write_output(sweep_emit_path, emit_sweep_config(cfg));

      const auto rows = run_sweep(cfg.spec);
      // column "eta" doubles as the t column in hamiltonian mode
      std::vector<std::string> cols = cfg.spec.columns;
      if (cols.empty() && cfg.spec.hamiltonian) {
        cols = sweep_default_columns();
        for (std::string& c : cols)
          if (c == "eta") c = "t";
      }
      write_output(cfg.output.path,
                   cfg.output.format == "csv" ? sweep_csv(rows, cols) : sweep_json(rows, cols));

      bool all_degenerate = !rows.empty();
      for (const SweepRow& r : rows)
        if (r.status == RowStatus::ok) all_degenerate = false;
      return all_degenerate ? 3 : 0;
    }

    if (*sc) {
      const Convention conv = sc_conv == "naive" ? Convention::naive : Convention::locked;
      const auto results = run_selfcheck(sc_maxj, conv);
      bool all_pass = true;
      for (const SuiteResult& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        all_pass = all_pass && r.pass;
      }
      return all_pass ? 0 : 2;
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
