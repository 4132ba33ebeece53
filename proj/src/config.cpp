#include "spinsqueeze/config.hpp"

#include "spinsqueeze/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace spinsq {

using nlohmann::json;

namespace {

double parse_number(const std::string& s) {
  const char* begin = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    fail(Errc::config_error, "cannot parse number '" + s + "'");
  return v;
}

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

double parse_angle(const std::string& raw) {
  std::string s = trimmed(raw);
  if (s.empty()) fail(Errc::config_error, "empty angle");
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    const std::string head = trimmed(s.substr(0, s.size() - 2));
    if (head.empty() || head == "+") return M_PI;
    if (head == "-") return -M_PI;
    return parse_number(head) * M_PI;
  }
  return parse_number(s);
}

HamiltonianSpec parse_hamiltonian_flag(const std::string& s) {
  const auto colon = s.find(':');
  const std::string name = s.substr(0, colon);
  std::vector<double> params;
  if (colon != std::string::npos) {
    std::stringstream ss(s.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) params.push_back(parse_number(trimmed(item)));
  }
  auto want = [&](size_t n) {
    if (params.size() != n)
      fail(Errc::config_error, "hamiltonian '" + name + "' needs " + std::to_string(n) +
                                   " parameter(s)");
  };
  if (name == "two-axis") { want(1); return TwoAxis{params[0]}; }
  if (name == "one-axis") { want(1); return OneAxis{params[0]}; }
  if (name == "lipkin") { want(2); return Lipkin{params[0], params[1]}; }
  if (name == "lambda") { want(1); return LambdaOp{params[0]}; }
  fail(Errc::config_error, "unknown hamiltonian variant '" + name + "'");
}

namespace {

double angle_field(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_angle(v.get<std::string>());
  fail(Errc::config_error, "'" + key + "' must be a number or a pi-suffixed string");
}

Grid grid_field(const json& j, const std::string& key) {
  const json& g = j.at(key);
  if (!g.is_object() || !g.contains("start") || !g.contains("stop") || !g.contains("steps"))
    fail(Errc::config_error, "'" + key + "' needs {start, stop, steps}");
  Grid grid;
  grid.start = angle_field(g, "start", 0.0);
  grid.stop = angle_field(g, "stop", 0.0);
  grid.steps = g.at("steps").get<int>();
  return grid;
}

int two_j_from(double j_value, const std::string& what) {
  const double tj = 2.0 * j_value;
  const double rounded = std::round(tj);
  if (std::abs(tj - rounded) > 1e-9 || rounded < 0.0)
    fail(Errc::config_error, what + " must be a non-negative multiple of 1/2");
  return static_cast<int>(rounded);
}

HamiltonianSpec hamiltonian_field(const json& h) {
  const std::string variant = h.at("variant").get<std::string>();
  if (variant == "two-axis") return TwoAxis{h.value("zeta", 1.0)};
  if (variant == "one-axis") return OneAxis{h.value("gamma", 1.0)};
  if (variant == "lipkin") return Lipkin{h.value("g1", 0.0), h.value("g2", 0.0)};
  if (variant == "lambda") return LambdaOp{h.value("epsilon", 0.0)};
  if (variant == "quadratic") {
    const auto& rows = h.at("c");
    Quadratic q;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) q.c[r][c] = rows.at(r).at(c).get<double>();
    return q;
  }
  fail(Errc::config_error, "unknown hamiltonian variant '" + variant + "'");
}

json hamiltonian_json(const HamiltonianSpec& spec) {
  json h;
  std::visit(
      [&h](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TwoAxis>) {
          h["variant"] = "two-axis";
          h["zeta"] = s.zeta;
        } else if constexpr (std::is_same_v<T, OneAxis>) {
          h["variant"] = "one-axis";
          h["gamma"] = s.gamma;
        } else if constexpr (std::is_same_v<T, Lipkin>) {
          h["variant"] = "lipkin";
          h["g1"] = s.g1;
          h["g2"] = s.g2;
        } else if constexpr (std::is_same_v<T, Quadratic>) {
          h["variant"] = "quadratic";
          h["c"] = s.c;
        } else {
          h["variant"] = "lambda";
          h["epsilon"] = s.epsilon;
        }
      },
      spec);
  return h;
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::config_error, e.what());
  }
  try {
    SweepConfig cfg;
    SweepSpec& spec = cfg.spec;

    const int j_keys = doc.contains("two_j") + doc.contains("two_j_list") + doc.contains("j_range");
    if (j_keys != 1)
      fail(Errc::config_error, "exactly one of 'two_j' | 'two_j_list' | 'j_range' required");
    if (doc.contains("two_j")) {
      spec.two_j_values = {doc.at("two_j").get<int>()};
    } else if (doc.contains("two_j_list")) {
      spec.two_j_values = doc.at("two_j_list").get<std::vector<int>>();
    } else {
      const json& r = doc.at("j_range");
      const int start = two_j_from(r.at("start").get<double>(), "j_range.start");
      const int stop = two_j_from(r.at("stop").get<double>(), "j_range.stop");
      const int step = r.contains("step") ? two_j_from(r.at("step").get<double>(), "j_range.step") : 2;
      if (step < 1 || stop < start) fail(Errc::config_error, "bad j_range");
      for (int tj = start; tj <= stop; tj += step) spec.two_j_values.push_back(tj);
    }

    if (doc.contains("xi")) {
      if (doc.contains("theta") || doc.contains("phi"))
        fail(Errc::config_error, "'xi' excludes 'theta'/'phi'");
      const CoherentParams p = params_from_real_xi(doc.at("xi").get<double>());
      spec.theta = p.theta;
      spec.phi = p.phi;
    } else {
      spec.theta = angle_field(doc, "theta", 0.0);
      spec.phi = angle_field(doc, "phi", 0.0);
    }

    if (doc.contains("eta_grid") == doc.contains("hamiltonian"))
      fail(Errc::config_error, "exactly one of 'eta_grid' | 'hamiltonian' required");
    if (doc.contains("eta_grid")) {
      spec.eta_grid = grid_field(doc, "eta_grid");
    } else {
      const json& h = doc.at("hamiltonian");
      spec.hamiltonian = hamiltonian_field(h);
      if (!h.contains("t_grid")) fail(Errc::config_error, "'hamiltonian' needs 't_grid'");
      spec.t_grid = grid_field(h, "t_grid");
    }

    spec.workers = doc.value("workers", 1);
    if (doc.contains("columns")) {
      spec.columns = doc.at("columns").get<std::vector<std::string>>();
      const auto& known = sweep_default_columns();
      for (const std::string& c : spec.columns)
        if (c != "t" && std::find(known.begin(), known.end(), c) == known.end())
          fail(Errc::config_error, "unknown column '" + c + "'");
    }

    if (doc.contains("output")) {
      const json& o = doc.at("output");
      cfg.output.path = o.value("path", std::string("-"));
      cfg.output.format = o.value("format", std::string("csv"));
      if (cfg.output.format != "csv" && cfg.output.format != "json")
        fail(Errc::config_error, "output.format must be csv or json");
    }

    validate(spec);
    return cfg;
  } catch (const json::exception& e) {
    fail(Errc::config_error, e.what());
  }
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::config_error, "cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_sweep_config(ss.str());
}

std::string emit_sweep_config(const SweepConfig& cfg) {
  json doc;
  const SweepSpec& spec = cfg.spec;
  if (spec.two_j_values.size() == 1)
    doc["two_j"] = spec.two_j_values[0];
  else
    doc["two_j_list"] = spec.two_j_values;
  doc["theta"] = spec.theta;
  doc["phi"] = spec.phi;
  if (spec.eta_grid) {
    doc["eta_grid"] = {{"start", spec.eta_grid->start},
                       {"stop", spec.eta_grid->stop},
                       {"steps", spec.eta_grid->steps}};
  } else {
    json h = hamiltonian_json(*spec.hamiltonian);
    h["t_grid"] = {{"start", spec.t_grid->start},
                   {"stop", spec.t_grid->stop},
                   {"steps", spec.t_grid->steps}};
    doc["hamiltonian"] = std::move(h);
  }
  doc["workers"] = spec.workers;
  if (!spec.columns.empty()) doc["columns"] = spec.columns;
  doc["output"] = {{"path", cfg.output.path}, {"format", cfg.output.format}};
  return doc.dump(2) + "\n";
}

}  // namespace spinsq
