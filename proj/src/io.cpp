#include "spinsqueeze/io.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace spinsq {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

namespace {

double nan_value() { return std::nan(""); }

double column_value(const SweepRow& r, const std::string& col) {
  if (col == "two_j") return r.two_j;
  if (col == "j") return r.two_j / 2.0;
  if (col == "theta") return r.theta;
  if (col == "phi") return r.phi;
  if (col == "eta" || col == "t") return r.x;
  if (col == "jx_mean") return r.mean_spin.vector[0];
  if (col == "jy_mean") return r.mean_spin.vector[1];
  if (col == "jz_mean") return r.mean_spin.vector[2];
  if (col == "mean_spin_mag") return r.mean_spin.magnitude;
  if (col == "corr_xy") return r.corr_xy;
  if (col == "corr_xz") return r.corr_xz;
  if (col == "corr_yz") return r.corr_yz;
  if (!r.report) return nan_value();
  if (col == "var_xprime") return r.report->var_x;
  if (col == "var_yprime") return r.report->var_y;
  if (col == "s_xprime") return r.report->s_x;
  if (col == "s_yprime") return r.report->s_y;
  fail(Errc::config_error, "unknown column '" + col + "'");
}

const char* status_name(RowStatus s) {
  return s == RowStatus::ok ? "ok" : "mean_spin_vanishes";
}

}  // namespace

const std::vector<std::string>& sweep_default_columns() {
  static const std::vector<std::string> cols = {
      "two_j",      "j",          "theta",     "phi",        "eta",
      "jx_mean",    "jy_mean",    "jz_mean",   "mean_spin_mag",
      "var_xprime", "var_yprime", "s_xprime",  "s_yprime",
      "corr_xy",    "corr_xz",    "corr_yz",   "status"};
  return cols;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, const std::vector<std::string>& columns) {
  const auto& cols = columns.empty() ? sweep_default_columns() : columns;
  std::string out;
  for (size_t c = 0; c < cols.size(); ++c) {
    out += cols[c];
    out += (c + 1 < cols.size()) ? ',' : '\n';
  }
  for (const SweepRow& r : rows) {
    for (size_t c = 0; c < cols.size(); ++c) {
      out += cols[c] == "status" ? status_name(r.status) : format_double(column_value(r, cols[c]));
      out += (c + 1 < cols.size()) ? ',' : '\n';
    }
  }
  return out;
}

std::string sweep_json(const std::vector<SweepRow>& rows, const std::vector<std::string>& columns) {
  const auto& cols = columns.empty() ? sweep_default_columns() : columns;
  nlohmann::json arr = nlohmann::json::array();
  for (const SweepRow& r : rows) {
    nlohmann::json obj;
    for (const std::string& col : cols) {
      if (col == "status") {
        obj[col] = status_name(r.status);
      } else {
        const double v = column_value(r, col);
        if (std::isnan(v))
          obj[col] = nullptr;
        else
          obj[col] = v;
      }
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

}  // namespace spinsq
