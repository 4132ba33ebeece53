#include "spinsqueeze/presets.hpp"

#include <cmath>

namespace spinsq {

namespace {

double nan_value() { return std::nan(""); }

const char* status_name(RowStatus s) {
  return s == RowStatus::ok ? "ok" : "mean_spin_vanishes";
}

}  // namespace

std::vector<Fig1Row> fig1_rows() {
  SweepSpec spec;
  spec.two_j_values = {2};
  spec.theta = 0.0;
  spec.phi = 0.0;
  spec.eta_grid = Grid{0.0, M_PI / 2.0, 256};  // step pi/512
  const std::vector<SweepRow> rows = run_sweep(spec);

  std::vector<Fig1Row> out;
  out.reserve(rows.size());
  for (const SweepRow& r : rows) {
    Fig1Row f;
    f.eta = r.x;
    f.status = r.status;
    f.s_x = r.report ? r.report->s_x : nan_value();
    f.s_y = r.report ? r.report->s_y : nan_value();
    if (std::cos(4.0 * r.x) > 1e-8) {
      const SqueezePair p = analytic_squeeze_theta0(r.x);
      f.s_a = p.s_a;
      f.s_b = p.s_b;
    } else {
      f.s_a = f.s_b = nan_value();
    }
    out.push_back(f);
  }
  return out;
}

std::string fig1_csv(const std::vector<Fig1Row>& rows) {
  std::string out = "eta,s_xprime,s_yprime,s_a_analytic,s_b_analytic,status\n";
  for (const Fig1Row& r : rows) {
    out += format_double(r.eta) + ',' + format_double(r.s_x) + ',' + format_double(r.s_y) + ',' +
           format_double(r.s_a) + ',' + format_double(r.s_b) + ',' + status_name(r.status) + '\n';
  }
  return out;
}

SweepSpec fig2_spec(double eta, int j_max, double phi, int workers) {
  if (j_max < 1) fail(Errc::config_error, "j_max must be >= 1");
  SweepSpec spec;
  for (int jj = 1; jj <= j_max; ++jj) spec.two_j_values.push_back(2 * jj);
  spec.theta = M_PI / 2.0;
  spec.phi = phi;
  spec.eta_grid = Grid{eta, eta, 1};
  spec.workers = workers;
  return spec;
}

std::string fig2_csv(const std::vector<SweepRow>& rows) {
  std::string out = "j,s_xprime,s_yprime,s_min,status\n";
  for (const SweepRow& r : rows) {
    const double sx = r.report ? r.report->s_x : nan_value();
    const double sy = r.report ? r.report->s_y : nan_value();
    out += format_double(r.two_j / 2.0) + ',' + format_double(sx) + ',' + format_double(sy) + ',' +
           format_double(std::fmin(sx, sy)) + ',' + status_name(r.status) + '\n';
  }
  return out;
}

Fig3Data fig3_data(const std::vector<int>& j_list, int steps, double span) {
  if (j_list.empty()) fail(Errc::config_error, "fig3 needs at least one j");
  if (span <= 0.0) span = M_PI / 2.0;
  Fig3Data data;
  data.eta.reserve(steps);
  for (int i = 0; i < steps; ++i) data.eta.push_back(i * span / steps);

  for (int jj : j_list) {
    SweepSpec spec;
    spec.two_j_values = {2 * jj};
    spec.theta = 0.0;
    spec.phi = 0.0;
    spec.eta_grid = Grid{0.0, span, steps};
    const std::vector<SweepRow> rows = run_sweep(spec);

    Fig3Curve curve;
    curve.two_j = 2 * jj;
    std::vector<double> smin;
    smin.reserve(rows.size());
    for (const SweepRow& r : rows) {
      curve.status.push_back(r.status);
      curve.s_x.push_back(r.report ? r.report->s_x : nan_value());
      curve.s_y.push_back(r.report ? r.report->s_y : nan_value());
      smin.push_back(r.report ? std::fmin(r.report->s_x, r.report->s_y) : nan_value());
    }
    curve.minima_count = count_local_minima(smin);
    data.curves.push_back(std::move(curve));
  }
  return data;
}

std::string fig3_csv(const Fig3Data& data) {
  std::string out = "eta";
  for (const Fig3Curve& c : data.curves) {
    const std::string j = format_double(c.two_j / 2.0);
    out += ",s_xprime[j=" + j + "],s_yprime[j=" + j + "],status[j=" + j + "]";
  }
  out += '\n';
  for (size_t i = 0; i < data.eta.size(); ++i) {
    out += format_double(data.eta[i]);
    for (const Fig3Curve& c : data.curves)
      out += ',' + format_double(c.s_x[i]) + ',' + format_double(c.s_y[i]) + ',' +
             status_name(c.status[i]);
    out += '\n';
  }
  // summary row: the count sits in each curve's s_xprime column
  out += "minima_count";
  for (const Fig3Curve& c : data.curves) out += ',' + std::to_string(c.minima_count) + ",,";
  out += '\n';
  return out;
}

std::vector<TwoAtomRow> twoatom_rows(double xi, const Grid& eta_grid) {
  if (eta_grid.steps < 1) fail(Errc::config_error, "eta grid must be nonempty");
  std::vector<TwoAtomRow> out;
  out.reserve(eta_grid.steps);
  for (int i = 0; i < eta_grid.steps; ++i) {
    TwoAtomRow row;
    row.xi = xi;
    row.eta = eta_grid.point(i);
    try {
      row.var = analytic_variances(xi, row.eta);
    } catch (const Error& e) {
      if (e.code() != Errc::pole_at_vanishing_mean_spin) throw;
      row.pole = true;
      row.var = TwoAtomVariances{nan_value(), nan_value(), nan_value()};
    }
    if (std::cos(4.0 * row.eta) > 1e-8) {
      const SqueezePair p = analytic_squeeze_theta0(row.eta);
      row.s_a = p.s_a;
      row.s_b = p.s_b;
    } else {
      row.s_a = row.s_b = nan_value();
    }
    out.push_back(row);
  }
  return out;
}

std::string twoatom_csv(const std::vector<TwoAtomRow>& rows) {
  std::string out = "xi,eta,var_xprime,var_yprime,mean_spin_sq,s_a,s_b,status\n";
  for (const TwoAtomRow& r : rows) {
    out += format_double(r.xi) + ',' + format_double(r.eta) + ',' + format_double(r.var.var_x) +
           ',' + format_double(r.var.var_y) + ',' + format_double(r.var.mean_spin_sq) + ',' +
           format_double(r.s_a) + ',' + format_double(r.s_b) + ',' + (r.pole ? "pole" : "ok") +
           '\n';
  }
  return out;
}

int count_local_minima(std::span<const double> v) {
  int count = 0;
  for (size_t i = 1; i + 1 < v.size(); ++i) {
    if (std::isnan(v[i - 1]) || std::isnan(v[i]) || std::isnan(v[i + 1])) continue;
    if (v[i] < v[i - 1] && v[i] < v[i + 1]) ++count;
  }
  return count;
}

}  // namespace spinsq
