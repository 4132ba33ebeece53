#pragma once

#include <span>
#include <string>
#include <vector>

#include "spinsqueeze/io.hpp"
#include "spinsqueeze/twoatom.hpp"

namespace spinsq {

// Figure-style presets.  Grids are hard-coded fine enough to resolve the
// curve features (poles, local minima); the CLI renders them as CSV.

// j = 1, theta = 0, eta in [0, pi/2) step pi/512.  Analytic columns hold the
// closed-form pair where it is defined (cos 4eta > 0) and NaN elsewhere.
struct Fig1Row {
  double eta = 0.0;
  RowStatus status = RowStatus::ok;
  double s_x = 0.0, s_y = 0.0;      // numerical
  double s_a = 0.0, s_b = 0.0;      // analytic pair
};
std::vector<Fig1Row> fig1_rows();
std::string fig1_csv(const std::vector<Fig1Row>& rows);

// Squeezing vs j at fixed eta, theta = pi/2.  Runs through the sweep engine.
SweepSpec fig2_spec(double eta, int j_max, double phi, int workers);
std::string fig2_csv(const std::vector<SweepRow>& rows);

// Squeezing vs eta for several j at theta = phi = 0, step pi/1024 over
// [0, span).  A local-minima count of the squeezed quadrature per j is
// appended as a summary row.
struct Fig3Curve {
  int two_j = 0;
  std::vector<double> s_x, s_y;   // NaN on degenerate rows
  std::vector<RowStatus> status;
  int minima_count = 0;           // local minima of min(s_x, s_y)
};
struct Fig3Data {
  std::vector<double> eta;
  std::vector<Fig3Curve> curves;
};
Fig3Data fig3_data(const std::vector<int>& j_list, int steps = 512, double span = 0.0 /* pi/2 */);
std::string fig3_csv(const Fig3Data& data);

// Two-atom analytic table over an eta grid at fixed real xi.
struct TwoAtomRow {
  double xi = 0.0, eta = 0.0;
  bool pole = false;  // closed forms undefined (vanishing mean spin / cos 4eta ~ 0)
  TwoAtomVariances var;
  double s_a = 0.0, s_b = 0.0;  // NaN when cos 4eta <= 0
};
std::vector<TwoAtomRow> twoatom_rows(double xi, const Grid& eta_grid);
std::string twoatom_csv(const std::vector<TwoAtomRow>& rows);

// Strict local minima of a series; NaN entries break the series into segments.
int count_local_minima(std::span<const double> v);

}  // namespace spinsq
