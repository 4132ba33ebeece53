#include "spinsqueeze/metrics.hpp"

#include <cmath>

namespace spinsq {

SpinMoments spin_moments(const SpinOperators& ops, const StateVector& psi) {
  if (!(ops.space == psi.space)) fail(Errc::space_mismatch, "spin_moments");
  const ComplexMatrix* comps[3] = {&ops.j_x, &ops.j_y, &ops.j_z};

  // y_k = J_k psi; then <J_k> = <psi|y_k> and Re<y_k|y_l> = <{J_k,J_l}>/2,
  // which is all the frame projection needs.  O(dim^2) per state.
  std::array<std::vector<cplx>, 3> y;
  for (int k = 0; k < 3; ++k) y[k] = spinsq::apply(*comps[k], psi.amps);

  SpinMoments m;
  for (int k = 0; k < 3; ++k) {
    cplx e = 0.0;
    for (size_t i = 0; i < psi.amps.size(); ++i) e += std::conj(psi.amps[i]) * y[k][i];
    if (std::abs(e.imag()) > 1e-12)
      fail(Errc::invalid_argument, "non-real spin expectation; state not normalized?");
    m.mean[k] = e.real();
  }
  for (int k = 0; k < 3; ++k)
    for (int l = k; l < 3; ++l) {
      cplx e = 0.0;
      for (size_t i = 0; i < psi.amps.size(); ++i) e += std::conj(y[k][i]) * y[l][i];
      m.sym[k][l] = m.sym[l][k] = e.real();
    }
  return m;
}

MeanSpin mean_spin(const SpinMoments& m) {
  MeanSpin ms;
  ms.vector = m.mean;
  ms.magnitude =
      std::sqrt(m.mean[0] * m.mean[0] + m.mean[1] * m.mean[1] + m.mean[2] * m.mean[2]);
  return ms;
}

MeanSpin mean_spin(const SpinOperators& ops, const StateVector& psi) {
  return mean_spin(spin_moments(ops, psi));
}

RotatedFrame rotated_frame(const MeanSpin& ms) {
  if (ms.magnitude < kMeanSpinEps)
    fail(Errc::mean_spin_vanishes, "mean spin below degeneracy threshold");
  const double nx = ms.vector[0] / ms.magnitude;
  const double ny = ms.vector[1] / ms.magnitude;
  const double nz = ms.vector[2] / ms.magnitude;

  const double rho = std::hypot(nx, ny);
  const double theta_bar = std::atan2(rho, nz);
  const double phi_bar = rho > 0.0 ? std::atan2(ny, nx) : 0.0;  // phi := 0 at the poles

  RotatedFrame f;
  f.n = {nx, ny, nz};
  f.e_x = {std::cos(theta_bar) * std::cos(phi_bar), std::cos(theta_bar) * std::sin(phi_bar),
           -std::sin(theta_bar)};
  f.e_y = {-std::sin(phi_bar), std::cos(phi_bar), 0.0};
  return f;
}

SqueezeReport squeeze_report(const SpinMoments& m) {
  SqueezeReport rep;
  rep.mean_spin = mean_spin(m);
  const RotatedFrame f = rotated_frame(rep.mean_spin);

  auto variance_along = [&m](const std::array<double, 3>& e) {
    double first = 0.0, second = 0.0;
    for (int k = 0; k < 3; ++k) {
      first += e[k] * m.mean[k];
      for (int l = 0; l < 3; ++l) second += e[k] * e[l] * m.sym[k][l];
    }
    double var = second - first * first;
    if (var < 0.0) {
      if (var < -1e-12) fail(Errc::invalid_argument, "variance below -1e-12");
      var = 0.0;
    }
    return var;
  };

  rep.var_x = variance_along(f.e_x);
  rep.var_y = variance_along(f.e_y);
  const double scale = std::sqrt(2.0 / rep.mean_spin.magnitude);
  rep.s_x = std::sqrt(rep.var_x) * scale;
  rep.s_y = std::sqrt(rep.var_y) * scale;
  rep.corr_xy = 2.0 * m.sym[0][1] - 2.0 * m.mean[0] * m.mean[1];
  rep.corr_xz = 2.0 * m.sym[0][2] - 2.0 * m.mean[0] * m.mean[2];
  rep.corr_yz = 2.0 * m.sym[1][2] - 2.0 * m.mean[1] * m.mean[2];
  return rep;
}

SqueezeReport squeeze_report(const SpinOperators& ops, const StateVector& psi) {
  return squeeze_report(spin_moments(ops, psi));
}

}  // namespace spinsq
