#include "spinsqueeze/twoatom.hpp"

#include <cmath>

namespace spinsq {

TwoAtomCoefficients analytic_coefficients(std::complex<double> xi, std::complex<double> eta) {
  const double aeta = std::abs(eta);
  // sqrt(eta/eta*) = e^{i arg eta}; at eta = 0 it multiplies sin(0) so any
  // unit value works -- use 1.
  const std::complex<double> phase = aeta > 0.0 ? eta / aeta : 1.0;
  const double cos2 = std::cos(2.0 * aeta);
  const double sin2 = std::sin(2.0 * aeta);
  const double denom = 1.0 + std::norm(xi);

  TwoAtomCoefficients c;
  c.c1 = (cos2 + phase * xi * xi * sin2) / denom;
  c.c2 = std::sqrt(2.0) * xi / denom;
  c.c3 = (xi * xi * cos2 - sin2 / phase) / denom;
  return c;
}

// Term-by-term transcription of the closed-form variances and mean spin.
// Integer coefficients are kept literal; the transcription test pins every
// term against a brute-force evaluation from the amplitudes above.
TwoAtomVariances analytic_variances(double xi, double eta) {
  if (!(xi >= 0.0) || !std::isfinite(eta))
    fail(Errc::invalid_argument, "requires real xi >= 0 and finite eta");

  const double c4 = std::cos(4.0 * eta);
  const double s4 = std::sin(4.0 * eta);
  const double s8 = std::sin(8.0 * eta);
  const double x2 = xi * xi;
  const double x4 = x2 * x2, x6 = x4 * x2, x8 = x6 * x2, x10 = x8 * x2, x12 = x10 * x2;
  const double d2 = (1.0 + x2) * (1.0 + x2);
  const double d4 = d2 * d2, d6 = d4 * d2;

  TwoAtomVariances out;
  out.mean_spin_sq = (4.0 * x2 * (1.0 + x4 + 2.0 * x2 * c4 - (1.0 - x4) * s4) +
                      (1.0 - x4) * (1.0 - x4) * c4 * c4 + 4.0 * x4 * s4 * s4 -
                      2.0 * x2 * (x4 - 1.0) * s8) /
                     d4;

  out.var_y = 0.5 * (1.0 + (2.0 * x2 * (1.0 - c4) + (1.0 - x4) * s4) / d2);

  if (std::abs(c4) < 1e-8 || out.mean_spin_sq < 1e-16)
    fail(Errc::pole_at_vanishing_mean_spin, "var_x carries 1/|<J>|^2");

  const double bracket1 =
      ((x8 - 2.0 * x4 + 1.0) * c4 * c4 - 2.0 * x2 * (x4 - 1.0) * s8 + 4.0 * x4 * s4 * s4) /
      (2.0 * d4);
  const double bracket2 = ((3.0 * x10 - 10.0 * x6 + 3.0 * x2) * c4 * c4 * c4 -
                           3.0 * (x10 - 2.0 * x6 + x2) * c4 * c4 -
                           2.0 * (x10 - 4.0 * x8 - 4.0 * x6 - 4.0 * x4 + x2) * c4 -
                           0.5 * (x12 - 15.0 * x8 + 15.0 * x4 - 1.0) * s4 * s4 * s4 -
                           12.0 * x6 * s4 * s4 +
                           0.5 * (x12 + 8.0 * x10 - 11.0 * x8 + 11.0 * x4 - 8.0 * x2 - 1.0) * s4 +
                           6.0 * x4 * (x4 - 1.0) * s8 + 4.0 * x10 + 8.0 * x6 + 4.0 * x2) /
                          d6;
  out.var_x = (bracket1 + bracket2) / out.mean_spin_sq;
  return out;
}

SqueezePair analytic_squeeze_theta0(double eta) {
  const double c4 = std::cos(4.0 * eta);
  const double s4 = std::sin(4.0 * eta);
  if (!(c4 > 1e-8)) fail(Errc::pole_at_vanishing_mean_spin, "requires cos(4 eta) > 1e-8");
  return SqueezePair{std::sqrt((1.0 + s4) / c4), std::sqrt((1.0 - s4) / c4)};
}

}  // namespace spinsq
