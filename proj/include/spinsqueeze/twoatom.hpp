#pragma once

#include <complex>

#include "spinsqueeze/errors.hpp"

namespace spinsq {

// Closed-form two-atom (j = 1) results.  These are the independent oracle for
// the numerical stack and are transcribed with exact integer coefficients.

struct TwoAtomCoefficients {
  std::complex<double> c1, c2, c3;  // amplitudes of |1,+1>, |1,0>, |1,-1>
};

// C1 = [cos(2|eta|) + e^{i arg eta} xi^2 sin(2|eta|)] / (1+|xi|^2)
// C2 = sqrt(2) xi / (1+|xi|^2)
// C3 = [xi^2 cos(2|eta|) - e^{-i arg eta} sin(2|eta|)] / (1+|xi|^2)
// eta = 0 is the coherent-state limit (the phase factor is moot there).
TwoAtomCoefficients analytic_coefficients(std::complex<double> xi, std::complex<double> eta);

struct TwoAtomVariances {
  double var_x = 0.0;         // (Delta J_x')^2
  double var_y = 0.0;         // (Delta J_y')^2
  double mean_spin_sq = 0.0;  // |<J>|^2
};

// Polynomial-trigonometric closed forms, valid for real xi >= 0 and real eta.
// var_x carries 1/|<J>|^2; throws PoleAtVanishingMeanSpin when |cos 4eta| < 1e-8
// or the mean spin itself vanishes.
TwoAtomVariances analytic_variances(double xi, double eta);

// Squeezing-parameter pair at theta = 0:
//   s_a = sqrt((1 + sin 4eta)/cos 4eta), s_b = sqrt((1 - sin 4eta)/cos 4eta).
// theta = pi swaps which quadrature carries which value, so callers should
// compare as an unordered pair.  Requires cos(4 eta) > 1e-8.
struct SqueezePair {
  double s_a = 0.0, s_b = 0.0;
};
SqueezePair analytic_squeeze_theta0(double eta);

}  // namespace spinsq
