#pragma once

#include <vector>

#include "spinsqueeze/spin.hpp"

namespace spinsq {

// Spin coherent state direction.  theta in [0, pi], phi in radians.
// xi = tan(theta/2) e^{i phi} is never materialized: the cos/sin amplitude
// form below stays regular at theta = pi where xi diverges.
struct CoherentParams {
  double theta = 0.0;
  double phi = 0.0;
};

struct StateVector {
  SpinSpace space;
  std::vector<cplx> amps;  // index n = 0..2j, n = j - m

  static StateVector from_amplitudes(const SpinSpace& space, std::vector<cplx> amps);
};

// amplitude(n) = sqrt(C(2j,n)) cos(theta/2)^{2j-n} sin(theta/2)^n e^{i n phi}.
// Binomial square roots come from cumulative ratio products, finite for 2j <= 120.
StateVector coherent_state(const SpinSpace& space, const CoherentParams& params);

// Basis state |j, m>, addressed by index n = j - m.
StateVector basis_state(const SpinSpace& space, int n);

// P(m) = |amplitude(j - m)|^2, indexed by n.
std::vector<double> basis_distribution(const StateVector& psi);

// <a|b>, conjugate-linear in the first argument.
cplx inner_product(const StateVector& a, const StateVector& b);

double norm(const StateVector& psi);

// theta/phi equivalent of a real xi (possibly negative): theta = 2 atan|xi|,
// phi = 0 for xi >= 0 and pi for xi < 0.
CoherentParams params_from_real_xi(double xi);

}  // namespace spinsq
