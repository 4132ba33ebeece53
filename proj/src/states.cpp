#include "spinsqueeze/states.hpp"

#include <cmath>

namespace spinsq {

StateVector StateVector::from_amplitudes(const SpinSpace& space, std::vector<cplx> amps) {
  if (amps.size() != static_cast<size_t>(space.dim()))
    fail(Errc::dim_mismatch, "amplitude count vs space dim");
  double n2 = 0.0;
  for (const cplx& a : amps) n2 += std::norm(a);
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-12)
    fail(Errc::invalid_argument, "state vector must have unit norm");
  return StateVector{space, std::move(amps)};
}

StateVector coherent_state(const SpinSpace& space, const CoherentParams& params) {
  if (!std::isfinite(params.theta) || !std::isfinite(params.phi) || params.theta < 0.0 ||
      params.theta > M_PI + 1e-12)
    fail(Errc::invalid_argument, "theta must lie in [0, pi], phi finite");

  const int tj = space.two_j;
  const double c = std::cos(params.theta / 2.0);
  const double s = std::sin(params.theta / 2.0);

  std::vector<cplx> amps(space.dim());
  double sqrt_binom = 1.0;  // sqrt(C(2j, n)) built up by ratio
  for (int n = 0; n <= tj; ++n) {
    if (n > 0) sqrt_binom *= std::sqrt(static_cast<double>(tj - n + 1) / n);
    const double mag = sqrt_binom * std::pow(c, tj - n) * std::pow(s, n);
    amps[n] = std::polar(mag, n * params.phi);
  }
  return StateVector{space, std::move(amps)};
}

StateVector basis_state(const SpinSpace& space, int n) {
  if (n < 0 || n >= space.dim()) fail(Errc::invalid_argument, "basis index out of range");
  std::vector<cplx> amps(space.dim());
  amps[n] = 1.0;
  return StateVector{space, std::move(amps)};
}

std::vector<double> basis_distribution(const StateVector& psi) {
  std::vector<double> p(psi.amps.size());
  for (size_t n = 0; n < p.size(); ++n) p[n] = std::norm(psi.amps[n]);
  return p;
}

cplx inner_product(const StateVector& a, const StateVector& b) {
  if (!(a.space == b.space)) fail(Errc::space_mismatch, "inner product");
  cplx s = 0.0;
  for (size_t n = 0; n < a.amps.size(); ++n) s += std::conj(a.amps[n]) * b.amps[n];
  return s;
}

double norm(const StateVector& psi) {
  double n2 = 0.0;
  for (const cplx& a : psi.amps) n2 += std::norm(a);
  return std::sqrt(n2);
}

CoherentParams params_from_real_xi(double xi) {
  if (!std::isfinite(xi)) fail(Errc::invalid_argument, "xi must be finite");
  return CoherentParams{2.0 * std::atan(std::abs(xi)), xi < 0.0 ? M_PI : 0.0};
}

}  // namespace spinsq
