#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinsqueeze/metrics.hpp"

namespace spinsq {

// The squeeze propagator is DEFINED as
//     U(eta) = exp(eta J+^2 - conj(eta) J-^2),
// the convention under which the j = 1 amplitudes come out exactly as
// analytic_coefficients (arguments 2|eta|, phase sqrt(eta/eta*)).  The
// generator is anti-Hermitian for every complex eta, so U is always unitary.
// For H = zeta (JxJy + JyJx) the identity (JxJy + JyJx) = (J+^2 - J-^2)/(2i)
// gives exp(-iHt) = U(eta) with eta = -zeta t / 2.
UnitaryOperator squeeze_propagator(const SpinOperators& ops, cplx eta);

// exp(eta (JxJy + JyJx)) taken literally.  Not unitary for real eta; kept as
// the selfcheck negative control, which must fail the amplitude lock.
ComplexMatrix squeeze_propagator_naive(const SpinOperators& ops, cplx eta);

struct EvolutionResult {
  StateVector state;
  double propagator_checksum = 0.0;  // ||U^dag U - I||_max of the materialized propagator
};

// psi(t) = sum_k e^{-i lambda_k t} |v_k><v_k|psi0> via hermitian_eigen.
EvolutionResult evolve_eigen(const ComplexMatrix& h, double t, const StateVector& psi0);
EvolutionResult evolve_eigen(const EigenSystem& es, double t, const StateVector& psi0);

// ---- sweep engine ----

// Half-open uniform grid: points start + i*(stop-start)/steps, i = 0..steps-1.
struct Grid {
  double start = 0.0, stop = 0.0;
  int steps = 0;
  double point(int i) const { return start + i * (stop - start) / steps; }
};

enum class RowStatus { ok, mean_spin_vanishes };

struct SweepSpec {
  std::vector<int> two_j_values;
  double theta = 0.0, phi = 0.0;
  std::optional<Grid> eta_grid;                  // squeeze sweep ...
  std::optional<HamiltonianSpec> hamiltonian;    // ... or Hamiltonian evolution
  std::optional<Grid> t_grid;
  int workers = 1;
  std::vector<std::string> columns;  // CSV column selection; empty = all
};

struct SweepRow {
  int two_j = 0;
  double theta = 0.0, phi = 0.0;
  double x = 0.0;  // eta or t, whichever the spec sweeps
  RowStatus status = RowStatus::ok;
  MeanSpin mean_spin;                   // defined for every row
  double corr_xy = 0.0, corr_xz = 0.0, corr_yz = 0.0;
  std::optional<SqueezeReport> report;  // absent on mean_spin_vanishes rows
};

// Grid points run two_j-major, grid-point-minor.  Points are independent
// tasks over shared read-only operator tables; each writes only its own
// pre-sized slot, so the output order and bytes never depend on `workers`.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

void validate(const SweepSpec& spec);  // throws ConfigError

}  // namespace spinsq
