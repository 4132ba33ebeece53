#include "spinsqueeze/dynamics.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace spinsq {

UnitaryOperator squeeze_propagator(const SpinOperators& ops, cplx eta) {
  if (!std::isfinite(eta.real()) || !std::isfinite(eta.imag()) || std::abs(eta) > 10.0 * M_PI)
    fail(Errc::invalid_argument, "eta must be finite with |eta| <= 10 pi");
  const ComplexMatrix jp2 = multiply(ops.j_plus, ops.j_plus);
  const ComplexMatrix jm2 = multiply(ops.j_minus, ops.j_minus);
  return expm_antihermitian(eta * jp2 - std::conj(eta) * jm2);
}

ComplexMatrix squeeze_propagator_naive(const SpinOperators& ops, cplx eta) {
  return expm_taylor(eta * (multiply(ops.j_x, ops.j_y) + multiply(ops.j_y, ops.j_x)));
}

EvolutionResult evolve_eigen(const EigenSystem& es, double t, const StateVector& psi0) {
  const int dim = es.eigenvectors.dim();
  if (dim != psi0.space.dim()) fail(Errc::dim_mismatch, "evolve_eigen");

  // U = V diag(e^{-i lambda t}) V^dag, materialized so the recorded checksum
  // measures the actual propagator.
  const ComplexMatrix& v = es.eigenvectors;
  ComplexMatrix u(dim);
  std::vector<cplx> phases(dim);
  for (int k = 0; k < dim; ++k) phases[k] = std::polar(1.0, -es.eigenvalues[k] * t);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      cplx s = 0.0;
      for (int k = 0; k < dim; ++k) s += v(r, k) * phases[k] * std::conj(v(c, k));
      u(r, c) = s;
    }

  EvolutionResult res{StateVector{psi0.space, spinsq::apply(u, psi0.amps)}, unitarity_defect(u)};
  if (res.propagator_checksum > 1e-10)
    fail(Errc::no_convergence, "eigen propagator lost unitarity");
  return res;
}

EvolutionResult evolve_eigen(const ComplexMatrix& h, double t, const StateVector& psi0) {
  return evolve_eigen(hermitian_eigen(h), t, psi0);
}

void validate(const SweepSpec& spec) {
  if (spec.two_j_values.empty()) fail(Errc::config_error, "empty j grid");
  for (int tj : spec.two_j_values)
    if (tj < 0) fail(Errc::config_error, "two_j must be >= 0");
  if (spec.eta_grid.has_value() == spec.hamiltonian.has_value())
    fail(Errc::config_error, "exactly one of eta_grid / hamiltonian required");
  if (spec.hamiltonian && !spec.t_grid) fail(Errc::config_error, "hamiltonian needs t_grid");
  const Grid& g = spec.eta_grid ? *spec.eta_grid : *spec.t_grid;
  if (g.steps < 1) fail(Errc::config_error, "grid must be nonempty");
  if (!(g.stop > g.start) && g.steps > 1) fail(Errc::config_error, "grid must increase");
  if (spec.workers < 1) fail(Errc::config_error, "workers must be >= 1");
}

namespace {

// Read-only per-space tables shared by all workers.
struct SpaceTables {
  SpinOperators ops;
  StateVector psi0;
  ComplexMatrix jp2, jm2;              // squeeze mode
  std::optional<EigenSystem> eigen;    // hamiltonian mode
};

SweepRow evaluate_point(const SweepSpec& spec, const SpaceTables& tab, double x) {
  SweepRow row;
  row.two_j = tab.ops.space.two_j;
  row.theta = spec.theta;
  row.phi = spec.phi;
  row.x = x;

  StateVector psi{tab.ops.space, {}};
  if (spec.eta_grid) {
    const cplx eta(x, 0.0);
    const UnitaryOperator u = expm_antihermitian(eta * tab.jp2 - std::conj(eta) * tab.jm2);
    psi.amps = spinsq::apply(u.matrix, tab.psi0.amps);
  } else {
    psi = evolve_eigen(*tab.eigen, x, tab.psi0).state;
  }

  const SpinMoments m = spin_moments(tab.ops, psi);
  row.mean_spin = mean_spin(m);
  row.corr_xy = 2.0 * m.sym[0][1] - 2.0 * m.mean[0] * m.mean[1];
  row.corr_xz = 2.0 * m.sym[0][2] - 2.0 * m.mean[0] * m.mean[2];
  row.corr_yz = 2.0 * m.sym[1][2] - 2.0 * m.mean[1] * m.mean[2];
  if (row.mean_spin.magnitude < kMeanSpinEps) {
    row.status = RowStatus::mean_spin_vanishes;
  } else {
    row.report = squeeze_report(m);
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  validate(spec);
  const Grid grid = spec.eta_grid ? *spec.eta_grid : *spec.t_grid;

  std::vector<SpaceTables> tables;
  tables.reserve(spec.two_j_values.size());
  for (int tj : spec.two_j_values) {
    const SpinSpace space(tj);
    SpinOperators ops = build_spin_ops(space);
    StateVector psi0 = coherent_state(space, CoherentParams{spec.theta, spec.phi});
    SpaceTables t{std::move(ops), std::move(psi0), {}, {}, {}};
    if (spec.eta_grid) {
      t.jp2 = multiply(t.ops.j_plus, t.ops.j_plus);
      t.jm2 = multiply(t.ops.j_minus, t.ops.j_minus);
    } else {
      t.eigen = hermitian_eigen(build_hamiltonian(t.ops, *spec.hamiltonian));
    }
    tables.push_back(std::move(t));
  }

  const size_t total = tables.size() * static_cast<size_t>(grid.steps);
  std::vector<SweepRow> rows(total);

  // Each point writes only its own pre-sized slot; output order is grid order
  // (two_j-major) regardless of how many workers execute the points.
  auto work_point = [&](size_t idx) {
    const size_t si = idx / grid.steps;
    const int gi = static_cast<int>(idx % grid.steps);
    rows[idx] = evaluate_point(spec, tables[si], grid.point(gi));
  };

  const int nworkers = std::min<int>(spec.workers, static_cast<int>(total));
  if (nworkers <= 1) {
    for (size_t i = 0; i < total; ++i) work_point(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nworkers);
    for (int w = 0; w < nworkers; ++w)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) work_point(i);
      });
    for (auto& th : pool) th.join();
  }
  return rows;
}

}  // namespace spinsq
