#include <doctest.h>

#include <cmath>
#include <random>

#include "spinsqueeze/dynamics.hpp"
#include "spinsqueeze/io.hpp"
#include "spinsqueeze/twoatom.hpp"

using namespace spinsq;

TEST_CASE("squeeze propagator at eta=0 is the identity") {
  const SpinOperators ops = build_spin_ops(SpinSpace(6));
  const UnitaryOperator u = squeeze_propagator(ops, 0.0);
  CHECK(max_abs(u.matrix - ComplexMatrix::identity(7)) == 0.0);
}

TEST_CASE("small squeeze of |1,+1> rotates within the m=+-1 block") {
  const SpinOperators ops = build_spin_ops(SpinSpace(2));
  const StateVector psi0 = basis_state(ops.space, 0);
  const auto amps = spinsq::apply(squeeze_propagator(ops, M_PI / 16.0).matrix, psi0.amps);
  CHECK(std::abs(amps[0] - cplx(std::cos(M_PI / 8.0))) <= 1e-12);
  CHECK(std::abs(amps[1]) <= 1e-14);
  CHECK(std::abs(amps[2] - cplx(-std::sin(M_PI / 8.0))) <= 1e-12);
  CHECK(amps[0].real() == doctest::Approx(0.9238795325112867).epsilon(1e-12));
  CHECK(amps[2].real() == doctest::Approx(-0.3826834323650898).epsilon(1e-12));
}

TEST_CASE("convention lock: propagator reproduces the closed-form amplitudes") {
  std::mt19937 rng(61);
  std::uniform_real_distribution<double> uxi(0.0, 2.0), umag(0.0, M_PI / 2.0),
      uang(0.0, 2.0 * M_PI);
  const SpinOperators ops = build_spin_ops(SpinSpace(2));
  for (int i = 0; i < 50; ++i) {
    const double xi = uxi(rng);
    const cplx eta = std::polar(umag(rng), uang(rng));
    const StateVector psi0 = coherent_state(ops.space, params_from_real_xi(xi));
    const auto amps = spinsq::apply(squeeze_propagator(ops, eta).matrix, psi0.amps);
    const TwoAtomCoefficients c = analytic_coefficients(xi, eta);
    CHECK(std::abs(amps[0] - c.c1) <= 1e-10);
    CHECK(std::abs(amps[1] - c.c2) <= 1e-10);
    CHECK(std::abs(amps[2] - c.c3) <= 1e-10);
  }
}

TEST_CASE("variances return to the coherent values at eta=pi/2") {
  const SpinOperators ops = build_spin_ops(SpinSpace(2));
  const StateVector psi0 = coherent_state(ops.space, params_from_real_xi(0.7));
  const SqueezeReport before = squeeze_report(ops, psi0);
  const StateVector after{
      ops.space, spinsq::apply(squeeze_propagator(ops, M_PI / 2.0).matrix, psi0.amps)};
  const SqueezeReport rep = squeeze_report(ops, after);
  CHECK(std::abs(rep.var_x - before.var_x) <= 1e-10);
  CHECK(std::abs(rep.var_y - before.var_y) <= 1e-10);
  CHECK(std::abs(rep.mean_spin.magnitude - before.mean_spin.magnitude) <= 1e-10);
}

TEST_CASE("group property for real eta") {
  const SpinOperators ops = build_spin_ops(SpinSpace(5));
  std::mt19937 rng(71);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  for (int i = 0; i < 10; ++i) {
    const double e1 = u(rng), e2 = u(rng);
    const ComplexMatrix lhs =
        multiply(squeeze_propagator(ops, e1).matrix, squeeze_propagator(ops, e2).matrix);
    const ComplexMatrix rhs = squeeze_propagator(ops, e1 + e2).matrix;
    CHECK(max_abs(lhs - rhs) <= 1e-10);
  }
}

TEST_CASE("two-atom variances are pi/2-periodic in eta") {
  const SpinOperators ops = build_spin_ops(SpinSpace(2));
  for (double xi : {0.0, 0.5, 1.3}) {
    const StateVector psi0 = coherent_state(ops.space, params_from_real_xi(xi));
    for (double eta : {0.05, 0.3, 1.1}) {
      const StateVector a{ops.space,
                          spinsq::apply(squeeze_propagator(ops, eta).matrix, psi0.amps)};
      const StateVector b{
          ops.space,
          spinsq::apply(squeeze_propagator(ops, eta + M_PI / 2.0).matrix, psi0.amps)};
      const SqueezeReport ra = squeeze_report(ops, a), rb = squeeze_report(ops, b);
      CHECK(std::abs(ra.var_x - rb.var_x) <= 1e-10);
      CHECK(std::abs(ra.var_y - rb.var_y) <= 1e-10);
    }
  }
}

TEST_CASE("propagator unitarity up to dim 51") {
  for (int tj : {1, 2, 10, 50}) {
    const SpinOperators ops = build_spin_ops(SpinSpace(tj));
    for (const cplx eta : {cplx(0.4, 0.0), cplx(0.1, 0.7)})
      CHECK(squeeze_propagator(ops, eta).defect <= 1e-10);
  }
}

TEST_CASE("eta bound enforced") {
  const SpinOperators ops = build_spin_ops(SpinSpace(2));
  CHECK_THROWS_WITH_AS(squeeze_propagator(ops, cplx(40.0, 0.0)),
                       doctest::Contains("InvalidArgument"), Error);
}

TEST_CASE("evolve_eigen at t=0 returns the input state") {
  const SpinOperators ops = build_spin_ops(SpinSpace(8));
  const ComplexMatrix h = build_hamiltonian(ops, TwoAxis{1.0});
  const StateVector psi0 = coherent_state(ops.space, CoherentParams{0.7, 0.2});
  const EvolutionResult res = evolve_eigen(h, 0.0, psi0);
  for (size_t n = 0; n < psi0.amps.size(); ++n)
    CHECK(std::abs(res.state.amps[n] - psi0.amps[n]) <= 1e-12);
  CHECK(res.propagator_checksum <= 1e-10);
}

TEST_CASE("one-axis evolution applies diagonal phases e^{+i Gamma t m^2}") {
  const SpinOperators ops = build_spin_ops(SpinSpace(5));
  const double gamma = 0.9, t = 1.7;
  const ComplexMatrix h = build_hamiltonian(ops, OneAxis{gamma});
  const StateVector psi0 = coherent_state(ops.space, CoherentParams{1.0, 0.5});
  const EvolutionResult res = evolve_eigen(h, t, psi0);
  for (int n = 0; n < ops.space.dim(); ++n) {
    const double m = ops.space.m_of(n);
    const cplx want = psi0.amps[n] * std::polar(1.0, gamma * t * m * m);
    CHECK(std::abs(res.state.amps[n] - want) <= 1e-12);
  }
}

TEST_CASE("two-axis evolution equals the squeeze propagator with eta = -zeta t/2") {
  const SpinOperators ops = build_spin_ops(SpinSpace(7));
  const double zeta = 0.8, t = 1.3;
  const ComplexMatrix h = build_hamiltonian(ops, TwoAxis{zeta});
  const StateVector psi0 = coherent_state(ops.space, CoherentParams{1.2, 0.9});
  const EvolutionResult via_eigen = evolve_eigen(h, t, psi0);
  const auto via_squeeze =
      spinsq::apply(squeeze_propagator(ops, -zeta * t / 2.0).matrix, psi0.amps);
  for (size_t n = 0; n < via_squeeze.size(); ++n)
    CHECK(std::abs(via_eigen.state.amps[n] - via_squeeze[n]) <= 1e-10);
}

TEST_CASE("eigen-path and expm-path evolution agree for random quadratics") {
  std::mt19937 rng(81);
  std::uniform_real_distribution<double> uc(-1.0, 1.0), ut(0.0, 2.0), uph(0.0, 2.0 * M_PI);
  std::uniform_int_distribution<int> utj(1, 20);
  for (int i = 0; i < 10; ++i) {
    const SpinSpace space(utj(rng));
    const SpinOperators ops = build_spin_ops(space);
    Quadratic q;
    for (int k = 0; k < 3; ++k)
      for (int l = k; l < 3; ++l) q.c[k][l] = q.c[l][k] = uc(rng);
    const ComplexMatrix h = build_hamiltonian(ops, q);
    const double t = ut(rng);
    const StateVector psi0 =
        coherent_state(space, CoherentParams{std::acos(uc(rng)), uph(rng)});
    const EvolutionResult a = evolve_eigen(h, t, psi0);
    const auto b = spinsq::apply(expm_antihermitian(cplx(0.0, -t) * h).matrix, psi0.amps);
    for (size_t n = 0; n < b.size(); ++n) CHECK(std::abs(a.state.amps[n] - b[n]) <= 1e-9);
  }
}

TEST_CASE("run_sweep: single point at eta=0 gives S = 1, 1") {
  SweepSpec spec;
  spec.two_j_values = {2};
  spec.eta_grid = Grid{0.0, 0.0, 1};
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].report.has_value());
  CHECK(rows[0].report->s_x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[0].report->s_y == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("run_sweep on the fig1 grid: pi/16 row and pi/8 pole marker") {
  SweepSpec spec;
  spec.two_j_values = {2};
  spec.theta = 0.0;
  spec.eta_grid = Grid{0.0, M_PI / 2.0, 256};
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 256);

  const SweepRow& r32 = rows[32];  // eta = 32*pi/512 = pi/16
  CHECK(r32.x == doctest::Approx(M_PI / 16.0).epsilon(1e-15));
  REQUIRE(r32.report.has_value());
  CHECK(std::min(r32.report->s_x, r32.report->s_y) ==
        doctest::Approx(0.6435942529055827).epsilon(1e-9));
  CHECK(std::max(r32.report->s_x, r32.report->s_y) ==
        doctest::Approx(1.5537739740300374).epsilon(1e-9));

  const SweepRow& r64 = rows[64];  // eta = pi/8, |<J>| = |cos(pi/2)| ~ 0
  CHECK(r64.status == RowStatus::mean_spin_vanishes);
  CHECK_FALSE(r64.report.has_value());
  CHECK(rows[63].status == RowStatus::ok);
}

TEST_CASE("run_sweep output is identical for 1 and 8 workers") {
  SweepSpec spec;
  spec.two_j_values = {2, 4, 6, 8};
  spec.theta = M_PI / 2.0;
  spec.eta_grid = Grid{0.0, 0.5, 16};
  spec.workers = 1;
  const std::string csv1 = sweep_csv(run_sweep(spec), {});
  spec.workers = 8;
  const std::string csv8 = sweep_csv(run_sweep(spec), {});
  CHECK(csv1 == csv8);
}

TEST_CASE("run_sweep validates its spec") {
  SweepSpec spec;
  CHECK_THROWS_WITH_AS(run_sweep(spec), doctest::Contains("ConfigError"), Error);
  spec.two_j_values = {2};
  CHECK_THROWS_WITH_AS(run_sweep(spec), doctest::Contains("ConfigError"), Error);
  spec.eta_grid = Grid{0.0, 1.0, 4};
  spec.hamiltonian = OneAxis{1.0};  // both modes at once
  CHECK_THROWS_WITH_AS(run_sweep(spec), doctest::Contains("ConfigError"), Error);
}

TEST_CASE("hamiltonian-mode sweep rows carry t") {
  SweepSpec spec;
  spec.two_j_values = {4};
  spec.theta = M_PI / 2.0;
  spec.hamiltonian = OneAxis{1.0};
  spec.t_grid = Grid{0.0, 1.0, 5};
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 5);
  CHECK(rows[1].x == doctest::Approx(0.2).epsilon(1e-15));
  for (const auto& r : rows) CHECK(r.status == RowStatus::ok);
}
