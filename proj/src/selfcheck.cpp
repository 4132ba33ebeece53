#include "spinsqueeze/selfcheck.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "spinsqueeze/dynamics.hpp"
#include "spinsqueeze/twoatom.hpp"

namespace spinsq {

namespace {

std::string worst_detail(double worst, double tol) {
  std::ostringstream ss;
  ss << "worst " << worst << " (tol " << tol << ")";
  return ss.str();
}

SuiteResult amplitude_lock(Convention conv) {
  std::mt19937 rng(20240214);
  std::uniform_real_distribution<double> uxi(0.0, 2.0), uang(0.0, 2.0 * M_PI), umag(0.0, M_PI / 2.0);
  const SpinOperators ops = build_spin_ops(SpinSpace(2));

  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double xi = uxi(rng);
    const cplx eta = std::polar(umag(rng), uang(rng));
    const StateVector psi0 = coherent_state(ops.space, params_from_real_xi(xi));
    std::vector<cplx> amps;
    if (conv == Convention::locked) {
      amps = spinsq::apply(squeeze_propagator(ops, eta).matrix, psi0.amps);
    } else {
      amps = spinsq::apply(squeeze_propagator_naive(ops, eta), psi0.amps);
    }
    const TwoAtomCoefficients c = analytic_coefficients(xi, eta);
    worst = std::max({worst, std::abs(amps[0] - c.c1), std::abs(amps[1] - c.c2),
                      std::abs(amps[2] - c.c3)});
  }
  return SuiteResult{"two-atom amplitude lock", worst <= 1e-10, worst_detail(worst, 1e-10)};
}

SuiteResult closed_form_variances() {
  const SpinOperators ops = build_spin_ops(SpinSpace(2));
  double worst = 0.0;
  for (int xi10 = 0; xi10 <= 20; xi10 += 2) {
    const double xi = xi10 / 10.0;
    for (int i = 0; i < 40; ++i) {
      const double eta = 0.01 + i * (M_PI / 2.0 - 0.02) / 39.0;
      if (std::abs(std::cos(4.0 * eta)) < 0.05) continue;
      const StateVector psi0 = coherent_state(ops.space, params_from_real_xi(xi));
      const StateVector psi{ops.space,
                            spinsq::apply(squeeze_propagator(ops, eta).matrix, psi0.amps)};
      const SqueezeReport rep = squeeze_report(ops, psi);
      const TwoAtomVariances v = analytic_variances(xi, eta);
      worst = std::max({worst, std::abs(rep.var_x - v.var_x), std::abs(rep.var_y - v.var_y),
                        std::abs(rep.mean_spin.magnitude * rep.mean_spin.magnitude -
                                 v.mean_spin_sq)});
    }
  }
  return SuiteResult{"closed-form variances", worst <= 1e-9, worst_detail(worst, 1e-9)};
}

SuiteResult lambda_identities() {
  double worst = 0.0;
  for (int tj : {2, 5, 10}) {
    for (double eps : {0.1, 0.5, 1.0}) {
      const LambdaCheck c = lambda_similarity_check(SpinSpace(tj), eps);
      worst = std::max({worst, c.max_dev_similarity, c.max_dev_metric});
    }
  }
  return SuiteResult{"lambda identities", worst <= 1e-10, worst_detail(worst, 1e-10)};
}

SuiteResult eigen_vs_expm(int max_j) {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> uc(-1.0, 1.0), ut(0.0, 2.0), uphi(0.0, 2.0 * M_PI);
  std::uniform_int_distribution<int> utj(1, std::max(1, 2 * max_j));

  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const SpinSpace space(utj(rng));
    const SpinOperators ops = build_spin_ops(space);
    Quadratic q;
    for (int k = 0; k < 3; ++k)
      for (int l = k; l < 3; ++l) q.c[k][l] = q.c[l][k] = uc(rng);
    const ComplexMatrix h = build_hamiltonian(ops, q);
    const double t = ut(rng);
    const StateVector psi0 =
        coherent_state(space, CoherentParams{std::acos(uc(rng)), uphi(rng)});

    const EvolutionResult via_eigen = evolve_eigen(h, t, psi0);
    const UnitaryOperator u = expm_antihermitian(cplx(0.0, -t) * h);
    const std::vector<cplx> via_expm = spinsq::apply(u.matrix, psi0.amps);
    for (size_t n = 0; n < via_expm.size(); ++n)
      worst = std::max(worst, std::abs(via_eigen.state.amps[n] - via_expm[n]));
  }
  return SuiteResult{"eigen vs expm evolution", worst <= 1e-9, worst_detail(worst, 1e-9)};
}

SuiteResult propagator_unitarity(int max_j) {
  double worst = 0.0;
  for (int tj = 1; tj <= 2 * max_j; tj += std::max(1, max_j / 2)) {
    const SpinOperators ops = build_spin_ops(SpinSpace(tj));
    for (const cplx eta : {cplx(0.3, 0.0), cplx(1.0, 0.0), cplx(0.2, 0.4)})
      worst = std::max(worst, squeeze_propagator(ops, eta).defect);
    worst = std::max(worst, rotation_operator(ops, {0.0, 0.0, 1.0}, 1.7).defect);
    worst = std::max(
        worst, rotation_operator(ops, {1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0),
                                       1.0 / std::sqrt(3.0)}, 0.9).defect);
  }
  return SuiteResult{"propagator unitarity", worst <= 1e-10, worst_detail(worst, 1e-10)};
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(int max_j, Convention conv) {
  if (max_j < 1) fail(Errc::config_error, "max_j must be >= 1");
  std::vector<SuiteResult> results;
  results.push_back(amplitude_lock(conv));
  results.push_back(closed_form_variances());
  results.push_back(lambda_identities());
  results.push_back(eigen_vs_expm(max_j));
  results.push_back(propagator_unitarity(max_j));
  return results;
}

}  // namespace spinsq
