#include <doctest.h>

#include <cmath>
#include <random>

#include "spinsqueeze/dynamics.hpp"

using namespace spinsq;

namespace {

// ||[Jx,Jy] - i Jz||_max
double commutator_defect(const SpinOperators& ops) {
  const ComplexMatrix comm =
      multiply(ops.j_x, ops.j_y) - multiply(ops.j_y, ops.j_x) - cplx(0.0, 1.0) * ops.j_z;
  return max_abs(comm);
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return multiply(a, b) + multiply(b, a);
}

// Least-squares fit of `target` in the span of `basis` (Gram solve with plain
// Gaussian elimination); returns the Frobenius norm of the residual.
double span_fit_residual(const ComplexMatrix& target, const std::vector<ComplexMatrix>& basis) {
  const size_t nb = basis.size();
  auto dot = [](const ComplexMatrix& a, const ComplexMatrix& b) {
    cplx s = 0.0;
    auto da = a.data();
    auto db = b.data();
    for (size_t i = 0; i < da.size(); ++i) s += std::conj(da[i]) * db[i];
    return s;
  };
  std::vector<std::vector<cplx>> g(nb, std::vector<cplx>(nb + 1));
  for (size_t r = 0; r < nb; ++r) {
    for (size_t c = 0; c < nb; ++c) g[r][c] = dot(basis[r], basis[c]);
    g[r][nb] = dot(basis[r], target);
  }
  for (size_t p = 0; p < nb; ++p) {  // partial pivoting
    size_t piv = p;
    for (size_t r = p + 1; r < nb; ++r)
      if (std::abs(g[r][p]) > std::abs(g[piv][p])) piv = r;
    std::swap(g[p], g[piv]);
    for (size_t r = p + 1; r < nb; ++r) {
      const cplx f = g[r][p] / g[p][p];
      for (size_t c = p; c <= nb; ++c) g[r][c] -= f * g[p][c];
    }
  }
  std::vector<cplx> coef(nb);
  for (size_t p = nb; p-- > 0;) {
    cplx s = g[p][nb];
    for (size_t c = p + 1; c < nb; ++c) s -= g[p][c] * coef[c];
    coef[p] = s / g[p][p];
  }
  ComplexMatrix res = target;
  for (size_t i = 0; i < nb; ++i) res = res - coef[i] * basis[i];
  return frobenius_norm(res);
}

}  // namespace

TEST_CASE("spin-1/2 matrices") {
  const SpinOperators ops = build_spin_ops(SpinSpace(1));
  CHECK(ops.j_z(0, 0) == cplx(0.5));
  CHECK(ops.j_z(1, 1) == cplx(-0.5));
  CHECK(ops.j_plus(0, 1) == cplx(1.0));
  CHECK(ops.j_plus(0, 0) == cplx(0.0));
  CHECK(ops.j_plus(1, 0) == cplx(0.0));
  CHECK(ops.j_plus(1, 1) == cplx(0.0));
}

TEST_CASE("j=1 ladder entries") {
  const SpinOperators ops = build_spin_ops(SpinSpace(2));
  // J+|1,0> = sqrt(2)|1,+1>, J+|1,-1> = sqrt(2)|1,0>
  CHECK(ops.j_plus(0, 1).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(ops.j_plus(1, 2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(ops.j_plus(0, 2) == cplx(0.0));
}

TEST_CASE("commutator and J^2 for a range of j") {
  for (int tj : {0, 1, 2, 3, 7, 20, 50}) {
    const SpinOperators ops = build_spin_ops(SpinSpace(tj));
    const double j = tj / 2.0;
    const double tol = 1e-12 * std::max(1.0, j * j);
    CHECK(commutator_defect(ops) <= tol);

    ComplexMatrix j2 = multiply(ops.j_x, ops.j_x) + multiply(ops.j_y, ops.j_y) +
                       multiply(ops.j_z, ops.j_z);
    CHECK(max_abs(j2 - ops.j_squared) <= tol);
  }
}

TEST_CASE("ladder nilpotency is exact") {
  for (int tj : {1, 2, 5, 11}) {
    const SpinOperators ops = build_spin_ops(SpinSpace(tj));
    ComplexMatrix p = ComplexMatrix::identity(tj + 1);
    for (int k = 0; k <= tj; ++k) p = multiply(p, ops.j_plus);
    CHECK(max_abs(p) == 0.0);
  }
}

TEST_CASE("two-axis hamiltonian for j=1") {
  const SpinOperators ops = build_spin_ops(SpinSpace(2));
  const ComplexMatrix h = build_hamiltonian(ops, TwoAxis{1.0});
  // equals (J+^2 - J-^2)/(2i), checked by direct multiplication
  const ComplexMatrix ref = cplx(0.0, -0.5) * (multiply(ops.j_plus, ops.j_plus) -
                                               multiply(ops.j_minus, ops.j_minus));
  CHECK(max_abs(h - ref) <= 1e-14);
  // <1,+1|H|1,-1> = -i, <1,-1|H|1,+1> = +i, everything else zero
  CHECK(std::abs(h(0, 2) - cplx(0.0, -1.0)) <= 1e-14);
  CHECK(std::abs(h(2, 0) - cplx(0.0, 1.0)) <= 1e-14);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (!((r == 0 && c == 2) || (r == 2 && c == 0))) CHECK(std::abs(h(r, c)) <= 1e-14);
}

TEST_CASE("one-axis hamiltonian is -Gamma Jz^2") {
  const SpinOperators ops = build_spin_ops(SpinSpace(2));
  const ComplexMatrix h = build_hamiltonian(ops, OneAxis{1.0});
  CHECK(h(0, 0) == cplx(-1.0));
  CHECK(h(1, 1) == cplx(0.0));
  CHECK(h(2, 2) == cplx(-1.0));
}

TEST_CASE("lipkin with G1=0 reduces to 2 G2 (J^2 - Jz^2)") {
  for (int tj : {2, 5, 9}) {
    const SpinOperators ops = build_spin_ops(SpinSpace(tj));
    const double g2 = 0.7;
    const ComplexMatrix h = build_hamiltonian(ops, Lipkin{0.0, g2});
    const ComplexMatrix ref =
        cplx(2.0 * g2, 0.0) * (ops.j_squared - multiply(ops.j_z, ops.j_z));
    CHECK(max_abs(h - ref) <= 1e-12 * std::max(1.0, max_abs(ref)));
    for (int r = 0; r < h.dim(); ++r)
      for (int c = 0; c < h.dim(); ++c)
        if (r != c) CHECK(h(r, c) == cplx(0.0));
  }
}

TEST_CASE("quadratic builder symmetrizes and matches the hand-built sum") {
  const SpinOperators ops = build_spin_ops(SpinSpace(5));
  Quadratic q;
  q.c = {{{0.3, -0.2, 0.1}, {-0.2, 0.0, 0.5}, {0.1, 0.5, -0.8}}};
  const ComplexMatrix h = build_hamiltonian(ops, q);

  const ComplexMatrix* comps[3] = {&ops.j_x, &ops.j_y, &ops.j_z};
  ComplexMatrix ref(ops.space.dim());
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      ref = ref + cplx(0.5 * q.c[k][l], 0.0) * anticommutator(*comps[k], *comps[l]);
  CHECK(max_abs(h - ref) <= 1e-13 * std::max(1.0, max_abs(ref)));
  CHECK(hermiticity_defect(h) <= 1e-13 * max_abs(h));
}

TEST_CASE("quadratic builder rejects asymmetric coefficients") {
  const SpinOperators ops = build_spin_ops(SpinSpace(2));
  Quadratic q;
  q.c[0][1] = 1.0;  // c[1][0] left 0
  CHECK_THROWS_WITH_AS(build_hamiltonian(ops, q),
                       doctest::Contains("NonSymmetricCoefficients"), Error);
}

TEST_CASE("hamiltonian hermiticity across the catalog") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const SpinOperators ops = build_spin_ops(SpinSpace(7));
  for (int i = 0; i < 10; ++i) {
    Quadratic q;
    for (int k = 0; k < 3; ++k)
      for (int l = k; l < 3; ++l) q.c[k][l] = q.c[l][k] = u(rng);
    for (const HamiltonianSpec& spec :
         {HamiltonianSpec(TwoAxis{u(rng)}), HamiltonianSpec(OneAxis{u(rng)}),
          HamiltonianSpec(Lipkin{u(rng), u(rng)}), HamiltonianSpec(q)}) {
      const ComplexMatrix h = build_hamiltonian(ops, spec);
      CHECK(hermiticity_defect(h) <= 1e-13 * std::max(1.0, max_abs(h)));
    }
  }
}

TEST_CASE("lambda identities: exact at eps=0, tight at desk scale") {
  const LambdaCheck c0 = lambda_similarity_check(SpinSpace(2), 0.0);
  CHECK(c0.max_dev_similarity == 0.0);
  CHECK(c0.max_dev_metric == 0.0);

  const LambdaCheck c1 = lambda_similarity_check(SpinSpace(2), 0.5);
  CHECK(c1.max_dev_similarity <= 1e-12);
  CHECK(c1.max_dev_metric <= 1e-12);

  const LambdaCheck c2 = lambda_similarity_check(SpinSpace(10), 2.0);
  CHECK(c2.max_dev_similarity <= 1e-9);
  CHECK(c2.max_dev_metric <= 1e-9);
}

TEST_CASE("lambda check overflow guards") {
  CHECK_THROWS_WITH_AS(lambda_similarity_check(SpinSpace(2), 21.0),
                       doctest::Contains("Overflow"), Error);
  CHECK_THROWS_WITH_AS(lambda_similarity_check(SpinSpace(80), 20.0),
                       doctest::Contains("Overflow"), Error);
}

TEST_CASE("lambda spectrum is the Jx spectrum {-j..+j}") {
  // consequence of the similarity to Jx: check via exact conjugation
  const SpinSpace space(6);
  const SpinOperators ops = build_spin_ops(space);
  const EigenSystem es = hermitian_eigen(ops.j_x);
  for (int k = 0; k <= 6; ++k)
    CHECK(es.eigenvalues[k] == doctest::Approx(-3.0 + k).epsilon(1e-12));
}

TEST_CASE("parity blocks of the two-axis j=1 hamiltonian") {
  const SpinOperators ops = build_spin_ops(SpinSpace(2));
  const ParityBlocks pb = parity_blocks(build_hamiltonian(ops, TwoAxis{1.0}));
  CHECK(pb.even_indices == std::vector<int>{0, 2});  // m = +1, -1
  CHECK(pb.odd_indices == std::vector<int>{1});      // m = 0
  CHECK(pb.even_block.dim() == 2);
  CHECK(pb.odd_block.dim() == 1);
}

TEST_CASE("one-axis blocks are diagonal") {
  const SpinOperators ops = build_spin_ops(SpinSpace(9));
  const ParityBlocks pb = parity_blocks(build_hamiltonian(ops, OneAxis{0.8}));
  for (const ComplexMatrix* b : {&pb.even_block, &pb.odd_block})
    for (int r = 0; r < b->dim(); ++r)
      for (int c = 0; c < b->dim(); ++c)
        if (r != c) CHECK((*b)(r, c) == cplx(0.0));
}

TEST_CASE("parity-block eigensolve equals the full solve (two-axis j=10)") {
  const SpinOperators ops = build_spin_ops(SpinSpace(20));
  const ComplexMatrix h = build_hamiltonian(ops, TwoAxis{1.0});
  const EigenSystem full = hermitian_eigen(h);
  const EigenSystem blocked = eigen_via_parity_blocks(h);
  for (size_t k = 0; k < full.eigenvalues.size(); ++k)
    CHECK(std::abs(full.eigenvalues[k] - blocked.eigenvalues[k]) <= 1e-10);
  // re-embedded eigenvectors reconstruct H
  ComplexMatrix lam(h.dim());
  for (int k = 0; k < h.dim(); ++k) lam(k, k) = blocked.eigenvalues[k];
  const ComplexMatrix rec =
      multiply(multiply(blocked.eigenvectors, lam), dagger(blocked.eigenvectors));
  CHECK(max_abs(rec - h) <= 1e-10 * (1.0 + max_abs(h)));
}

TEST_CASE("parity structure holds for two-axis and lipkin") {
  const SpinOperators ops = build_spin_ops(SpinSpace(11));
  for (const HamiltonianSpec& spec :
       {HamiltonianSpec(TwoAxis{0.9}), HamiltonianSpec(Lipkin{0.4, -0.3})}) {
    const ComplexMatrix h = build_hamiltonian(ops, spec);
    for (int r = 0; r < h.dim(); ++r)
      for (int c = 0; c < h.dim(); ++c) {
        const int d = std::abs(r - c);
        if (d != 0 && d != 2) CHECK(std::abs(h(r, c)) <= 1e-14 * max_abs(h));
      }
  }
}

TEST_CASE("non-block-structured input rejected") {
  const SpinOperators ops = build_spin_ops(SpinSpace(4));
  CHECK_THROWS_WITH_AS(parity_blocks(ops.j_x), doctest::Contains("NotBlockStructured"), Error);
}

TEST_CASE("rotation operator basics") {
  const SpinOperators ops = build_spin_ops(SpinSpace(4));
  const UnitaryOperator r0 = rotation_operator(ops, {0.0, 0.0, 1.0}, 0.0);
  CHECK(max_abs(r0.matrix - ComplexMatrix::identity(5)) == 0.0);

  // z-rotation by pi flips Jx
  const UnitaryOperator rz = rotation_operator(ops, {0.0, 0.0, 1.0}, M_PI);
  const ComplexMatrix conj_jx = multiply(multiply(rz.matrix, ops.j_x), dagger(rz.matrix));
  CHECK(max_abs(conj_jx + ops.j_x) <= 1e-10);

  // z-rotation by pi/2 flips the sign of {Jx,Jy}
  const UnitaryOperator rq = rotation_operator(ops, {0.0, 0.0, 1.0}, M_PI / 2.0);
  const ComplexMatrix xy = anticommutator(ops.j_x, ops.j_y);
  const ComplexMatrix conj_xy = multiply(multiply(rq.matrix, xy), dagger(rq.matrix));
  CHECK(max_abs(conj_xy + xy) <= 1e-10);

  CHECK_THROWS_WITH_AS(rotation_operator(ops, {0.0, 0.0, 2.0}, 1.0),
                       doctest::Contains("BadAxis"), Error);
}

TEST_CASE("rotated quadratic stays in the symmetrized-quadratic span") {
  // 3x3 = 5+3+1: conjugating {Jx,Jy} by any rotation lands back in the span
  // of the six symmetrized quadratics (five traceless ones plus J^2).
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0), uang(0.0, 2.0 * M_PI);
  const SpinOperators ops = build_spin_ops(SpinSpace(8));
  const std::vector<ComplexMatrix> basis = {
      multiply(ops.j_x, ops.j_x),          multiply(ops.j_y, ops.j_y),
      multiply(ops.j_z, ops.j_z),          anticommutator(ops.j_x, ops.j_y),
      anticommutator(ops.j_x, ops.j_z),    anticommutator(ops.j_y, ops.j_z)};
  const ComplexMatrix xy = anticommutator(ops.j_x, ops.j_y);

  for (int i = 0; i < 20; ++i) {
    std::array<double, 3> axis = {u(rng), u(rng), u(rng)};
    const double len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (len < 0.1) continue;
    for (double& a : axis) a /= len;
    const UnitaryOperator r = rotation_operator(ops, axis, uang(rng));
    const ComplexMatrix target = multiply(multiply(r.matrix, xy), dagger(r.matrix));
    CHECK(span_fit_residual(target, basis) <= 1e-9 * (1.0 + frobenius_norm(target)));
  }
}
