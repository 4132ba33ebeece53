#pragma once

#include <array>
#include <variant>
#include <vector>

#include "spinsqueeze/linalg.hpp"

namespace spinsq {

// Hilbert space of a single spin j.  Stores 2j as an integer so half-integer
// j is exact.  Basis ordering is m = +j, j-1, ..., -j; index n = j - m.
struct SpinSpace {
  int two_j = 0;

  explicit SpinSpace(int tj) : two_j(tj) {
    if (tj < 0) fail(Errc::invalid_argument, "two_j must be >= 0");
  }
  int dim() const noexcept { return two_j + 1; }
  double j() const noexcept { return two_j / 2.0; }
  double m_of(int n) const noexcept { return (two_j - 2 * n) / 2.0; }

  friend bool operator==(const SpinSpace& a, const SpinSpace& b) { return a.two_j == b.two_j; }
};

struct SpinOperators {
  SpinSpace space;
  ComplexMatrix j_plus, j_minus, j_x, j_y, j_z, j_squared;
};

SpinOperators build_spin_ops(const SpinSpace& space);

// Hamiltonian catalog.
struct TwoAxis { double zeta = 1.0; };                       // zeta (JxJy + JyJx)
struct OneAxis { double gamma = 1.0; };                      // -Gamma Jz^2
struct Lipkin { double g1 = 0.0, g2 = 0.0; };                // G1(J+^2 + J-^2) + G2(J+J- + J-J+)
struct Quadratic { std::array<std::array<double, 3>, 3> c{}; };  // sum c_kl (JkJl + JlJk)/2
struct LambdaOp { double epsilon = 0.0; };                   // (e^eps J+ + e^-eps J-)/2, non-Hermitian

using HamiltonianSpec = std::variant<TwoAxis, OneAxis, Lipkin, Quadratic, LambdaOp>;

// Builds the matrix for `spec` over the space of `ops`.  Output is verified
// Hermitian for every variant except LambdaOp.
ComplexMatrix build_hamiltonian(const SpinOperators& ops, const HamiltonianSpec& spec);

// Checks the two exact identities of the pseudo-Hermitian Lambda:
//   exp(-eps Jz) Lambda exp(+eps Jz) = Jx
//   exp(-2 eps Jz) Lambda exp(+2 eps Jz) = Lambda^dag
// The diagonal conjugations are computed with exact elementwise exponentials.
struct LambdaCheck {
  double max_dev_similarity = 0.0;  // vs Jx
  double max_dev_metric = 0.0;      // vs Lambda^dag
};
LambdaCheck lambda_similarity_check(const SpinSpace& space, double epsilon);

// Splits a (m <-> m, m+-2)-coupled matrix into its even/odd (j - m) parity
// blocks.  Index lists refer to basis index n = j - m.
struct ParityBlocks {
  std::vector<int> even_indices, odd_indices;
  ComplexMatrix even_block, odd_block;
};
ParityBlocks parity_blocks(const ComplexMatrix& h);

// Eigensystem obtained by solving the two parity blocks separately and
// re-embedding; equals hermitian_eigen(h) up to degenerate-subspace rotations.
EigenSystem eigen_via_parity_blocks(const ComplexMatrix& h);

// exp(-i angle axis.J); axis must be normalized to 1e-12.
UnitaryOperator rotation_operator(const SpinOperators& ops, const std::array<double, 3>& axis,
                                  double angle);

}  // namespace spinsq
