#pragma once

#include <complex>
#include <span>
#include <vector>

#include "spinsqueeze/errors.hpp"

namespace spinsq {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {
    if (dim < 1) fail(Errc::invalid_argument, "matrix dim must be >= 1");
  }

  static ComplexMatrix identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  int dim() const noexcept { return dim_; }
  cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
  const cplx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }
  std::span<const cplx> data() const noexcept { return a_; }
  std::span<cplx> data() noexcept { return a_; }

 private:
  int dim_ = 0;
  std::vector<cplx> a_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);

double max_abs(const ComplexMatrix& a);              // ||A||_max
double frobenius_norm(const ComplexMatrix& a);       // ||A||_F
double hermiticity_defect(const ComplexMatrix& a);   // ||A - A^dag||_max
double antihermiticity_defect(const ComplexMatrix& a);  // ||A + A^dag||_max
double unitarity_defect(const ComplexMatrix& u);     // ||U^dag U - I||_max
bool all_finite(const ComplexMatrix& a);

// Eigendecomposition of a Hermitian matrix.  Eigenvalues ascending; eigenvector
// phases are fixed (largest-magnitude component real and non-negative, ties
// broken by lowest row index) so repeated runs are bit-identical.
struct EigenSystem {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;  // column k pairs with eigenvalues[k]
};

struct UnitaryOperator {
  ComplexMatrix matrix;
  double defect = 0.0;  // ||U^dag U - I||_max measured at construction
};

// Cyclic complex Jacobi.  Converges when the off-diagonal Frobenius mass drops
// below 1e-26 * ||H||_F^2; hard cap 100 sweeps (NoConvergence past that).
// Precondition: ||H - H^dag||_max <= 1e-12 * (1 + ||H||_max).
EigenSystem hermitian_eigen(const ComplexMatrix& h);

// exp(A) by scaling-and-squaring with a truncated series; the scaled norm is
// brought below 0.5 before summing.  No structure assumed.
ComplexMatrix expm_taylor(const ComplexMatrix& a);

// exp(A) for anti-Hermitian A; result checked unitary to 1e-10.
// Precondition: ||A + A^dag||_max <= 1e-12 * (1 + ||A||_max).
UnitaryOperator expm_antihermitian(const ComplexMatrix& a);

// Plain matrix-vector product, no renormalization.
std::vector<cplx> apply(const ComplexMatrix& m, std::span<const cplx> v);

}  // namespace spinsq
