#include "spinsqueeze/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spinsq {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::dim_mismatch: return "DimMismatch";
    case Errc::space_mismatch: return "SpaceMismatch";
    case Errc::not_hermitian: return "NotHermitian";
    case Errc::not_antihermitian: return "NotAntiHermitian";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::non_symmetric_coefficients: return "NonSymmetricCoefficients";
    case Errc::overflow: return "Overflow";
    case Errc::not_block_structured: return "NotBlockStructured";
    case Errc::bad_axis: return "BadAxis";
    case Errc::mean_spin_vanishes: return "MeanSpinVanishes";
    case Errc::pole_at_vanishing_mean_spin: return "PoleAtVanishingMeanSpin";
    case Errc::config_error: return "ConfigError";
  }
  return "Error";
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) fail(Errc::dim_mismatch, "matrix add");
  ComplexMatrix r(a.dim());
  auto ra = r.data();
  auto aa = a.data();
  auto ba = b.data();
  for (size_t i = 0; i < ra.size(); ++i) ra[i] = aa[i] + ba[i];
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) fail(Errc::dim_mismatch, "matrix sub");
  ComplexMatrix r(a.dim());
  auto ra = r.data();
  auto aa = a.data();
  auto ba = b.data();
  for (size_t i = 0; i < ra.size(); ++i) ra[i] = aa[i] - ba[i];
  return r;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
  ComplexMatrix r(a.dim());
  auto ra = r.data();
  auto aa = a.data();
  for (size_t i = 0; i < ra.size(); ++i) ra[i] = s * aa[i];
  return r;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) fail(Errc::dim_mismatch, "matrix multiply");
  const int n = a.dim();
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  const int n = a.dim();
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const cplx& z : a.data()) m = std::max(m, std::abs(z));
  return m;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const cplx& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

double hermiticity_defect(const ComplexMatrix& a) {
  const int n = a.dim();
  double m = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

double antihermiticity_defect(const ComplexMatrix& a) {
  const int n = a.dim();
  double m = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m = std::max(m, std::abs(a(i, j) + std::conj(a(j, i))));
  return m;
}

double unitarity_defect(const ComplexMatrix& u) {
  const int n = u.dim();
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < n; ++k) s += std::conj(u(k, i)) * u(k, j);
      if (i == j) s -= 1.0;
      m = std::max(m, std::abs(s));
    }
  }
  return m;
}

bool all_finite(const ComplexMatrix& a) {
  for (const cplx& z : a.data())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

namespace {

double offdiagonal_mass(const ComplexMatrix& h) {
  const int n = h.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += std::norm(h(i, j));
  return s;
}

// One complex Jacobi rotation annihilating h(p,q), p < q.  The 2x2 unitary is
// V = [[c e^{i phi}, s e^{i phi}], [-s, c]] with phi = arg h(p,q): stripping
// the phase reduces the block to the real symmetric case, where the classic
// t = sign(tau)/(|tau| + sqrt(1 + tau^2)) picks the smaller rotation angle.
void jacobi_rotate(ComplexMatrix& h, ComplexMatrix& v, int p, int q) {
  const cplx hpq = h(p, q);
  const double beta = std::abs(hpq);
  if (beta == 0.0) return;
  const cplx phase = hpq / beta;
  const double app = h(p, p).real();
  const double aqq = h(q, q).real();
  const double tau = (aqq - app) / (2.0 * beta);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cplx vpp = c * phase, vpq = s * phase;

  const int n = h.dim();
  // columns p, q of H (right-multiply by V)
  for (int r = 0; r < n; ++r) {
    const cplx hp = h(r, p), hq = h(r, q);
    h(r, p) = vpp * hp - s * hq;
    h(r, q) = vpq * hp + c * hq;
  }
  // rows p, q of H (left-multiply by V^dag)
  const cplx cphase = std::conj(phase);
  for (int col = 0; col < n; ++col) {
    const cplx hp = h(p, col), hq = h(q, col);
    h(p, col) = c * cphase * hp - s * hq;
    h(q, col) = s * cphase * hp + c * hq;
  }
  // pin the exactly-known entries to kill rotation round-off
  h(p, q) = 0.0;
  h(q, p) = 0.0;
  h(p, p) = cplx(app - t * beta, 0.0);
  h(q, q) = cplx(aqq + t * beta, 0.0);
  // accumulate eigenvectors
  for (int r = 0; r < n; ++r) {
    const cplx wp = v(r, p), wq = v(r, q);
    v(r, p) = vpp * wp - s * wq;
    v(r, q) = vpq * wp + c * wq;
  }
}

// Largest-magnitude component real and non-negative; ties broken by lowest
// row index.  Keeps eigenvector phases reproducible across runs and languages.
void fix_column_phase(ComplexMatrix& v, int col) {
  const int n = v.dim();
  int best = 0;
  double best_mag = std::abs(v(0, col));
  for (int r = 1; r < n; ++r) {
    const double m = std::abs(v(r, col));
    if (m > best_mag) {
      best_mag = m;
      best = r;
    }
  }
  if (best_mag == 0.0) return;
  const cplx rot = std::conj(v(best, col)) / best_mag;
  for (int r = 0; r < n; ++r) v(r, col) *= rot;
  v(best, col) = cplx(std::abs(v(best, col)), 0.0);
}

}  // namespace

EigenSystem hermitian_eigen(const ComplexMatrix& h_in) {
  if (!all_finite(h_in)) fail(Errc::invalid_argument, "non-finite matrix entries");
  if (hermiticity_defect(h_in) > 1e-12 * (1.0 + max_abs(h_in)))
    fail(Errc::not_hermitian, "hermitian_eigen input");

  const int n = h_in.dim();
  ComplexMatrix h = h_in;
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double fnorm2 = frobenius_norm(h) * frobenius_norm(h);
  const double threshold = 1e-26 * fnorm2;
  constexpr int kMaxSweeps = 100;

  if (n > 1 && fnorm2 > 0.0) {
    int sweep = 0;
    while (offdiagonal_mass(h) > threshold) {
      if (++sweep > kMaxSweeps) fail(Errc::no_convergence, "jacobi sweep cap exhausted");
      for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) jacobi_rotate(h, v, p, q);
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&h](int a, int b) { return h(a, a).real() < h(b, b).real(); });

  EigenSystem es;
  es.eigenvalues.resize(n);
  es.eigenvectors = ComplexMatrix(n);
  for (int k = 0; k < n; ++k) {
    es.eigenvalues[k] = h(order[k], order[k]).real();
    for (int r = 0; r < n; ++r) es.eigenvectors(r, k) = v(r, order[k]);
    fix_column_phase(es.eigenvectors, k);
  }
  return es;
}

ComplexMatrix expm_taylor(const ComplexMatrix& a) {
  if (!all_finite(a)) fail(Errc::invalid_argument, "non-finite matrix entries");
  const int n = a.dim();

  // infinity norm (max row sum)
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::abs(a(i, j));
    norm = std::max(norm, row);
  }

  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const double scale = std::ldexp(1.0, -squarings);

  ComplexMatrix b = cplx(scale, 0.0) * a;
  ComplexMatrix sum = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= 40; ++k) {
    term = cplx(1.0 / k, 0.0) * multiply(term, b);
    sum = sum + term;
    if (max_abs(term) <= 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) sum = multiply(sum, sum);
  return sum;
}

UnitaryOperator expm_antihermitian(const ComplexMatrix& a) {
  if (!all_finite(a)) fail(Errc::invalid_argument, "non-finite matrix entries");
  if (antihermiticity_defect(a) > 1e-12 * (1.0 + max_abs(a)))
    fail(Errc::not_antihermitian, "expm_antihermitian input");
  ComplexMatrix u = expm_taylor(a);
  const double defect = unitarity_defect(u);
  if (defect > 1e-10) fail(Errc::no_convergence, "propagator lost unitarity");
  return UnitaryOperator{std::move(u), defect};
}

std::vector<cplx> apply(const ComplexMatrix& m, std::span<const cplx> v) {
  const int n = m.dim();
  if (static_cast<size_t>(n) != v.size()) fail(Errc::dim_mismatch, "matrix-vector apply");
  std::vector<cplx> r(n);
  for (int i = 0; i < n; ++i) {
    cplx s = 0.0;
    for (int j = 0; j < n; ++j) s += m(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

}  // namespace spinsq
