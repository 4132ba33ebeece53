#include "spinsqueeze/spin.hpp"

#include <cmath>
#include <string>

namespace spinsq {

SpinOperators build_spin_ops(const SpinSpace& space) {
  const int tj = space.two_j;
  const int dim = space.dim();

  ComplexMatrix jp(dim);
  // <j,m+1|J+|j,m> = sqrt(j(j+1) - m(m+1)); column n holds m = j - n, so J+
  // sends index n to n-1.  Written in 2m integers to keep the radicand exact.
  for (int n = 1; n < dim; ++n) {
    const int tm = tj - 2 * n;
    jp(n - 1, n) = 0.5 * std::sqrt(static_cast<double>(tj * (tj + 2) - tm * (tm + 2)));
  }
  ComplexMatrix jm = dagger(jp);

  ComplexMatrix jx(dim), jy(dim), jz(dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      jx(r, c) = 0.5 * (jp(r, c) + jm(r, c));
      jy(r, c) = cplx(0.0, -0.5) * (jp(r, c) - jm(r, c));
    }
    jz(r, r) = space.m_of(r);
  }

  ComplexMatrix j2(dim);
  const double jj = space.j() * (space.j() + 1.0);
  for (int r = 0; r < dim; ++r) j2(r, r) = jj;

  return SpinOperators{space, std::move(jp), std::move(jm), std::move(jx),
                       std::move(jy), std::move(jz), std::move(j2)};
}

namespace {

void check_hermitian_output(const ComplexMatrix& h) {
  const double scale = max_abs(h);
  if (hermiticity_defect(h) > 1e-13 * (scale > 0.0 ? scale : 1.0))
    fail(Errc::not_hermitian, "hamiltonian builder output");
}

}  // namespace

ComplexMatrix build_hamiltonian(const SpinOperators& ops, const HamiltonianSpec& spec) {
  ComplexMatrix h = std::visit(
      [&ops](const auto& s) -> ComplexMatrix {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TwoAxis>) {
          return cplx(s.zeta, 0.0) *
                 (multiply(ops.j_x, ops.j_y) + multiply(ops.j_y, ops.j_x));
        } else if constexpr (std::is_same_v<T, OneAxis>) {
          return cplx(-s.gamma, 0.0) * multiply(ops.j_z, ops.j_z);
        } else if constexpr (std::is_same_v<T, Lipkin>) {
          return cplx(s.g1, 0.0) *
                     (multiply(ops.j_plus, ops.j_plus) + multiply(ops.j_minus, ops.j_minus)) +
                 cplx(s.g2, 0.0) *
                     (multiply(ops.j_plus, ops.j_minus) + multiply(ops.j_minus, ops.j_plus));
        } else if constexpr (std::is_same_v<T, Quadratic>) {
          for (int k = 0; k < 3; ++k)
            for (int l = k + 1; l < 3; ++l)
              if (s.c[k][l] != s.c[l][k])
                fail(Errc::non_symmetric_coefficients, "quadratic coefficient array");
          const ComplexMatrix* comps[3] = {&ops.j_x, &ops.j_y, &ops.j_z};
          ComplexMatrix acc(ops.space.dim());
          for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) {
              if (s.c[k][l] == 0.0) continue;
              acc = acc + cplx(0.5 * s.c[k][l], 0.0) *
                              (multiply(*comps[k], *comps[l]) + multiply(*comps[l], *comps[k]));
            }
          return acc;
        } else {
          static_assert(std::is_same_v<T, LambdaOp>);
          return cplx(0.5 * std::exp(s.epsilon), 0.0) * ops.j_plus +
                 cplx(0.5 * std::exp(-s.epsilon), 0.0) * ops.j_minus;
        }
      },
      spec);
  if (!std::holds_alternative<LambdaOp>(spec)) check_hermitian_output(h);
  return h;
}

LambdaCheck lambda_similarity_check(const SpinSpace& space, double epsilon) {
  if (!(std::abs(epsilon) <= 20.0)) fail(Errc::overflow, "|epsilon| must be <= 20");
  if (2.0 * std::abs(epsilon) * space.j() > 700.0)
    fail(Errc::overflow, "exp(2 epsilon j) exceeds double range");

  const SpinOperators ops = build_spin_ops(space);
  const ComplexMatrix lambda = build_hamiltonian(ops, LambdaOp{epsilon});
  const ComplexMatrix lambda_dag = dagger(lambda);
  const int dim = space.dim();

  // Conjugation by exp(-a Jz): entry (r,c) picks up exp(-a (m_r - m_c)), an
  // exact diagonal similarity * no matrix exponential involved.
  auto conjugate_by_exp_jz = [&](double a) {
    ComplexMatrix out(dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        out(r, c) = lambda(r, c) * std::exp(-a * (space.m_of(r) - space.m_of(c)));
    return out;
  };

  LambdaCheck result;
  const ComplexMatrix sim = conjugate_by_exp_jz(epsilon);         // O Lambda O^-1
  const ComplexMatrix met = conjugate_by_exp_jz(2.0 * epsilon);   // eta Lambda eta^-1
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      result.max_dev_similarity =
          std::max(result.max_dev_similarity, std::abs(sim(r, c) - ops.j_x(r, c)));
      result.max_dev_metric =
          std::max(result.max_dev_metric, std::abs(met(r, c) - lambda_dag(r, c)));
    }
  return result;
}

ParityBlocks parity_blocks(const ComplexMatrix& h) {
  const int dim = h.dim();
  const double scale = max_abs(h);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      const int d = r > c ? r - c : c - r;
      if (d != 0 && d != 2 && std::abs(h(r, c)) > 1e-14 * scale)
        fail(Errc::not_block_structured, "matrix couples |delta m| not in {0, 2}");
    }

  ParityBlocks pb;
  for (int n = 0; n < dim; ++n) (n % 2 == 0 ? pb.even_indices : pb.odd_indices).push_back(n);

  auto extract = [&h](const std::vector<int>& idx) {
    ComplexMatrix b(std::max<int>(1, static_cast<int>(idx.size())));
    for (size_t r = 0; r < idx.size(); ++r)
      for (size_t c = 0; c < idx.size(); ++c) b(static_cast<int>(r), static_cast<int>(c)) = h(idx[r], idx[c]);
    return b;
  };
  pb.even_block = extract(pb.even_indices);
  if (!pb.odd_indices.empty()) pb.odd_block = extract(pb.odd_indices);
  return pb;
}

EigenSystem eigen_via_parity_blocks(const ComplexMatrix& h) {
  const ParityBlocks pb = parity_blocks(h);
  const int dim = h.dim();

  struct Entry {
    double value;
    int block;  // 0 even, 1 odd
    int k;
  };
  std::vector<Entry> entries;
  const EigenSystem even_es = hermitian_eigen(pb.even_block);
  for (size_t k = 0; k < even_es.eigenvalues.size(); ++k)
    entries.push_back({even_es.eigenvalues[k], 0, static_cast<int>(k)});
  EigenSystem odd_es;
  if (!pb.odd_indices.empty()) {
    odd_es = hermitian_eigen(pb.odd_block);
    for (size_t k = 0; k < odd_es.eigenvalues.size(); ++k)
      entries.push_back({odd_es.eigenvalues[k], 1, static_cast<int>(k)});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.block != b.block) return a.block < b.block;
    return a.k < b.k;
  });

  EigenSystem es;
  es.eigenvalues.reserve(dim);
  es.eigenvectors = ComplexMatrix(dim);
  for (int col = 0; col < dim; ++col) {
    const Entry& e = entries[col];
    es.eigenvalues.push_back(e.value);
    const auto& idx = e.block == 0 ? pb.even_indices : pb.odd_indices;
    const auto& src = e.block == 0 ? even_es.eigenvectors : odd_es.eigenvectors;
    for (size_t r = 0; r < idx.size(); ++r)
      es.eigenvectors(idx[r], col) = src(static_cast<int>(r), e.k);
  }
  return es;
}

UnitaryOperator rotation_operator(const SpinOperators& ops, const std::array<double, 3>& axis,
                                  double angle) {
  const double len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (std::abs(len - 1.0) > 1e-12) fail(Errc::bad_axis, "axis must be unit length");

  const int dim = ops.space.dim();
  ComplexMatrix gen(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      gen(r, c) = cplx(0.0, -angle) *
                  (axis[0] * ops.j_x(r, c) + axis[1] * ops.j_y(r, c) + axis[2] * ops.j_z(r, c));
  return expm_antihermitian(gen);
}

}  // namespace spinsq
