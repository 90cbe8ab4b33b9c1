#include "skeinrep/analysis.hpp"

#include <functional>

namespace skeinrep {

CommutantReport commutant(std::span<const RepMatrix> mats) {
  if (mats.empty()) throw DimensionMismatch("commutant: empty family");
  const Eigen::Index n = mats.front().rows();
  for (const auto& m : mats)
    if (m.rows() != n || m.cols() != n)
      throw DimensionMismatch("commutant: matrices must be square of equal size");

  std::vector<bool> allowed(n * n, true);
  std::vector<const RepMatrix*> rest;
  for (const auto& m : mats) {
    if (!is_diagonal(m)) {
      rest.push_back(&m);
      continue;
    }
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (m(i, i) != m(j, j)) allowed[i * n + j] = false;
  }
  std::vector<Eigen::Index> var_of(n * n, -1);
  std::vector<Eigen::Index> entry_of;
  for (Eigen::Index e = 0; e < n * n; ++e)
    if (allowed[e]) {
      var_of[e] = static_cast<Eigen::Index>(entry_of.size());
      entry_of.push_back(e);
    }
  const auto nv = static_cast<Eigen::Index>(entry_of.size());

  // (X M - M X)(i, j) = sum_k X(i,k) M(k,j) - M(i,k) X(k,j)
  std::vector<CycloVector> rows;
  for (const RepMatrix* mp : rest) {
    const RepMatrix& m = *mp;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        CycloVector row = CycloVector::Constant(nv, CycloScalar(0));
        bool any = false;
        for (Eigen::Index k = 0; k < n; ++k) {
          if (const auto v = var_of[i * n + k]; v >= 0 && !m(k, j).is_zero()) {
            row(v) += m(k, j);
            any = true;
          }
          if (const auto v = var_of[k * n + j]; v >= 0 && !m(i, k).is_zero()) {
            row(v) -= m(i, k);
            any = true;
          }
        }
        if (any) rows.push_back(std::move(row));
      }
  }
  RepMatrix system(static_cast<Eigen::Index>(rows.size()), nv);
  for (std::size_t r = 0; r < rows.size(); ++r) system.row(static_cast<Eigen::Index>(r)) = rows[r];
  const RepMatrix null = nv == 0 ? RepMatrix(0, 0) : nullspace<CycloScalar>(system);

  CommutantReport rep;
  rep.generators = static_cast<int>(mats.size());
  rep.dimension = n;
  rep.commutant_dimension = null.cols();
  for (Eigen::Index k = 0; k < null.cols(); ++k) {
    RepMatrix x = RepMatrix::Constant(n, n, CycloScalar(0));
    for (Eigen::Index v = 0; v < nv; ++v) x(entry_of[v] / n, entry_of[v] % n) = null(v, k);
    rep.basis.push_back(std::move(x));
  }
  // Free coordinates of the nullspace basis: 1 in its own column, 0 elsewhere.
  for (Eigen::Index k = 0; k < null.cols(); ++k) {
    for (Eigen::Index v = 0; v < nv; ++v) {
      if (null(v, k) != CycloScalar(1)) continue;
      bool unit = true;
      for (Eigen::Index l = 0; l < null.cols() && unit; ++l)
        if (l != k && !null(v, l).is_zero()) unit = false;
      if (!unit) continue;
      rep.coordinates.emplace_back(entry_of[v] / n, entry_of[v] % n);
      break;
    }
  }
  rep.irreducible = rep.commutant_dimension == 1;
  return rep;
}

CommutantReport irreducibility_verdict(int g, const Level& L, const EvalOptions& opt) {
  const auto gens = generator_matrices(g, L, opt);
  return commutant(gens);
}

RepMatrix to_exact(const IntMatrix& z, const Level& L) {
  RepMatrix m(z.rows(), z.cols());
  for (Eigen::Index i = 0; i < z.rows(); ++i)
    for (Eigen::Index j = 0; j < z.cols(); ++j) m(i, j) = CycloScalar(z(i, j)) * CycloScalar::one(L);
  return m;
}

std::vector<IntMatrix> modular_invariants(const Level& L, int bound) {
  if (bound < 1) throw std::invalid_argument("modular_invariants: bound must be at least 1");
  const std::vector<RepMatrix> st{normalize_projective(s_matrix(L)), t_matrix(L)};
  const CommutantReport com = commutant(st);
  const auto d = static_cast<std::size_t>(com.commutant_dimension);
  if (com.coordinates.size() != d)
    throw std::logic_error("modular_invariants: commutant basis has no unit coordinates");
  const Eigen::Index n = com.dimension;

  std::vector<IntMatrix> found;
  std::vector<long> c(d, 0);
  std::function<void(std::size_t)> visit = [&](std::size_t k) {
    if (k < d) {
      for (long v = 0; v <= bound; ++v) {
        c[k] = v;
        visit(k + 1);
      }
      return;
    }
    RepMatrix z = RepMatrix::Constant(n, n, CycloScalar(0));
    for (std::size_t t = 0; t < d; ++t)
      if (c[t] != 0) z += com.basis[t] * CycloScalar(c[t]);
    IntMatrix zi(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        const CycloScalar& x = z(i, j);
        if (!x.is_rational()) return;
        const mpq_class q = x.rational_value();
        if (q.get_den() != 1 || q < 0 || q > bound) return;
        zi(i, j) = q.get_num().get_si();
      }
    if (zi(0, 0) != 1) return;
    found.push_back(std::move(zi));
  };
  visit(0);
  return found;
}

CounterexampleReport counterexample_demo(const Level& L) {
  CounterexampleReport rep;
  rep.generator = RepMatrix::Constant(2, 2, CycloScalar::zero(L));
  rep.generator(0, 0) = CycloScalar::one(L);
  rep.generator(1, 1) = CycloScalar(2) * CycloScalar::one(L);
  rep.start = CycloVector::Constant(2, CycloScalar::one(L));
  const std::vector<RepMatrix> gens{rep.generator};
  rep.orbit_rank = orbit_rank(gens, rep.start, 2);
  const auto com = commutant(gens);
  rep.commutant_dimension = com.commutant_dimension;
  rep.irreducible = com.irreducible;
  return rep;
}

}  // namespace skeinrep
