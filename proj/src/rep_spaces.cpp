#include "skeinrep/rep_spaces.hpp"

#include "skeinrep/recoupling.hpp"

namespace skeinrep {

namespace {

// phi_n in the reduced basis: returns the index and a sign, or index -1.
std::pair<int, int> reduce_index(int n, int r) {
  const int period = 2 * r;
  int m = n % period;
  if (m < 0) m += period;
  if (m <= r - 2) return {m, 1};
  if (m == r - 1 || m == period - 1) return {-1, 0};
  return {2 * r - 2 - m, -1};
}

std::vector<CycloScalar> poly_mul(const std::vector<CycloScalar>& p,
                                  const std::vector<CycloScalar>& q, const Level& L) {
  if (p.empty() || q.empty()) return {};
  std::vector<CycloScalar> out(p.size() + q.size() - 1, CycloScalar::zero(L));
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.size(); ++j)
      if (!q[j].is_zero()) out[i + j] += p[i] * q[j];
  }
  return out;
}

}  // namespace

RTVector chebyshev_reduce(std::span<const CycloScalar> poly, const Level& L) {
  const int n = L.num_colors();
  RTVector out = RTVector::Constant(n, CycloScalar::zero(L));
  // Unreduced phi-expansion of alpha^k, updated by alpha * phi_a = phi_{a+1} + phi_{a-1}.
  std::vector<long> power{1};
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (k > 0) {
      std::vector<long> next(power.size() + 1, 0);
      for (std::size_t a = 0; a < power.size(); ++a) {
        next[a + 1] += power[a];
        if (a > 0) next[a - 1] += power[a];
      }
      power = std::move(next);
    }
    if (poly[k].is_zero()) continue;
    for (std::size_t a = 0; a < power.size(); ++a) {
      if (power[a] == 0) continue;
      const auto [idx, sign] = reduce_index(static_cast<int>(a), L.r());
      if (idx < 0) continue;
      out(idx) += poly[k] * CycloScalar(sign * power[a]);
    }
  }
  return out;
}

std::vector<CycloScalar> chebyshev_polynomial(int a, const Level& L) {
  if (a < 0) throw std::out_of_range("chebyshev_polynomial: negative index");
  std::vector<CycloScalar> prev;  // phi_{-1} = 0
  std::vector<CycloScalar> cur{CycloScalar::one(L)};
  for (int k = 0; k < a; ++k) {
    std::vector<CycloScalar> next(cur.size() + 1, CycloScalar::zero(L));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RTVector t_vector(int b, const Level& L) {
  if (b < 0 || b > L.max_color())
    throw std::out_of_range("t_vector: b must lie in 0.." + std::to_string(L.max_color()));
  // One (-1)-framed Omega copy as a polynomial in alpha.
  std::vector<CycloScalar> copy{CycloScalar::zero(L)};
  const CycloScalar eta = CycloScalar::eta(L);
  for (int a = 0; a <= L.max_color(); ++a) {
    const CycloScalar w = eta * delta(a, L) * xi(a, L).inverse();
    const auto p = chebyshev_polynomial(a, L);
    if (copy.size() < p.size()) copy.resize(p.size(), CycloScalar::zero(L));
    for (std::size_t i = 0; i < p.size(); ++i) copy[i] += w * p[i];
  }
  std::vector<CycloScalar> poly{CycloScalar::one(L)};
  for (int k = 0; k < b; ++k) poly = poly_mul(poly, copy, L);
  return chebyshev_reduce(poly, L);
}

RepMatrix framed_vandermonde_matrix(const Level& L) {
  const int n = L.num_colors();
  RepMatrix m(n, n);
  for (int a = 0; a < n; ++a) {
    const CycloScalar x = xi(a, L);
    CycloScalar p = delta(a, L);
    for (int b = 0; b < n; ++b) {
      m(b, a) = p;
      p *= x;
    }
  }
  return m;
}

RepMatrix hopf_matrix(const Level& L) {
  const int n = L.num_colors();
  RepMatrix h(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) h(a, b) = hopf(a, b, L);
  return h;
}

CycloScalar hopf_pairing(const RTVector& x, const RTVector& y, const Level& L) {
  if (x.size() != L.num_colors() || y.size() != L.num_colors())
    throw DimensionMismatch("hopf_pairing: vectors must have length r-1");
  CycloScalar s = CycloScalar::zero(L);
  for (int a = 0; a < x.size(); ++a) {
    if (x(a).is_zero()) continue;
    for (int b = 0; b < y.size(); ++b)
      if (!y(b).is_zero()) s += x(a) * y(b) * hopf(a, b, L);
  }
  return s;
}

}  // namespace skeinrep
