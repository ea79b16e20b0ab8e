// Test-only reference computations. None of these share code paths with
// the library: sums of roots are evaluated in floating point, Euler
// characteristics come from Chern classes, determinants from cofactors.
#ifndef FERMAT_MLD_TESTS_ORACLES_HPP
#define FERMAT_MLD_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

inline std::complex<double> root(unsigned nu, unsigned k) {
  const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(nu);
  return {std::cos(t), std::sin(t)};
}

/// |sum_i counts[i] zeta^i + shift| < 1e-6.
inline bool vanishes(const std::vector<unsigned>& counts, double shift) {
  const auto nu = static_cast<unsigned>(counts.size());
  std::complex<double> s = shift;
  for (unsigned i = 0; i < nu; ++i) s += static_cast<double>(counts[i]) * root(nu, i);
  return std::abs(s) < 1e-6;
}

/// Ordered mu-tuples of nu-th roots of unity with z_1 + ... + z_mu + shift = 0.
inline std::uint64_t count_tuples(unsigned mu, unsigned nu, double shift) {
  std::vector<std::complex<double>> roots;
  for (unsigned k = 0; k < nu; ++k) roots.push_back(root(nu, k));
  std::vector<unsigned> idx(mu, 0);
  std::uint64_t count = 0;
  while (true) {
    std::complex<double> s = shift;
    for (unsigned i : idx) s += roots[i];
    if (std::abs(s) < 1e-6) ++count;
    std::size_t i = 0;
    while (i < mu && ++idx[i] == nu) idx[i++] = 0;
    if (i == mu) break;
  }
  return count;
}

inline std::uint64_t beta(unsigned mu, unsigned nu) { return count_tuples(mu, nu, 1.0); }
inline std::uint64_t alpha(unsigned mu, unsigned nu) { return count_tuples(mu, nu, 0.0); }

/// Euler characteristic of a smooth degree-d hypersurface X in P^m from
/// c(TX) = (1+h)^(m+1) / (1+dh): chi = d * [h^(m-1)] of that series.
inline long euler_chern(unsigned m, unsigned d) {
  if (m == 0) return 0;
  const unsigned top = m - 1;
  std::vector<long> binom(m + 2, 0);
  binom[0] = 1;
  for (unsigned i = 1; i <= m + 1; ++i)
    for (unsigned j = i; j > 0; --j) binom[j] += binom[j - 1];
  long coeff = 0, dk = 1;  // (1+dh)^-1 = sum (-d)^k h^k
  for (unsigned k = 0; k <= top; ++k) {
    coeff += binom[top - k] * dk;
    dk *= -static_cast<long>(d);
  }
  return static_cast<long>(d) * coeff;
}

inline long laplace_determinant(const std::vector<std::vector<long>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  long det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(a[r][c]);
      minor.push_back(row);
    }
    det += (col % 2 == 0 ? 1 : -1) * a[0][col] * laplace_determinant(minor);
  }
  return det;
}

}  // namespace oracle

#endif  // FERMAT_MLD_TESTS_ORACLES_HPP
