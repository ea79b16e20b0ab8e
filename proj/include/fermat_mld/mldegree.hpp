#ifndef FERMAT_MLD_MLDEGREE_HPP
#define FERMAT_MLD_MLDEGREE_HPP

#include <functional>
#include <string>
#include <vector>

#include "fermat_mld/counting.hpp"
#include "fermat_mld/number_theory.hpp"

namespace fermat_mld {

/// The Fermat hypersurface x_0^d + ... + x_n^d = 0 in P^n, n >= 1, d >= 2.
class FermatQuery {
 public:
  /// Throws DegreeOneUnsupported for d = 1, std::invalid_argument for
  /// n = 0 or d = 0.
  FermatQuery(unsigned n, unsigned d);

  unsigned n() const noexcept { return n_; }
  unsigned d() const noexcept { return d_; }

 private:
  unsigned n_;
  unsigned d_;
};

/// Resolves beta(mu, nu). Injected so callers can add caching or, in
/// tests, deliberately wrong values.
using BetaSource = std::function<BetaRecord(unsigned mu, unsigned nu)>;

/// resolve_beta with the given enumeration options.
BetaSource auto_beta_source(EnumerationOptions options = {});

struct EulerCharValue {
  unsigned m;
  unsigned d;
  BigInt value;
};

/// Euler characteristic e_{m,d} of a smooth degree-d hypersurface in P^m:
/// (m + 1) + ((1 - d)^(m+1) - 1) / d.
EulerCharValue euler_smooth_hypersurface(unsigned m, unsigned d);

/// ML degree of a general degree-d hypersurface in P^n: d + d^2 + ... + d^n.
BigInt ml_degree_general(unsigned n, unsigned d);

struct Correction {
  unsigned j;
  BigInt binomial;  // C(n+1, j)
  BigInt beta;      // beta(n - j, d - 1)
  BigInt product;
  BetaMethod method;
};

struct MLDegreeReport {
  FermatQuery query;
  BigInt base;
  std::vector<Correction> corrections;  // j = 0 .. n-1
  BigInt total;
};

/// MLdeg(F_{n,d}) = (d + ... + d^n) - sum_{j<n} C(n+1, j) beta(n-j, d-1).
MLDegreeReport ml_degree_fermat(const FermatQuery& query, const BetaSource& beta);

/// 2^(n+1) - 2.
BigInt ml_degree_fermat_quadric(unsigned n);

/// d^2 + d minus 0, 3, 2 or 5 depending on d mod 6.
BigInt ml_degree_fermat_surface(unsigned d);

/// Closed form when d - 1 = p^r. d = 2 (d - 1 = 1) has an empty correction
/// sum. Throws NotPrimePower when d - 1 has two or more prime factors.
BigInt ml_degree_fermat_prime_power(unsigned n, unsigned d);

/// beta(n - i + 1, d - 1): singular points of F_{n,d} cut by the
/// codimension-i linear space W^i, for 1 <= i <= n.
BigInt singular_point_count(unsigned n, unsigned d, unsigned i, const BetaSource& beta);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt integer_determinant(std::vector<std::vector<BigInt>> matrix);

/// det(I_l + J_l), J_l the all-ones matrix. Row j holds the linear part of
/// the j-th Jacobian generator at a singular point, up to a unit.
BigInt jacobian_linear_part_determinant(unsigned l);

/// True iff the l vectors e_j + (1, ..., 1) span C^l.
bool milnor_span_check(unsigned l);

/// Milnor number of each singular point of F_{n,d} cut by W^i, where
/// l = n - i is the dimension of the germ. 1 whenever the span check holds.
unsigned milnor_number(unsigned l);

struct IdentityCheck {
  std::string label;
  BigInt lhs;
  BigInt rhs;
  bool passed() const { return lhs == rhs; }
};

struct EulerIdentityOutcome {
  /// chi of F_{n,d} minus the coordinate hyperplanes and x_0 + ... + x_n = 0.
  BigInt chi_complement;
  std::vector<IdentityCheck> checks;
  bool passed() const;
};

/// Recomputes chi(F_{n,d} \ H) by inclusion-exclusion over the strata V^i
/// and W^i, then checks: the general-hypersurface identity against
/// d + ... + d^n, agreement with the collapsed-binomial form, and the sign
/// identity chi = (-1)^(n-1) MLdeg.
EulerIdentityOutcome euler_complement_identity(unsigned n, unsigned d,
                                               const BetaSource& beta);

}  // namespace fermat_mld

#endif  // FERMAT_MLD_MLDEGREE_HPP
