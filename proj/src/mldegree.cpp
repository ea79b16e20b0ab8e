#include "fermat_mld/mldegree.hpp"

#include <sstream>
#include <stdexcept>

#include "fermat_mld/errors.hpp"

namespace fermat_mld {

FermatQuery::FermatQuery(unsigned n, unsigned d) : n_(n), d_(d) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  if (d == 0) throw std::invalid_argument("d must be at least 2");
  if (d == 1) throw DegreeOneUnsupported();
}

BetaSource auto_beta_source(EnumerationOptions options) {
  return [options](unsigned mu, unsigned nu) { return resolve_beta(mu, nu, options); };
}

EulerCharValue euler_smooth_hypersurface(unsigned m, unsigned d) {
  if (d == 0) throw std::invalid_argument("euler_smooth_hypersurface: d must be positive");
  BigInt numerator = power(1 - static_cast<long>(d), m + 1) - 1;
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), d))
    throw NonExactDivision("euler_smooth_hypersurface");
  mpz_divexact_ui(numerator.get_mpz_t(), numerator.get_mpz_t(), d);
  return {m, d, BigInt(m + 1) + numerator};
}

BigInt ml_degree_general(unsigned n, unsigned d) {
  BigInt sum = 0, term = 1;
  for (unsigned k = 1; k <= n; ++k) {
    term *= d;
    sum += term;
  }
  return sum;
}

MLDegreeReport ml_degree_fermat(const FermatQuery& query, const BetaSource& beta) {
  const unsigned n = query.n(), d = query.d();
  MLDegreeReport report{query, ml_degree_general(n, d), {}, 0};
  report.total = report.base;
  for (unsigned j = 0; j < n; ++j) {
    BetaRecord record = beta(n - j, d - 1);
    Correction c{j, binomial(n + 1, j), record.value, 0, record.method};
    c.product = c.binomial * c.beta;
    report.total -= c.product;
    report.corrections.push_back(std::move(c));
  }
  return report;
}

BigInt ml_degree_fermat_quadric(unsigned n) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  return power(2, n + 1) - 2;
}

BigInt ml_degree_fermat_surface(unsigned d) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  static constexpr int kDeficit[6] = {0, 5, 0, 3, 2, 3};
  BigInt dd = d;
  return dd * dd + dd - kDeficit[d % 6];
}

BigInt ml_degree_fermat_prime_power(unsigned n, unsigned d) {
  const FermatQuery query(n, d);
  const BigInt base = ml_degree_general(n, d);
  if (d == 2) return base;
  const auto form = PrimePowerForm::of(d - 1);
  if (!form) throw NotPrimePower(d - 1);

  const BigInt top = factorial(n + 1);
  std::vector<BigInt> fact_pow((n + 1) / form->p + 1);
  for (unsigned s = 0; s < fact_pow.size(); ++s) {
    BigInt f = factorial(s);
    mpz_pow_ui(fact_pow[s].get_mpz_t(), f.get_mpz_t(), form->p);
  }
  BigInt sum = 0;
  for (unsigned total = 1; total * form->p <= n + 1; ++total) {
    const BigInt rest = factorial(n + 1 - form->p * total);
    for_each_composition(total, form->k, [&](std::span<const unsigned> parts) {
      BigInt denom = rest;
      for (unsigned s : parts) denom *= fact_pow[s];
      BigInt term;
      mpz_divexact(term.get_mpz_t(), top.get_mpz_t(), denom.get_mpz_t());
      sum += term;
    });
  }
  if (!mpz_divisible_ui_p(sum.get_mpz_t(), d - 1))
    throw NonExactDivision("ml_degree_fermat_prime_power");
  return base - sum / (d - 1);
}

BigInt singular_point_count(unsigned n, unsigned d, unsigned i, const BetaSource& beta) {
  const FermatQuery query(n, d);
  if (i < 1 || i > n) throw std::invalid_argument("singular_point_count: need 1 <= i <= n");
  return beta(n - i + 1, d - 1).value;
}

BigInt integer_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t size = a.size();
  for (const auto& row : a)
    if (row.size() != size) throw std::invalid_argument("integer_determinant: matrix not square");
  if (size == 0) return 1;

  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < size && a[swap][k] == 0) ++swap;
      if (swap == size) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        BigInt v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

BigInt jacobian_linear_part_determinant(unsigned l) {
  std::vector<std::vector<BigInt>> m(l, std::vector<BigInt>(l, 1));
  for (unsigned i = 0; i < l; ++i) m[i][i] = 2;
  return integer_determinant(std::move(m));
}

bool milnor_span_check(unsigned l) {
  return jacobian_linear_part_determinant(l) != 0;
}

unsigned milnor_number(unsigned l) {
  // A germ in C^0 is a reduced point; otherwise J_f = maximal ideal.
  if (l == 0 || milnor_span_check(l)) return 1;
  throw std::logic_error("Jacobian linear parts fail to span");
}

bool EulerIdentityOutcome::passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

EulerIdentityOutcome euler_complement_identity(unsigned n, unsigned d,
                                               const BetaSource& beta) {
  const FermatQuery query(n, d);
  const auto sign = [](unsigned k) { return k % 2 == 0 ? BigInt(1) : BigInt(-1); };
  const auto e = [d](unsigned m) { return euler_smooth_hypersurface(m, d).value; };
  const auto suffix = [&] {
    std::ostringstream os;
    os << " n=" << n << " d=" << d;
    return os.str();
  }();

  // Strata: V^i (i coordinate hyperplanes) and W^i (H_+ plus i-1 of them).
  BigInt chi_strata = 0;
  for (unsigned i = 0; i <= n; ++i) {
    BigInt term = binomial(n + 1, i) * e(n - i);
    if (i >= 1) {
      const BigInt singular = singular_point_count(n, d, i, beta);
      const BigInt chi_w = e(n - i) + sign(n - i) * singular * milnor_number(n - i);
      term += binomial(n + 1, i - 1) * chi_w;
    }
    chi_strata += sign(i) * term;
  }

  BigInt general_sum = 0;
  for (unsigned i = 0; i <= n; ++i) general_sum += sign(i) * binomial(n + 2, i) * e(n - i);
  BigInt chi_collapsed = general_sum;
  for (unsigned i = 1; i <= n; ++i)
    chi_collapsed += sign(n) * binomial(n + 1, i - 1) * beta(n - i + 1, d - 1).value;

  const BigInt ml = ml_degree_fermat(query, beta).total;

  EulerIdentityOutcome outcome;
  outcome.chi_complement = chi_strata;
  outcome.checks.push_back({"general hypersurface identity" + suffix, general_sum,
                            sign(n - 1) * ml_degree_general(n, d)});
  outcome.checks.push_back({"strata vs collapsed binomials" + suffix, chi_strata, chi_collapsed});
  outcome.checks.push_back({"Huh sign identity" + suffix, chi_strata, sign(n - 1) * ml});
  return outcome;
}

}  // namespace fermat_mld
