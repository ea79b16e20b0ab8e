#include "fermat_mld/verification.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fermat_mld/cyclotomic.hpp"
#include "fermat_mld/errors.hpp"
#include "fermat_mld/exponent_multiset.hpp"

namespace fermat_mld {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
    case CheckStatus::info: return "INFO";
  }
  return "?";
}

std::string render(const CheckLine& line) {
  std::ostringstream os;
  os << to_string(line.status) << ' ' << line.label << ": " << line.lhs;
  switch (line.status) {
    case CheckStatus::fail: os << " != "; break;
    case CheckStatus::info: os << ' '; break;
    default: os << " == "; break;
  }
  os << line.rhs;
  if (line.status == CheckStatus::skip) os << " (budget exceeded)";
  return os.str();
}

bool all_passed(const std::vector<CheckLine>& lines) {
  return std::none_of(lines.begin(), lines.end(),
                      [](const CheckLine& l) { return l.status == CheckStatus::fail; });
}

namespace {

class SuiteWriter {
 public:
  explicit SuiteWriter(std::string suite) : suite_(std::move(suite)) {}

  template <class L, class R>
  void equal(const std::string& label, const L& lhs, const R& rhs) {
    lines_.push_back({suite_, label, str(lhs), str(rhs),
                      lhs == rhs ? CheckStatus::pass : CheckStatus::fail});
  }

  void info(const std::string& label, const std::string& lhs, const std::string& rhs) {
    lines_.push_back({suite_, label, lhs, rhs, CheckStatus::info});
  }

  // Runs a check that may need an enumeration beyond the budget.
  template <class F>
  void guarded(const std::string& label, F&& check) {
    try {
      check();
    } catch (const BudgetExceeded&) {
      lines_.push_back({suite_, label, "?", "?", CheckStatus::skip});
    }
  }

  std::vector<CheckLine> take() { return std::move(lines_); }

 private:
  template <class T, class U>
  static std::string str(const __gmp_expr<T, U>& v) {
    return BigInt(v).get_str();
  }
  static std::string str(bool v) { return v ? "true" : "false"; }
  static std::string str(const std::string& v) { return v; }
  template <class T>
  static std::string str(const T& v) {
    return std::to_string(v);
  }

  std::string suite_;
  std::vector<CheckLine> lines_;
};

std::string cell(const char* name, unsigned a, unsigned b) {
  std::ostringstream os;
  os << name << '(' << a << ',' << b << ')';
  return os.str();
}

}  // namespace

std::vector<CheckLine> run_cyclotomic_suite() {
  SuiteWriter out("cyclotomic");
  for (unsigned nu = 1; nu <= 60; ++nu) {
    IntegerPolynomial product{1};
    for (unsigned long d : divisors(nu))
      product = poly_mul(product, cyclotomic_polynomial(CyclotomicOrder(d)));
    const IntegerPolynomial expected =
        poly_sub(IntegerPolynomial::monomial(1, nu), IntegerPolynomial{1});
    out.equal("product of Phi_d over d | " + std::to_string(nu), product.to_string(),
              expected.to_string());
  }
  for (unsigned nu = 1; nu <= 60; ++nu) {
    const auto& phi = cyclotomic_polynomial(CyclotomicOrder(nu));
    out.equal("deg Phi_" + std::to_string(nu) + " vs totient",
              static_cast<unsigned long>(*phi.degree()), euler_totient(nu));
  }
  for (unsigned nu = 1; nu <= 60; ++nu) {
    const auto primes = distinct_prime_factors(nu);
    BigInt expected = nu == 1 ? 0 : primes.size() == 1 ? BigInt(primes.front()) : BigInt(1);
    out.equal("Phi_" + std::to_string(nu) + "(1)",
              cyclotomic_polynomial(CyclotomicOrder(nu)).evaluate(1), expected);
  }
  for (unsigned nu = 2; nu <= 12; ++nu) {
    unsigned mismatches = 0;
    for (unsigned weight = 0; weight <= 4; ++weight) {
      for (MultisetEnumerator it(nu, weight); it.current(); it.advance()) {
        const ExponentMultiset m(*it.current());
        for (unsigned k = 1; k < nu; ++k) {
          if (std::gcd(k, nu) != 1) continue;
          for (bool add_one : {false, true})
            if (vanishing_sum_test(m, add_one) !=
                vanishing_sum_test(m.galois_conjugate(k), add_one))
              ++mismatches;
        }
      }
    }
    out.equal("Galois invariance mismatches nu=" + std::to_string(nu), mismatches, 0u);
  }
  return out.take();
}

std::vector<CheckLine> run_counting_suite(const VerificationConfig& config) {
  SuiteWriter out("counting");
  const auto& opt = config.options;

  for (unsigned nu = 1; nu <= 8; ++nu)
    for (unsigned mu = 0; mu <= 5; ++mu) {
      const std::string label = "brute vs symmetric " + cell("beta", mu, nu);
      out.guarded(label, [&] {
        out.equal(label, beta_bruteforce(mu, nu, opt), beta_symmetric(mu, nu, opt));
      });
    }

  for (unsigned nu : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto form = *PrimePowerForm::of(nu);
    for (unsigned mu = 0; mu + 1 <= 10; ++mu) {
      if ((mu + 1) % form.p != 0) continue;
      const std::string label = "prime power vs symmetric " + cell("beta", mu, nu);
      out.guarded(label, [&] {
        out.equal(label, beta_prime_power(mu, form), beta_symmetric(mu, nu, opt));
      });
    }
  }

  for (unsigned nu = 1; nu <= 8; ++nu)
    for (unsigned mu = 1; mu <= 6; ++mu) {
      const std::string label = "alpha vs nu*beta " + cell("alpha", mu, nu);
      out.guarded(label, [&] {
        out.equal(label, alpha_direct(mu, nu, opt),
                  BigInt(nu) * beta_symmetric(mu - 1, nu, opt));
      });
    }

  for (unsigned nu = 1; nu <= 12; ++nu)
    for (unsigned mu = 0; mu <= 7; ++mu) {
      const std::string label =
          "Lam-Leung " + cell("beta", mu, nu) + " != 0 iff " + cell("LL", mu + 1, nu);
      out.guarded(label, [&] {
        out.equal(label, beta_symmetric(mu, nu, opt) != 0, lam_leung_nonvanishing(mu + 1, nu));
      });
    }

  for (unsigned nu = 1; nu <= 8; ++nu)
    for (unsigned mu = 0; mu <= 5; ++mu)
      out.equal("multiset mass " + cell("mass", mu, nu), multiset_mass(mu, nu), power(nu, mu));

  for (unsigned nu = 1; nu <= 12; ++nu)
    for (unsigned mu = 1; mu <= 2; ++mu) {
      const std::string label = "closed form " + cell("beta", mu, nu);
      out.guarded(label, [&] {
        out.equal(label, *beta_closed_small(mu, nu), beta_symmetric(mu, nu, opt));
      });
    }
  return out.take();
}

std::vector<CheckLine> run_mldegree_suite(const VerificationConfig& config) {
  SuiteWriter out("mldeg");
  const auto& beta = config.beta;

  for (unsigned nu = 1; nu <= 8; ++nu)
    for (unsigned mu = 1; mu <= 4; ++mu) {
      const std::string label = "beta source vs enumeration " + cell("beta", mu, nu);
      out.guarded(label, [&] {
        out.equal(label, beta(mu, nu).value, beta_symmetric(mu, nu, config.options));
      });
    }

  for (unsigned n = 1; n <= 10; ++n)
    out.equal("quadric MLdeg(F_{" + std::to_string(n) + ",2})",
              ml_degree_fermat(FermatQuery(n, 2), beta).total, ml_degree_fermat_quadric(n));

  for (unsigned d = 2; d <= 30; ++d) {
    const std::string label = "surface MLdeg(F_{2," + std::to_string(d) + "})";
    out.guarded(label, [&] {
      out.equal(label, ml_degree_fermat(FermatQuery(2, d), beta).total,
                ml_degree_fermat_surface(d));
    });
  }

  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned d : {2u, 3u, 4u, 5u, 6u, 8u, 9u, 10u}) {
      const std::string label = "prime-power corollary " + cell("MLdeg", n, d);
      out.guarded(label, [&] {
        out.equal(label, ml_degree_fermat(FermatQuery(n, d), beta).total,
                  ml_degree_fermat_prime_power(n, d));
      });
    }

  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned d = 2; d <= 8; ++d) {
      out.guarded("Euler identity chain " + cell("F", n, d), [&] {
        for (const auto& check : euler_complement_identity(n, d, beta).checks)
          out.equal(check.label, check.lhs, check.rhs);
      });
    }

  for (unsigned m = 1; m <= 12; ++m)
    out.equal("hyperplane e_{" + std::to_string(m) + ",1}",
              euler_smooth_hypersurface(m, 1).value, BigInt(m));
  out.equal("points on a line e_{1,5}", euler_smooth_hypersurface(1, 5).value, BigInt(5));
  out.equal("cubic curve e_{2,3}", euler_smooth_hypersurface(2, 3).value, BigInt(0));
  out.equal("quadric surface e_{3,2}", euler_smooth_hypersurface(3, 2).value, BigInt(4));

  for (unsigned l = 1; l <= 20; ++l)
    out.equal("Milnor span det(I+J) l=" + std::to_string(l),
              jacobian_linear_part_determinant(l), BigInt(l + 1));

  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned d = 2; d <= 8; ++d) {
      const std::string label = "corrections nonnegative " + cell("MLdeg", n, d);
      out.guarded(label, [&] {
        const auto report = ml_degree_fermat(FermatQuery(n, d), beta);
        const bool nonneg = std::all_of(report.corrections.begin(), report.corrections.end(),
                                        [](const Correction& c) { return c.product >= 0; });
        out.equal(label, nonneg && report.total <= report.base, true);
        out.info("observed sign of " + cell("MLdeg", n, d),
                 report.total.get_str(), report.total >= 0 ? ">= 0" : "< 0");
      });
    }
  return out.take();
}

}  // namespace fermat_mld
