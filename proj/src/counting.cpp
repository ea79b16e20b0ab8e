#include "fermat_mld/counting.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "fermat_mld/cyclotomic.hpp"
#include "fermat_mld/errors.hpp"
#include "fermat_mld/exponent_multiset.hpp"

namespace fermat_mld {

std::string_view to_string(BetaMethod method) {
  switch (method) {
    case BetaMethod::brute: return "brute";
    case BetaMethod::symmetric: return "symmetric";
    case BetaMethod::closed_small: return "closed_small";
    case BetaMethod::prime_power: return "prime_power";
  }
  return "?";
}

std::optional<BetaMethod> parse_beta_method(std::string_view name) {
  if (name == "brute") return BetaMethod::brute;
  if (name == "symmetric") return BetaMethod::symmetric;
  if (name == "closed" || name == "closed_small") return BetaMethod::closed_small;
  if (name == "prime_power") return BetaMethod::prime_power;
  return std::nullopt;
}

std::optional<PrimePowerForm> PrimePowerForm::of(unsigned nu) {
  if (nu < 2) return std::nullopt;
  const auto primes = distinct_prime_factors(nu);
  if (primes.size() != 1) return std::nullopt;
  const auto p = static_cast<unsigned>(primes.front());
  unsigned r = 0;
  for (unsigned v = nu; v > 1; v /= p) ++r;
  return PrimePowerForm{p, r, nu / p};
}

namespace {

void require_nu(unsigned nu) {
  if (nu == 0) throw std::invalid_argument("nu must be at least 1");
}

// Sums multinomial weights of all weight-mu multisets whose root sum
// (+1 when add_one) vanishes. Residue vectors are accumulated slot by slot,
// and the top slot m_0 is split across workers.
class SymmetricEnumeration {
 public:
  SymmetricEnumeration(unsigned mu, unsigned nu, bool add_one)
      : mu_(mu), nu_(nu), add_one_(add_one), residues_(CyclotomicOrder(nu)) {
    constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 2;
    if (residues_.max_abs() > 0 &&
        static_cast<std::int64_t>(mu) + 1 > kLimit / residues_.max_abs())
      throw std::overflow_error("symmetric enumeration: residue sums exceed machine range");
    factorials_.reserve(mu + 1);
    for (unsigned i = 0; i <= mu; ++i) factorials_.push_back(factorial(i));
  }

  BigInt run(unsigned threads) {
    threads = std::max(1u, std::min(threads, mu_ + 1));
    if (nu_ == 1 || threads == 1) {
      Worker w(*this);
      for (unsigned m0 = 0; m0 <= mu_; ++m0) w.start(m0);
      return w.total;
    }
    std::vector<Worker> workers(threads, Worker(*this));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (unsigned m0 = t; m0 <= mu_; m0 += threads) workers[t].start(m0);
      });
    }
    for (auto& th : pool) th.join();
    BigInt total = 0;
    for (const auto& w : workers) total += w.total;
    return total;
  }

 private:
  struct Worker {
    explicit Worker(const SymmetricEnumeration& e)
        : enumeration(&e), acc(e.residues_.width(), 0), counts(e.nu_, 0) {}

    void start(unsigned m0) {
      std::fill(acc.begin(), acc.end(), 0);
      if (enumeration->add_one_) add_row(0, 1);
      if (enumeration->nu_ == 1) {
        counts[0] = m0;
        if (m0 == enumeration->mu_) leaf(0, m0);
        return;
      }
      counts[0] = m0;
      add_row(0, m0);
      descend(1, enumeration->mu_ - m0);
    }

    void add_row(std::size_t slot, std::int64_t times) {
      const std::int64_t* row = enumeration->residues_.row(slot);
      for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += times * row[j];
    }

    void descend(unsigned slot, unsigned remaining) {
      const unsigned last = enumeration->nu_ - 1;
      if (slot == last) {
        leaf(slot, remaining);
        return;
      }
      for (unsigned m = 0; m <= remaining; ++m) {
        counts[slot] = m;
        descend(slot + 1, remaining - m);
        add_row(slot, 1);
      }
      add_row(slot, -static_cast<std::int64_t>(remaining) - 1);
      counts[slot] = 0;
    }

    void leaf(unsigned slot, unsigned m) {
      counts[slot] = m;
      add_row(slot, m);
      if (std::all_of(acc.begin(), acc.end(), [](std::int64_t v) { return v == 0; })) {
        BigInt w = enumeration->factorials_[enumeration->mu_];
        for (unsigned c : counts)
          if (c > 1)
            mpz_divexact(w.get_mpz_t(), w.get_mpz_t(),
                         enumeration->factorials_[c].get_mpz_t());
        total += w;
      }
      add_row(slot, -static_cast<std::int64_t>(m));
    }

    const SymmetricEnumeration* enumeration;
    std::vector<std::int64_t> acc;
    std::vector<unsigned> counts;
    BigInt total = 0;
  };

  unsigned mu_;
  unsigned nu_;
  bool add_one_;
  PowerResidues residues_;
  std::vector<BigInt> factorials_;
};

void check_multiset_budget(const char* what, unsigned mu, unsigned nu,
                           const EnumerationOptions& options) {
  const BigInt needed = binomial(mu + nu - 1, nu - 1);
  if (needed > BigInt(std::to_string(options.multiset_budget)))
    throw BudgetExceeded(what, needed.get_str(), options.multiset_budget);
}

BigInt count_vanishing(const char* what, unsigned mu, unsigned nu, bool add_one,
                       const EnumerationOptions& options) {
  require_nu(nu);
  check_multiset_budget(what, mu, nu, options);
  return SymmetricEnumeration(mu, nu, add_one).run(options.threads);
}

// sum over compositions s_1 + ... + s_k = total of  top! / (prod s_i!)^p
BigInt coset_sum(unsigned top, unsigned total, const PrimePowerForm& form) {
  const BigInt numerator = factorial(top);
  std::vector<BigInt> fact_pow(total + 1);
  for (unsigned s = 0; s <= total; ++s) {
    BigInt f = factorial(s);
    mpz_pow_ui(fact_pow[s].get_mpz_t(), f.get_mpz_t(), form.p);
  }
  BigInt sum = 0;
  for_each_composition(total, form.k, [&](std::span<const unsigned> parts) {
    BigInt denom = 1;
    for (unsigned s : parts) denom *= fact_pow[s];
    BigInt term;
    mpz_divexact(term.get_mpz_t(), numerator.get_mpz_t(), denom.get_mpz_t());
    sum += term;
  });
  return sum;
}

}  // namespace

BigInt beta_bruteforce(unsigned mu, unsigned nu, const EnumerationOptions& options) {
  require_nu(nu);
  const BigInt tuples = power(nu, mu);
  if (tuples > BigInt(std::to_string(options.tuple_budget)))
    throw BudgetExceeded("beta_bruteforce", tuples.get_str(), options.tuple_budget);

  BigInt count = 0;
  std::vector<unsigned> exponents(mu, 0);
  while (true) {
    if (vanishing_sum_test(ExponentMultiset::from_exponents(nu, exponents), true)) ++count;
    std::size_t i = 0;
    while (i < mu && ++exponents[i] == nu) exponents[i++] = 0;
    if (i == mu) break;
  }
  return count;
}

BigInt beta_symmetric(unsigned mu, unsigned nu, const EnumerationOptions& options) {
  return count_vanishing("beta_symmetric", mu, nu, true, options);
}

BigInt alpha_direct(unsigned mu, unsigned nu, const EnumerationOptions& options) {
  return count_vanishing("alpha_direct", mu, nu, false, options);
}

BigInt alpha_from_beta(unsigned mu, unsigned nu, const EnumerationOptions& options) {
  if (mu == 0) throw std::invalid_argument("alpha_from_beta: mu must be at least 1");
  return BigInt(nu) * resolve_beta(mu - 1, nu, options).value;
}

std::optional<BigInt> beta_closed_small(unsigned mu, unsigned nu) {
  require_nu(nu);
  if (nu == 1) return BigInt(0);
  if (mu == 1) return BigInt(nu % 2 == 0 ? 1 : 0);
  if (mu == 2) return BigInt(nu % 3 == 0 ? 2 : 0);
  return std::nullopt;
}

BigInt beta_prime_power(unsigned mu, const PrimePowerForm& form) {
  if ((mu + 1) % form.p != 0) return 0;
  const BigInt alpha = coset_sum(mu + 1, (mu + 1) / form.p, form);
  if (!mpz_divisible_ui_p(alpha.get_mpz_t(), form.nu()))
    throw NonExactDivision("beta_prime_power");
  return alpha / form.nu();
}

BigInt alpha_prime_power(unsigned mu, const PrimePowerForm& form) {
  if (mu % form.p != 0) return 0;
  return coset_sum(mu, mu / form.p, form);
}

bool lam_leung_nonvanishing(unsigned mu, unsigned nu) {
  require_nu(nu);
  if (nu == 1) return false;
  std::vector<bool> reachable(mu + 1, false);
  reachable[0] = true;
  for (unsigned long p : distinct_prime_factors(nu))
    for (unsigned long v = p; v <= mu; ++v)
      if (reachable[v - p]) reachable[v] = true;
  return reachable[mu];
}

BetaRecord compute_beta(unsigned mu, unsigned nu, BetaMethod method,
                        const EnumerationOptions& options) {
  require_nu(nu);
  BetaRecord record{mu, nu, 0, method, CountKind::beta};
  switch (method) {
    case BetaMethod::brute:
      record.value = beta_bruteforce(mu, nu, options);
      break;
    case BetaMethod::symmetric:
      record.value = beta_symmetric(mu, nu, options);
      break;
    case BetaMethod::closed_small: {
      auto v = beta_closed_small(mu, nu);
      if (!v)
        throw MethodNotApplicable("closed form covers only nu = 1, mu = 1 or mu = 2");
      record.value = *v;
      break;
    }
    case BetaMethod::prime_power: {
      auto form = PrimePowerForm::of(nu);
      if (!form)
        throw MethodNotApplicable("prime_power needs nu = p^r, got nu = " +
                                  std::to_string(nu));
      record.value = beta_prime_power(mu, *form);
      break;
    }
  }
  return record;
}

BetaMethod auto_method(unsigned mu, unsigned nu) {
  require_nu(nu);
  if (beta_closed_small(mu, nu)) return BetaMethod::closed_small;
  if (PrimePowerForm::of(nu)) return BetaMethod::prime_power;
  return BetaMethod::symmetric;
}

BetaRecord resolve_beta(unsigned mu, unsigned nu, const EnumerationOptions& options) {
  return compute_beta(mu, nu, auto_method(mu, nu), options);
}

BigInt multiset_mass(unsigned mu, unsigned nu) {
  require_nu(nu);
  BigInt mass = 0;
  for (MultisetEnumerator it(nu, mu); it.current(); it.advance())
    mass += ExponentMultiset(*it.current()).multinomial();
  return mass;
}

void for_each_composition(unsigned total, unsigned parts,
                          const std::function<void(std::span<const unsigned>)>& visit) {
  if (parts == 0) {
    if (total == 0) visit({});
    return;
  }
  std::vector<unsigned> s(parts, 0);
  // Stars and bars: fill slots left to right, the last slot takes the rest.
  auto fill = [&](auto&& self, unsigned slot, unsigned remaining) -> void {
    if (slot + 1 == parts) {
      s[slot] = remaining;
      visit(s);
      return;
    }
    for (unsigned v = 0; v <= remaining; ++v) {
      s[slot] = v;
      self(self, slot + 1, remaining - v);
    }
  };
  fill(fill, 0, total);
}

}  // namespace fermat_mld
