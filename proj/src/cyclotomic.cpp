#include "fermat_mld/cyclotomic.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "fermat_mld/errors.hpp"

namespace fermat_mld {

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

IntegerPolynomial::IntegerPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntegerPolynomial IntegerPolynomial::monomial(BigInt coeff, std::size_t degree) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coeff);
  return IntegerPolynomial(std::move(c));
}

void IntegerPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntegerPolynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

bool IntegerPolynomial::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == 1;
}

BigInt IntegerPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt IntegerPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntegerPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

IntegerPolynomial poly_add(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
  return IntegerPolynomial(std::move(c));
}

IntegerPolynomial poly_sub(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] -= b.coeffs()[i];
  return IntegerPolynomial(std::move(c));
}

IntegerPolynomial poly_mul(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& f = a.coeffs();
  const auto& g = b.coeffs();
  std::vector<BigInt> c(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      mpz_addmul(c[i + j].get_mpz_t(), f[i].get_mpz_t(), g[j].get_mpz_t());
  }
  return IntegerPolynomial(std::move(c));
}

DivisionResult poly_divrem_monic(const IntegerPolynomial& num,
                                 const IntegerPolynomial& den) {
  if (!den.is_monic()) throw NonMonicDivisor();
  const std::size_t dd = *den.degree();
  std::vector<BigInt> r = num.coeffs();
  if (r.size() <= dd) return {IntegerPolynomial{}, num};

  const auto& g = den.coeffs();
  std::vector<BigInt> q(r.size() - dd);
  for (std::size_t k = r.size(); k-- > dd;) {
    if (r[k] == 0) continue;
    const BigInt lead = r[k];
    q[k - dd] = lead;
    // r -= lead * x^(k-dd) * den; the leading term cancels exactly.
    for (std::size_t j = 0; j <= dd; ++j)
      mpz_submul(r[k - dd + j].get_mpz_t(), lead.get_mpz_t(), g[j].get_mpz_t());
  }
  r.resize(dd);
  return {IntegerPolynomial(std::move(q)), IntegerPolynomial(std::move(r))};
}

IntegerPolynomial poly_divexact(const IntegerPolynomial& num,
                                const IntegerPolynomial& den) {
  auto [q, r] = poly_divrem_monic(num, den);
  if (!r.is_zero()) throw NonzeroRemainder();
  return q;
}

CyclotomicOrder::CyclotomicOrder(unsigned long nu) : nu_(nu) {
  if (nu == 0) throw std::invalid_argument("cyclotomic order must be at least 1");
}

namespace {

class CyclotomicTable {
 public:
  const IntegerPolynomial& get(unsigned long nu) {
    std::lock_guard lock(mutex_);
    return get_locked(nu);
  }

 private:
  const IntegerPolynomial& get_locked(unsigned long nu) {
    if (auto it = table_.find(nu); it != table_.end()) return it->second;
    // x^nu - 1 = prod_{d | nu} Phi_d
    IntegerPolynomial phi = poly_sub(IntegerPolynomial::monomial(1, nu), IntegerPolynomial{1});
    for (unsigned long d : divisors(nu)) {
      if (d == nu) break;
      phi = poly_divexact(phi, get_locked(d));
    }
    // std::map nodes are stable, so returned references stay valid.
    return table_.emplace(nu, std::move(phi)).first->second;
  }

  std::mutex mutex_;
  std::map<unsigned long, IntegerPolynomial> table_;
};

CyclotomicTable& cyclotomic_table() {
  static CyclotomicTable table;
  return table;
}

}  // namespace

const IntegerPolynomial& cyclotomic_polynomial(CyclotomicOrder order) {
  return cyclotomic_table().get(order.value());
}

bool vanishing_sum_test(const ExponentMultiset& m, bool add_one) {
  std::vector<BigInt> c(m.nu());
  for (unsigned i = 0; i < m.nu(); ++i) c[i] = m.count(i);
  if (add_one) c[0] += 1;
  const IntegerPolynomial sum(std::move(c));
  const auto& phi = cyclotomic_polynomial(CyclotomicOrder(m.nu()));
  return poly_divrem_monic(sum, phi).remainder.is_zero();
}

PowerResidues::PowerResidues(CyclotomicOrder order)
    : nu_(order.value()), width_(euler_totient(order.value())) {
  const auto& phi = cyclotomic_polynomial(order);
  table_.assign(nu_ * width_, 0);
  // x^i mod Phi for i < deg Phi is x^i itself; afterwards multiply the
  // previous residue by x and fold the overflow coefficient back in.
  std::vector<BigInt> residue(width_);
  for (std::size_t i = 0; i < nu_; ++i) {
    if (i == 0) {
      residue[0] = 1;
    } else {
      BigInt carry = residue[width_ - 1];
      for (std::size_t j = width_ - 1; j > 0; --j) residue[j] = residue[j - 1];
      residue[0] = 0;
      if (carry != 0)
        for (std::size_t j = 0; j < width_; ++j)
          mpz_submul(residue[j].get_mpz_t(), carry.get_mpz_t(),
                     phi.coeffs()[j].get_mpz_t());
    }
    for (std::size_t j = 0; j < width_; ++j) {
      if (!residue[j].fits_slong_p())
        throw std::overflow_error("PowerResidues: residue exceeds machine range");
      const std::int64_t v = residue[j].get_si();
      table_[i * width_ + j] = v;
      max_abs_ = std::max(max_abs_, v < 0 ? -v : v);
    }
  }
}

}  // namespace fermat_mld
