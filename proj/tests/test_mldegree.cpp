#include <gtest/gtest.h>

#include "fermat_mld/errors.hpp"
#include "fermat_mld/mldegree.hpp"
#include "oracles.hpp"

namespace fermat_mld {
namespace {

// Beta straight from floating-point evaluation of every tuple.
BetaSource float_beta_source() {
  return [](unsigned mu, unsigned nu) {
    return BetaRecord{mu, nu, BigInt(static_cast<unsigned long>(oracle::beta(mu, nu))),
                      BetaMethod::brute, CountKind::beta};
  };
}

TEST(FermatQueryTest, Validation) {
  EXPECT_NO_THROW(FermatQuery(1, 2));
  EXPECT_THROW(FermatQuery(2, 1), DegreeOneUnsupported);
  EXPECT_THROW(FermatQuery(0, 3), std::invalid_argument);
  EXPECT_THROW(FermatQuery(2, 0), std::invalid_argument);
}

TEST(EulerSmoothHypersurfaceTest, Examples) {
  EXPECT_EQ(euler_smooth_hypersurface(1, 5).value, 5);
  EXPECT_EQ(euler_smooth_hypersurface(2, 3).value, 0);
  EXPECT_EQ(euler_smooth_hypersurface(3, 2).value, 4);
  EXPECT_EQ(euler_smooth_hypersurface(0, 3).value, 0);
  // Quartic K3 surface.
  EXPECT_EQ(euler_smooth_hypersurface(3, 4).value, 24);
}

TEST(EulerSmoothHypersurfaceTest, HyperplaneRow) {
  for (unsigned m = 0; m <= 12; ++m) EXPECT_EQ(euler_smooth_hypersurface(m, 1).value, m);
}

TEST(EulerSmoothHypersurfaceTest, MatchesChernClassOracle) {
  for (unsigned m = 0; m <= 10; ++m)
    for (unsigned d = 1; d <= 8; ++d)
      EXPECT_EQ(euler_smooth_hypersurface(m, d).value, BigInt(oracle::euler_chern(m, d)))
          << "m=" << m << " d=" << d;
}

TEST(MlDegreeGeneralTest, Examples) {
  EXPECT_EQ(ml_degree_general(2, 3), 12);
  EXPECT_EQ(ml_degree_general(1, 1), 1);
  EXPECT_EQ(ml_degree_general(3, 2), 14);
}

TEST(MlDegreeFermatTest, Examples) {
  const auto source = auto_beta_source();
  EXPECT_EQ(ml_degree_fermat(FermatQuery(2, 2), source).total, 6);
  EXPECT_EQ(ml_degree_fermat(FermatQuery(2, 3), source).total, 9);
  EXPECT_EQ(ml_degree_fermat(FermatQuery(2, 7), source).total, 51);
  EXPECT_EQ(ml_degree_fermat(FermatQuery(3, 2), source).total, 14);
}

TEST(MlDegreeFermatTest, ReportStructure) {
  const auto report = ml_degree_fermat(FermatQuery(3, 4), auto_beta_source());
  EXPECT_EQ(report.base, 4 + 16 + 64);
  ASSERT_EQ(report.corrections.size(), 3u);
  BigInt total = report.base;
  for (unsigned j = 0; j < 3; ++j) {
    const auto& c = report.corrections[j];
    EXPECT_EQ(c.j, j);
    EXPECT_EQ(c.binomial, binomial(4, j));
    EXPECT_EQ(c.beta, resolve_beta(3 - j, 3).value);
    EXPECT_EQ(c.product, c.binomial * c.beta);
    total -= c.product;
  }
  EXPECT_EQ(report.total, total);
  EXPECT_EQ(report.total, 76);
}

TEST(MlDegreeFermatTest, MatchesFloatingPointBetaOracle) {
  const auto engine = auto_beta_source();
  const auto reference = float_beta_source();
  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned d = 2; d <= 8; ++d)
      EXPECT_EQ(ml_degree_fermat(FermatQuery(n, d), engine).total,
                ml_degree_fermat(FermatQuery(n, d), reference).total)
          << "n=" << n << " d=" << d;
}

TEST(MlDegreeFermatTest, CorrectionsNonnegative) {
  const auto source = auto_beta_source();
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned d = 2; d <= 10; ++d) {
      const auto report = ml_degree_fermat(FermatQuery(n, d), source);
      for (const auto& c : report.corrections) EXPECT_GE(c.product, 0);
      EXPECT_LE(report.total, report.base);
    }
}

TEST(QuadricTest, Examples) {
  EXPECT_EQ(ml_degree_fermat_quadric(1), 2);
  EXPECT_EQ(ml_degree_fermat_quadric(2), 6);
  EXPECT_EQ(ml_degree_fermat_quadric(5), 62);
  const auto source = auto_beta_source();
  for (unsigned n = 1; n <= 10; ++n)
    EXPECT_EQ(ml_degree_fermat(FermatQuery(n, 2), source).total, ml_degree_fermat_quadric(n));
}

TEST(SurfaceTest, Examples) {
  EXPECT_EQ(ml_degree_fermat_surface(2), 6);
  EXPECT_EQ(ml_degree_fermat_surface(4), 18);
  EXPECT_EQ(ml_degree_fermat_surface(9), 87);
  EXPECT_EQ(ml_degree_fermat_surface(7), 51);
  EXPECT_EQ(ml_degree_fermat_surface(5), 27);
  EXPECT_EQ(ml_degree_fermat_surface(6), 42);
}

TEST(SurfaceTest, FormulaMatchesTableWithEnumeratedBeta) {
  const BetaSource symmetric = [](unsigned mu, unsigned nu) {
    return compute_beta(mu, nu, BetaMethod::symmetric);
  };
  for (unsigned d = 2; d <= 30; ++d)
    EXPECT_EQ(ml_degree_fermat(FermatQuery(2, d), symmetric).total, ml_degree_fermat_surface(d))
        << "d=" << d;
}

TEST(PrimePowerCorollaryTest, Examples) {
  EXPECT_EQ(ml_degree_fermat_prime_power(2, 3), 9);
  EXPECT_EQ(ml_degree_fermat_prime_power(3, 2), 14);
  EXPECT_THROW(ml_degree_fermat_prime_power(2, 7), NotPrimePower);
  EXPECT_THROW(ml_degree_fermat_prime_power(2, 1), DegreeOneUnsupported);
}

TEST(PrimePowerCorollaryTest, MatchesMainFormula) {
  const auto source = auto_beta_source();
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned d : {2u, 3u, 4u, 5u, 6u, 8u, 9u, 10u, 12u, 14u, 17u})
      EXPECT_EQ(ml_degree_fermat_prime_power(n, d),
                ml_degree_fermat(FermatQuery(n, d), source).total)
          << "n=" << n << " d=" << d;
}

TEST(EulerComplementIdentityTest, Examples) {
  const auto source = auto_beta_source();
  const auto outcome = euler_complement_identity(2, 3, source);
  EXPECT_TRUE(outcome.passed());
  ASSERT_EQ(outcome.checks.size(), 3u);
  EXPECT_EQ(outcome.checks[0].lhs, -12);
  EXPECT_EQ(outcome.checks[0].rhs, -12);
  EXPECT_EQ(outcome.chi_complement, -9);
  EXPECT_EQ(outcome.checks[2].label, "Huh sign identity n=2 d=3");
  EXPECT_TRUE(euler_complement_identity(1, 2, source).passed());
  EXPECT_TRUE(euler_complement_identity(4, 5, source).passed());
}

TEST(EulerComplementIdentityTest, HoldsOnGrid) {
  const auto source = auto_beta_source();
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned d = 2; d <= 8; ++d) {
      const auto outcome = euler_complement_identity(n, d, source);
      for (const auto& c : outcome.checks) EXPECT_TRUE(c.passed()) << c.label;
    }
}

TEST(EulerComplementIdentityTest, BetaFaultInvisibleToSignIdentity) {
  // The identity chain is algebraic in beta: any beta source keeps the sign
  // identity consistent, so wrong beta is caught by the corollaries instead.
  const BetaSource off_by_one = [](unsigned mu, unsigned nu) {
    auto r = resolve_beta(mu, nu);
    r.value += 1;
    return r;
  };
  EXPECT_TRUE(euler_complement_identity(3, 4, off_by_one).passed());
  EXPECT_NE(ml_degree_fermat(FermatQuery(3, 2), off_by_one).total, ml_degree_fermat_quadric(3));
}

TEST(SingularPointCountTest, Examples) {
  const auto source = auto_beta_source();
  EXPECT_EQ(singular_point_count(2, 3, 1, source), 0);
  EXPECT_EQ(singular_point_count(2, 3, 2, source), 1);
  EXPECT_EQ(singular_point_count(3, 4, 1, source), beta_bruteforce(3, 3));
  EXPECT_EQ(singular_point_count(3, 4, 1, source), 0);
  EXPECT_EQ(singular_point_count(3, 3, 1, source), 3);  // beta(3,2): one +1, two -1
  EXPECT_THROW(singular_point_count(2, 3, 0, source), std::invalid_argument);
  EXPECT_THROW(singular_point_count(2, 3, 3, source), std::invalid_argument);
}

TEST(MilnorSpanTest, Examples) {
  EXPECT_TRUE(milnor_span_check(1));
  EXPECT_EQ(jacobian_linear_part_determinant(1), 2);
  EXPECT_TRUE(milnor_span_check(2));
  EXPECT_EQ(jacobian_linear_part_determinant(2), 3);
  EXPECT_TRUE(milnor_span_check(7));
  EXPECT_EQ(jacobian_linear_part_determinant(7), 8);
}

TEST(MilnorSpanTest, DeterminantMatchesCofactorExpansion) {
  for (unsigned l = 1; l <= 7; ++l) {
    std::vector<std::vector<long>> m(l, std::vector<long>(l, 1));
    for (unsigned i = 0; i < l; ++i) m[i][i] = 2;
    EXPECT_EQ(jacobian_linear_part_determinant(l), BigInt(oracle::laplace_determinant(m)));
  }
  for (unsigned l = 1; l <= 20; ++l) {
    EXPECT_TRUE(milnor_span_check(l));
    EXPECT_EQ(jacobian_linear_part_determinant(l), l + 1);
    EXPECT_EQ(milnor_number(l), 1u);
  }
  EXPECT_EQ(milnor_number(0), 1u);
}

TEST(IntegerDeterminantTest, PivotingAndSingular) {
  auto to_big = [](const std::vector<std::vector<long>>& a) {
    std::vector<std::vector<BigInt>> b;
    for (const auto& row : a) {
      std::vector<BigInt> r;
      for (long v : row) r.emplace_back(v);
      b.push_back(r);
    }
    return b;
  };
  const std::vector<std::vector<long>> needs_swap = {{0, 2, 1}, {3, 0, 4}, {1, 5, 6}};
  EXPECT_EQ(integer_determinant(to_big(needs_swap)),
            BigInt(oracle::laplace_determinant(needs_swap)));
  const std::vector<std::vector<long>> singular = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  EXPECT_EQ(integer_determinant(to_big(singular)), 0);
  const std::vector<std::vector<long>> mixed = {
      {4, -2, 7, 1}, {3, 0, -5, 2}, {-1, 6, 2, 0}, {2, 2, 2, 9}};
  EXPECT_EQ(integer_determinant(to_big(mixed)), BigInt(oracle::laplace_determinant(mixed)));
  EXPECT_EQ(integer_determinant({}), 1);
  EXPECT_THROW(integer_determinant({{BigInt(1), BigInt(2)}}), std::invalid_argument);
}

}  // namespace
}  // namespace fermat_mld
