#include <gtest/gtest.h>

#include <boost/math/constants/constants.hpp>

#include "ncres/coefficients.hpp"
#include "ncres/quadrature.hpp"

using namespace ncres;
using GR = GaussianRational;

TEST(Combinatorics, FallingFactorialAndGeneralBinomial) {
  EXPECT_EQ(falling(5, 2), 20);
  EXPECT_EQ(falling(-3, 3), -60);
  EXPECT_EQ(falling(7, 0), 1);
  EXPECT_EQ(binom_general(-3, 2), 6);  // (-3)(-4)/2
  EXPECT_EQ(binom_general(5, 5), 1);
  EXPECT_EQ(binom_general(4, -1), 0);
  EXPECT_EQ(arrange_general(-2, 3), -24);
}

TEST(Coefficients, TableHasTwentyThreeNamedConstants) {
  EXPECT_EQ(closed_form_coefficients().size(), 23u);
  EXPECT_NO_THROW(find_coefficient("L0"));
  EXPECT_THROW(find_coefficient("Z9"), UnsupportedSymbol);
}

TEST(Coefficients, OracleByHandForA0AtMOne) {
  // g = 2(xi^2 - 1)/(xi + i)^2 = 2(1 - 2i/u - 2/u^2), u = xi + i; g''(i) = 2(1/2 - 3/4)
  EXPECT_EQ(eval_by_oracle("A0", 1), GR::ratio(-1, 2));
  EXPECT_EQ(eval_closed_form("A0", 1), GR::ratio(-1, 4));
}

TEST(Coefficients, OracleByHandForA1AtMOne) {
  // d^3/dxi^3 (xi + i)^-2 at i = -24/(2i)^5 = -24/(32i) = 3i/4
  EXPECT_EQ(eval_by_oracle("A1", 1), GR(mpq_class(0), mpq_class(3, 4)));
  EXPECT_EQ(eval_closed_form("A1", 1), eval_by_oracle("A1", 1));
}

TEST(Coefficients, OracleAgreesWithCauchyIntegralNumerically) {
  // g^(k)(i) = k!/(2 pi i) * integral of g(xi)/(xi - i)^(k+1) over the real line
  const long double pi = boost::math::constants::pi<long double>();
  int checked = 0;
  for (const auto& c : closed_form_coefficients())
    for (long m = 1; m <= 3; ++m) {
      const long k = c.derivative_order(m);
      const RatXi g = defining_function(c, m);
      const RatXi integrand = g * RatXi(XiPoly(SymbolPoly(1)), static_cast<int>(k + 1), 0);
      if (integrand.decay_order() > -2) continue;
      const std::complex<long double> v = integrate_real_line(integrand, {});
      const std::complex<long double> expected =
          eval_by_oracle(c.name, m).to_complex() * std::complex<long double>(0, 2 * pi) / factorial(k).to_complex();
      EXPECT_LT(std::abs(v - expected), 1e-9L * std::max<long double>(1, std::abs(expected))) << c.name << " m=" << m;
      ++checked;
    }
  EXPECT_GT(checked, 40);
}

TEST(Coefficients, ErrataTableIsCompleteAndDeterministic) {
  const auto a = errata_table(1, 6), b = errata_table(1, 6);
  ASSERT_EQ(a.size(), 23u * 6u);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].name, b[k].name);
    EXPECT_EQ(a[k].m, b[k].m);
    EXPECT_EQ(a[k].printed, b[k].printed);
    EXPECT_EQ(a[k].oracle, b[k].oracle);
    EXPECT_EQ(a[k].match, a[k].printed == a[k].oracle);
  }
}

TEST(Coefficients, PrintedJ0IsZero) {
  for (long m = 1; m <= 6; ++m) {
    EXPECT_TRUE(eval_closed_form("J0", m).is_zero());
    EXPECT_FALSE(eval_by_oracle("J0", m).is_zero());
  }
}

TEST(Coefficients, RejectsNonPositiveM) {
  EXPECT_THROW(eval_by_oracle("A0", 0), UsageError);
  EXPECT_THROW(eval_closed_form("A0", 0), UsageError);
}
