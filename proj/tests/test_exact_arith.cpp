#include <gtest/gtest.h>

#include "ncres/gaussian_rational.hpp"
#include "ncres/symbol_poly.hpp"

using namespace ncres;
using GR = GaussianRational;

TEST(GaussianRational, CanonicalFormMakesEqualValuesEqual) {
  EXPECT_EQ(GR::ratio(2, 4), GR::ratio(-3, -6));
  EXPECT_EQ(GR::ratio(2, 4).str(), "1/2");
}

TEST(GaussianRational, ImaginaryUnitSquaresToMinusOne) { EXPECT_EQ(GR::i() * GR::i(), GR(-1)); }

TEST(GaussianRational, DivisionInvertsMultiplication) {
  const GR a(mpq_class(3, 5), mpq_class(-2, 7)), b(mpq_class(1, 3), mpq_class(4));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a * a.inverse(), GR(1));
}

TEST(GaussianRational, DivisionByZeroThrows) {
  EXPECT_THROW(GR(1) / GR(0), DivisionByZero);
  EXPECT_THROW(GR::ratio(1, 0), DivisionByZero);
  EXPECT_THROW(GR(0).inverse(), DivisionByZero);
}

TEST(GaussianRational, PowersOfTwoI) {
  const GR two_i(mpq_class(0), mpq_class(2));
  EXPECT_EQ(two_i.pow(2), GR(-4));
  EXPECT_EQ(two_i.pow(3), GR(mpq_class(0), mpq_class(-8)));
  EXPECT_EQ(two_i.pow(-1), GR(mpq_class(0), mpq_class(-1, 2)));
  EXPECT_EQ(GR(5).pow(0), GR(1));
}

TEST(GaussianRational, Factorial) {
  EXPECT_EQ(factorial(0), GR(1));
  EXPECT_EQ(factorial(6), GR(720));
}

TEST(SymbolPoly, CollectsLikeTermsAndDropsZeros) {
  SymbolPoly p = SymbolPoly(GeomSymbol::XN) * SymbolPoly(GeomSymbol::H1);
  SymbolPoly q = SymbolPoly(GeomSymbol::H1) * SymbolPoly(GeomSymbol::XN);
  EXPECT_EQ(p, q);
  EXPECT_TRUE((p - q).is_zero());
  EXPECT_EQ((p + q).coefficient(Monomial::of(GeomSymbol::XN) * Monomial::of(GeomSymbol::H1)), GR(2));
}

TEST(SymbolPoly, EvalNeedsEveryOccurringSymbol) {
  const SymbolPoly p = SymbolPoly(GeomSymbol::XN) * SymbolPoly(GeomSymbol::H1) + SymbolPoly(3);
  Assignment a{{GeomSymbol::XN, GR::ratio(1, 2)}, {GeomSymbol::H1, GR(4)}};
  EXPECT_EQ(p.eval(a), GR(5));
  a.erase(GeomSymbol::H1);
  EXPECT_THROW(p.eval(a), IncompleteAssignment);
}

TEST(SymbolPoly, ParityOfTangentialOddSymbol) {
  EXPECT_EQ(SymbolPoly(GeomSymbol::TRAX_XI_DN).parity(), Parity::odd);
  EXPECT_EQ((SymbolPoly(GeomSymbol::TRAX_XI_DN) * SymbolPoly(GeomSymbol::TRAX_XI_DN)).parity(), Parity::even);
  EXPECT_EQ(SymbolPoly(GeomSymbol::DXN).parity(), Parity::even);
}

TEST(SymbolPoly, AsConstant) {
  EXPECT_EQ(SymbolPoly(GR::ratio(3, 4)).as_constant(), GR::ratio(3, 4));
  EXPECT_FALSE(SymbolPoly(GeomSymbol::VOLS).as_constant().has_value());
  EXPECT_EQ(SymbolPoly().as_constant(), GR(0));
}
