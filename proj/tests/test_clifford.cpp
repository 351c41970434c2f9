#include <gtest/gtest.h>

#include "ncres/clifford.hpp"
#include "ncres/gamma_oracle.hpp"
#include "support.hpp"

using namespace ncres;
using GR = GaussianRational;
using L = Letter;

TEST(Clifford, TwoLetterTracesAreMinusThePairing) {
  EXPECT_EQ(trace_word({L::XiPrime, L::XiPrime}), SymbolPoly(-1));
  EXPECT_EQ(trace_word({L::DxN, L::DxN}), SymbolPoly(-1));
  EXPECT_TRUE(trace_word({L::XiPrime, L::DxN}).is_zero());
  EXPECT_EQ(trace_word({L::XVec, L::DxN}), -SymbolPoly(GeomSymbol::XN));
  EXPECT_EQ(trace_word({L::DXVec, L::DxN}), -SymbolPoly(GeomSymbol::DXN));
}

TEST(Clifford, OddWordsHaveZeroTrace) {
  EXPECT_TRUE(trace_word({L::XiPrime}).is_zero());
  EXPECT_TRUE(trace_word({L::XVec, L::DxN, L::XiPrime}).is_zero());
}

TEST(Clifford, FourLetterMatchingExpansion) {
  // tr[abcd] = g(a,b)g(c,d) - g(a,c)g(b,d) + g(a,d)g(b,c)
  const SymbolPoly xn(GeomSymbol::XN);
  EXPECT_EQ(trace_word({L::XVec, L::DxN, L::DxN, L::DxN}), xn - xn + xn);
  EXPECT_EQ(trace_word({L::DxN, L::XiPrime, L::DxN, L::XiPrime}), SymbolPoly(-1));
}

TEST(Clifford, EkAndEnAtomsActAsBoundaryFrame) {
  EXPECT_EQ(trace_word({L::Ek, L::XiPrime}), trace_word({L::XiPrime, L::XiPrime}));
  EXPECT_EQ(trace_word({L::En, L::XVec}), trace_word({L::DxN, L::XVec}));
}

TEST(Clifford, AXTracesAreAntisymmetric) {
  const SymbolPoly t(GeomSymbol::TRAX_XI_DN);
  EXPECT_EQ(trace_word({L::AX, L::XiPrime, L::DxN}), t);
  EXPECT_EQ(trace_word({L::AX, L::DxN, L::XiPrime}), -t);
  EXPECT_EQ(trace_word({L::DxN, L::AX, L::XiPrime}), t);
  EXPECT_TRUE(trace_word({L::AX, L::DxN, L::DxN}).is_zero());
  EXPECT_TRUE(trace_word({L::AX}).is_zero());
  EXPECT_THROW(trace_word({L::AX, L::XiPrime, L::DxN, L::DxN, L::DxN}), UnsupportedWord);
  EXPECT_THROW(CliffordExpr::word({L::AX, L::AX}), UnsupportedWord);
}

TEST(Clifford, UndefinedPairingThrows) { EXPECT_THROW(trace_word({L::DXVec, L::DXVec}), UndefinedPairing); }

TEST(Clifford, TraceIsLinearWithRatXiCoefficients) {
  const CliffordExpr e = CliffordExpr::word({L::XiPrime, L::XiPrime}, RatXi::inv_norm_pow(1)) +
                         CliffordExpr::word({L::DxN, L::DxN}, RatXi::xi_pow(2).scaled(SymbolPoly(2)));
  EXPECT_EQ(trace(e), -RatXi::inv_norm_pow(1) - RatXi::xi_pow(2).scaled(SymbolPoly(2)));
}

TEST(GammaOracle, MatricesSatisfyCliffordRelations) {
  for (int m = 1; m <= 3; ++m) {
    const auto g = gamma_matrices(m);
    EXPECT_EQ(g.size(), static_cast<std::size_t>(2 * m + 1));
    EXPECT_EQ(g.front().size(), static_cast<std::size_t>(1) << m);
  }
}

TEST(GammaOracle, WickExpansionMatchesMatrixTraces) {
  for (int m = 1; m <= 3; ++m)
    for (const auto& w : testkit::numeric_word_corpus(m, 100, 1000 + m))
      EXPECT_EQ(numeric_wick_trace(w), gamma_oracle(m, w)) << "m=" << m << " length " << w.size();
}

TEST(GammaOracle, CyclicInvariance) {
  for (int m = 1; m <= 3; ++m)
    for (auto w : testkit::numeric_word_corpus(m, 100, 2000 + m)) {
      if (w.empty()) continue;
      const GR t = numeric_wick_trace(w);
      std::rotate(w.begin(), w.begin() + 1, w.end());
      EXPECT_EQ(numeric_wick_trace(w), t);
    }
}

TEST(GammaOracle, AnticommutationOfAdjacentLetters) {
  // c(u)c(v) + c(v)c(u) = -2 g(u,v)
  for (int m = 1; m <= 3; ++m)
    for (auto w : testkit::numeric_word_corpus(m, 100, 3000 + m)) {
      if (w.size() < 2) continue;
      std::vector<NumVector> swapped = w, rest(w.begin() + 2, w.end());
      std::swap(swapped[0], swapped[1]);
      const GR lhs = numeric_wick_trace(w) + numeric_wick_trace(swapped);
      const GR rhs = GR(-2) * euclidean_dot(w[0], w[1]) * numeric_wick_trace(rest);
      EXPECT_EQ(lhs, rhs);
    }
}

TEST(GammaOracle, TopElementCaveatForShortDimension) {
  // In dimension 3 the product of all three generators is central with nonzero trace.
  const std::vector<NumVector> w = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_FALSE(gamma_oracle(1, w).is_zero());
  EXPECT_TRUE(numeric_wick_trace(w).is_zero());
}
