#include <gtest/gtest.h>

#include "ncres/symbol_library.hpp"

using namespace ncres;
using GR = GaussianRational;
using L = Letter;

namespace {

RatXi frac(std::initializer_list<GR> num, int p, int q) { return RatXi(XiPoly::from(num), p, q); }

bool defective_printed_derivative(Op op, Slot s) {
  return s == Slot::d_x && (op == Op::NablaDinv || op == Op::NablaDinv2);
}

} // namespace

TEST(SymbolLibrary, LeadingSymbolOfDinv) {
  // i (c(xi') + xi_n c(dxn)) / (1 + xi_n^2)
  const CliffordExpr expected = CliffordExpr::word({L::XiPrime}, frac({GR::i()}, 1, 1)) +
                                CliffordExpr::word({L::DxN}, frac({0, GR::i()}, 1, 1));
  EXPECT_EQ(build_symbol(Op::Dinv, Slot::sigma, 1).expr, expected);
}

TEST(SymbolLibrary, LeadingSymbolOfPow2m2IsScalar) {
  for (int m = 1; m <= 4; ++m) EXPECT_EQ(build_symbol(Op::Pow2m2, Slot::sigma, m).expr, CliffordExpr(RatXi::inv_norm_pow(m - 1)));
}

TEST(SymbolLibrary, CompositionWithCX) {
  for (int m = 1; m <= 2; ++m)
    EXPECT_EQ(build_symbol(Op::cXDinv, Slot::sigma, m).expr,
              CliffordExpr::atom(L::XVec) * build_symbol(Op::Dinv, Slot::sigma, m).expr);
}

TEST(SymbolLibrary, SubleadingPartsSumToSubleadingSymbol) {
  for (Op op : {Op::NablaDinv, Op::NablaDinv2})
    for (int m = 1; m <= 3; ++m)
      EXPECT_EQ(build_symbol(op, Slot::part1, m).expr + build_symbol(op, Slot::part2, m).expr +
                    build_symbol(op, Slot::part3, m).expr,
                build_symbol(op, Slot::sigma_sub, m).expr);
}

TEST(SymbolLibrary, TwoPrintedArrangementsAgree) {
  for (int m = 1; m <= 6; ++m)
    EXPECT_EQ(build_symbol(Op::Pow2m2, Slot::sigma_sub, m).expr, build_symbol(Op::Pow2m2, Slot::sigma_sub_alt, m).expr);
}

TEST(SymbolLibrary, EntriesAreHomogeneous) {
  for (auto [op, slot] : all_entries())
    for (int m = 1; m <= 6; ++m) EXPECT_TRUE(homogeneity_ok(build_symbol(op, slot, m))) << op_name(op) << " " << slot_name(slot);
}

TEST(SymbolLibrary, StatedDerivativesFollowFromTheirBase) {
  for (auto [op, slot] : derivative_entries()) {
    if (defective_printed_derivative(op, slot)) continue;
    for (int m = 1; m <= 6; ++m) EXPECT_TRUE(derive_check(build_symbol(op, slot, m)).passed) << op_name(op) << " " << slot_name(slot) << " m=" << m;
  }
}

TEST(SymbolLibrary, DefectivePrintedDerivativesAreDetected) {
  for (Op op : {Op::NablaDinv, Op::NablaDinv2}) {
    const DeriveCheck c = derive_check(build_symbol(op, Slot::d_x, 2));
    EXPECT_FALSE(c.passed);
    EXPECT_FALSE(c.difference.is_zero());
  }
}

TEST(SymbolLibrary, XiDerivativeOfPow2m2) {
  // d/dxi (1+xi^2)^(1-m) = 2(1-m) xi (1+xi^2)^-m
  for (int m = 1; m <= 4; ++m)
    EXPECT_EQ(build_symbol(Op::Pow2m2, Slot::d_xi, m).expr, CliffordExpr(frac({0, GR(2 * (1 - m))}, m, m)));
}

TEST(SymbolLibrary, DerivativeCheckNeedsABase) {
  EXPECT_THROW(derive_check(build_symbol(Op::Dinv, Slot::sigma, 1)), UnsupportedSymbol);
}

TEST(SymbolLibrary, UnknownSlotIsRejected) { EXPECT_THROW(build_symbol(Op::Dinv, Slot::part2, 1), UnsupportedSymbol); }

TEST(SymbolLibrary, ManifestCoversEveryEntry) {
  const auto manifest = library_manifest();
  EXPECT_EQ(manifest.size(), all_entries().size());
  for (const auto& e : manifest) EXPECT_FALSE(e.anchor.empty());
}
