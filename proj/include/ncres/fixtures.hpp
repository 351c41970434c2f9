#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "ncres/clifford.hpp"
#include "ncres/pipeline.hpp"
#include "ncres/rat_xi.hpp"
#include "ncres/symbol_library.hpp"

namespace ncres {

namespace fx {

using GR = GaussianRational;
inline GR I() { return GR::i(); }
inline GR q(long a, long b = 1) { return GR::ratio(a, b); }
inline GR c(long re, long im) { return GR(mpq_class(re), mpq_class(im)); }

/// poly(xi_n) / ((xi_n - i)^a (xi_n + i)^b), coefficients in ascending powers.
inline RatXi frac(std::initializer_list<GR> poly, int a, int b) {
  std::vector<SymbolPoly> v;
  for (const auto& x : poly) v.emplace_back(x);
  return RatXi(XiPoly(std::move(v)), a, b);
}

inline SymbolPoly S(GeomSymbol s) { return SymbolPoly(s); }
inline SymbolPoly XNH1() { return S(GeomSymbol::XN) * S(GeomSymbol::H1); }
inline CliffordExpr W(std::initializer_list<Letter> w, const RatXi& c) { return CliffordExpr::word(Word(w), c); }

} // namespace fx

/// A printed traced integrand (normalised trace, odd tangential terms dropped),
/// compared against tr[d^t F1 * d^(n-t) F2] for the printed t, with the sign
/// (-1)^t of the moved derivatives kept outside as the printed text does.
struct IntegrandFixture {
  std::string name;
  Theorem theorem;
  Case kase;
  std::vector<std::string> subterms; // empty: all factor pairs of the case
  std::string printed_text;
  std::function<RatXi(long m)> printed;
};

struct ProjectionFixture {
  std::string name;
  std::string printed_text;
  bool reconstruction = false;
  std::function<CliffordExpr(int m)> printed;
  std::function<CliffordExpr(int m)> computed;
};

inline const std::vector<IntegrandFixture>& integrand_fixtures() {
  using namespace fx;
  static const std::vector<IntegrandFixture> table = {
      {"T1-II traced integrand", Theorem::T1, Case::II, {},
       "-i(m-1)((4m-2)xi^2-2)/(2(xi-i)^(m+2)(xi+i)^(m+1)) dXn + (m-1)i/(4(xi-i)^(m+3)(xi+i)^(m+1)) Xn",
       [](long m) {
         return frac({c(0, 2 * (m - 1)), 0, c(0, -(m - 1) * (4 * m - 2))}, m + 2, m + 1)
                    .scaled(S(GeomSymbol::DXN) * SymbolPoly(q(1, 2))) +
                frac({c(0, m - 1)}, m + 3, m + 1).scaled(S(GeomSymbol::XN) * SymbolPoly(q(1, 4)));
       }},
      {"T1-III traced integrand", Theorem::T1, Case::III, {}, "-(1-m) h'(0) i/((xi-i)^(m+3)(xi+i)^m) Xn",
       [](long m) { return frac({c(0, m - 1)}, m + 3, m).scaled(XNH1()); }},
      {"T1-IV traced integrand", Theorem::T1, Case::IV, {},
       "(2m^2-m-1) h'(0) xi/(4(xi-i)^(m+2)(xi+i)^m) Xn + (m^2-2m+1) h'(0) xi/((xi-i)^(m+3)(xi+i)^(m+1)) Xn",
       [](long m) {
         return frac({0, q(2 * m * m - m - 1, 4)}, m + 2, m).scaled(XNH1()) +
                frac({0, q(m * m - 2 * m + 1)}, m + 3, m + 1).scaled(XNH1());
       }},
      {"T1-V traced integrand", Theorem::T1, Case::V, {}, "(1-m) h'(0)(xi^2+5i xi)/(4(xi-i)^(m+3)(xi+i)^m) Xn",
       [](long m) { return frac({0, c(0, 5), 1}, m + 3, m).scaled(XNH1() * SymbolPoly(q(1 - m, 4))); }},
      {"T2-II traced integrand", Theorem::T2, Case::II, {},
       "(i-xi)/(2(xi-i)^(m+3)(xi+i)^m) dXn + (-2xi^2+9i xi+4)/(2(xi-i)^(m+4)(xi+i)^m) Xn h'(0)",
       [](long m) {
         return frac({I(), -1}, m + 3, m).scaled(S(GeomSymbol::DXN) * SymbolPoly(q(1, 2))) +
                frac({4, c(0, 9), -2}, m + 4, m).scaled(XNH1() * SymbolPoly(q(1, 2)));
       }},
      {"T2-III traced integrand", Theorem::T2, Case::III, {},
       "(i xi^2+2m(1-i)xi+2m+i)/(2(xi-i)^(m+4)(xi+i)^(m+1)) Xn h'(0)",
       [](long m) { return frac({c(2 * m, 1), c(2 * m, -2 * m), I()}, m + 4, m + 1).scaled(XNH1() * SymbolPoly(q(1, 2))); }},
      {"T2-IV traced integrand, first part", Theorem::T2, Case::IV, {"A1"},
       "(3xi^2-5i xi)/(8(xi-i)^(m+3)(xi+i)^m) - (3m xi^4-4mi xi^3+m xi^2)/(4(xi-i)^(m+3)(xi+i)^m) + "
       "(2mi xi^4+3m xi^2)/(2(xi-i)^(m+4)(xi+i)^(m+1)), times Xn h'(0)",
       [](long m) {
         return (frac({0, c(0, -5), 3}, m + 3, m).scaled(SymbolPoly(q(1, 8))) -
                 frac({0, 0, q(m), c(0, -4 * m), q(3 * m)}, m + 3, m).scaled(SymbolPoly(q(1, 4))) +
                 frac({0, 0, q(3 * m), 0, c(0, 2 * m)}, m + 4, m + 1).scaled(SymbolPoly(q(1, 2))))
             .scaled(XNH1());
       }},
      {"T2-IV traced integrand, second part", Theorem::T2, Case::IV, {"A2"}, "0", [](long) { return RatXi(); }},
      {"T2-IV traced integrand, third part", Theorem::T2, Case::IV, {"A3"},
       "(i xi^2+2m xi+i)/(4(xi-i)^(m+3)(xi+i)^(m+1)) Xn h'(0)",
       [](long m) { return frac({I(), q(2 * m), I()}, m + 3, m + 1).scaled(XNH1() * SymbolPoly(q(1, 4))); }},
      {"T2-V traced integrand", Theorem::T2, Case::V, {},
       "[(2m^2-m)i xi^2/(8(xi-i)^(m+3)(xi+i)^(m+1)) + (im^2+m^2+m-3mi)xi/(2(xi-i)^(m+4)(xi+i)^(m+2)) + "
       "(2m^2+3m+1)i xi^2/(8(xi-i)^(m+3)(xi+i)^(m+1)) + (3m+1)i/(8(xi-i)^(m+3)(xi+i)^(m+1))] Xn h'(0)",
       [](long m) {
         return (frac({0, 0, c(0, 2 * m * m - m)}, m + 3, m + 1).scaled(SymbolPoly(q(1, 8))) +
                 frac({0, c(m * m + m, m * m - 3 * m)}, m + 4, m + 2).scaled(SymbolPoly(q(1, 2))) +
                 frac({0, 0, c(0, 2 * m * m + 3 * m + 1)}, m + 3, m + 1).scaled(SymbolPoly(q(1, 8))) +
                 frac({c(0, 3 * m + 1)}, m + 3, m + 1).scaled(SymbolPoly(q(1, 8))))
             .scaled(XNH1());
       }},
      {"T3-II traced integrand", Theorem::T3, Case::II, {},
       "(m-1)((2m-1)i xi^2-i)/((xi+i)^(m+1)(xi-i)^(m+2)) dXn + (m-1)((2m-1)xi^2-1)/((xi+i)^(m+1)(xi-i)^(m+3)) Xn h'(0)",
       [](long m) {
         return frac({c(0, -1), 0, c(0, 2 * m - 1)}, m + 2, m + 1).scaled(S(GeomSymbol::DXN) * SymbolPoly(q(m - 1))) +
                frac({-1, 0, q(2 * m - 1)}, m + 3, m + 1).scaled(XNH1() * SymbolPoly(q(m - 1)));
       }},
      {"T3-III traced integrand", Theorem::T3, Case::III, {}, "(1-m) h'(0) i/((xi-i)^(m+3)(xi+i)^m) Xn",
       [](long m) { return frac({c(0, 1 - m)}, m + 3, m).scaled(XNH1()); }},
      {"T3-IV traced integrand", Theorem::T3, Case::IV, {},
       "-(2m^2-m-1)xi/(4(xi+i)^m(xi-i)^(m+2)) - (m-1)xi/((xi+i)^m(xi-i)^(m+2)) - (m^2-3m+2)xi/(2(xi+i)^m(xi-i)^(m+3)), "
       "times Xn h'(0)",
       [](long m) {
         return (frac({0, -q(2 * m * m - m - 1, 4)}, m + 2, m) + frac({0, q(1 - m)}, m + 2, m) +
                 frac({0, -q(m * m - 3 * m + 2, 2)}, m + 3, m))
             .scaled(XNH1());
       }},
      {"T3-V traced integrand, first part", Theorem::T3, Case::V, {"B1"}, "0", [](long) { return RatXi(); }},
      {"T3-V traced integrand, second part", Theorem::T3, Case::V, {"B2"},
       "-(1-m)(3i xi^3+4xi^2)/(2(xi-i)^(m+3)(xi+i)^m) Xn h'(0)",
       [](long m) { return frac({0, 0, 4, c(0, 3)}, m + 3, m).scaled(XNH1() * SymbolPoly(q(m - 1, 2))); }},
      {"T3-V traced integrand, third part", Theorem::T3, Case::V, {"B3"},
       "(1-m)(i xi^2+2xi)/(2(xi-i)^2(1+xi^2)^m) Xn h'(0)",
       [](long m) { return frac({0, 2, I()}, m + 2, m).scaled(XNH1() * SymbolPoly(q(1 - m, 2))); }},
      {"T3-V traced integrand, second and third parts", Theorem::T3, Case::V, {"B2", "B3"},
       "(1-m)(2i xi^3+xi^2+2i xi)/(2(xi-i)^3(1+xi^2)^m) Xn h'(0)",
       [](long m) { return frac({0, c(0, 2), 1, c(0, 2)}, m + 3, m).scaled(XNH1() * SymbolPoly(q(1 - m, 2))); }},
  };
  return table;
}

inline const std::vector<ProjectionFixture>& projection_fixtures() {
  using namespace fx;
  using L = Letter;
  static const std::vector<ProjectionFixture> table = {
      {"projection of i d_xn(c(X)) c(xi)/|xi|^2", "d_xn(c(X)) (c(xi') + i c(dxn))/(2(xi_n - i))", false,
       [](int) { return W({L::DXVec, L::XiPrime}, frac({q(1, 2)}, 1, 0)) + W({L::DXVec, L::DxN}, frac({c(0, 1) * q(1, 2)}, 1, 0)); },
       [](int) { return pi_plus((lib::qi(1) * lib::at(L::DXVec) * lib::c_xi() * lib::N(1)).to_clifford()); }},
      {"projection of d_xn sigma_-1(c(X)D^-1)",
       "d_xn(c(X))(c(xi')+i c(dxn))/(2(xi_n-i)) + c(X) d_xn c(xi')/(2(xi_n-i)) - i c(X)[(i xi_n+2)c(xi')+i c(dxn)]/(4(xi_n-i)^2)",
       false,
       [](int) {
         return W({L::DXVec, L::XiPrime}, frac({q(1, 2)}, 1, 0)) + W({L::DXVec, L::DxN}, frac({c(0, 1) * q(1, 2)}, 1, 0)) +
                W({L::XVec, L::DXiPrime}, frac({q(1, 2)}, 1, 0)) +
                W({L::XVec, L::XiPrime}, frac({c(0, -2), 1}, 2, 0).scaled(SymbolPoly(q(1, 4)))) +
                W({L::XVec, L::DxN}, frac({q(1, 4)}, 2, 0));
       },
       [](int m) { return pi_plus(build_symbol(Op::cXDinv, Slot::sigma, m).jet->dx().to_clifford()); }},
      {"projection of A^2", "A(X)c(xi')/(2(xi_n-i)) + i A(X)c(dxn)/(2(xi_n-i))", false,
       [](int) { return W({L::AX, L::XiPrime}, frac({q(1, 2)}, 1, 0)) + W({L::AX, L::DxN}, frac({c(0, 1) * q(1, 2)}, 1, 0)); },
       [](int m) { return pi_plus(build_symbol(Op::NablaDinv, Slot::part2, m).expr); }},
      {"projection of A^3",
       "Xn d_xn c(xi')/(2(xi_n-i)) + (xi_n-2i)/(4(xi_n-i)) h'(0) Xn c(xi') - Xn h'(0) c(dxn)/(4(xi_n-i))", false,
       [](int) {
         return W({L::DXiPrime}, frac({q(1, 2)}, 1, 0).scaled(S(GeomSymbol::XN))) +
                W({L::XiPrime}, frac({c(0, -2), 1}, 1, 0).scaled(XNH1() * SymbolPoly(q(1, 4)))) +
                W({L::DxN}, frac({q(-1, 4)}, 1, 0).scaled(XNH1()));
       },
       [](int m) { return pi_plus(build_symbol(Op::NablaDinv, Slot::part3, m).expr); }},
      {"projection of sigma_-1(nabla_X D^-2)", "sum_j X_j xi_j/(2(xi_n-i)) + i Xn/(2(xi_n-i))", false,
       [](int) {
         return CliffordExpr(frac({q(1, 2)}, 1, 0).scaled(S(GeomSymbol::GXXI)) +
                             frac({c(0, 1) * q(1, 2)}, 1, 0).scaled(S(GeomSymbol::XN)));
       },
       [](int m) { return pi_plus(build_symbol(Op::NablaDinv2, Slot::sigma, m).expr); }},
      {"projection of d_xn sigma_-1(nabla_X D^-2)",
       "sum_j xi_j d_xn X_j/(2(xi_n-i)) + i d_xn Xn/(2(xi_n-i)) + (2i-xi_n)/(4(xi_n-i)^2) sum_j X_j xi_j h'(0) - Xn h'(0)/(4(xi_n-i)^2)",
       false,
       [](int) {
         return CliffordExpr(frac({q(1, 2)}, 1, 0).scaled(S(GeomSymbol::DGXXI)) +
                             frac({c(0, 1) * q(1, 2)}, 1, 0).scaled(S(GeomSymbol::DXN)) +
                             frac({c(0, 2), -1}, 2, 0).scaled(S(GeomSymbol::GXXI) * S(GeomSymbol::H1) * SymbolPoly(q(1, 4))) +
                             frac({q(-1, 4)}, 2, 0).scaled(XNH1()));
       },
       [](int m) { return pi_plus(build_symbol(Op::NablaDinv2, Slot::sigma, m).jet->dx().to_clifford()); }},
      {"xi_n derivative of the projection of sigma_-1(nabla_X D^-2)",
       "-sum_j X_j xi_j/(2(xi_n-i)^2) - i Xn/(2(xi_n-i)^2)", true,
       [](int) {
         return CliffordExpr(frac({q(-1, 2)}, 2, 0).scaled(S(GeomSymbol::GXXI)) +
                             frac({c(0, -1) * q(1, 2)}, 2, 0).scaled(S(GeomSymbol::XN)));
       },
       [](int m) { return diff(pi_plus(build_symbol(Op::NablaDinv2, Slot::sigma, m).expr)); }},
      {"projection of B^2",
       "(2+i xi_n)/(8(xi_n-i)^2) h'(0) sum X_j xi_j c(e_k)c(e_n) + i/(8(xi_n-i)^2) Xn h'(0) c(e_k)c(e_n) - "
       "(3i xi_n+4)/(4(xi_n-i)^3) h'(0) sum X_j xi_j - (3i xi_n^2+4xi_n)/(4(xi_n-i)^3) Xn h'(0)",
       false,
       [](int) {
         const SymbolPoly gh = S(GeomSymbol::GXXI) * S(GeomSymbol::H1);
         return W({L::Ek, L::En}, frac({2, I()}, 2, 0).scaled(gh * SymbolPoly(q(1, 8)))) +
                W({L::Ek, L::En}, frac({c(0, 1)}, 2, 0).scaled(XNH1() * SymbolPoly(q(1, 8)))) +
                CliffordExpr(frac({4, c(0, 3)}, 3, 0).scaled(gh * SymbolPoly(q(-1, 4)))) +
                CliffordExpr(frac({0, 4, c(0, 3)}, 3, 0).scaled(XNH1() * SymbolPoly(q(-1, 4))));
       },
       [](int m) { return pi_plus(build_symbol(Op::NablaDinv2, Slot::part2, m).expr); }},
      {"projection of B^3", "(2+i xi_n)/(4(xi_n-i)^2) Xn h'(0)", false,
       [](int) { return CliffordExpr(frac({2, I()}, 2, 0).scaled(XNH1() * SymbolPoly(q(1, 4)))); },
       [](int m) { return pi_plus(build_symbol(Op::NablaDinv2, Slot::part3, m).expr); }},
  };
  return table;
}

struct FixtureResult {
  std::string name;
  std::string kind; // "integrand" or "projection"
  std::string printed_text;
  bool reconstruction = false;
  int m;
  bool match;
  std::string printed;
  std::string computed;
};

inline RatXi fixture_integrand(const IntegrandFixture& f, int m) {
  RatXi sum;
  const int t = printed_form(f.theorem, f.kase);
  for (const auto& pair : case_factors(make_case(f.theorem, f.kase, m))) {
    if (!f.subterms.empty() && std::find(f.subterms.begin(), f.subterms.end(), pair.name) == f.subterms.end()) continue;
    sum += integrand_form(pair, t);
  }
  if (t % 2 == 1) sum = -sum;
  return even_part(sum);
}

inline FixtureResult evaluate_fixture(const IntegrandFixture& f, int m) {
  const RatXi printed = f.printed(m), computed = fixture_integrand(f, m);
  return {f.name, "integrand", f.printed_text, false, m, printed == computed, printed.str(), computed.str()};
}

inline FixtureResult evaluate_fixture(const ProjectionFixture& f, int m) {
  const CliffordExpr printed = f.printed(m), computed = f.computed(m);
  return {f.name, "projection", f.printed_text, f.reconstruction, m, printed == computed, printed.str(), computed.str()};
}

inline std::vector<FixtureResult> evaluate_fixtures(Theorem t, int m) {
  std::vector<FixtureResult> out;
  for (const auto& f : integrand_fixtures())
    if (f.theorem == t) out.push_back(evaluate_fixture(f, m));
  return out;
}

inline std::vector<FixtureResult> evaluate_projection_fixtures(int m) {
  std::vector<FixtureResult> out;
  for (const auto& f : projection_fixtures()) out.push_back(evaluate_fixture(f, m));
  return out;
}

} // namespace ncres
