#pragma once

#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "ncres/clifford.hpp"
#include "ncres/coefficients.hpp"
#include "ncres/errors.hpp"
#include "ncres/quadrature.hpp"
#include "ncres/rat_xi.hpp"
#include "ncres/symbol_library.hpp"

namespace ncres {

enum class Theorem { T1 = 1, T2 = 2, T3 = 3 };
enum class Case { I = 1, II, III, IV, V };

inline std::string theorem_name(Theorem t) { return "T" + std::to_string(static_cast<int>(t)); }

inline std::string case_name(Case c) {
  static const char* names[] = {"I", "II", "III", "IV", "V"};
  return names[static_cast<int>(c) - 1];
}

inline constexpr Case kAllCases[] = {Case::I, Case::II, Case::III, Case::IV, Case::V};
inline constexpr Theorem kAllTheorems[] = {Theorem::T1, Theorem::T2, Theorem::T3};

/// Orders and derivative counts of one boundary term: r and l are symbol orders,
/// j counts x_n derivatives on the first factor, k on the second, alpha is |alpha|.
struct CaseSpec {
  Theorem theorem;
  Case kase;
  int m;
  int r, l, k, j, alpha;

  friend bool operator==(const CaseSpec&, const CaseSpec&) = default;
};

/// Leading orders (r0, l0) of the two factors.
inline std::pair<int, int> leading_orders(Theorem t, int m) {
  if (t == Theorem::T2) return {0, -(2 * m - 1)};
  return {-1, -(2 * m - 2)};
}

inline CaseSpec make_case(Theorem t, Case c, int m) {
  if (m < 1) throw InvalidCase("m must be at least 1");
  auto [r0, l0] = leading_orders(t, m);
  CaseSpec s{t, c, m, r0, l0, 0, 0, 0};
  switch (c) {
  case Case::I: s.alpha = 1; break;
  case Case::II: s.j = 1; break;
  case Case::III: s.k = 1; break;
  case Case::IV:
    if (t == Theorem::T2) s.r = r0 - 1;
    else s.l = l0 - 1;
    break;
  case Case::V:
    if (t == Theorem::T2) s.l = l0 - 1;
    else s.r = r0 - 1;
    break;
  }
  return s;
}

inline void validate(const CaseSpec& s) {
  if (s.m < 1) throw InvalidCase("m must be at least 1");
  if (s.r + s.l - s.k - s.j - s.alpha != -2 * s.m)
    throw InvalidCase("r + l - k - j - |alpha| must equal -2m");
  if (!(s == make_case(s.theorem, s.kase, s.m))) throw InvalidCase("tuple does not match case " + case_name(s.kase));
}

/// (-i)^(|alpha|+j+k+1) / (alpha! (j+k+1)!)
inline GaussianRational prefactor(const CaseSpec& s) {
  return (-GaussianRational::i()).pow(s.alpha + s.j + s.k + 1) / factorial(s.j + s.k + 1);
}

/// Drops monomials odd in xi' and multiplies the rest by Vol(S^{n-2}).
inline SymbolPoly sphere_reduce(const SymbolPoly& p) {
  return p.filter([](const Monomial& m) { return m.parity() == Parity::even; }) * SymbolPoly(GeomSymbol::VOLS);
}

inline SymbolPoly even_part(const SymbolPoly& p) {
  return p.filter([](const Monomial& m) { return m.parity() == Parity::even; });
}

inline RatXi even_part(const RatXi& f) { return f.map_coeffs([](const SymbolPoly& c) { return even_part(c); }); }

inline const Monomial& mono_dxn() {
  static const Monomial m = Monomial::product(GeomSymbol::DXN, GeomSymbol::VOLS);
  return m;
}
inline const Monomial& mono_xnh1() {
  static const Monomial m = Monomial::product(GeomSymbol::XN, GeomSymbol::H1, GeomSymbol::VOLS);
  return m;
}
inline const Monomial& mono_xn() {
  static const Monomial m = Monomial::product(GeomSymbol::XN, GeomSymbol::VOLS);
  return m;
}
inline const Monomial& mono_vols() {
  static const Monomial m = Monomial::of(GeomSymbol::VOLS);
  return m;
}

inline bool in_result_span(const SymbolPoly& p) {
  for (const auto& [m, c] : p.terms())
    if (!(m == mono_dxn()) && !(m == mono_xnh1())) return false;
  return true;
}

/// The two factors of one boundary term before the xi_n derivatives on the second
/// factor are applied: the integrand is tr[first * d^n_xi(second)].
struct FactorPair {
  std::string name;
  CliffordExpr first;
  CliffordExpr second;
  int xi_derivatives = 1;
};

namespace detail {

struct TheoremOps {
  Op first;
  Op second;
  std::vector<Slot> first_sub;
  PolynomialPart lead_mode;
};

inline TheoremOps theorem_ops(Theorem t) {
  switch (t) {
  case Theorem::T1: return {Op::cXDinv, Op::Pow2m2, {Slot::sigma_sub}, PolynomialPart::reject};
  case Theorem::T2: return {Op::NablaDinv, Op::Pow2m1, {Slot::part1, Slot::part2, Slot::part3}, PolynomialPart::discard};
  case Theorem::T3:
    return {Op::NablaDinv2, Op::Pow2m2, {Slot::part1, Slot::part2, Slot::part3}, PolynomialPart::reject};
  }
  throw InvalidCase("unknown theorem");
}

inline std::string part_label(Theorem t, Slot s) {
  const std::string base = t == Theorem::T2 ? "A" : "B";
  switch (s) {
  case Slot::part1: return base + "1";
  case Slot::part2: return base + "2";
  case Slot::part3: return base + "3";
  default: return "main";
  }
}

} // namespace detail

/// Builds the factor pairs of a case. Case I returns no pairs: the tangential
/// derivative of the second factor vanishes at the boundary point.
inline std::vector<FactorPair> case_factors(const CaseSpec& s) {
  validate(s);
  const auto ops = detail::theorem_ops(s.theorem);
  const int m = s.m;
  auto lead1 = [&] { return build_symbol(ops.first, Slot::sigma, m); };
  auto lead2 = [&] { return build_symbol(ops.second, Slot::sigma, m); };
  std::vector<FactorPair> out;
  switch (s.kase) {
  case Case::I: break;
  case Case::II: {
    const CliffordExpr f1 = pi_plus(lead1().jet->dx().to_clifford(), ops.lead_mode);
    out.push_back({"main", f1, lead2().expr, 2});
    break;
  }
  case Case::III: {
    const CliffordExpr f1 = diff(pi_plus(lead1().expr, ops.lead_mode));
    out.push_back({"main", f1, lead2().jet->dx().to_clifford(), 1});
    break;
  }
  case Case::IV:
  case Case::V: {
    const bool sub_first = s.r < leading_orders(s.theorem, m).first;
    if (sub_first) {
      const CliffordExpr f2 = lead2().expr;
      for (Slot part : ops.first_sub) {
        const CliffordExpr f1 = pi_plus(build_symbol(ops.first, part, m).expr);
        out.push_back({detail::part_label(s.theorem, part), f1, f2, 1});
      }
    } else {
      const CliffordExpr f1 = pi_plus(lead1().expr, ops.lead_mode);
      out.push_back({"main", f1, build_symbol(ops.second, Slot::sigma_sub, m).expr, 1});
    }
    break;
  }
  }
  return out;
}

/// Normalised traced integrand with t xi_n derivatives moved onto the first factor.
inline RatXi integrand_form(const FactorPair& f, int t) {
  if (t < 0 || t > f.xi_derivatives) throw InvalidCase("integration by parts beyond available derivatives");
  CliffordExpr a = diff(f.first, t);
  if (t % 2 == 1) a = -a;
  return trace(a * diff(f.second, f.xi_derivatives - t));
}

/// How many xi_n derivatives the printed traced integrand moves onto the first factor.
inline int printed_form(Theorem t, Case c) {
  static const int table[3][5] = {{0, 0, 1, 1, 0}, {0, 2, 1, 0, 1}, {0, 0, 1, 1, 0}};
  return table[static_cast<int>(t) - 1][static_cast<int>(c) - 1];
}

struct IbpForm {
  int t;
  PiScaledValue contour;
  bool equal_to_direct;
};

struct SubtermReport {
  std::string name;
  RatXi integrand;
  PiScaledValue contour;
  SymbolPoly reduced;
  std::vector<IbpForm> forms;
};

struct QuadratureCheck {
  std::uint64_t seed;
  QuadratureResult result;
};

struct OracleStatus {
  bool residue_dual = true;
  bool ibp_consistent = true;
  bool in_span = true;
  std::vector<QuadratureCheck> quadrature;
  bool quadrature_pass = true;
  std::vector<std::string> errors;
  bool all_pass() const { return residue_dual && ibp_consistent && in_span && quadrature_pass && errors.empty(); }
};

struct CaseReport {
  CaseSpec spec;
  GaussianRational prefactor;
  RatXi integrand;
  PiScaledValue contour;
  SymbolPoly reduced;
  std::vector<SubtermReport> subterms;
  OracleStatus oracle;
  std::string note;
};

enum class OracleMode { exact, quadrature, both };

struct RunOptions {
  OracleMode oracle = OracleMode::both;
  long double tolerance = 1e-8L;
  std::uint64_t seed = 20240607;
  int quadrature_samples = 3;
};

inline std::uint64_t case_seed(const RunOptions& o, const CaseSpec& s, int sample) {
  return o.seed * 1000003ULL + static_cast<std::uint64_t>(s.theorem) * 10007ULL +
         static_cast<std::uint64_t>(s.kase) * 101ULL + static_cast<std::uint64_t>(s.m) * 7ULL +
         static_cast<std::uint64_t>(sample);
}

inline CaseReport run_case(const CaseSpec& s, const RunOptions& opt = {}) {
  validate(s);
  CaseReport rep{s, prefactor(s), {}, {}, {}, {}, {}, {}};
  const GaussianRational scale = rep.prefactor * GaussianRational(2).pow(s.m);
  if (s.kase == Case::I) rep.note = "tangential derivative of the second factor vanishes at the boundary point";

  for (const auto& f : case_factors(s)) {
    SubtermReport sub{f.name, integrand_form(f, 0), {}, {}, {}};
    sub.contour = contour_gamma_plus(sub.integrand);
    sub.reduced = sphere_reduce(sub.contour.coeff * SymbolPoly(scale));
    if (opt.oracle != OracleMode::quadrature && !(contour_from_partial_fractions(sub.integrand) == sub.contour))
      rep.oracle.residue_dual = false;
    for (int t = 1; t <= f.xi_derivatives; ++t) {
      const PiScaledValue c = contour_gamma_plus(integrand_form(f, t));
      const bool eq = c == sub.contour;
      if (!eq) rep.oracle.ibp_consistent = false;
      sub.forms.push_back({t, c, eq});
    }
    rep.integrand += sub.integrand;
    rep.subterms.push_back(std::move(sub));
  }
  rep.contour = contour_gamma_plus(rep.integrand);
  rep.reduced = sphere_reduce(rep.contour.coeff * SymbolPoly(scale));
  rep.oracle.in_span = in_result_span(rep.reduced);

  if (opt.oracle != OracleMode::exact && !rep.integrand.is_zero()) {
    const RatXi scaled = rep.integrand.scaled(SymbolPoly(scale));
    const SymbolPoly exact = rep.contour.coeff * SymbolPoly(scale);
    for (int k = 0; k < opt.quadrature_samples; ++k) {
      const std::uint64_t seed = case_seed(opt, s, k);
      try {
        QuadratureCheck q{seed, quadrature_oracle(scaled, exact, random_assignment(seed), opt.tolerance)};
        if (!q.result.pass) rep.oracle.quadrature_pass = false;
        rep.oracle.quadrature.push_back(q);
      } catch (const Error& e) {
        rep.oracle.quadrature_pass = false;
        rep.oracle.errors.push_back(e.what());
      }
    }
  }
  return rep;
}

/// One term of a printed coefficient combination: factor(m) * pi * constant(m) * 2^m * Vol.
/// An empty constant name means factor(m) alone.
struct RenderTerm {
  const Monomial* monomial;
  std::function<GaussianRational(long)> factor;
  std::string constant;
};

struct Rendering {
  std::string name;
  std::vector<RenderTerm> terms;
};

enum class ConstantSource { oracle, printed };

inline SymbolPoly evaluate_rendering(const Rendering& r, long m, ConstantSource src) {
  SymbolPoly out;
  const GaussianRational pow2 = GaussianRational(2).pow(m);
  for (const auto& t : r.terms) {
    GaussianRational v = t.factor(m) * pow2;
    if (!t.constant.empty()) v *= src == ConstantSource::oracle ? eval_by_oracle(t.constant, m) : eval_closed_form(t.constant, m);
    out += SymbolPoly(*t.monomial, v);
  }
  return out;
}

namespace render {

using GR = GaussianRational;
inline GR I() { return GR::i(); }
inline GR q(long a, long b = 1) { return GR::ratio(a, b); }
inline GR f(long k) { return factorial(k); }

inline std::vector<RenderTerm> t1_case(Case c) {
  switch (c) {
  case Case::II:
    return {{&mono_dxn(), [](long m) { return q(m - 1) / f(m + 1); }, "A0"},
            {&mono_xn(), [](long m) { return q(m - 1) * I() / (q(2) * f(m + 2)); }, "A1"}};
  case Case::III: return {{&mono_xnh1(), [](long m) { return q(m - 1) * I() / f(m + 2); }, "B0"}};
  case Case::IV:
    return {{&mono_xnh1(), [](long m) { return -q(2 * m * m - m - 1) / (q(4) * f(m + 1)); }, "C0"},
            {&mono_xnh1(), [](long m) { return -q(2 * (m * m - 2 * m + 1)) / f(m + 2); }, "C1"}};
  case Case::V: return {{&mono_xnh1(), [](long m) { return -q(m - 1) / (q(2) * f(m + 2)); }, "D0"}};
  default: return {};
  }
}

inline std::vector<RenderTerm> t2_h_terms() {
  return {{&mono_xnh1(), [](long m) { return -q(2 * m * m - m) / (q(4) * f(m + 2)); }, "H0"},
          {&mono_xnh1(), [](long m) { return (q(-m * m + 3 * m) + q(m * m + m) * I()) * I() / f(m + 3); }, "H1"},
          {&mono_xnh1(), [](long m) { return -q(2 * m * m + 3 * m + 1) * I() / (q(4) * f(m + 2)); }, "H2"},
          {&mono_xnh1(), [](long m) { return -q(3 * m + 1) * I() / f(m + 2); }, "H3"}};
}

inline std::vector<RenderTerm> t2_case(Case c) {
  switch (c) {
  case Case::II:
    return {{&mono_dxn(), [](long m) { return -I() / (q(2) * f(m + 2)); }, "E0"},
            {&mono_xnh1(), [](long m) { return -I() / (q(2) * f(m + 3)); }, "E1"}};
  case Case::III: return {{&mono_xnh1(), [](long m) { return I() / (q(2) * f(m + 3)); }, "F0"}};
  case Case::IV:
    return {{&mono_xnh1(), [](long m) { return -(I() / q(8)) * q(2) * I() / f(m + 2); }, "G0"},
            {&mono_xnh1(), [](long m) { return (I() / q(4)) * q(2) * I() / f(m + 2); }, "G1"},
            {&mono_xnh1(), [](long m) { return -(I() / q(2)) * q(2) * I() / f(m + 3); }, "G2"},
            {&mono_xnh1(), [](long m) { return -(I() / q(4)) * q(2) * I() / f(m + 2); }, "G3"}};
  case Case::V: return t2_h_terms();
  default: return {};
  }
}

inline std::vector<RenderTerm> t3_case(Case c) {
  switch (c) {
  case Case::II:
    return {{&mono_dxn(), [](long m) { return -q(m - 1) * I() / f(m + 1); }, "I0"},
            {&mono_xnh1(), [](long m) { return q(m - 1) * I() / (q(2) * f(m + 2)); }, "I1"}};
  case Case::III: return {{&mono_xnh1(), [](long m) { return q(1 - m) * I() / (q(2) * f(m + 2)); }, "J0"}};
  case Case::IV:
    return {{&mono_xnh1(), [](long m) { return q(2 * m * m + 3 * m - 5) / (q(2) * f(m + 1)); }, "K0"},
            {&mono_xnh1(), [](long m) { return q(m * m - 3 * m + 2) / f(m + 2); }, "K1"}};
  case Case::V: return {{&mono_xnh1(), [](long m) { return q(m - 1) / f(m + 2); }, "L0"}};
  default: return {};
  }
}

} // namespace render

/// The printed per-case value.
inline Rendering case_rendering(Theorem t, Case c) {
  switch (t) {
  case Theorem::T1: return {"case", render::t1_case(c)};
  case Theorem::T2: return {"case", render::t2_case(c)};
  case Theorem::T3: return {"case", render::t3_case(c)};
  }
  return {};
}

/// Printed values of individual subterms of a split case, where the text states them.
inline std::vector<std::pair<std::string, Rendering>> subterm_renderings(Theorem t, Case c) {
  using namespace render;
  if (t == Theorem::T2 && c == Case::IV)
    return {{"A1",
             {"subterm",
              {{&mono_xnh1(), [](long m) { return q(1) / (q(4) * f(m + 2)); }, "G0"},
               {&mono_xnh1(), [](long m) { return -q(1) / (q(2) * f(m + 2)); }, "G1"},
               {&mono_xnh1(), [](long m) { return q(1) / f(m + 3); }, "G2"}}}},
            {"A2", {"subterm", {}}},
            {"A3", {"subterm", {{&mono_xnh1(), [](long m) { return q(1) / (q(2) * f(m + 2)); }, "G3"}}}}};
  if (t == Theorem::T3 && c == Case::V) return {{"B1", {"subterm", {}}}};
  return {};
}

/// Theorem-level printed combinations.
inline std::vector<Rendering> theorem_renderings(Theorem t) {
  using namespace render;
  std::vector<Rendering> out;
  Rendering sum{"case_sum", {}};
  for (Case c : kAllCases)
    for (auto& term : case_rendering(t, c).terms) sum.terms.push_back(term);
  switch (t) {
  case Theorem::T1: {
    const std::vector<RenderTerm> xnh1_tail = {
        {&mono_xnh1(), [](long m) { return q(m - 1) * I() / f(m + 2); }, "B0"},
        {&mono_xnh1(), [](long m) { return I() * q(2 * m * m - m - 1) * I() / (q(4) * f(m + 1)); }, "C0"},
        {&mono_xnh1(), [](long m) { return I() * q(m * m - 2 * m + 1) * q(2) * I() / f(m + 2); }, "C1"},
        {&mono_xnh1(), [](long m) { return I() * q(m - 1) * I() / (q(2) * f(m + 2)); }, "D0"}};
    Rendering headline{"headline",
                       {{&mono_dxn(), [](long m) { return q(m - 1) / f(m + 1); }, "A0"},
                        {&mono_xn(), [](long m) { return q(m - 1) * I() / (q(2) * f(m + 2)); }, "A1"}}};
    headline.terms.insert(headline.terms.end(), xnh1_tail.begin(), xnh1_tail.end());
    Rendering restated{"restated",
                       {{&mono_dxn(), [](long m) { return q(1) / f(m + 1); }, "A0"},
                        {&mono_xn(), [](long m) { return I() / (q(2) * f(m + 2)); }, "A1"},
                        {&mono_xnh1(), [](long m) { return I() / f(m + 2); }, "B0"},
                        {&mono_xnh1(), [](long m) { return -q(2 * m * m - m - 1) / (q(4) * f(m + 1)); }, "C0"},
                        {&mono_xnh1(), [](long m) { return -q(2 * (m * m - 2 * m + 1)) / f(m + 2); }, "C1"},
                        {&mono_xnh1(), [](long m) { return -q(m - 1) / (q(2) * f(m + 2)); }, "D0"}}};
    Rendering assembled{"assembled",
                        {{&mono_dxn(), [](long m) { return q(m - 1) / f(m + 1); }, "A0"},
                         {&mono_vols(), [](long m) { return q(m - 1) * I() / (q(2) * f(m + 2)); }, "A1"}}};
    assembled.terms.insert(assembled.terms.end(), xnh1_tail.begin(), xnh1_tail.end());
    out = {headline, restated, assembled};
    break;
  }
  case Theorem::T2: {
    const auto dxn = RenderTerm{&mono_dxn(), [](long m) { return -q(1, 4) * q(2) * I() / f(m + 2); }, "E0"};
    Rendering headline{"headline",
                       {dxn,
                        {&mono_xnh1(), [](long m) { return -I() / (q(2) * f(m + 3)); }, "E1"},
                        {&mono_xnh1(), [](long m) { return I() / (q(2) * f(m + 3)); }, "F0"},
                        {&mono_xnh1(), [](long m) { return q(1) / (q(4) * f(m + 3)); }, "G0"},
                        {&mono_xnh1(), [](long m) { return q(1) / (q(2) * f(m + 2)); }, "G1"}}};
    Rendering assembled{"assembled",
                        {dxn,
                         {&mono_xnh1(), [](long m) { return -q(1, 4) * q(2) * I() / f(m + 3); }, "E1"},
                         {&mono_xnh1(), [](long m) { return q(1, 4) * q(2) * I() / f(m + 3); }, "F0"},
                         {&mono_xnh1(), [](long m) { return -(I() / q(8)) * q(2) * I() / f(m + 3); }, "G0"},
                         {&mono_xnh1(), [](long m) { return -(I() / q(4)) * q(2) * I() / f(m + 2); }, "G1"}}};
    for (auto& h : t2_h_terms()) {
      headline.terms.push_back(h);
      assembled.terms.push_back(h);
    }
    out = {headline, assembled};
    break;
  }
  case Theorem::T3: {
    Rendering headline{"headline",
                       {{&mono_dxn(), [](long m) { return -q(m - 1) * I() / f(m + 1); }, "I0"},
                        {&mono_xnh1(), [](long m) { return q(m - 1) * I() / (q(2) * f(m + 2)); }, "I1"},
                        {&mono_xnh1(), [](long m) { return q(1 - m) * I() / f(m + 2); }, "J0"},
                        {&mono_xnh1(), [](long m) { return q(2 * m * m + 3 * m - 5) / (q(2) * f(m + 1)); }, "K0"},
                        {&mono_xnh1(), [](long m) { return q(m * m - 3 * m + 2) / f(m + 2); }, "K1"},
                        {&mono_xnh1(), [](long m) { return q(m - 1) * q(2) * I() / f(m + 2); }, "L0"}}};
    out = {headline};
    break;
  }
  }
  out.push_back(sum);
  return out;
}

struct Comparison {
  std::string scope;     // "theorem", "case", "subterm"
  std::string label;     // rendering name, case name or subterm name
  std::string monomial;
  GaussianRational computed;
  GaussianRational stated_oracle;
  GaussianRational stated_printed;
  bool match_oracle;
  bool match_printed;
};

inline std::vector<Comparison> compare(const std::string& scope, const std::string& label, const SymbolPoly& computed,
                                       const Rendering& r, long m) {
  const SymbolPoly po = evaluate_rendering(r, m, ConstantSource::oracle);
  const SymbolPoly pp = evaluate_rendering(r, m, ConstantSource::printed);
  std::vector<Monomial> monos = {mono_dxn(), mono_xnh1()};
  for (const auto* p : {&computed, &po, &pp})
    for (const auto& [mono, c] : p->terms())
      if (std::find(monos.begin(), monos.end(), mono) == monos.end()) monos.push_back(mono);
  std::vector<Comparison> out;
  for (const auto& mono : monos) {
    Comparison c{scope, label, mono.str(), computed.coefficient(mono), po.coefficient(mono), pp.coefficient(mono),
                 false, false};
    c.match_oracle = c.computed == c.stated_oracle;
    c.match_printed = c.computed == c.stated_printed;
    out.push_back(std::move(c));
  }
  return out;
}

struct TheoremReport {
  Theorem theorem;
  int m;
  std::vector<CaseReport> cases;
  SymbolPoly totals;
  std::vector<Comparison> comparisons;
  bool all_oracles_pass() const {
    for (const auto& c : cases)
      if (!c.oracle.all_pass()) return false;
    return true;
  }
};

inline TheoremReport run_theorem(Theorem t, int m, const RunOptions& opt = {}, const std::vector<Case>& cases = {
                                     Case::I, Case::II, Case::III, Case::IV, Case::V}) {
  if (m < 1) throw InvalidCase("m must be at least 1");
  std::vector<std::future<CaseReport>> jobs;
  for (Case c : cases) jobs.push_back(std::async(std::launch::async, [=] { return run_case(make_case(t, c, m), opt); }));
  TheoremReport rep{t, m, {}, {}, {}};
  for (auto& j : jobs) rep.cases.push_back(j.get());
  for (const auto& c : rep.cases) rep.totals += c.reduced;

  const bool full = cases.size() == 5;
  if (full)
    for (const auto& r : theorem_renderings(t)) {
      auto cmp = compare("theorem", r.name, rep.totals, r, m);
      rep.comparisons.insert(rep.comparisons.end(), cmp.begin(), cmp.end());
    }
  for (const auto& c : rep.cases) {
    auto cmp = compare("case", case_name(c.spec.kase), c.reduced, case_rendering(t, c.spec.kase), m);
    rep.comparisons.insert(rep.comparisons.end(), cmp.begin(), cmp.end());
    for (const auto& [name, r] : subterm_renderings(t, c.spec.kase))
      for (const auto& sub : c.subterms)
        if (sub.name == name) {
          auto s = compare("subterm", case_name(c.spec.kase) + "/" + name, sub.reduced, r, m);
          rep.comparisons.insert(rep.comparisons.end(), s.begin(), s.end());
        }
  }
  return rep;
}

} // namespace ncres
