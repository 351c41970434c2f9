#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "ncres/ncres.hpp"
#include "support.hpp"

using namespace ncres;
using GR = GaussianRational;
using L = Letter;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

RatXi frac(std::initializer_list<GR> num, int p, int q) { return RatXi(XiPoly::from(num), p, q); }

Verdict projection_fidelity() {
  const CliffordExpr sigma = CliffordExpr::word({L::XiPrime}, frac({GR::i()}, 1, 1)) +
                             CliffordExpr::word({L::DxN}, frac({0, GR::i()}, 1, 1));
  const CliffordExpr expected = CliffordExpr::word({L::XiPrime}, frac({GR::ratio(1, 2)}, 1, 0)) +
                                CliffordExpr::word({L::DxN}, frac({GR(mpq_class(0), mpq_class(1, 2))}, 1, 0));
  if (!(pi_plus(sigma) == expected)) return {false, "pi+ of the leading D^-1 symbol: " + pi_plus(sigma).str()};
  std::mt19937_64 rng(20240607);
  for (int n = 0; n < 200; ++n) {
    const RatXi g = pi_plus(testkit::random_decaying(rng));
    if (!(pi_plus(g) == g)) return {false, "pi+ not idempotent on " + g.str()};
  }
  return {true, "exact projection and idempotence on 200 random inputs"};
}

Verdict residue_triple() {
  RunOptions o;
  o.oracle = OracleMode::both;
  o.tolerance = 1e-8L;
  o.quadrature_samples = 3;
  int checked = 0;
  for (Theorem t : kAllTheorems)
    for (Case c : kAllCases)
      for (int m = 1; m <= 6; ++m) {
        const CaseReport r = run_case(make_case(t, c, m), o);
        const bool quad_ran = r.integrand.is_zero() || r.oracle.quadrature.size() == 3;
        if (!r.oracle.residue_dual || !r.oracle.ibp_consistent || !r.oracle.quadrature_pass || !quad_ran ||
            !r.oracle.errors.empty())
          return {false, theorem_name(t) + " case " + case_name(c) + " m=" + std::to_string(m)};
        for (const auto& s : r.subterms)
          if (!(contour_gamma_plus(s.integrand) == contour_from_partial_fractions(s.integrand)))
            return {false, "sub-term " + s.name + " of " + theorem_name(t) + " case " + case_name(c)};
        ++checked;
      }
  return {true, std::to_string(checked) + " case runs, 3 quadrature samples each"};
}

Verdict clifford_oracle() {
  int words = 0;
  for (int m = 1; m <= 3; ++m)
    for (auto w : testkit::numeric_word_corpus(m, 100, 77 + m)) {
      const GR t = numeric_wick_trace(w);
      if (!(t == gamma_oracle(m, w))) return {false, "trace mismatch at m=" + std::to_string(m)};
      if (w.size() >= 2) {
        std::vector<NumVector> swapped = w, rest(w.begin() + 2, w.end());
        std::swap(swapped[0], swapped[1]);
        if (!(t + numeric_wick_trace(swapped) == GR(-2) * euclidean_dot(w[0], w[1]) * numeric_wick_trace(rest)))
          return {false, "anticommutation fails at m=" + std::to_string(m)};
      }
      if (!w.empty()) {
        std::rotate(w.begin(), w.begin() + 1, w.end());
        if (!(numeric_wick_trace(w) == t)) return {false, "cyclicity fails at m=" + std::to_string(m)};
      }
      ++words;
    }
  return {true, std::to_string(words) + " words"};
}

Verdict library_self_derivation() {
  const std::vector<std::pair<Op, Slot>> stated = {
      {Op::cXDinv, Slot::d_x},  {Op::Pow2m2, Slot::d_xi}, {Op::Pow2m2, Slot::d_xi2},
      {Op::Pow2m2, Slot::d_x},  {Op::Pow2m1, Slot::d_xi}, {Op::Pow2m1, Slot::d_x}};
  for (auto [op, slot] : stated)
    for (int m = 1; m <= 6; ++m)
      if (!derive_check(build_symbol(op, slot, m)).passed)
        return {false, op_name(op) + " " + slot_name(slot) + " m=" + std::to_string(m)};
  int reported = 0;
  for (auto [op, slot] : derivative_entries())
    if (std::find(stated.begin(), stated.end(), std::pair{op, slot}) == stated.end()) ++reported;
  return {true, std::to_string(stated.size()) + " stated derivatives reproduced; " + std::to_string(reported) +
                    " printed derivative forms reported as deviations"};
}

Verdict degenerate_anchors() {
  RunOptions o;
  o.oracle = OracleMode::exact;
  for (Theorem t : kAllTheorems)
    for (int m = 1; m <= 6; ++m)
      if (!run_case(make_case(t, Case::I, m), o).reduced.is_zero())
        return {false, "case I of " + theorem_name(t) + " nonzero at m=" + std::to_string(m)};
  for (Theorem t : {Theorem::T1, Theorem::T3}) {
    const TheoremReport r = run_theorem(t, 1, o);
    if (!r.totals.is_zero()) return {false, theorem_name(t) + " at m=1: " + r.totals.str()};
  }
  return {true, "case I is zero for m=1..6; T1 and T3 vanish at m=1"};
}

Verdict span_property() {
  RunOptions o;
  o.oracle = OracleMode::exact;
  for (Theorem t : kAllTheorems)
    for (Case c : kAllCases)
      for (int m = 1; m <= 6; ++m) {
        const CaseReport r = run_case(make_case(t, c, m), o);
        if (!in_result_span(r.reduced))
          return {false, theorem_name(t) + " case " + case_name(c) + " m=" + std::to_string(m) + ": " + r.reduced.str()};
      }
  return {true, "90 reduced outputs in span{dXn, Xn h'(0)} Vol 2^m"};
}

Verdict errata_table_complete() {
  const auto a = errata_table(1, 6), b = errata_table(1, 6);
  if (a.size() != 23u * 6u) return {false, "table has " + std::to_string(a.size()) + " rows"};
  std::size_t mismatches = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].name != b[k].name || a[k].m != b[k].m || !(a[k].printed == b[k].printed) || !(a[k].oracle == b[k].oracle) ||
        a[k].match != b[k].match)
      return {false, "nondeterministic row " + a[k].name};
    if (a[k].match != (a[k].printed == a[k].oracle)) return {false, "inconsistent verdict for " + a[k].name};
    if (!a[k].match) ++mismatches;
  }
  return {true, "138 rows, " + std::to_string(mismatches) + " printed values differ from the contour oracle"};
}

Verdict theorem_assembly() {
  RunOptions o;
  o.oracle = OracleMode::exact;
  std::size_t comparisons = 0, mismatches = 0;
  for (Theorem t : kAllTheorems)
    for (int m = 1; m <= 6; ++m) {
      const TheoremReport r = run_theorem(t, m, o);
      SymbolPoly sum;
      for (const auto& c : r.cases) sum += c.reduced;
      if (!(sum == r.totals)) return {false, theorem_name(t) + " totals differ from case sum at m=" + std::to_string(m)};
      std::size_t theorem_level = 0;
      for (const auto& c : r.comparisons) {
        ++comparisons;
        if (!c.match_oracle) ++mismatches;
        if (c.scope == "theorem") ++theorem_level;
        const bool case_one = c.scope == "case" && c.label == "I";
        const bool a2 = c.scope == "subterm" && c.label == "IV/A2";
        const bool m_one = m == 1 && t != Theorem::T2 && c.scope == "theorem" && c.label == "headline";
        if ((case_one || a2 || m_one) && !c.match_oracle)
          return {false, "anchor " + c.scope + "/" + c.label + " " + c.monomial + " of " + theorem_name(t) +
                             " m=" + std::to_string(m)};
      }
      if (theorem_level == 0) return {false, "no theorem-level comparison for " + theorem_name(t)};
    }
  return {true, std::to_string(comparisons) + " comparisons emitted, anchors match, " + std::to_string(mismatches) +
                    " deviations reported"};
}

Verdict cli_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("ncres_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto run = [&](const std::string& name) {
    const std::string out = (dir / name).string();
    const char* argv[] = {"ncres", "--theorem", "all", "--oracle", "both", "--m-max", "3", "--out", out.c_str()};
    std::ostringstream so, se;
    const int code = run_cli(9, argv, so, se);
    std::ifstream f(out, std::ios::binary);
    return std::pair{code, std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>())};
  };
  const auto a = run("a.json"), b = run("b.json");
  fs::remove_all(dir);
  if (a.first != 0 || b.first != 0) return {false, "CLI exit codes " + std::to_string(a.first) + ", " + std::to_string(b.first)};
  if (a.second.empty() || a.second != b.second) return {false, "reports differ"};
  return {true, std::to_string(a.second.size()) + " identical bytes"};
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"projection fidelity", projection_fidelity},
      {"residue triple agreement", residue_triple},
      {"Clifford trace oracle", clifford_oracle},
      {"library self-derivation", library_self_derivation},
      {"degenerate anchors", degenerate_anchors},
      {"span property", span_property},
      {"coefficient errata table", errata_table_complete},
      {"theorem assembly", theorem_assembly},
      {"determinism", cli_determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << " (" << criteria[k].first << "): " << v.detail
              << "\n";
    failures += !v.pass;
  }
  return failures == 0 ? 0 : 1;
}
