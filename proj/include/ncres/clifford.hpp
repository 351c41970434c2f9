#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncres/errors.hpp"
#include "ncres/rat_xi.hpp"
#include "ncres/symbol_poly.hpp"

namespace ncres {

/// Clifford vector atoms plus the bivector marker AX for A(X).
enum class Letter : std::uint8_t { XiPrime, DxN, XVec, DXiPrime, DXVec, Ek, En, AX };

inline std::string_view letter_name(Letter l) {
  switch (l) {
  case Letter::XiPrime: return "c(xi')";
  case Letter::DxN: return "c(dxn)";
  case Letter::XVec: return "c(X)";
  case Letter::DXiPrime: return "dxn c(xi')";
  case Letter::DXVec: return "dxn c(X)";
  case Letter::Ek: return "c(ek)";
  case Letter::En: return "c(en)";
  case Letter::AX: return "A(X)";
  }
  return "?";
}

inline Parity letter_parity(Letter l) {
  switch (l) {
  case Letter::XiPrime:
  case Letter::DXiPrime:
  case Letter::Ek: return Parity::odd;
  default: return Parity::even;
  }
}

using Word = std::vector<Letter>;

inline std::string word_str(const Word& w) {
  if (w.empty()) return "id";
  std::string out;
  for (auto l : w) {
    if (!out.empty()) out += "·";
    out += letter_name(l);
  }
  return out;
}

/// Symmetric bilinear pairing g on atoms, tr[c(a)c(b)] = -g(a,b) tr[id].
class PairingTable {
public:
  static const PairingTable& standard() {
    static const PairingTable table = build_standard();
    return table;
  }

  SymbolPoly operator()(Letter a, Letter b) const {
    a = canonical(a);
    b = canonical(b);
    auto it = entries_.find(key(a, b));
    if (it == entries_.end())
      throw UndefinedPairing("no pairing for " + std::string(letter_name(a)) + ", " + std::string(letter_name(b)));
    return it->second;
  }

  bool defined(Letter a, Letter b) const { return entries_.count(key(canonical(a), canonical(b))) > 0; }

private:
  static Letter canonical(Letter l) {
    if (l == Letter::Ek) return Letter::XiPrime;
    if (l == Letter::En) return Letter::DxN;
    return l;
  }
  static std::pair<Letter, Letter> key(Letter a, Letter b) { return a <= b ? std::pair{a, b} : std::pair{b, a}; }

  void set(Letter a, Letter b, SymbolPoly v) { entries_[key(a, b)] = std::move(v); }

  static PairingTable build_standard() {
    using G = GeomSymbol;
    const SymbolPoly half(GaussianRational::ratio(1, 2));
    PairingTable t;
    t.set(Letter::XiPrime, Letter::XiPrime, SymbolPoly(1));
    t.set(Letter::DxN, Letter::DxN, SymbolPoly(1));
    t.set(Letter::XiPrime, Letter::DxN, SymbolPoly());
    t.set(Letter::XVec, Letter::XiPrime, SymbolPoly(G::GXXI));
    t.set(Letter::XVec, Letter::DxN, SymbolPoly(G::XN));
    t.set(Letter::DXVec, Letter::XiPrime, SymbolPoly(G::DGXXI) - half * SymbolPoly(G::H1) * SymbolPoly(G::GXXI));
    t.set(Letter::DXVec, Letter::DxN, SymbolPoly(G::DXN));
    t.set(Letter::DXiPrime, Letter::XiPrime, half * SymbolPoly(G::H1));
    t.set(Letter::DXiPrime, Letter::DxN, SymbolPoly());
    t.set(Letter::XVec, Letter::DXiPrime, half * SymbolPoly(G::H1) * SymbolPoly(G::GXXI));
    return t;
  }

  std::map<std::pair<Letter, Letter>, SymbolPoly> entries_;
};

/// Signed perfect-matching expansion: sum over matchings of sign * prod(-g).
/// g(i, j) returns the pairing of positions i < j.
template <class T, class Pair>
T matching_trace(std::size_t n, Pair&& g) {
  if (n % 2 == 1) return T{};
  std::vector<std::size_t> idx(n);
  for (std::size_t k = 0; k < n; ++k) idx[k] = k;
  auto rec = [&](auto&& self, const std::vector<std::size_t>& rest) -> T {
    if (rest.empty()) return T(1);
    T total{};
    for (std::size_t j = 1; j < rest.size(); ++j) {
      std::vector<std::size_t> sub;
      sub.reserve(rest.size() - 2);
      for (std::size_t k = 1; k < rest.size(); ++k)
        if (k != j) sub.push_back(rest[k]);
      T term = self(self, sub);
      if (term == T{}) continue;
      T pair = g(rest[0], rest[j]);
      // partner sits at word position j+1 (1-based): sign (-1)^(j+1), times -g
      if (j % 2 == 1) total -= pair * term;
      else total += pair * term;
    }
    return total;
  };
  return rec(rec, idx);
}

inline SymbolPoly wick_trace(const Word& w, const PairingTable& table = PairingTable::standard()) {
  for (auto l : w)
    if (l == Letter::AX) throw UnsupportedWord("wick_trace called on a word with A(X)");
  return matching_trace<SymbolPoly>(w.size(), [&](std::size_t a, std::size_t b) { return table(w[a], w[b]); });
}

/// Trace of a word with exactly one A(X). A(X) is a traceless bivector, so
/// tr[A(X) c(u) c(v)] is antisymmetric in (u, v).
inline SymbolPoly trace_with_AX(const Word& w) {
  const auto n_ax = std::count(w.begin(), w.end(), Letter::AX);
  if (n_ax != 1) throw UnsupportedWord("expected exactly one A(X) in " + word_str(w));
  auto pos = std::find(w.begin(), w.end(), Letter::AX);
  Word rest(pos + 1, w.end());
  rest.insert(rest.end(), w.begin(), pos);
  if (rest.size() > 2) throw UnsupportedWord("A(X) with more than two companions: " + word_str(w));
  if (rest.size() < 2) return {};
  auto canon = [](Letter l) {
    if (l == Letter::Ek) return Letter::XiPrime;
    if (l == Letter::En) return Letter::DxN;
    return l;
  };
  const Letter u = canon(rest[0]), v = canon(rest[1]);
  if (u == v) return {};
  if (u == Letter::XiPrime && v == Letter::DxN) return SymbolPoly(GeomSymbol::TRAX_XI_DN);
  if (u == Letter::DxN && v == Letter::XiPrime) return -SymbolPoly(GeomSymbol::TRAX_XI_DN);
  throw UnsupportedWord("A(X) pairing out of scope: " + word_str(w));
}

inline SymbolPoly trace_word(const Word& w) {
  if (std::find(w.begin(), w.end(), Letter::AX) != w.end()) return trace_with_AX(w);
  return wick_trace(w);
}

/// Linear combination of words with RatXi coefficients.
class CliffordExpr {
public:
  using Terms = std::map<Word, RatXi>;

  CliffordExpr() = default;
  CliffordExpr(const RatXi& scalar) { add(Word{}, scalar); }
  static CliffordExpr word(Word w, const RatXi& c = RatXi(1)) {
    CliffordExpr e;
    e.add(std::move(w), c);
    return e;
  }
  static CliffordExpr atom(Letter l) { return word(Word{l}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  CliffordExpr& add(Word w, const RatXi& c) {
    if (std::count(w.begin(), w.end(), Letter::AX) > 1) throw UnsupportedWord("two A(X) markers in " + word_str(w));
    if (c.is_zero()) return *this;
    auto it = terms_.find(w);
    if (it == terms_.end()) terms_.emplace(std::move(w), c);
    else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  CliffordExpr operator-() const { return scaled(RatXi(-1)); }
  CliffordExpr& operator+=(const CliffordExpr& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  friend CliffordExpr operator+(CliffordExpr a, const CliffordExpr& b) { return a += b; }
  friend CliffordExpr operator-(CliffordExpr a, const CliffordExpr& b) { return a += -b; }
  friend bool operator==(const CliffordExpr& a, const CliffordExpr& b) { return a.terms_ == b.terms_; }

  CliffordExpr scaled(const RatXi& s) const {
    CliffordExpr r;
    for (const auto& [w, c] : terms_) r.add(w, c * s);
    return r;
  }

  /// Applies a RatXi -> RatXi map to every coefficient.
  template <class F>
  CliffordExpr map(F&& f) const {
    CliffordExpr r;
    for (const auto& [w, c] : terms_) r.add(w, f(c));
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.str() + " " + word_str(w);
    }
    return out;
  }

private:
  Terms terms_;
};

inline CliffordExpr cl_mul(const CliffordExpr& a, const CliffordExpr& b) {
  CliffordExpr r;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add(std::move(w), ca * cb);
    }
  return r;
}

inline CliffordExpr operator*(const CliffordExpr& a, const CliffordExpr& b) { return cl_mul(a, b); }

/// Normalised trace (tr[id] = 1) of an expression, as a RatXi.
inline RatXi trace(const CliffordExpr& e) {
  RatXi r;
  for (const auto& [w, c] : e.terms()) {
    SymbolPoly t = trace_word(w);
    if (!t.is_zero()) r += c.scaled(t);
  }
  return r;
}

inline CliffordExpr pi_plus(const CliffordExpr& e, PolynomialPart mode = PolynomialPart::reject) {
  return e.map([&](const RatXi& c) { return pi_plus(c, mode); });
}

inline CliffordExpr diff(const CliffordExpr& e, int k = 1) {
  return e.map([&](const RatXi& c) { return diff(c, k); });
}

} // namespace ncres
