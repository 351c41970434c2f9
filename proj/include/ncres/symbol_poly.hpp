#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "ncres/errors.hpp"
#include "ncres/gaussian_rational.hpp"

namespace ncres {

enum class GeomSymbol : std::uint8_t { H1, XN, DXN, GXXI, DGXXI, TRAX_XI_DN, VOLS };

inline constexpr std::size_t kSymbolCount = 7;

inline constexpr std::array<GeomSymbol, kSymbolCount> kAllSymbols = {
    GeomSymbol::H1,    GeomSymbol::XN,         GeomSymbol::DXN, GeomSymbol::GXXI,
    GeomSymbol::DGXXI, GeomSymbol::TRAX_XI_DN, GeomSymbol::VOLS};

enum class Parity : std::uint8_t { even, odd };

inline Parity operator^(Parity a, Parity b) { return a == b ? Parity::even : Parity::odd; }

inline std::string_view symbol_name(GeomSymbol s) {
  switch (s) {
  case GeomSymbol::H1: return "H1";
  case GeomSymbol::XN: return "XN";
  case GeomSymbol::DXN: return "DXN";
  case GeomSymbol::GXXI: return "GXXI";
  case GeomSymbol::DGXXI: return "DGXXI";
  case GeomSymbol::TRAX_XI_DN: return "TRAX_XI_DN";
  case GeomSymbol::VOLS: return "VOLS";
  }
  return "?";
}

inline Parity symbol_parity(GeomSymbol s) {
  switch (s) {
  case GeomSymbol::GXXI:
  case GeomSymbol::DGXXI:
  case GeomSymbol::TRAX_XI_DN: return Parity::odd;
  default: return Parity::even;
  }
}

/// Exponent vector over the symbol alphabet.
struct Monomial {
  std::array<std::uint8_t, kSymbolCount> exp{};

  static Monomial one() { return {}; }
  static Monomial of(GeomSymbol s, unsigned power = 1) {
    Monomial m;
    m.exp[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(power);
    return m;
  }
  template <class... S>
  static Monomial product(S... syms) {
    Monomial m;
    ((m.exp[static_cast<std::size_t>(syms)] += 1), ...);
    return m;
  }

  unsigned power(GeomSymbol s) const { return exp[static_cast<std::size_t>(s)]; }

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exp) d += e;
    return d;
  }

  Parity parity() const {
    Parity p = Parity::even;
    for (std::size_t k = 0; k < kSymbolCount; ++k)
      if (exp[k] % 2 == 1) p = p ^ symbol_parity(kAllSymbols[k]);
    return p;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t k = 0; k < kSymbolCount; ++k)
      r.exp[k] = static_cast<std::uint8_t>(exp[k] + o.exp[k]);
    return r;
  }

  bool operator==(const Monomial&) const = default;

  /// Graded lexicographic: lower total degree first, then larger exponents of
  /// earlier symbols first.
  bool operator<(const Monomial& o) const {
    const unsigned da = degree(), db = o.degree();
    if (da != db) return da < db;
    for (std::size_t k = 0; k < kSymbolCount; ++k)
      if (exp[k] != o.exp[k]) return exp[k] > o.exp[k];
    return false;
  }

  std::string str() const {
    std::string out;
    for (std::size_t k = 0; k < kSymbolCount; ++k) {
      if (exp[k] == 0) continue;
      if (!out.empty()) out += '*';
      out += symbol_name(kAllSymbols[k]);
      if (exp[k] > 1) out += "^" + std::to_string(exp[k]);
    }
    return out.empty() ? "1" : out;
  }
};

using Assignment = std::map<GeomSymbol, GaussianRational>;

/// Sparse polynomial over GaussianRational in the geometric symbols.
class SymbolPoly {
public:
  using Terms = std::map<Monomial, GaussianRational>;

  SymbolPoly() = default;
  SymbolPoly(const GaussianRational& c) { add_term(Monomial::one(), c); }
  SymbolPoly(int c) : SymbolPoly(GaussianRational(c)) {}
  SymbolPoly(GeomSymbol s) { add_term(Monomial::of(s), GaussianRational(1)); }
  SymbolPoly(const Monomial& m, const GaussianRational& c) { add_term(m, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GaussianRational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  /// Constant term if the polynomial has no symbol-bearing monomials.
  std::optional<GaussianRational> as_constant() const {
    if (terms_.empty()) return GaussianRational();
    if (terms_.size() == 1 && terms_.begin()->first == Monomial::one()) return terms_.begin()->second;
    return std::nullopt;
  }

  unsigned max_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  /// Parity when every monomial shares it; nullopt for mixed or zero input.
  std::optional<Parity> parity() const {
    std::optional<Parity> p;
    for (const auto& [m, c] : terms_) {
      if (!p) p = m.parity();
      else if (*p != m.parity()) return std::nullopt;
    }
    return p;
  }

  SymbolPoly& add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  SymbolPoly operator-() const {
    SymbolPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  SymbolPoly& operator+=(const SymbolPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SymbolPoly& operator-=(const SymbolPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  SymbolPoly& operator*=(const SymbolPoly& o) { return *this = *this * o; }

  friend SymbolPoly operator+(SymbolPoly a, const SymbolPoly& b) { return a += b; }
  friend SymbolPoly operator-(SymbolPoly a, const SymbolPoly& b) { return a -= b; }
  friend SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b) {
    SymbolPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  friend bool operator==(const SymbolPoly& a, const SymbolPoly& b) { return a.terms_ == b.terms_; }

  GaussianRational eval(const Assignment& a) const {
    GaussianRational total;
    for (const auto& [m, c] : terms_) {
      GaussianRational v = c;
      for (std::size_t k = 0; k < kSymbolCount; ++k) {
        if (m.exp[k] == 0) continue;
        auto it = a.find(kAllSymbols[k]);
        if (it == a.end()) throw IncompleteAssignment(std::string(symbol_name(kAllSymbols[k])));
        v *= it->second.pow(m.exp[k]);
      }
      total += v;
    }
    return total;
  }

  /// Terms whose monomial satisfies the predicate.
  template <class Pred>
  SymbolPoly filter(Pred keep) const {
    SymbolPoly r;
    for (const auto& [m, c] : terms_)
      if (keep(m)) r.terms_.emplace(m, c);
    return r;
  }

  /// Sorted monomial list, "(c1)*M1 + (c2)*M2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      if (!(m == Monomial::one())) out += "*" + m.str();
    }
    return out;
  }

private:
  Terms terms_;
};

} // namespace ncres
