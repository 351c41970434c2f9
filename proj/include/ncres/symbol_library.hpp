#pragma once

#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ncres/clifford.hpp"
#include "ncres/errors.hpp"
#include "ncres/rat_xi.hpp"
#include "ncres/symbol_poly.hpp"

namespace ncres {

/// Symbol in unreduced form: each term is coeff * xi_n^a * |xi'|^(2b) * |xi|^(-2c) * word.
/// Keeping |xi'| and |xi| apart makes the x_n-derivative well defined.
class JetSymbol {
public:
  struct Key {
    Word word;
    unsigned a = 0;
    int b = 0;
    int c = 0;
    bool operator<(const Key& o) const { return std::tie(word, a, b, c) < std::tie(o.word, o.a, o.b, o.c); }
  };
  using Terms = std::map<Key, SymbolPoly>;

  JetSymbol() = default;
  JetSymbol(const SymbolPoly& s) { add(Key{}, s); }
  JetSymbol(const GaussianRational& s) : JetSymbol(SymbolPoly(s)) {}
  JetSymbol(int s) : JetSymbol(SymbolPoly(s)) {}

  static JetSymbol atom(Letter l) { return term(Key{Word{l}, 0, 0, 0}); }
  static JetSymbol xi(unsigned k = 1) { return term(Key{{}, k, 0, 0}); }
  static JetSymbol sphere(int b) { return term(Key{{}, 0, b, 0}); }
  static JetSymbol inv_norm(int c) { return term(Key{{}, 0, 0, c}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  JetSymbol operator-() const { return *this * JetSymbol(-1); }
  JetSymbol& operator+=(const JetSymbol& o) {
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
  }
  friend JetSymbol operator+(JetSymbol a, const JetSymbol& b) { return a += b; }
  friend JetSymbol operator-(JetSymbol a, const JetSymbol& b) { return a += -b; }
  friend JetSymbol operator*(const JetSymbol& x, const JetSymbol& y) {
    JetSymbol r;
    for (const auto& [kx, vx] : x.terms_)
      for (const auto& [ky, vy] : y.terms_) {
        Key k{kx.word, kx.a + ky.a, kx.b + ky.b, kx.c + ky.c};
        k.word.insert(k.word.end(), ky.word.begin(), ky.word.end());
        r.add(k, vx * vy);
      }
    return r;
  }

  /// d/dx_n at the boundary point.
  JetSymbol dx() const {
    JetSymbol r;
    const SymbolPoly h1(GeomSymbol::H1);
    for (const auto& [k, v] : terms_) {
      r.add(k, dx_coeff(v));
      if (k.b != 0) r.add(k, v * h1 * SymbolPoly(k.b));
      if (k.c != 0) r.add(Key{k.word, k.a, k.b + 1, k.c + 1}, v * h1 * SymbolPoly(-k.c));
      for (std::size_t pos = 0; pos < k.word.size(); ++pos) {
        auto d = dx_letter(k.word[pos]);
        if (!d) continue;
        Key kk = k;
        kk.word[pos] = *d;
        r.add(kk, v);
      }
    }
    return r;
  }

  /// Restriction to |xi'| = 1.
  CliffordExpr to_clifford() const {
    CliffordExpr e;
    for (const auto& [k, v] : terms_)
      e.add(k.word, (RatXi::xi_pow(k.a) * RatXi::inv_norm_pow(k.c)).scaled(v));
    return e;
  }

private:
  static JetSymbol term(Key k) {
    JetSymbol j;
    j.add(std::move(k), SymbolPoly(1));
    return j;
  }

  void add(const Key& k, const SymbolPoly& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  static std::optional<Letter> dx_letter(Letter l) {
    switch (l) {
    case Letter::XiPrime: return Letter::DXiPrime;
    case Letter::XVec: return Letter::DXVec;
    case Letter::DxN:
    case Letter::En: return std::nullopt;
    default: throw UnsupportedSymbol("no x_n-derivative rule for " + std::string(letter_name(l)));
    }
  }

  static SymbolPoly dx_coeff(const SymbolPoly& p) {
    SymbolPoly r;
    for (const auto& [mono, c] : p.terms()) {
      for (std::size_t s = 0; s < kSymbolCount; ++s) {
        const unsigned e = mono.exp[s];
        if (e == 0) continue;
        GeomSymbol target;
        switch (kAllSymbols[s]) {
        case GeomSymbol::XN: target = GeomSymbol::DXN; break;
        case GeomSymbol::GXXI: target = GeomSymbol::DGXXI; break;
        default:
          throw UnsupportedSymbol("no x_n-derivative rule for " + std::string(symbol_name(kAllSymbols[s])));
        }
        Monomial lowered = mono;
        lowered.exp[s] = static_cast<std::uint8_t>(e - 1);
        r.add_term(lowered * Monomial::of(target), c * GaussianRational(static_cast<long>(e)));
      }
    }
    return r;
  }

  Terms terms_;
};

/// Largest xi_n-decay exponent over all terms; INT_MIN for zero.
inline int decay_order(const CliffordExpr& e) {
  int d = INT_MIN;
  for (const auto& [w, c] : e.terms()) d = std::max(d, c.decay_order());
  return d;
}

enum class Op { Dinv, Dinv2, cXDinv, Nabla, NablaDinv, NablaDinv2, Pow2m2, Pow2m1 };

enum class Slot { sigma, sigma_sub, sigma_sub_alt, part1, part2, part3, d_xi, d_xi2, d_x };

inline std::string op_name(Op op) {
  switch (op) {
  case Op::Dinv: return "D^-1";
  case Op::Dinv2: return "D^-2";
  case Op::cXDinv: return "c(X)D^-1";
  case Op::Nabla: return "nabla_X";
  case Op::NablaDinv: return "nabla_X D^-1";
  case Op::NablaDinv2: return "nabla_X D^-2";
  case Op::Pow2m2: return "D^-(2m-2)";
  case Op::Pow2m1: return "D^-(2m-1)";
  }
  return "?";
}

inline std::string slot_name(Slot s) {
  switch (s) {
  case Slot::sigma: return "leading";
  case Slot::sigma_sub: return "subleading";
  case Slot::sigma_sub_alt: return "subleading (second arrangement)";
  case Slot::part1: return "subleading part 1";
  case Slot::part2: return "subleading part 2";
  case Slot::part3: return "subleading part 3";
  case Slot::d_xi: return "d/dxi_n of leading";
  case Slot::d_xi2: return "d^2/dxi_n^2 of leading";
  case Slot::d_x: return "d/dx_n of leading";
  }
  return "?";
}

struct SymbolEntry {
  Op op;
  Slot slot;
  int m;
  int order;
  int xi_prime_weight;
  CliffordExpr expr;
  std::optional<JetSymbol> jet;
};

namespace lib {

inline JetSymbol N(int k) { return JetSymbol::inv_norm(k); }
inline JetSymbol xi(unsigned k = 1) { return JetSymbol::xi(k); }
inline JetSymbol at(Letter l) { return JetSymbol::atom(l); }
inline JetSymbol sym(GeomSymbol s) { return JetSymbol(SymbolPoly(s)); }
inline JetSymbol q(long a, long b = 1) { return JetSymbol(GaussianRational::ratio(a, b)); }
inline JetSymbol qi(long a, long b = 1) { return JetSymbol(GaussianRational::ratio(a, b) * GaussianRational::i()); }

inline JetSymbol c_xi() { return at(Letter::XiPrime) + xi() * at(Letter::DxN); }
inline JetSymbol x_dot_xi() { return sym(GeomSymbol::GXXI) + sym(GeomSymbol::XN) * xi(); }
inline JetSymbol h1() { return sym(GeomSymbol::H1); }

inline JetSymbol dinv_m1() { return qi(1) * c_xi() * N(1); }
inline JetSymbol dinv_m2() {
  const JetSymbol H = q(-3, 4) * h1() * at(Letter::DxN);
  return (c_xi() * H * c_xi() + c_xi() * at(Letter::DxN) * at(Letter::DXiPrime)) * N(2) -
         h1() * JetSymbol::sphere(1) * c_xi() * at(Letter::DxN) * c_xi() * N(3);
}
inline JetSymbol dinv2_m3() {
  return qi(1, 2) * h1() * at(Letter::Ek) * at(Letter::En) * N(2) -
         (qi(5, 2) * xi(3) + qi(9, 2) * xi()) * h1() * N(3);
}
inline JetSymbol nabla_1() { return qi(1) * x_dot_xi(); }

inline JetSymbol pow2m2_sub(int m) {
  const long M = m;
  return q(-(2 * M * M - M - 1), 2) * h1() * qi(1) * xi() * N(m) - q(M - 1) * h1() * qi(2) * xi() * N(m + 1) -
         q(M * M - 3 * M + 2) * h1() * qi(1) * xi() * N(m + 1);
}
inline JetSymbol pow2m2_sub_alt(int m) {
  const long M = m;
  return q(M - 1) * N(m - 2) * (qi(-(2 * M + 1), 2) * h1() * xi() * N(2) - qi(2) * h1() * xi() * N(3)) +
         qi(-M * M + 3 * M - 2) * h1() * xi() * N(m + 1);
}
inline JetSymbol pow2m1_sub(int m) {
  const long M = m;
  const JetSymbol inner = (qi(-1) * h1() * at(Letter::XiPrime) * at(Letter::DxN) -
                           qi(2 * M + 1) * h1() * at(Letter::XiPrime)) *
                              q(1, 2) * N(2) -
                          qi(2) * h1() * xi() * N(3);
  return q(-2 * M - 1, 4) * h1() * at(Letter::DxN) * N(m) - q(2 * M) * xi() * N(m + 1) * at(Letter::DXiPrime) +
         qi(M) * N(m - 1) * c_xi() * inner - q(M * M + M) * h1() * xi() * c_xi() * N(m + 2);
}

struct Info {
  Op op;
  Slot slot;
  std::string anchor;
  std::string kind; // data, composed, stated-derivative
  bool reconstruction = false;
  std::string note;
  std::function<int(int)> order;
  std::function<JetSymbol(int)> build;
  std::optional<Slot> base;  // derivative entries: base slot of the same operator
  int xi_order = 0;          // xi_n derivatives taken from base
  bool x_derivative = false; // d/dx_n taken from base
  int xi_prime_weight = 0;   // |xi'|-degree carried by the leading large-xi_n term
};

inline const std::vector<Info>& registry() {
  static const std::vector<Info> table = [] {
    std::vector<Info> t;
    auto add = [&](Info i) { t.push_back(std::move(i)); };
    add({Op::Dinv, Slot::sigma, "sigma_-1(D^-1) = i c(xi)/|xi|^2", "data", false, "",
         [](int) { return -1; }, [](int) { return dinv_m1(); }});
    add({Op::Dinv, Slot::sigma_sub, "sigma_-2(D^-1) = c(xi) H c(xi)/|xi|^4 + c(xi) c(dxn) [d_xn c(xi') |xi|^2 - c(xi) h'(0)|xi'|^2]/|xi|^6, H = -3/4 h'(0) c(dxn)",
         "data", false, "", [](int) { return -2; }, [](int) { return dinv_m2(); }});
    add({Op::Dinv2, Slot::sigma, "sigma_-2(D^-2) = |xi|^-2", "data", false, "", [](int) { return -2; },
         [](int) { return N(1); }});
    add({Op::Dinv2, Slot::sigma_sub,
         "sigma_-3(D^-2) = i/2 h'(0) sum_k xi_k c(e_k)c(e_n)/|xi|^4 - (5i xi_n^3 + 9i xi_n) h'(0)/(2|xi|^6)", "data",
         false, "", [](int) { return -3; }, [](int) { return dinv2_m3(); }});
    add({Op::cXDinv, Slot::sigma, "sigma_-1(c(X)D^-1) = c(X) sigma_-1(D^-1)", "composed", false, "",
         [](int) { return -1; }, [](int) { return at(Letter::XVec) * dinv_m1(); }});
    add({Op::cXDinv, Slot::sigma_sub, "sigma_-2(c(X)D^-1) = c(X) sigma_-2(D^-1)", "composed", false, "",
         [](int) { return -2; }, [](int) { return at(Letter::XVec) * dinv_m2(); }});
    add({Op::cXDinv, Slot::d_x,
         "d_xn sigma_-1(c(X)D^-1) = i d_xn(c(X)) c(xi)/|xi|^2 + i c(X) d_xn c(xi')/|xi|^2 - i c(X) c(xi)|xi'|^2 h'(0)/|xi|^4",
         "stated-derivative", false, "", [](int) { return -1; },
         [](int) {
           return qi(1) * at(Letter::DXVec) * c_xi() * N(1) + qi(1) * at(Letter::XVec) * at(Letter::DXiPrime) * N(1) -
                  qi(1) * at(Letter::XVec) * c_xi() * JetSymbol::sphere(1) * h1() * N(2);
         },
         Slot::sigma, 0, true});
    add({Op::Nabla, Slot::sigma, "sigma_1(nabla_X) = i sum_j X_j xi_j", "data", false, "", [](int) { return 1; },
         [](int) { return nabla_1(); }});
    add({Op::NablaDinv, Slot::sigma, "sigma_0(nabla_X D^-1) = sigma_1(nabla_X) sigma_-1(D^-1)", "composed", false, "",
         [](int) { return 0; }, [](int) { return nabla_1() * dinv_m1(); }});
    add({Op::NablaDinv, Slot::part1, "A^1 = sigma_1(nabla_X) sigma_-2(D^-1)", "composed", false, "",
         [](int) { return -1; }, [](int) { return nabla_1() * dinv_m2(); }});
    add({Op::NablaDinv, Slot::part2, "A^2 = A(X) sigma_-1(D^-1)", "composed", false, "", [](int) { return -1; },
         [](int) { return at(Letter::AX) * dinv_m1(); }});
    add({Op::NablaDinv, Slot::part3, "A^3 = X_n d_xn sigma_-1(D^-1)", "composed", false, "", [](int) { return -1; },
         [](int) { return sym(GeomSymbol::XN) * dinv_m1().dx(); }, std::nullopt, 0, false, 1});
    add({Op::NablaDinv, Slot::sigma_sub, "sigma_-1(nabla_X D^-1) = A^1 + A^2 + A^3", "composed", false, "",
         [](int) { return -1; },
         [](int) {
           return nabla_1() * dinv_m2() + at(Letter::AX) * dinv_m1() + sym(GeomSymbol::XN) * dinv_m1().dx();
         }});
    add({Op::NablaDinv, Slot::d_x, "d_xn sigma_0(nabla_X D^-1), printed expansion in X_j c(xi'), X_j c(dxn)",
         "stated-derivative", true,
         "tangential terms read with c(xi') in place of c(xi), as the projected form that follows uses",
         [](int) { return 0; },
         [](int) {
           const JetSymbol G = sym(GeomSymbol::GXXI), DG = sym(GeomSymbol::DGXXI);
           const JetSymbol X = sym(GeomSymbol::XN), DX = sym(GeomSymbol::DXN);
           const JetSymbol S = JetSymbol::sphere(1);
           const JetSymbol xp = at(Letter::XiPrime), dn = at(Letter::DxN), dxp = at(Letter::DXiPrime);
           return -(DG * xp + G * dxp) * N(1) + h1() * S * G * xp * N(2) - xi() * DG * dn * N(1) +
                  xi() * h1() * S * G * dn * N(2) - xi() * (DX * xp + X * dxp) * N(1) + xi() * h1() * S * X * xp * N(2) -
                  xi(2) * DX * dn * N(1) - xi(2) * h1() * S * X * dn * N(2);
         },
         Slot::sigma, 0, true});
    add({Op::NablaDinv2, Slot::sigma, "sigma_-1(nabla_X D^-2) = i sum_j X_j xi_j |xi|^-2", "composed", false, "",
         [](int) { return -1; }, [](int) { return nabla_1() * N(1); }});
    add({Op::NablaDinv2, Slot::part1, "B^1 = A(X)|xi|^-2", "composed", false, "", [](int) { return -2; },
         [](int) { return at(Letter::AX) * N(1); }});
    add({Op::NablaDinv2, Slot::part2, "B^2 = sigma_1(nabla_X) sigma_-3(D^-2)", "composed", false, "",
         [](int) { return -2; }, [](int) { return nabla_1() * dinv2_m3(); }});
    add({Op::NablaDinv2, Slot::part3, "B^3 = X_n d_xn |xi|^-2", "composed", false, "", [](int) { return -2; },
         [](int) { return sym(GeomSymbol::XN) * N(1).dx(); }, std::nullopt, 0, false, 2});
    add({Op::NablaDinv2, Slot::sigma_sub, "sigma_-2(nabla_X D^-2) = B^1 + B^2 + B^3", "composed", false, "",
         [](int) { return -2; },
         [](int) { return at(Letter::AX) * N(1) + nabla_1() * dinv2_m3() + sym(GeomSymbol::XN) * N(1).dx(); }});
    add({Op::NablaDinv2, Slot::d_x,
         "d_xn sigma_-1(nabla_X D^-2) = i sum_j xi_j d_xn X_j/(1+xi_n^2) - i sum_j X_j xi_j h'(0)|xi'|^2/(1+xi_n^2)",
         "stated-derivative", false, "", [](int) { return -1; },
         [](int) {
           return qi(1) * (sym(GeomSymbol::DGXXI) + sym(GeomSymbol::DXN) * xi()) * N(1) -
                  qi(1) * x_dot_xi() * h1() * JetSymbol::sphere(1) * N(1);
         },
         Slot::sigma, 0, true});
    add({Op::Pow2m2, Slot::sigma, "sigma_-(2m-2)(D^-(2m-2)) = (|xi|^2)^(1-m)", "data", false, "",
         [](int m) { return -(2 * m - 2); }, [](int m) { return N(m - 1); }});
    add({Op::Pow2m2, Slot::sigma_sub,
         "sigma_-(2m-1)(D^-(2m-2)) = -(2m^2-m-1)/2 h'(0) i xi_n/(1+xi_n^2)^m - (m-1) h'(0) 2i xi_n/(1+xi_n^2)^(m+1) - (m^2-3m+2) h'(0) i xi_n/(1+xi_n^2)^(m+1)",
         "data", false, "", [](int m) { return -(2 * m - 1); }, [](int m) { return pow2m2_sub(m); }});
    add({Op::Pow2m2, Slot::sigma_sub_alt,
         "sigma_-(2m-1)(D^-(2m-2)) = (m-1)(1+xi_n^2)^(2-m) [-i(2m+1)/2 h'(0) xi_n/(1+xi_n^2)^2 - 2i h'(0) xi_n/(1+xi_n^2)^3] + i h'(0)(-m^2+3m-2) xi_n (1+xi_n^2)^(-m-1)",
         "data", false, "", [](int m) { return -(2 * m - 1); }, [](int m) { return pow2m2_sub_alt(m); }});
    add({Op::Pow2m2, Slot::d_xi, "d_xin sigma_-(2m-2)(D^-(2m-2)) = 2(1-m) xi_n (1+xi_n^2)^-m", "stated-derivative",
         false, "", [](int m) { return -(2 * m - 1); },
         [](int m) { return q(2 * (1 - static_cast<long>(m))) * xi() * N(m); }, Slot::sigma, 1, false});
    add({Op::Pow2m2, Slot::d_xi2, "d^2_xin sigma_-(2m-2)(D^-(2m-2)) = ((4m-2) xi_n^2 - 2)(m-1)(1+xi_n^2)^(-m-1)",
         "stated-derivative", false, "", [](int m) { return -2 * m; },
         [](int m) {
           const long M = m;
           return (q(4 * M - 2) * xi(2) - q(2)) * q(M - 1) * N(m + 1);
         },
         Slot::sigma, 2, false});
    add({Op::Pow2m2, Slot::d_x, "d_xn sigma_-(2m-2)(D^-(2m-2)) = h'(0)(1-m)(1+xi_n^2)^-m", "stated-derivative", false,
         "", [](int m) { return -(2 * m - 2); },
         [](int m) { return h1() * q(1 - static_cast<long>(m)) * N(m); }, Slot::sigma, 0, true, 2});
    add({Op::Pow2m1, Slot::sigma, "sigma_-(2m-1)(D^-(2m-1)) = i[c(xi') + xi_n c(dxn)]/(1+xi_n^2)^m", "data", false, "",
         [](int m) { return -(2 * m - 1); }, [](int m) { return qi(1) * c_xi() * N(m); }});
    add({Op::Pow2m1, Slot::sigma_sub,
         "sigma_-2m(D^-(2m-1)) = (-2m-1)h'(0)c(dxn)/(4(1+xi_n^2)^m) - 2m xi_n (1+xi_n^2)^(-m-1) d_xn c(xi') + mi(1+xi_n^2)^(1-m) c(xi) [(-i h'(0) c(xi')c(dxn) - (2m+1) i h'(0) c(xi'))/(2(1+xi_n^2)^2) - 2i h'(0) xi_n/(1+xi_n^2)^3] - c(xi) h'(0) xi_n (m^2+m)(1+xi_n^2)^(-m-2)",
         "data", true,
         "first denominator printed with exponent n/2; reconstructed as m so the entry has order -2m",
         [](int m) { return -2 * m; }, [](int m) { return pow2m1_sub(m); }});
    add({Op::Pow2m1, Slot::d_xi,
         "d_xin sigma_-(2m-1)(D^-(2m-1)) = i(c(dxn)/(1+xi_n^2)^m - 2m[xi_n c(xi') + xi_n^2 c(dxn)]/(1+xi_n^2)^(m+1))",
         "stated-derivative", false, "", [](int m) { return -2 * m; },
         [](int m) {
           return qi(1) * (at(Letter::DxN) * N(m) -
                           q(2 * static_cast<long>(m)) * (xi() * at(Letter::XiPrime) + xi(2) * at(Letter::DxN)) * N(m + 1));
         },
         Slot::sigma, 1, false});
    add({Op::Pow2m1, Slot::d_x,
         "d_xn sigma_-(2m-1)(D^-(2m-1)) = i d_xn c(xi')/(1+xi_n^2)^m - 2mi h'(0) c(xi)/(2(1+xi_n^2)^(m+1))",
         "stated-derivative", false, "", [](int m) { return -(2 * m - 1); },
         [](int m) {
           return qi(1) * at(Letter::DXiPrime) * N(m) - qi(2 * static_cast<long>(m), 2) * h1() * c_xi() * N(m + 1);
         },
         Slot::sigma, 0, true, 1});
    return t;
  }();
  return table;
}

inline const Info& find(Op op, Slot slot) {
  for (const auto& i : registry())
    if (i.op == op && i.slot == slot) return i;
  throw UnsupportedSymbol("no library entry for " + op_name(op) + " / " + slot_name(slot));
}

} // namespace lib

inline SymbolEntry build_symbol(Op op, Slot slot, int m) {
  if (m < 1) throw UnsupportedSymbol("m must be at least 1");
  const lib::Info& info = lib::find(op, slot);
  JetSymbol j = info.build(m);
  return SymbolEntry{op, slot, m, info.order(m), info.xi_prime_weight, j.to_clifford(), std::move(j)};
}

/// d/dx_n of an entry computed by the jet rules.
inline CliffordExpr derived_dx(Op op, Slot slot, int m) {
  const SymbolEntry e = build_symbol(op, slot, m);
  return e.jet->dx().to_clifford();
}

struct DeriveCheck {
  bool passed = false;
  CliffordExpr expected; // derivative of the base entry
  CliffordExpr difference; // encoded minus expected
};

/// Compares a stated-derivative entry against the derivative of its base entry.
inline DeriveCheck derive_check(const SymbolEntry& entry) {
  const lib::Info& info = lib::find(entry.op, entry.slot);
  if (!info.base) throw UnsupportedSymbol(op_name(entry.op) + " / " + slot_name(entry.slot) + " has no base entry");
  const SymbolEntry base = build_symbol(entry.op, *info.base, entry.m);
  DeriveCheck r;
  r.expected = info.x_derivative ? base.jet->dx().to_clifford() : diff(base.expr, info.xi_order);
  r.difference = entry.expr - r.expected;
  r.passed = r.difference.is_zero();
  return r;
}

/// Large-xi_n decay equals the order minus the |xi'|-weight of the leading term.
/// Zero entries count as homogeneous of every order.
inline bool homogeneity_ok(const SymbolEntry& e) {
  return e.expr.is_zero() || decay_order(e.expr) == e.order - e.xi_prime_weight;
}

struct ManifestEntry {
  std::string op;
  std::string slot;
  std::string anchor;
  std::string kind;
  bool reconstruction;
  std::string note;
};

inline std::vector<ManifestEntry> library_manifest() {
  std::vector<ManifestEntry> out;
  for (const auto& i : lib::registry())
    out.push_back({op_name(i.op), slot_name(i.slot), i.anchor, i.kind, i.reconstruction, i.note});
  return out;
}

inline std::vector<std::pair<Op, Slot>> derivative_entries() {
  std::vector<std::pair<Op, Slot>> out;
  for (const auto& i : lib::registry())
    if (i.base) out.emplace_back(i.op, i.slot);
  return out;
}

inline std::vector<std::pair<Op, Slot>> all_entries() {
  std::vector<std::pair<Op, Slot>> out;
  for (const auto& i : lib::registry()) out.emplace_back(i.op, i.slot);
  return out;
}

} // namespace ncres
