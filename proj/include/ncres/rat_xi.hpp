#pragma once

#include <algorithm>
#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "ncres/errors.hpp"
#include "ncres/gaussian_rational.hpp"
#include "ncres/symbol_poly.hpp"

namespace ncres {

/// Polynomial in xi_n with SymbolPoly coefficients; coefficient k multiplies xi_n^k.
class XiPoly {
public:
  XiPoly() = default;
  explicit XiPoly(std::vector<SymbolPoly> coeffs) : c_(std::move(coeffs)) { trim(); }
  XiPoly(const SymbolPoly& constant) : c_{constant} { trim(); }

  static XiPoly xi() { return XiPoly({SymbolPoly(), SymbolPoly(1)}); }
  static XiPoly monomial(unsigned k, const SymbolPoly& c = SymbolPoly(1)) {
    std::vector<SymbolPoly> v(k + 1);
    v[k] = c;
    return XiPoly(std::move(v));
  }
  /// xi_n - z
  static XiPoly linear(const GaussianRational& z) { return XiPoly({SymbolPoly(-z), SymbolPoly(1)}); }
  /// Builds from scalar coefficients, lowest degree first.
  static XiPoly from(std::initializer_list<GaussianRational> cs) {
    std::vector<SymbolPoly> v;
    for (const auto& c : cs) v.emplace_back(c);
    return XiPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<SymbolPoly>& coeffs() const { return c_; }
  SymbolPoly coeff(std::size_t k) const { return k < c_.size() ? c_[k] : SymbolPoly(); }

  XiPoly& operator+=(const XiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  XiPoly& operator-=(const XiPoly& o) { return *this += -o; }
  XiPoly operator-() const {
    XiPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend XiPoly operator+(XiPoly a, const XiPoly& b) { return a += b; }
  friend XiPoly operator-(XiPoly a, const XiPoly& b) { return a -= b; }
  friend XiPoly operator*(const XiPoly& a, const XiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<SymbolPoly> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return XiPoly(std::move(v));
  }
  friend bool operator==(const XiPoly& a, const XiPoly& b) { return a.c_ == b.c_; }

  XiPoly pow(unsigned e) const {
    XiPoly r(SymbolPoly(1));
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
  }

  XiPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<SymbolPoly> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * SymbolPoly(GaussianRational(static_cast<long>(k)));
    return XiPoly(std::move(v));
  }

  SymbolPoly evaluate(const GaussianRational& z) const {
    SymbolPoly acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * SymbolPoly(z) + c_[k];
    return acc;
  }

  /// Coefficients of P(z + t) as a polynomial in t.
  XiPoly shift(const GaussianRational& z) const {
    std::vector<SymbolPoly> v = c_;
    const SymbolPoly zs(z);
    const std::size_t n = v.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t k = n - 1; k > i; --k) v[k - 1] += zs * v[k];
    return XiPoly(std::move(v));
  }

  /// P = Q (xi_n - z) + r.
  std::pair<XiPoly, SymbolPoly> divide_linear(const GaussianRational& z) const {
    if (c_.empty()) return {{}, {}};
    std::vector<SymbolPoly> q(c_.size() - 1);
    SymbolPoly carry;
    const SymbolPoly zs(z);
    for (std::size_t k = c_.size(); k-- > 0;) {
      SymbolPoly cur = c_[k] + carry;
      if (k == 0) return {XiPoly(std::move(q)), cur};
      q[k - 1] = cur;
      carry = cur * zs;
    }
    return {XiPoly(std::move(q)), carry};
  }

  XiPoly scaled(const SymbolPoly& s) const {
    std::vector<SymbolPoly> v = c_;
    for (auto& c : v) c = c * s;
    return XiPoly(std::move(v));
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "[" + c_[k].str() + "]";
      if (k == 1) out += "*xi";
      else if (k > 1) out += "*xi^" + std::to_string(k);
    }
    return out;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<SymbolPoly> c_;
};

/// num / ((xi_n - i)^p (xi_n + i)^q), reduced so num does not vanish at a populated pole.
class RatXi {
public:
  RatXi() = default;
  RatXi(XiPoly num, int p = 0, int q = 0) : num_(std::move(num)), p_(p), q_(q) { canonicalize(); }
  RatXi(const SymbolPoly& c) : RatXi(XiPoly(c)) {}
  RatXi(const GaussianRational& c) : RatXi(XiPoly(SymbolPoly(c))) {}
  RatXi(int c) : RatXi(GaussianRational(c)) {}

  /// (1 + xi_n^2)^(-k); negative k puts the factor in the numerator.
  static RatXi inv_norm_pow(int k) {
    if (k >= 0) return RatXi(XiPoly(SymbolPoly(1)), k, k);
    return RatXi(XiPoly::from({1, 0, 1}).pow(static_cast<unsigned>(-k)));
  }
  static RatXi xi_pow(unsigned k) { return RatXi(XiPoly::monomial(k)); }

  const XiPoly& num() const { return num_; }
  int p() const { return p_; }
  int q() const { return q_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Degree of num minus total pole order; INT_MIN for zero.
  int decay_order() const { return is_zero() ? INT_MIN : num_.degree() - p_ - q_; }

  RatXi operator-() const { return RatXi(-num_, p_, q_); }
  friend RatXi operator+(const RatXi& a, const RatXi& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int P = std::max(a.p_, b.p_), Q = std::max(a.q_, b.q_);
    return RatXi(a.lifted(P, Q) + b.lifted(P, Q), P, Q);
  }
  friend RatXi operator-(const RatXi& a, const RatXi& b) { return a + (-b); }
  friend RatXi operator*(const RatXi& a, const RatXi& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return RatXi(a.num_ * b.num_, a.p_ + b.p_, a.q_ + b.q_);
  }
  RatXi& operator+=(const RatXi& o) { return *this = *this + o; }
  RatXi& operator-=(const RatXi& o) { return *this = *this - o; }
  RatXi& operator*=(const RatXi& o) { return *this = *this * o; }
  friend bool operator==(const RatXi& a, const RatXi& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.num_ == b.num_;
  }

  RatXi scaled(const SymbolPoly& s) const { return RatXi(num_.scaled(s), p_, q_); }

  /// Value at a non-pole point.
  SymbolPoly evaluate(const GaussianRational& z) const {
    GaussianRational den(1);
    if (p_ > 0) den *= (z - GaussianRational::i()).pow(p_);
    if (q_ > 0) den *= (z + GaussianRational::i()).pow(q_);
    if (den.is_zero()) throw DivisionByZero();
    return num_.evaluate(z) * SymbolPoly(den.inverse());
  }

  /// Applies f to every SymbolPoly coefficient of the numerator.
  template <class F>
  RatXi map_coeffs(F&& f) const {
    std::vector<SymbolPoly> v;
    for (const auto& c : num_.coeffs()) v.push_back(f(c));
    return RatXi(XiPoly(std::move(v)), p_, q_);
  }

  std::string str() const {
    std::string out = "(" + num_.str() + ")";
    if (p_ == 0 && q_ == 0) return out;
    out += " /";
    if (p_ > 0) out += " (xi-i)^" + std::to_string(p_);
    if (q_ > 0) out += " (xi+i)^" + std::to_string(q_);
    return out;
  }

private:
  XiPoly lifted(int P, int Q) const {
    return num_ * XiPoly::linear(GaussianRational::i()).pow(static_cast<unsigned>(P - p_)) *
           XiPoly::linear(-GaussianRational::i()).pow(static_cast<unsigned>(Q - q_));
  }

  void canonicalize() {
    if (num_.is_zero()) {
      p_ = q_ = 0;
      return;
    }
    if (p_ < 0) {
      num_ = num_ * XiPoly::linear(GaussianRational::i()).pow(static_cast<unsigned>(-p_));
      p_ = 0;
    }
    if (q_ < 0) {
      num_ = num_ * XiPoly::linear(-GaussianRational::i()).pow(static_cast<unsigned>(-q_));
      q_ = 0;
    }
    strip(GaussianRational::i(), p_);
    strip(-GaussianRational::i(), q_);
  }

  void strip(const GaussianRational& z, int& order) {
    while (order > 0) {
      auto [quot, rem] = num_.divide_linear(z);
      if (!rem.is_zero()) return;
      num_ = std::move(quot);
      --order;
    }
  }

  XiPoly num_;
  int p_ = 0;
  int q_ = 0;
};

inline RatXi diff(const RatXi& f, int k = 1) {
  RatXi g = f;
  for (int s = 0; s < k; ++s) {
    if (g.is_zero()) return g;
    const int p = g.p(), q = g.q();
    const XiPoly A = p > 0 ? XiPoly::linear(GaussianRational::i()) : XiPoly(SymbolPoly(1));
    const XiPoly B = q > 0 ? XiPoly::linear(-GaussianRational::i()) : XiPoly(SymbolPoly(1));
    XiPoly num = g.num().derivative() * A * B;
    if (p > 0) num -= g.num().scaled(SymbolPoly(p)) * B;
    if (q > 0) num -= g.num().scaled(SymbolPoly(q)) * A;
    g = RatXi(std::move(num), p + (p > 0), q + (q > 0));
  }
  return g;
}

struct PartialFractions {
  XiPoly poly;
  std::vector<SymbolPoly> upper; // upper[k-1] multiplies (xi_n - i)^(-k)
  std::vector<SymbolPoly> lower; // lower[k-1] multiplies (xi_n + i)^(-k)

  RatXi upper_part() const {
    RatXi r;
    for (std::size_t k = 0; k < upper.size(); ++k) r += RatXi(XiPoly(upper[k]), static_cast<int>(k + 1), 0);
    return r;
  }
  RatXi lower_part() const {
    RatXi r;
    for (std::size_t k = 0; k < lower.size(); ++k) r += RatXi(XiPoly(lower[k]), 0, static_cast<int>(k + 1));
    return r;
  }
  RatXi recombine() const { return RatXi(poly) + upper_part() + lower_part(); }
};

namespace detail {

// Principal part at pole z0 of order n, where the other pole sits at z1 with
// order n1. Expands N(z0+t) * (z0 - z1 + t)^(-n1) as a power series in t.
inline std::vector<SymbolPoly> principal_part(const XiPoly& num, const GaussianRational& z0, int n,
                                              const GaussianRational& z1, int n1) {
  std::vector<SymbolPoly> out(static_cast<std::size_t>(n));
  if (n == 0) return out;
  const XiPoly shifted = num.shift(z0);
  const GaussianRational b = z0 - z1;
  std::vector<GaussianRational> series(static_cast<std::size_t>(n));
  GaussianRational binom(1);
  for (int k = 0; k < n; ++k) {
    series[static_cast<std::size_t>(k)] = binom * b.pow(-n1 - k);
    binom = binom * GaussianRational(static_cast<long>(-n1 - k)) / GaussianRational(static_cast<long>(k + 1));
  }
  for (int k = 0; k < n; ++k) {
    SymbolPoly ck;
    for (int a = 0; a <= k; ++a) ck += shifted.coeff(static_cast<std::size_t>(a)) * SymbolPoly(series[static_cast<std::size_t>(k - a)]);
    out[static_cast<std::size_t>(n - 1 - k)] = ck;
  }
  return out;
}

} // namespace detail

inline PartialFractions partial_fractions(const RatXi& f) {
  PartialFractions pf;
  const GaussianRational I = GaussianRational::i();
  pf.upper = detail::principal_part(f.num(), I, f.p(), -I, f.q());
  pf.lower = detail::principal_part(f.num(), -I, f.q(), I, f.p());
  RatXi rest = f - pf.upper_part() - pf.lower_part();
  if (rest.p() != 0 || rest.q() != 0) throw Error("partial fraction remainder is not a polynomial");
  pf.poly = rest.num();
  return pf;
}

enum class PolynomialPart { reject, discard };

inline RatXi pi_plus(const RatXi& f, PolynomialPart mode = PolynomialPart::reject) {
  PartialFractions pf = partial_fractions(f);
  if (!pf.poly.is_zero() && mode == PolynomialPart::reject)
    throw NonDecayingInput("pi_plus input has a polynomial part: " + pf.poly.str());
  return pf.upper_part();
}

/// Semantic value is pi * coeff.
struct PiScaledValue {
  SymbolPoly coeff;
  friend bool operator==(const PiScaledValue& a, const PiScaledValue& b) { return a.coeff == b.coeff; }
  std::string str() const { return "pi*(" + coeff.str() + ")"; }
};

inline void require_decay(const RatXi& f) {
  if (!f.is_zero() && f.decay_order() >= 0)
    throw NonDecayingInput("contour input does not decay: " + f.str());
}

/// Integral over a curve enclosing xi_n = i, via the derivative formula
/// (2 pi i / (p-1)!) [(xi_n - i)^p f]^(p-1) at xi_n = i.
inline PiScaledValue contour_gamma_plus(const RatXi& f) {
  require_decay(f);
  if (f.p() == 0) return {};
  const RatXi g(f.num(), 0, f.q());
  const SymbolPoly d = diff(g, f.p() - 1).evaluate(GaussianRational::i());
  const GaussianRational scale = GaussianRational(0, 2) / factorial(f.p() - 1);
  return {d * SymbolPoly(scale)};
}

/// Same integral read off the first upper partial-fraction coefficient.
inline PiScaledValue contour_from_partial_fractions(const RatXi& f) {
  require_decay(f);
  PartialFractions pf = partial_fractions(f);
  if (pf.upper.empty()) return {};
  return {pf.upper[0] * SymbolPoly(GaussianRational(0, 2))};
}

/// (1/2pi) times the contour integral, returned as an exact value.
inline SymbolPoly pi_prime(const RatXi& f) {
  return contour_gamma_plus(f).coeff * SymbolPoly(GaussianRational::ratio(1, 2));
}

} // namespace ncres
