#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <utility>

#include "ncres/errors.hpp"

namespace ncres {

/// Exact complex rational a + b*i over GMP rationals.
///
/// Both parts are kept canonical (positive denominators, lowest terms); every
/// arithmetic result is canonical as well, so structural equality is value
/// equality.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(int re) : re_(re) {}
  GaussianRational(long re) : re_(re) {}
  GaussianRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
  static GaussianRational ratio(long num, long den) {
    if (den == 0) throw DivisionByZero();
    mpq_class q(num, den);
    q.canonicalize();
    return {q};
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational inverse() const {
    if (is_zero()) throw DivisionByZero();
    const mpq_class n = norm();
    return {re_ / n, -im_ / n};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class s = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(s);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Integer power; negative exponents invert first.
  GaussianRational pow(long e) const {
    GaussianRational base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    GaussianRational acc(1);
    while (n) {
      if (n & 1UL) acc *= base;
      base *= base;
      n >>= 1U;
    }
    return acc;
  }

  std::complex<long double> to_complex() const {
    return {static_cast<long double>(re_.get_d()), static_cast<long double>(im_.get_d())};
  }

  /// Canonical rendering: "a/b", "c/d*i", "a/b + c/d*i" or "a/b - c/d*i".
  std::string str() const {
    if (is_zero()) return "0";
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag = abs_str(im_) + "*i";
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
    return re_.get_str() + (sgn(im_) < 0 ? " - " : " + ") + imag;
  }

private:
  static std::string abs_str(const mpq_class& q) {
    mpq_class a = abs(q);
    return a.get_str();
  }

  mpq_class re_{0};
  mpq_class im_{0};
};

/// n! as an exact rational.
inline GaussianRational factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return {mpq_class(f)};
}

} // namespace ncres
