#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "ncres/errors.hpp"
#include "ncres/rat_xi.hpp"

namespace ncres {

/// Random rational values (numerator in [-7, 7], denominator in [1, 7]) for every symbol.
inline Assignment random_assignment(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-7, 7), den(1, 7);
  Assignment a;
  for (auto s : kAllSymbols) {
    long p = num(rng), q = den(rng);
    if (p == 0) p = 1;
    a[s] = GaussianRational::ratio(p, q);
  }
  return a;
}

struct QuadratureResult {
  std::complex<long double> value;
  std::complex<long double> expected;
  long double error_estimate = 0;
  bool pass = false;
};

/// Integral over the real line of f under the assignment, in long double.
inline std::complex<long double> integrate_real_line(const RatXi& f, const Assignment& a, long double* err = nullptr) {
  if (f.is_zero()) return {};
  if (f.decay_order() > -2) throw InsufficientDecay("quadrature needs decay of order at least 2: " + f.str());
  std::vector<std::complex<long double>> c;
  for (const auto& k : f.num().coeffs()) c.push_back(k.eval(a).to_complex());
  const int p = f.p(), q = f.q();
  auto value = [&](long double x) {
    std::complex<long double> z(x, 0), s;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * z + *it;
    const std::complex<long double> I(0, 1);
    return s / (std::pow(z - I, p) * std::pow(z + I, q));
  };
  using boost::math::quadrature::gauss_kronrod;
  const long double inf = std::numeric_limits<long double>::infinity();
  long double e_re = 0, e_im = 0;
  const long double re =
      gauss_kronrod<long double, 15>::integrate([&](long double x) { return value(x).real(); }, -inf, inf, 15, 1e-14L, &e_re);
  const long double im =
      gauss_kronrod<long double, 15>::integrate([&](long double x) { return value(x).imag(); }, -inf, inf, 15, 1e-14L, &e_im);
  if (err) *err = std::hypot(e_re, e_im);
  return {re, im};
}

/// Compares the numerical integral of f with pi * exact_coeff under the assignment.
/// The tolerance is relative, or absolute when the exact value is zero.
inline QuadratureResult quadrature_oracle(const RatXi& f, const SymbolPoly& exact_coeff, const Assignment& a,
                                          long double tol = 1e-8L) {
  QuadratureResult r;
  r.value = integrate_real_line(f, a, &r.error_estimate);
  r.expected = exact_coeff.eval(a).to_complex() * boost::math::constants::pi<long double>();
  const long double diff = std::abs(r.value - r.expected), scale = std::abs(r.expected);
  r.pass = scale == 0 ? diff <= tol : diff <= tol * scale;
  return r;
}

} // namespace ncres
