#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "ncres/clifford.hpp"
#include "ncres/errors.hpp"
#include "ncres/gaussian_rational.hpp"

namespace ncres {

/// Dense square matrix over GaussianRational, row-major.
class GMatrix {
public:
  explicit GMatrix(std::size_t n = 0) : n_(n), a_(n * n) {}
  static GMatrix identity(std::size_t n) {
    GMatrix m(n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = GaussianRational(1);
    return m;
  }

  std::size_t size() const { return n_; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  friend GMatrix operator*(const GMatrix& x, const GMatrix& y) {
    GMatrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        if (x(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < x.n_; ++j)
          if (!y(k, j).is_zero()) r(i, j) += x(i, k) * y(k, j);
      }
    return r;
  }
  friend GMatrix operator+(GMatrix x, const GMatrix& y) {
    for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] += y.a_[k];
    return x;
  }
  GMatrix scaled(const GaussianRational& s) const {
    GMatrix r = *this;
    for (auto& v : r.a_) v *= s;
    return r;
  }
  friend bool operator==(const GMatrix& x, const GMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

  GaussianRational trace() const {
    GaussianRational t;
    for (std::size_t k = 0; k < n_; ++k) t += (*this)(k, k);
    return t;
  }

  /// Kronecker product x ⊗ y.
  friend GMatrix kron(const GMatrix& x, const GMatrix& y) {
    GMatrix r(x.n_ * y.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t j = 0; j < x.n_; ++j)
        for (std::size_t k = 0; k < y.n_; ++k)
          for (std::size_t l = 0; l < y.n_; ++l) r(i * y.n_ + k, j * y.n_ + l) = x(i, j) * y(k, l);
    return r;
  }

private:
  std::size_t n_;
  std::vector<GaussianRational> a_;
};

/// 2m+1 matrices of size 2^m with g_a g_b + g_b g_a = -2 delta_ab.
inline std::vector<GMatrix> gamma_matrices(int m) {
  if (m < 1) throw ConstructionError("gamma matrices need m >= 1");
  const GaussianRational I = GaussianRational::i();
  GMatrix s1(2), s2(2), s3(2);
  s1(0, 1) = s1(1, 0) = GaussianRational(1);
  s2(0, 1) = -I;
  s2(1, 0) = I;
  s3(0, 0) = GaussianRational(1);
  s3(1, 1) = GaussianRational(-1);

  std::vector<GMatrix> euclid{s1, s2, s3};
  for (int level = 2; level <= m; ++level) {
    const GMatrix id = GMatrix::identity(euclid.front().size());
    std::vector<GMatrix> next;
    for (const auto& g : euclid) next.push_back(kron(g, s1));
    next.push_back(kron(id, s2));
    next.push_back(kron(id, s3));
    euclid = std::move(next);
  }

  std::vector<GMatrix> gammas;
  for (const auto& g : euclid) gammas.push_back(g.scaled(I));

  const std::size_t dim = gammas.front().size();
  const GMatrix minus_two = GMatrix::identity(dim).scaled(GaussianRational(-2));
  const GMatrix zero(dim);
  for (std::size_t a = 0; a < gammas.size(); ++a)
    for (std::size_t b = a; b < gammas.size(); ++b) {
      const GMatrix ac = gammas[a] * gammas[b] + gammas[b] * gammas[a];
      if (!(ac == (a == b ? minus_two : zero))) throw ConstructionError("gamma anticommutation check failed");
    }
  return gammas;
}

using NumVector = std::vector<mpq_class>;

inline GaussianRational euclidean_dot(const NumVector& u, const NumVector& v) {
  mpq_class s = 0;
  for (std::size_t k = 0; k < u.size() && k < v.size(); ++k) s += u[k] * v[k];
  return GaussianRational(s);
}

/// tr[c(v1)...c(vk)] / 2^m with c(v) = sum_k v_k gamma_k in dimension 2m+1.
inline GaussianRational gamma_oracle(int m, const std::vector<NumVector>& word) {
  const auto gammas = gamma_matrices(m);
  const std::size_t dim = gammas.front().size();
  GMatrix prod = GMatrix::identity(dim);
  for (const auto& v : word) {
    if (v.size() != gammas.size()) throw ConstructionError("vector dimension does not match 2m+1");
    GMatrix cv(dim);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (sgn(v[k]) != 0) cv = cv + gammas[k].scaled(GaussianRational(v[k]));
    prod = prod * cv;
  }
  return prod.trace() / GaussianRational(static_cast<long>(dim));
}

/// Matching expansion of the same word under the Euclidean pairing.
inline GaussianRational numeric_wick_trace(const std::vector<NumVector>& word) {
  return matching_trace<GaussianRational>(word.size(),
                                          [&](std::size_t a, std::size_t b) { return euclidean_dot(word[a], word[b]); });
}

} // namespace ncres
