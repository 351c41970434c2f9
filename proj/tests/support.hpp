#pragma once

#include <random>
#include <vector>

#include "ncres/gamma_oracle.hpp"
#include "ncres/rat_xi.hpp"

namespace ncres::testkit {

/// Decaying rational function with small Gaussian-integer coefficients and poles at +-i.
inline RatXi random_decaying(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-5, 5), e(0, 3);
  int p = static_cast<int>(e(rng)), q = static_cast<int>(e(rng));
  if (p + q == 0) p = 1;
  std::vector<SymbolPoly> num;
  const int deg = std::uniform_int_distribution<int>(0, p + q - 1)(rng);
  for (int k = 0; k <= deg; ++k) num.emplace_back(GaussianRational(mpq_class(c(rng)), mpq_class(c(rng))));
  return RatXi(XiPoly(std::move(num)), p, q);
}

/// Words of numeric vectors in R^(2m+1), lengths 0..6. Odd lengths of at least 2m+1
/// are skipped: there the product of all generators is central and the matrix trace
/// no longer vanishes.
inline std::vector<std::vector<NumVector>> numeric_word_corpus(int m, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(0, 6), num(-3, 3), den(1, 3);
  std::vector<std::vector<NumVector>> out;
  const int dim = 2 * m + 1;
  while (out.size() < count) {
    const int n = len(rng);
    if (n % 2 == 1 && n >= dim) continue;
    std::vector<NumVector> w;
    for (int k = 0; k < n; ++k) {
      NumVector v;
      for (int d = 0; d < dim; ++d) {
        mpq_class q(num(rng), den(rng));
        q.canonicalize();
        v.push_back(q);
      }
      w.push_back(std::move(v));
    }
    out.push_back(std::move(w));
  }
  return out;
}

} // namespace ncres::testkit
