#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ncres/errors.hpp"
#include "ncres/gaussian_rational.hpp"
#include "ncres/rat_xi.hpp"

namespace ncres {

/// N(N-1)...(N-K+1); zero for K < 0.
inline mpq_class falling(long N, long K) {
  if (K < 0) return 0;
  mpq_class r = 1;
  for (long k = 0; k < K; ++k) r *= N - k;
  return r;
}

/// C_N^K = falling(N, K)/K!, extended to negative N. K < 0 gives 0.
inline mpq_class binom_general(long N, long K) {
  if (K < 0) return 0;
  mpq_class den = 1;
  for (long k = 2; k <= K; ++k) den *= k;
  return falling(N, K) / den;
}

/// A_N^K = falling(N, K).
inline mpq_class arrange_general(long N, long K) { return falling(N, K); }

struct ClosedFormCoefficient {
  std::string name;
  /// Numerator coefficients in ascending powers of xi_n.
  std::function<std::vector<GaussianRational>(long m)> numerator;
  std::function<long(long m)> denominator_power; // (xi_n + i)^s
  std::function<long(long m)> derivative_order;
  std::function<GaussianRational(long m)> printed;
  std::string printed_text;
};

namespace coef_detail {

using GR = GaussianRational;

inline GR I() { return GR::i(); }
inline GR n(long v) { return GR(v); }
inline GR c(long re, long im) { return GR(mpq_class(re), mpq_class(im)); }
inline GR C(long N, long K) { return GR(binom_general(N, K)); }
inline GR A(long N, long K) { return GR(arrange_general(N, K)); }
inline GR two_i_pow(long e) { return c(0, 2).pow(e); }
inline GR i_pow(long e) { return I().pow(e); }
inline GR two_pow(long e) { return n(2).pow(e); }
inline GR fact(long k) { return factorial(k); }

inline std::vector<ClosedFormCoefficient> build() {
  std::vector<ClosedFormCoefficient> t;
  auto add = [&](std::string name, std::function<std::vector<GR>(long)> num, std::function<long(long)> s,
                 std::function<long(long)> k, std::function<GR(long)> printed, std::string text) {
    t.push_back({std::move(name), std::move(num), std::move(s), std::move(k), std::move(printed), std::move(text)});
  };
  add("A0", [](long m) { return std::vector<GR>{n(-2), n(0), n(4 * m - 2)}; }, [](long m) { return m + 1; },
      [](long m) { return m + 1; },
      [](long m) {
        return -i_pow(-2 * (m + 1)) * two_pow(-(2 * m + 1)) *
               (n(4 * m - 2) * C(-(m + 1), m - 1) + n(4 * m - 2) * C(-(m + 1), m) + n(m) * C(-(m + 1), m + 1)) *
               fact(m + 1);
      },
      "-i^(-2(m+1)) 2^(-(2m+1)) ((4m-2)C_{-(m+1)}^{m-1} + (4m-2)C_{-(m+1)}^m + m C_{-(m+1)}^{m+1}) (m+1)!");
  add("A1", [](long) { return std::vector<GR>{n(1)}; }, [](long m) { return m + 1; }, [](long m) { return m + 2; },
      [](long m) { return two_i_pow(-2 * m - 3) * A(-m - 1, m + 2); }, "(2i)^(-2m-3) A_{-m-1}^{m+2}");
  add("B0", [](long) { return std::vector<GR>{I()}; }, [](long m) { return m; }, [](long m) { return m + 2; },
      [](long m) { return -i_pow(-2 * m - 3) * two_pow(-2 * m - 2) * A(-m, m + 2); },
      "-i^(-2m-3) 2^(-2m-2) A_{-m}^{m+2}");
  add("C0", [](long) { return std::vector<GR>{n(0), n(1)}; }, [](long m) { return m; }, [](long m) { return m + 1; },
      [](long m) {
        return -i_pow(-2 * m - 2) * two_pow(-2 * m - 1) * (n(2) * C(-m, m) + C(-m, m + 1)) * fact(m + 1);
      },
      "-i^(-2m-2) 2^(-2m-1) (2C_{-m}^m + C_{-m}^{m+1}) (m+1)!");
  add("C1", [](long) { return std::vector<GR>{n(0), n(1)}; }, [](long m) { return m + 1; },
      [](long m) { return m + 2; },
      [](long m) {
        return -i_pow(-2 * m - 4) * two_pow(-2 * m - 3) * (n(2) * C(-m - 1, m + 1) + C(-m - 1, m + 2)) * fact(m + 2);
      },
      "-i^(-2m-4) 2^(-2m-3) (2C_{-m-1}^{m+1} + C_{-m-1}^{m+2}) (m+2)!");
  add("D0", [](long) { return std::vector<GR>{n(0), c(0, 5), n(1)}; }, [](long m) { return m; },
      [](long m) { return m + 2; },
      [](long m) {
        return -i_pow(-2 * m - 3) * two_pow(-2 * m - 1) *
               (n(2) * C(-m, m) + n(7) * C(-m, m + 1) + n(3) * C(-m, m + 2)) * fact(m + 2);
      },
      "-i^(-2m-3) 2^(-2m-1) (2C_{-m}^m + 7C_{-m}^{m+1} + 3C_{-m}^{m+2}) (m+2)!");
  add("E0", [](long) { return std::vector<GR>{I(), n(-1)}; }, [](long m) { return m; }, [](long m) { return m + 2; },
      [](long m) { return i_pow(-2 * m + 1) * two_pow(-2 * m - 1) * C(-m, m + 1) * fact(m + 2); },
      "i^(-2m+1) 2^(-2m-1) C_{-m}^{m+1} (m+2)!");
  add("E1", [](long) { return std::vector<GR>{n(4), c(0, 9), n(-2)}; }, [](long m) { return m; },
      [](long m) { return m + 3; },
      [](long m) {
        return two_i_pow(-2 * m - 3) *
               (c(0, 8) * C(-m, m + 1) - c(18, -8) * C(-m, m + 2) - c(5, -2) * C(-m, m + 3)) * fact(m + 3);
      },
      "(2i)^(-2m-3) (8i C_{-m}^{m+1} - (18-8i)C_{-m}^{m+2} - (5-2i)C_{-m}^{m+3}) (m+3)!");
  add("F0", [](long m) { return std::vector<GR>{c(2 * m, 1), c(2 * m, -2 * m), I()}; }, [](long m) { return m + 1; },
      [](long m) { return m + 3; },
      [](long m) {
        return two_i_pow(-2 * m - 4) *
               (c(0, -4) * C(-m - 1, m + 1) + n(4) * c(m, m - 1) * C(-m - 1, m + 2) +
                n(2) * c(2 * m, m - 1) * C(-m - 1, m + 3)) *
               fact(m + 3);
      },
      "(2i)^(-2m-4) (-4i C_{-m-1}^{m+1} + 4(m+mi-i)C_{-m-1}^{m+2} + 2(2m+mi-i)C_{-m-1}^{m+3}) (m+3)!");
  add("G0", [](long) { return std::vector<GR>{n(0), c(0, -5), n(3)}; }, [](long m) { return m; },
      [](long m) { return m + 2; },
      [](long m) {
        return two_i_pow(-2 * m - 2) * (n(-12) * C(-m, m) - n(22) * C(-m, m + 1) - n(8) * C(-m, m + 2)) * fact(m + 2);
      },
      "(2i)^(-2m-2) (-12C_{-m}^m - 22C_{-m}^{m+1} - 8C_{-m}^{m+2}) (m+2)!");
  add("G1", [](long m) { return std::vector<GR>{n(0), n(0), n(m), c(0, -4 * m), n(3 * m)}; },
      [](long m) { return m; }, [](long m) { return m + 2; },
      [](long m) {
        return -i_pow(-2 * m - 4) * two_pow(-2 * m - 1) * n(m) *
               (n(24) * C(-m, m - 2) + c(48, 16) * C(-m, m - 1) + c(34, 24) * C(-m, m) + c(10, 12) * C(-m, m + 1) +
                c(1, 2) * C(-m, m + 2)) *
               fact(m + 2);
      },
      "-i^(-2m-4) 2^(-2m-1) m (24C_{-m}^{m-2} + (48+16i)C_{-m}^{m-1} + (34+24i)C_{-m}^m + (10+12i)C_{-m}^{m+1} + "
      "(1+2i)C_{-m}^{m+2}) (m+2)!");
  add("G2", [](long m) { return std::vector<GR>{n(0), n(0), n(3 * m), n(0), c(0, 2 * m)}; },
      [](long m) { return m + 1; }, [](long m) { return m + 3; },
      [](long m) {
        return -i_pow(-2 * m - 6) * two_pow(-2 * m - 4) *
               (n(32 * m) * C(-m - 1, m - 1) + n(64 * m) * C(-m - 1, m) + n(36 * m - 12) * C(-m - 1, m + 1) +
                n(4 * m + 12) * C(-m - 1, m + 2) + n(3 - m) * C(-m - 1, m + 3)) *
               fact(m + 3);
      },
      "-i^(-2m-6) 2^(-2m-4) (32m C_{-m-1}^{m-1} + 64m C_{-m-1}^m + (36m-12)C_{-m-1}^{m+1} + (4m+12)C_{-m-1}^{m+2} + "
      "(3-m)C_{-m-1}^{m+3}) (m+3)!");
  add("G3", [](long m) { return std::vector<GR>{I(), n(2 * m), I()}; }, [](long m) { return m + 1; },
      [](long m) { return m + 2; },
      [](long m) {
        return i_pow(-2 * m - 4) * n(4).pow(-m - 1) *
               (n(2) * C(-m - 1, m) + n(2 * m + 10) * C(-m - 1, m + 1) - n(m) * C(-m - 1, m + 2)) * fact(m + 2);
      },
      "i^(-2m-4) 4^(-m-1) (2C_{-m-1}^m + (2m+10)C_{-m-1}^{m+1} - m C_{-m-1}^{m+2}) (m+2)!");
  add("H0", [](long) { return std::vector<GR>{n(0), n(1)}; }, [](long m) { return m + 1; },
      [](long m) { return m + 2; },
      [](long m) {
        return -i_pow(-2 * m - 4) * two_pow(-2 * m - 3) * (n(2) * C(-m - 1, m + 1) + C(-m - 1, m + 2)) * fact(m + 2);
      },
      "-i^(-2m-4) 2^(-2m-3) (2C_{-m-1}^{m+1} + C_{-m-1}^{m+2}) (m+2)!");
  add("H1", [](long) { return std::vector<GR>{n(0), n(1)}; }, [](long m) { return m + 2; },
      [](long m) { return m + 3; },
      [](long m) {
        return two_i_pow(-2 * m - 4) * (c(0, 2) * C(-m - 1, m + 2) + I() * C(-m - 1, m + 3)) * fact(m + 3);
      },
      "(2i)^(-2m-4) (2i C_{-m-1}^{m+2} + i C_{-m-1}^{m+3}) (m+3)!");
  add("H2", [](long) { return std::vector<GR>{n(0), n(0), n(1)}; }, [](long m) { return m + 1; },
      [](long m) { return m + 2; },
      [](long m) {
        return -two_i_pow(-2 * m - 3) * (n(4) * C(-m - 1, m) + n(4) * C(-m - 1, m + 1) + C(-m - 1, m + 2)) *
               fact(m + 2);
      },
      "-(2i)^(-2m-3) (4C_{-m-1}^m + 4C_{-m-1}^{m+1} + C_{-m-1}^{m+2}) (m+2)!");
  add("H3", [](long) { return std::vector<GR>{n(1)}; }, [](long m) { return m + 1; }, [](long m) { return m + 2; },
      [](long m) { return two_i_pow(-2 * m - 3) * A(-m - 1, m + 2); }, "(2i)^(-2m-3) A_{-m-1}^{m+2}");
  add("I0", [](long m) { return std::vector<GR>{c(0, -1), n(0), c(0, 2 * m - 1)}; }, [](long m) { return m + 1; },
      [](long m) { return m + 1; },
      [](long m) {
        return -two_i_pow(-2 * m - 1) *
               (n(4 * m - 2) * C(-m - 1, m - 1) + n(4 * m - 2) * C(-m - 1, m) + n(m) * C(-m - 1, m + 1)) *
               fact(m + 1);
      },
      "-(2i)^(-2m-1) ((4m-2)C_{-m-1}^{m-1} + (4m-2)C_{-m-1}^m + m C_{-m-1}^{m+1}) (m+1)!");
  add("I1", [](long m) { return std::vector<GR>{n(-1), n(0), n(2 * m - 1)}; }, [](long m) { return m + 1; },
      [](long m) { return m + 2; },
      [](long m) {
        return two_i_pow(-2 * m - 3) *
               (n(4 - 8 * m) * C(-m - 1, m) + n(4 - 8 * m) * C(-m - 1, m + 1) - n(2 * m) * C(-m - 1, m + 2)) *
               fact(m + 2);
      },
      "(2i)^(-2m-3) ((4-8m)C_{-m-1}^m + (4-8m)C_{-m-1}^{m+1} - 2m C_{-m-1}^{m+2}) (m+2)!");
  add("J0", [](long) { return std::vector<GR>{I()}; }, [](long m) { return m; }, [](long m) { return m + 2; },
      [](long m) { return -i_pow(-2 * m - 3) * two_pow(-2 * m - 1) * A(m, m + 2); },
      "-i^(-2m-3) 2^(-2m-1) A_m^{m+2}");
  add("K0", [](long) { return std::vector<GR>{n(0), n(1)}; }, [](long m) { return m; }, [](long m) { return m + 1; },
      [](long m) { return two_i_pow(-2 * m - 1) * (c(0, 2) * C(-m, m) + I() * C(-m, m + 1)) * fact(m + 1); },
      "(2i)^(-2m-1) (2i C_{-m}^m + i C_{-m}^{m+1}) (m+1)!");
  add("K1", [](long) { return std::vector<GR>{n(0), n(1)}; }, [](long m) { return m; }, [](long m) { return m + 2; },
      [](long m) { return two_i_pow(-2 * m - 2) * (c(0, 2) * C(-m, m + 1) + I() * C(-m, m + 2)) * fact(m + 2); },
      "(2i)^(-2m-2) (2i C_{-m}^{m+1} + i C_{-m}^{m+2}) (m+2)!");
  add("L0", [](long) { return std::vector<GR>{n(0), c(0, 2), n(1), c(0, 2)}; }, [](long m) { return m; },
      [](long m) { return m + 2; },
      [](long m) {
        return two_i_pow(-2 * m - 2) *
               (n(-16) * C(-m, m + 1) + n(20) * C(-m, m) + n(4) * C(-m, m + 1) - C(-m, m + 2)) * fact(m + 2);
      },
      "(2i)^(-2m-2) (-16C_{-m}^{m+1} + 20C_{-m}^m + 4C_{-m}^{m+1} - C_{-m}^{m+2}) (m+2)!");
  return t;
}

} // namespace coef_detail

inline const std::vector<ClosedFormCoefficient>& closed_form_coefficients() {
  static const std::vector<ClosedFormCoefficient> table = coef_detail::build();
  return table;
}

inline const ClosedFormCoefficient& find_coefficient(const std::string& name) {
  for (const auto& c : closed_form_coefficients())
    if (c.name == name) return c;
  throw UnsupportedSymbol("unknown coefficient " + name);
}

/// The rational function whose derivative defines the coefficient.
inline RatXi defining_function(const ClosedFormCoefficient& c, long m) {
  std::vector<SymbolPoly> v;
  for (const auto& x : c.numerator(m)) v.emplace_back(x);
  return RatXi(XiPoly(std::move(v)), 0, static_cast<int>(c.denominator_power(m)));
}

inline GaussianRational eval_closed_form(const std::string& name, long m) {
  if (m < 1) throw UsageError("m must be at least 1");
  return find_coefficient(name).printed(m);
}

inline GaussianRational eval_by_oracle(const std::string& name, long m) {
  if (m < 1) throw UsageError("m must be at least 1");
  const auto& c = find_coefficient(name);
  const SymbolPoly v =
      diff(defining_function(c, m), static_cast<int>(c.derivative_order(m))).evaluate(GaussianRational::i());
  return *v.as_constant();
}

struct ErrataRow {
  std::string name;
  long m;
  GaussianRational printed;
  GaussianRational oracle;
  bool match;
};

inline std::vector<ErrataRow> errata_table(long m_min, long m_max) {
  std::vector<ErrataRow> rows;
  for (const auto& c : closed_form_coefficients())
    for (long m = m_min; m <= m_max; ++m) {
      GaussianRational p = eval_closed_form(c.name, m), o = eval_by_oracle(c.name, m);
      rows.push_back({c.name, m, p, o, p == o});
    }
  return rows;
}

} // namespace ncres
