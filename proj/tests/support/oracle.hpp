#pragma once

// Independent reference implementations for the test suites. Everything here
// works on plain int64 values and is derived from definitions (column images,
// iterated products, exhaustive boxes), never from the library's formulas.

#include <array>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

#include "monodromy/sl2z.hpp"

namespace oracle {

struct IMat {
  long long a, b, c, d;
  friend bool operator==(const IMat&, const IMat&) = default;
};

inline IMat mul(const IMat& x, const IMat& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}
inline IMat ident() { return {1, 0, 0, 1}; }
inline IMat neg(const IMat& x) { return {-x.a, -x.b, -x.c, -x.d}; }
inline IMat inv(const IMat& x) { return {x.d, -x.b, -x.c, x.a}; }  // det 1 only
inline long long det(const IMat& x) { return x.a * x.d - x.b * x.c; }
inline long long tr(const IMat& x) { return x.a + x.d; }

inline IMat from(const monodromy::Mat2& m) {
  return {*monodromy::to_int64(m.a()), *monodromy::to_int64(m.b()), *monodromy::to_int64(m.c()),
          *monodromy::to_int64(m.d())};
}
inline monodromy::Mat2 to_mat(const IMat& m) { return monodromy::Mat2(m.a, m.b, m.c, m.d); }

// x -> x + (x, v) v with (x, v) = x1 v2 - x2 v1, built from the images of the
// standard basis vectors (they become the columns).
inline IMat transvection(long long p, long long q) {
  auto image = [&](long long x1, long long x2) {
    const long long pair = x1 * q - x2 * p;
    return std::array<long long, 2>{x1 + pair * p, x2 + pair * q};
  };
  const auto e1 = image(1, 0);
  const auto e2 = image(0, 1);
  return {e1[0], e2[0], e1[1], e2[1]};
}

inline std::array<long long, 2> apply(const IMat& m, long long p, long long q) {
  return {m.a * p + m.b * q, m.c * p + m.d * q};
}

// First k in 1..limit with m^k = Id, or 0.
inline int iterated_order(const IMat& m, int limit = 24) {
  IMat acc = m;
  for (int k = 1; k <= limit; ++k) {
    if (acc == ident()) return k;
    acc = mul(acc, m);
  }
  return 0;
}

inline std::vector<IMat> sl2_box(int bound) {
  std::vector<IMat> out;
  for (long long a = -bound; a <= bound; ++a)
    for (long long b = -bound; b <= bound; ++b)
      for (long long c = -bound; c <= bound; ++c)
        for (long long d = -bound; d <= bound; ++d)
          if (a * d - b * c == 1) out.push_back({a, b, c, d});
  return out;
}

inline bool primitive(long long p, long long q) { return std::gcd(std::llabs(p), std::llabs(q)) == 1; }

// First D in the box (in sl2_box order) with D A_i D^-1 = B_i for all i.
inline std::optional<IMat> brute_sim_conjugator(const std::vector<IMat>& as, const std::vector<IMat>& bs,
                                                const std::vector<IMat>& box) {
  if (as.size() != bs.size()) return std::nullopt;
  for (const auto& d : box) {
    const IMat di = inv(d);
    bool ok = true;
    for (std::size_t i = 0; ok && i < as.size(); ++i) ok = mul(mul(d, as[i]), di) == bs[i];
    if (ok) return d;
  }
  return std::nullopt;
}

// tr(T_v T_{Cv} ... T_{C^{k-1} v}) by explicit multiplication.
inline long long orbit_trace(const IMat& c, long long p, long long q, int k) {
  IMat acc = ident();
  for (int i = 0; i < k; ++i) {
    acc = mul(acc, transvection(p, q));
    const auto next = apply(c, p, q);
    p = next[0];
    q = next[1];
  }
  return tr(acc);
}

// (x + y w)^6 + (x + y w-bar)^6 in floating point, rounded.
inline long long sixth_power_sum_complex(long long x, long long y) {
  const std::complex<long double> w(-0.5L, std::sqrt(3.0L) / 2.0L);
  const auto z = static_cast<long double>(x) + static_cast<long double>(y) * w;
  return std::llround(2.0L * std::pow(z, 6).real());
}

}  // namespace oracle
