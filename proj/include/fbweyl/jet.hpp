#pragma once

#include <cmath>

namespace fbweyl {

// Truncated Taylor jet carrying a value and its first two derivatives with
// respect to a single variable. Profile formulas are written as templates on
// the scalar type and instantiated with Jet<double> to obtain exact
// derivatives without finite differences.
template <typename T>
struct Jet {
  T v{0};
  T d1{0};
  T d2{0};

  constexpr Jet() = default;
  constexpr Jet(T value) : v(value) {}  // NOLINT: implicit constant lift
  constexpr Jet(T value, T first, T second) : v(value), d1(first), d2(second) {}

  static constexpr Jet variable(T x) { return Jet(x, T{1}, T{0}); }

  constexpr Jet& operator+=(const Jet& o) {
    v += o.v;
    d1 += o.d1;
    d2 += o.d2;
    return *this;
  }
  constexpr Jet& operator-=(const Jet& o) {
    v -= o.v;
    d1 -= o.d1;
    d2 -= o.d2;
    return *this;
  }
  constexpr Jet& operator*=(const Jet& o) { return *this = *this * o; }
  constexpr Jet& operator/=(const Jet& o) { return *this = *this / o; }

  friend constexpr Jet operator-(const Jet& a) { return {-a.v, -a.d1, -a.d2}; }
  friend constexpr Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend constexpr Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend constexpr Jet operator*(const Jet& a, const Jet& b) {
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1,
            a.d2 * b.v + T{2} * a.d1 * b.d1 + a.v * b.d2};
  }
  friend constexpr Jet operator/(const Jet& a, const Jet& b) {
    const T q = a.v / b.v;
    const T q1 = (a.d1 - q * b.d1) / b.v;
    const T q2 = (a.d2 - T{2} * q1 * b.d1 - q * b.d2) / b.v;
    return {q, q1, q2};
  }
  friend constexpr Jet operator+(const Jet& a, T b) { return {a.v + b, a.d1, a.d2}; }
  friend constexpr Jet operator+(T a, const Jet& b) { return b + a; }
  friend constexpr Jet operator-(const Jet& a, T b) { return {a.v - b, a.d1, a.d2}; }
  friend constexpr Jet operator-(T a, const Jet& b) { return {a - b.v, -b.d1, -b.d2}; }
  friend constexpr Jet operator*(const Jet& a, T b) { return {a.v * b, a.d1 * b, a.d2 * b}; }
  friend constexpr Jet operator*(T a, const Jet& b) { return b * a; }
  friend constexpr Jet operator/(const Jet& a, T b) { return {a.v / b, a.d1 / b, a.d2 / b}; }
  friend constexpr Jet operator/(T a, const Jet& b) { return Jet(a) / b; }
};

namespace detail {
// Chain rule for g(f) given g(f.v), g'(f.v), g''(f.v).
template <typename T>
constexpr Jet<T> compose(const Jet<T>& f, T g0, T g1, T g2) {
  return {g0, g1 * f.d1, g2 * f.d1 * f.d1 + g1 * f.d2};
}
}  // namespace detail

template <typename T>
Jet<T> sqrt(const Jet<T>& f) {
  using std::sqrt;
  const T s = sqrt(f.v);
  return detail::compose(f, s, T{0.5} / s, T{-0.25} / (s * f.v));
}

template <typename T>
Jet<T> log(const Jet<T>& f) {
  using std::log;
  return detail::compose(f, log(f.v), T{1} / f.v, T{-1} / (f.v * f.v));
}

template <typename T>
Jet<T> exp(const Jet<T>& f) {
  using std::exp;
  const T e = exp(f.v);
  return detail::compose(f, e, e, e);
}

template <typename T>
Jet<T> pow(const Jet<T>& f, T p) {
  using std::pow;
  return detail::compose(f, pow(f.v, p), p * pow(f.v, p - T{1}),
                         p * (p - T{1}) * pow(f.v, p - T{2}));
}

}  // namespace fbweyl
