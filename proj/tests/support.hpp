#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

// Test-side oracles, written independently of the library so that the
// closed forms, the DP recurrence and Monte Carlo can be checked against a
// plain re-statement of the protocol.

namespace oracle {

// Literal evaluation of the cost recurrence: start from the state after the
// C pre-equilibration CNOTs and apply `steps` further CNOT steps, each
// preceded by an equilibration.
inline std::vector<double> limit_recurrence(int C, double gamma, double p_up,
                                            int steps) {
  std::vector<double> p(static_cast<size_t>(C) + 1, 0.0);
  if (C == 0) {
    p[0] = 1.0;
  } else {
    p[0] = 1.0 - p_up;
    p[static_cast<size_t>(C)] = p_up;
  }
  for (int m = C; m < C + steps; ++m) {
    const double w = std::exp(-(m + 1.0) * gamma);
    const double q_up = w / (1.0 + w);
    std::vector<double> next(p.size() + 1, 0.0);
    for (size_t n = 0; n < p.size(); ++n) {
      next[n] += p[n] * (1.0 - q_up);
      next[n + 1] += p[n] * q_up;
    }
    p.swap(next);
  }
  return p;
}

inline double vec_mean(const std::vector<double>& p) {
  double acc = 0.0;
  for (size_t n = 0; n < p.size(); ++n) acc += static_cast<double>(n) * p[n];
  return acc;
}

inline double vec_variance(const std::vector<double>& p) {
  const double mu = vec_mean(p);
  double acc = 0.0;
  for (size_t n = 0; n < p.size(); ++n) {
    acc += (static_cast<double>(n) - mu) * (static_cast<double>(n) - mu) * p[n];
  }
  return acc;
}

// Exact fraction over __int128, enough headroom for the nested-sum identity
// at j <= 12, n <= 5 with r in {1/2, 2, 3/4}.
struct Rational {
  __int128 num = 0;
  __int128 den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    if (num == 0) den = 1;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  // denominators are reduced against each other before any product so the
  // intermediates stay inside __int128
  friend Rational operator+(const Rational& lhs, const Rational& rhs) {
    const __int128 g = gcd128(lhs.den, rhs.den);
    Rational out;
    out.num = lhs.num * (rhs.den / g) + rhs.num * (lhs.den / g);
    out.den = (lhs.den / g) * rhs.den;
    out.normalize();
    return out;
  }
  friend Rational operator-(const Rational& lhs, const Rational& rhs) {
    Rational neg = rhs;
    neg.num = -neg.num;
    return lhs + neg;
  }
  friend Rational operator*(const Rational& lhs, const Rational& rhs) {
    const __int128 g1 = gcd128(lhs.num, rhs.den);
    const __int128 g2 = gcd128(rhs.num, lhs.den);
    Rational out;
    out.num = (lhs.num / g1) * (rhs.num / g2);
    out.den = (lhs.den / g2) * (rhs.den / g1);
    out.normalize();
    return out;
  }
  friend Rational operator/(const Rational& lhs, const Rational& rhs) {
    if (rhs.num == 0) throw std::domain_error("Rational: divide by zero");
    Rational inv;
    inv.num = rhs.den;
    inv.den = rhs.num;
    inv.normalize();
    return lhs * inv;
  }
  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num == rhs.num && lhs.den == rhs.den;
  }

  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

}  // namespace oracle
