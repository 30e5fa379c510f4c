#pragma once

#include <cstdint>
#include <stdexcept>

// q-series building blocks for the closed-form spinlabor distributions.

namespace spinres {

// (a; q)_n = prod_{k=0}^{n-1} (1 - a q^k).  (a; q)_0 = 1 for any a, q.
double q_pochhammer(double a, double q, long long n);

// (a; q)_inf for |q| < 1.  The product is truncated once |a q^k| < 1e-16.
// Throws std::domain_error when |q| >= 1 (the infinite product diverges).
double q_pochhammer_inf(double a, double q);

// log (a; q)_inf accumulated as log1p(-a q^k) terms.  Stable when q is close
// to 1 and the direct product would lose precision factor by factor; requires
// every factor 1 - a q^k to be positive.
double log_q_pochhammer_inf(double a, double q);

// The coefficients that close the spinlabor recurrence are n-fold nested
// geometric sums over strictly decreasing index tuples drawn from
// {0, ..., j-1}, i.e. elementary symmetric polynomials in 1, r, ..., r^{j-1}.
// Two independent routes are kept: the literal nested sum (exponential cost,
// guarded, used for cross-checking) and the telescoped product form.  Both
// are templated so they can run over exact rational types as well as double.

// prod_{k=0}^{n-1} (r^k - r^j) / (1 - r^{k+1}), with the empty product = 1.
// Requires j >= n >= 0 and r != 1.
template <typename T>
T product_A(long long j, long long n, T r) {
  if (n < 0 || j < n) {
    throw std::domain_error("product_A: need j >= n >= 0");
  }
  T rj(1);
  for (long long i = 0; i < j; ++i) rj = rj * r;
  T acc(1);
  T rk(1);  // r^k
  for (long long k = 0; k < n; ++k) {
    const T rk1 = rk * r;  // r^{k+1}
    acc = acc * (rk - rj) / (T(1) - rk1);
    rk = rk1;
  }
  return acc;
}

namespace detail {

template <typename T>
void nested_sum_descend(long long depth, long long n, long long lo,
                        long long hi, T running, const T* powers, T& total) {
  if (depth == n) {
    total = total + running;
    return;
  }
  // index at this depth runs from n-1-depth up to one below its outer neighbor
  for (long long i = lo; i <= hi; ++i) {
    nested_sum_descend(depth + 1, n, n - 2 - depth, i - 1,
                       running * powers[i], powers, total);
  }
}

}  // namespace detail

// Literal evaluation of the n-fold nested sum
//   sum_{i1=n-1}^{j-1} sum_{i2=n-2}^{i1-1} ... sum_{in=0}^{i_{n-1}-1}
//       r^{i1 + i2 + ... + in}.
// Exponential in n, so inputs are capped at n <= 8, j <= 24.
template <typename T>
T nested_sum_A_bruteforce(long long j, long long n, T r) {
  if (n < 0 || j < n) {
    throw std::domain_error("nested_sum_A_bruteforce: need j >= n >= 0");
  }
  if (n > 8 || j > 24) {
    throw std::invalid_argument(
        "nested_sum_A_bruteforce: inputs capped at n <= 8, j <= 24");
  }
  if (n == 0) return T(1);
  T powers[25];
  powers[0] = T(1);
  for (long long i = 1; i < j; ++i) powers[i] = powers[i - 1] * r;
  T total(0);
  detail::nested_sum_descend<T>(0, n, n - 1, j - 1, T(1), powers, total);
  return total;
}

}  // namespace spinres
