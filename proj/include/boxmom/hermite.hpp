#pragma once

#include <stdexcept>

namespace boxmom {

// Degree cap shared with the oscillator states. Keeps the recurrence exact
// to double precision and the factorial prefactors finite.
inline constexpr int hermite_max_degree = 30;

// Physicists' Hermite polynomial H_n(u) by the upward recurrence
// H_{n+1}(u) = 2 u H_n(u) - 2 n H_{n-1}(u).
inline double hermite(int n, double u) {
  if (n < 0 || n > hermite_max_degree)
    throw std::invalid_argument("hermite: degree must lie in [0, 30]");
  double prev = 1.0;  // H_0
  if (n == 0) return prev;
  double cur = 2.0 * u;  // H_1
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * u * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// n! as a double; exact for n <= 22 and within one ulp through the degree
// cap above, which is all the oscillator normalizations need.
inline double factorial(int n) {
  if (n < 0 || n > hermite_max_degree)
    throw std::invalid_argument("factorial: argument must lie in [0, 30]");
  double v = 1.0;
  for (int k = 2; k <= n; ++k) v *= k;
  return v;
}

}  // namespace boxmom
