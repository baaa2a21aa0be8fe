#pragma once

#include <stdexcept>

#include "boxmom/quadrature.hpp"

namespace boxmom {

struct SeriesResult {
  complex value{};
  int terms_used = 0;
  double tail_bound = 0.0;
};

// Bound on sum_{n >= M+1} env(n) for env nonnegative and nonincreasing on
// [M+1, inf): env(M+1) + integral_{M+1}^inf env(t) dt. The improper integral
// is mapped onto (0, 1] via t = (M+1)/u, which is smooth for the polynomial
// envelopes used here.
template <class Env>
double one_sided_tail_bound(Env&& env, int M) {
  const double m1 = M + 1.0;
  auto mapped = [&](double u) { return env(m1 / u) * m1 / (u * u); };
  QuadratureOptions opt;
  opt.rel_tol = 1e-9;
  opt.abs_tol = 1e-300;
  const QuadratureResult r = adaptive_quadrature(mapped, 0.0, 1.0, opt);
  return env(m1) + r.value.real();
}

// Partial sum of term(n) over n in [-M, M] plus a rigorous bound on the
// omitted |n| > M mass by integral comparison against the (two-sided)
// envelope. Terms are accumulated outside-in so the small ones are not
// swamped by the large central ones.
template <class Term, class Env>
SeriesResult sum_symmetric_series(Term&& term, int M, Env&& envelope) {
  if (M < 0) throw std::invalid_argument("sum_symmetric_series: M must be >= 0");
  SeriesResult out;
  complex acc{};
  for (int n = M; n >= 1; --n) acc += complex(term(n)) + complex(term(-n));
  acc += complex(term(0));
  out.value = acc;
  out.terms_used = 2 * M + 1;
  out.tail_bound = 2.0 * one_sided_tail_bound(envelope, M);
  return out;
}

}  // namespace boxmom
