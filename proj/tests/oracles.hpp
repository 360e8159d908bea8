#pragma once

// Test-only reference computations, deliberately taking different routes from
// the library: Weyl-reflection orbits instead of root strings, float arctangent
// sums instead of Gaussian products, Chern-character expansions instead of
// eigenvalue products.

#include "dhymlab/phase.hpp"

#include <cmath>
#include <set>
#include <vector>

namespace oracle {

using dhymlab::CartanMatrix;
using dhymlab::Rational;

// Positive roots as the positive part of the Weyl orbit of the simple roots.
inline std::set<std::vector<int>> positive_roots_by_reflection(const CartanMatrix& c) {
  const std::size_t n = c.size();
  std::set<std::vector<int>> all, frontier;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    frontier.insert(e);
  }
  all = frontier;
  while (!frontier.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& b : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        int p = 0;  // <b, alpha_i^vee>
        for (std::size_t j = 0; j < n; ++j) p += b[j] * c[i][j];
        auto r = b;
        r[i] -= p;
        if (all.insert(r).second) next.insert(r);
      }
    }
    frontier = std::move(next);
  }
  std::set<std::vector<int>> pos;
  for (const auto& r : all) {
    bool nonneg = true;
    for (int m : r) nonneg = nonneg && m >= 0;
    if (nonneg) pos.insert(r);
  }
  return pos;
}

inline double arctan_sum(const std::vector<Rational>& q) {
  double s = 0;
  for (const auto& x : q) s += std::atan(x.to_double());
  return s;
}

// Elementary symmetric polynomial e_k by subset enumeration.
inline Rational elementary_symmetric(const std::vector<Rational>& q, std::size_t k) {
  Rational total = 0;
  const std::size_t n = q.size();
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) != k) continue;
    Rational p = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1UL << i)) p *= q[i];
    total += p;
  }
  return total;
}

inline Rational binomial(std::size_t n, std::size_t k) {
  return Rational(dhymlab::factorial(n)) / Rational(dhymlab::Integer(dhymlab::factorial(k) * dhymlab::factorial(n - k)));
}

// Z = -sum_j (-i)^j / j! int omega^j ch_{n-j}, with ch_k = chi^k / k! and the
// mixed intersection int omega^{n-k} chi^k = n! Vol e_k(q) / C(n, k).
inline dhymlab::GaussianRational central_charge_by_chern_character(const std::vector<Rational>& q, const Rational& vol) {
  const std::size_t n = q.size();
  dhymlab::GaussianRational z{0, 0};
  dhymlab::GaussianRational minus_i_pow{1, 0};
  const dhymlab::GaussianRational minus_i{0, -1};
  for (std::size_t j = 0; j <= n; ++j) {
    const std::size_t k = n - j;
    Rational mixed = Rational(dhymlab::factorial(n)) * vol * elementary_symmetric(q, k) / binomial(n, k);
    Rational coeff = mixed / Rational(dhymlab::Integer(dhymlab::factorial(j) * dhymlab::factorial(k)));
    z -= coeff * minus_i_pow;
    minus_i_pow = minus_i_pow * minus_i;
  }
  return z;
}

} // namespace oracle
