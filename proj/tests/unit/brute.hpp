#pragma once

// Test-side oracles: plain filters over bounded boxes, sharing no search code
// with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "qstar/matrices.hpp"

namespace brute {

using qstar::Count;

// Calls visit(values) for every vector with 0 <= values[t] <= bound[t].
inline void odometer(const std::vector<Count>& bound, const std::function<void(const std::vector<Count>&)>& visit) {
  std::vector<Count> values(bound.size(), 0);
  while (true) {
    visit(values);
    std::size_t t = 0;
    while (t < values.size() && values[t] == bound[t]) values[t++] = 0;
    if (t == values.size()) return;
    ++values[t];
  }
}

// Every matrix with gamma_00 = 0, entries <= n, the row/column margins and
// total <= n.
inline std::set<qstar::MarginMatrix> l_set(const qstar::MultiIndex& alpha, const qstar::MultiIndex& beta,
                                           std::uint64_t n) {
  const std::size_t a = alpha.size(), b = beta.size();
  std::vector<Count> bound((a + 1) * (b + 1), static_cast<Count>(n));
  bound[0] = 0;
  std::set<qstar::MarginMatrix> out;
  odometer(bound, [&](const std::vector<Count>& v) {
    std::uint64_t total = 0;
    for (Count x : v) total += x;
    if (total > n) return;
    for (std::size_t i = 1; i <= a; ++i) {
      std::uint64_t row = 0;
      for (std::size_t j = 0; j <= b; ++j) row += v[i * (b + 1) + j];
      if (row != alpha[i - 1]) return;
    }
    for (std::size_t j = 1; j <= b; ++j) {
      std::uint64_t col = 0;
      for (std::size_t i = 0; i <= a; ++i) col += v[i * (b + 1) + j];
      if (col != beta[j - 1]) return;
    }
    out.insert(qstar::MarginMatrix(a, b, v));
  });
  return out;
}

// Q(alpha, beta, n, m) as a filter: boundary cells on level 0 only, every
// interior cell on levels 0..m, each variable bounded by its margin.
inline std::set<qstar::CubicalMatrix> q_set(const qstar::MultiIndex& alpha, const qstar::MultiIndex& beta,
                                            std::uint64_t n, std::uint64_t m) {
  const std::size_t a = alpha.size(), b = beta.size();
  const std::size_t cells = (a + 1) * (b + 1);
  const std::size_t levels = m + 1;
  // variable (k, i, j) -> index k * cells + i * (b+1) + j
  std::vector<Count> bound(levels * cells, 0);
  for (std::size_t k = 0; k < levels; ++k) {
    for (std::size_t i = 0; i <= a; ++i) {
      for (std::size_t j = 0; j <= b; ++j) {
        if (i == 0 && j == 0) continue;
        if (k > 0 && (i == 0 || j == 0)) continue;
        if (k > 0 && k > m) continue;
        Count cap = static_cast<Count>(n);
        if (i > 0) cap = std::min(cap, alpha[i - 1]);
        if (j > 0) cap = std::min(cap, beta[j - 1]);
        // a unit at level k costs k of the weight
        if (k > 0) cap = std::min<Count>(cap, static_cast<Count>(m / k));
        bound[k * cells + i * (b + 1) + j] = cap;
      }
    }
  }
  std::set<qstar::CubicalMatrix> out;
  odometer(bound, [&](const std::vector<Count>& v) {
    std::uint64_t total = 0, weight = 0;
    for (std::size_t k = 0; k < levels; ++k) {
      for (std::size_t c = 0; c < cells; ++c) {
        total += v[k * cells + c];
        weight += k * v[k * cells + c];
      }
    }
    if (total > n || weight != m) return;
    for (std::size_t i = 1; i <= a; ++i) {
      std::uint64_t row = 0;
      for (std::size_t k = 0; k < levels; ++k)
        for (std::size_t j = 0; j <= b; ++j) row += v[k * cells + i * (b + 1) + j];
      if (row != alpha[i - 1]) return;
    }
    for (std::size_t j = 1; j <= b; ++j) {
      std::uint64_t col = 0;
      for (std::size_t k = 0; k < levels; ++k)
        for (std::size_t i = 0; i <= a; ++i) col += v[k * cells + i * (b + 1) + j];
      if (col != beta[j - 1]) return;
    }
    std::vector<std::vector<Count>> lv;
    for (std::size_t k = 0; k < levels; ++k) lv.emplace_back(v.begin() + k * cells, v.begin() + (k + 1) * cells);
    out.insert(qstar::CubicalMatrix(a, b, lv));
  });
  return out;
}

// Number of nonzero interior entries.
inline std::size_t f_gamma(const qstar::MarginMatrix& gamma) {
  std::size_t count = 0;
  for (std::size_t i = 1; i <= gamma.a(); ++i)
    for (std::size_t j = 1; j <= gamma.b(); ++j) count += gamma.at(i, j) != 0;
  return count;
}

inline mpz_class factorial(unsigned long k) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

// d! f! / ((d-k)! (f-k)! k!) -- the k-th Moyal coefficient via factorials.
inline mpz_class moyal_coefficient(unsigned long d, unsigned long f, unsigned long k) {
  return factorial(d) * factorial(f) / (factorial(d - k) * factorial(f - k) * factorial(k));
}

}  // namespace brute
