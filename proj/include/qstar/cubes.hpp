#pragma once

// Cubical matrices Q(alpha, beta, n, m): enumeration, supports, smash,
// lifting, the truncation bounds and the integer-vector codecs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qstar/algebra.hpp"
#include "qstar/matrices.hpp"
#include "qstar/parallel.hpp"

namespace qstar {

/// Q(alpha, beta, n, m), sorted by CubicalMatrix ordering.
///
/// Direct backtracking over the cells Gamma^k_ij (k <= m) with margin, weight
/// and slack residuals. When `max_level` is set, only matrices of support at
/// most that level are produced.
std::vector<CubicalMatrix> enumerate_q(const MultiIndex& alpha, const MultiIndex& beta,
                                       std::uint64_t n, std::uint64_t m, Parallelism par = {},
                                       std::optional<std::size_t> max_level = std::nullopt);

/// Largest s with Gamma^s != 0. The zero matrix reports 0.
std::size_t support_level(const CubicalMatrix& gamma);

/// Levelwise sum.
MarginMatrix smash(const CubicalMatrix& gamma);

/// All Gamma of support exactly s and weight m whose smash is gamma: each
/// interior entry is split over levels 0..s, the boundary stays on level 0.
/// Requires s <= m.
std::vector<CubicalMatrix> lift(const MarginMatrix& gamma, std::size_t s, std::uint64_t m);

/// Disjoint union of lift(gamma, s, m) over gamma in L(alpha, beta, n) and
/// s = 0..m (capped at `max_level`), sorted like enumerate_q.
std::vector<CubicalMatrix> lift_all(const MultiIndex& alpha, const MultiIndex& beta,
                                    std::uint64_t n, std::uint64_t m, Parallelism par = {},
                                    std::optional<std::size_t> max_level = std::nullopt);

/// S = ceil((l(B) - (a+b)) / ab) - 1.
///
/// This is a ceiling of the mean block length, so it only bounds the support
/// of contributing matrices when every pair has the same depth K_ij; see
/// max_contributing_support for the bound that always holds.
std::size_t max_support(const std::vector<Monomial2>& p, const std::vector<Monomial2>& q);

/// M = S * max_{gamma in L} sum_{i,j >= 1} gamma_ij.
std::uint64_t max_order(const MultiIndex& alpha, const MultiIndex& beta, std::uint64_t n,
                        std::size_t support);

/// max_ij K_ij: a unit on level k of cell (i,j) yields a zero term unless
/// k <= K_ij.
std::size_t max_contributing_support(const BTable& btable);

/// max_{gamma in L} sum_ij K_ij gamma_ij.
std::uint64_t max_contributing_order(const MultiIndex& alpha, const MultiIndex& beta,
                                     std::uint64_t n, const BTable& btable);

// Vector codecs. Both layouts start with the boundary prefix
// (Gamma_10..Gamma_a0, Gamma_01..Gamma_0b).

/// Then each level k = 0..L-1 row-major over the interior, where L is the
/// larger of `min_levels` and the number of stored levels.
std::vector<Count> to_vector_by_level(const CubicalMatrix& gamma, std::size_t min_levels = 1);
CubicalMatrix from_vector_by_level(std::span<const Count> vec, std::size_t a, std::size_t b);

/// Then each pair (i,j) row-major with entries k = 0..K_ij, aligned with the
/// flat order of B(p,q). Matrices holding a unit above K_ij have no image and
/// raise InputError.
std::vector<Count> to_vector_by_pair(const CubicalMatrix& gamma, const BTable& btable);
CubicalMatrix from_vector_by_pair(std::span<const Count> vec, const BTable& btable);

/// "(0, 0, 1, 0)"
std::string format_vector(std::span<const Count> vec);
/// Accepts "0,0,1" or "(0, 0, 1)".
std::vector<Count> parse_vector(std::string_view text);

}  // namespace qstar
