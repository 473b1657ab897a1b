#pragma once

// 3-words: sorted 3 x N integer words whose columns (s, i, j) each record
// one unit of Gamma^s_{i-1, j-1}. They biject with cubical matrices.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qstar/matrices.hpp"
#include "qstar/parallel.hpp"

namespace qstar {

struct WordColumn {
  Count s = 0;
  Count i = 0;
  Count j = 0;

  friend bool operator==(const WordColumn&, const WordColumn&) = default;
  friend auto operator<=>(const WordColumn&, const WordColumn&) = default;
};

struct ThreeWord {
  std::vector<WordColumn> columns;

  std::size_t size() const { return columns.size(); }
  bool empty() const { return columns.empty(); }

  friend bool operator==(const ThreeWord&, const ThreeWord&) = default;
  friend auto operator<=>(const ThreeWord&, const ThreeWord&) = default;
};

/// First failed condition. `condition` names the rule ("1".."4" for the word
/// axioms, "i".."iv" and "size" for membership in A); `column` is the 1-based
/// index t of the offending column (0 when the rule is not columnwise).
struct WordViolation {
  std::string condition;
  std::size_t column = 0;
  std::string detail;
};

using WordCheck = std::optional<WordViolation>;

/// How the fourth ordering axiom is read.
enum class SortRule {
  /// j_t <= j_{t+1} whenever s_t = s_{t+1} and i_t = i_{t+1}: the columns are
  /// lexicographically sorted.
  Lexicographic,
  /// j_t <= j_{t+1} whenever i_t = i_{t+1}, regardless of s.
  Literal,
};

/// type^row(Omega) for row 1 (s), 2 (i) or 3 (j): entry v-1 counts the
/// occurrences of v, up to the row maximum. Throws InputError for other rows.
std::vector<Count> row_type(const ThreeWord& word, int row);

WordCheck validate_word(const ThreeWord& word, SortRule rule = SortRule::Lexicographic);

/// Membership in A(alpha, beta, n, m). Expects a valid word.
WordCheck in_a(const ThreeWord& word, const MultiIndex& alpha, const MultiIndex& beta,
               std::uint64_t n, std::uint64_t m);

/// Concatenates blocks of Gamma^k_ij copies of (k, i+1, j+1) in lexicographic
/// (k, i, j) order.
ThreeWord encode(const CubicalMatrix& gamma);

/// Inverse of encode. The shape defaults to the largest row/column indices
/// present (at least 1x1); an explicit shape must be large enough. Throws
/// InputError when the word is unsorted or places a unit on Gamma_00 or on the
/// boundary above level 0.
CubicalMatrix decode(const ThreeWord& word,
                     std::optional<std::pair<std::size_t, std::size_t>> shape = std::nullopt);

struct WordStats {
  std::size_t size = 0;       // N = |Gamma|
  std::size_t support = 0;    // s_N
  std::uint64_t weight = 0;   // m
  MultiIndex alpha;
  MultiIndex beta;

  friend bool operator==(const WordStats&, const WordStats&) = default;
};

/// Reads N, s, m and the margins off the word. With a shape, alpha and beta
/// are padded to lengths a and b.
WordStats word_stats(const ThreeWord& word,
                     std::optional<std::pair<std::size_t, std::size_t>> shape = std::nullopt);

/// A(alpha, beta, n, m), generated directly as sorted column multisets under
/// the type and weight constraints; sorted lexicographically.
std::vector<ThreeWord> enumerate_a(const MultiIndex& alpha, const MultiIndex& beta,
                                   std::uint64_t n, std::uint64_t m, Parallelism par = {});

/// "(0,3,3);(1,2,2);(1,2,3)"; the empty word is "".
std::string to_string(const ThreeWord& word);
/// Accepts the single-line triple list or three newline-separated rows of
/// comma-separated integers.
ThreeWord parse_word(std::string_view text);

}  // namespace qstar
