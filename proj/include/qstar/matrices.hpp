#pragma once

// Value types shared by the classical tables, the cubical matrices and the
// 3-word codec.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qstar {

using Count = std::uint32_t;

/// A margin vector alpha in N^a (or beta in N^b).
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<Count> entries) : entries_(entries) {}
  explicit MultiIndex(std::vector<Count> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Count operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Count>& entries() const { return entries_; }

  /// |alpha|
  std::uint64_t weight() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<Count> entries_;
};

/// "1,2,0" -> (1,2,0). Throws ParseError on anything else.
MultiIndex parse_multi_index(std::string_view text);
std::string to_string(const MultiIndex& index);

/// An (a+1) x (b+1) nonnegative integer matrix indexed from (0,0). Row 0 and
/// column 0 carry the unpaired q and p slots respectively.
class MarginMatrix {
 public:
  MarginMatrix() = default;
  /// Zero matrix.
  MarginMatrix(std::size_t a, std::size_t b);
  /// Row-major entries, (a+1)*(b+1) of them.
  MarginMatrix(std::size_t a, std::size_t b, std::vector<Count> entries);

  std::size_t a() const { return a_; }
  std::size_t b() const { return b_; }

  Count at(std::size_t i, std::size_t j) const { return entries_[i * (b_ + 1) + j]; }
  Count& at(std::size_t i, std::size_t j) { return entries_[i * (b_ + 1) + j]; }
  const std::vector<Count>& entries() const { return entries_; }

  /// |gamma|, the sum of all entries.
  std::uint64_t total() const;
  /// Sum over i in [a], j in [b].
  std::uint64_t interior_total() const;
  std::uint64_t row_sum(std::size_t i) const;
  std::uint64_t col_sum(std::size_t j) const;
  bool is_zero() const;

  friend bool operator==(const MarginMatrix&, const MarginMatrix&) = default;
  friend auto operator<=>(const MarginMatrix&, const MarginMatrix&) = default;

 private:
  std::size_t a_ = 0;
  std::size_t b_ = 0;
  std::vector<Count> entries_;
};

/// Rows separated by ';', entries by ','. "0,1,0;0,1,0;0,0,1"
std::string to_string(const MarginMatrix& gamma);
MarginMatrix parse_margin_matrix(std::string_view text);

/// A finite stack of (a+1) x (b+1) levels Gamma^0..Gamma^s. Levels above 0 may
/// only be nonzero in the interior, and trailing zero levels are trimmed.
class CubicalMatrix {
 public:
  CubicalMatrix() = default;
  /// Zero matrix (no stored levels).
  CubicalMatrix(std::size_t a, std::size_t b);
  /// Takes row-major levels; throws InputError on shape or boundary violations.
  CubicalMatrix(std::size_t a, std::size_t b, std::vector<std::vector<Count>> levels);

  /// Single-level embedding of a classical matrix.
  static CubicalMatrix from_classical(const MarginMatrix& gamma);

  std::size_t a() const { return a_; }
  std::size_t b() const { return b_; }
  std::size_t level_count() const { return levels_.size(); }
  const std::vector<std::vector<Count>>& levels() const { return levels_; }

  /// Gamma^k_ij, zero for k beyond the stored levels.
  Count at(std::size_t k, std::size_t i, std::size_t j) const;

  /// |Gamma|
  std::uint64_t size() const;
  /// m(Gamma) = sum k * Gamma^k_ij
  std::uint64_t weight() const;
  std::uint64_t row_sum(std::size_t i) const;
  std::uint64_t col_sum(std::size_t j) const;
  bool is_zero() const { return levels_.empty(); }

  friend bool operator==(const CubicalMatrix&, const CubicalMatrix&) = default;
  friend auto operator<=>(const CubicalMatrix&, const CubicalMatrix&) = default;

 private:
  void trim();

  std::size_t a_ = 0;
  std::size_t b_ = 0;
  std::vector<std::vector<Count>> levels_;
};

/// Levels separated by '|', each in the MarginMatrix notation. The zero
/// matrix renders as its single zero level.
std::string to_string(const CubicalMatrix& gamma);
CubicalMatrix parse_cubical_matrix(std::string_view text);

}  // namespace qstar
