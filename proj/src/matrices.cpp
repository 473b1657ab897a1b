#include "qstar/matrices.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "qstar/error.hpp"

namespace qstar {

namespace {

// Parses a ','-separated list of unsigned integers starting at byte `base`.
std::vector<Count> parse_counts(std::string_view text, std::size_t base) {
  std::vector<Count> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string_view field = text.substr(pos, end - pos);
    Count value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      const std::size_t bad = field.empty() ? pos : pos + static_cast<std::size_t>(ptr - field.data());
      throw ParseError(field.starts_with('-') ? "negative entry" : "expected nonnegative integer",
                       base + bad);
    }
    out.push_back(value);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

// Splits "r0;r1;..." into rows and checks they are rectangular.
std::vector<std::vector<Count>> parse_rows(std::string_view text, std::size_t base) {
  std::vector<std::vector<Count>> rows;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    rows.push_back(parse_counts(text.substr(pos, end - pos), base + pos));
    if (rows.back().size() != rows.front().size()) {
      throw ParseError("ragged matrix rows", base + pos);
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (rows.size() < 2 || rows.front().size() < 2) {
    throw ParseError("matrix must be at least 2x2", base);
  }
  return rows;
}

std::string join_counts(const Count* first, const Count* last) {
  std::string out;
  for (const Count* it = first; it != last; ++it) {
    if (it != first) out += ',';
    out += std::to_string(*it);
  }
  return out;
}

std::string level_to_string(const std::vector<Count>& level, std::size_t b) {
  std::string out;
  for (std::size_t row = 0; row * (b + 1) < level.size(); ++row) {
    if (row > 0) out += ';';
    const Count* first = level.data() + row * (b + 1);
    out += join_counts(first, first + b + 1);
  }
  return out;
}

}  // namespace

std::uint64_t MultiIndex::weight() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

MultiIndex parse_multi_index(std::string_view text) { return MultiIndex(parse_counts(text, 0)); }

std::string to_string(const MultiIndex& index) {
  return join_counts(index.entries().data(), index.entries().data() + index.size());
}

MarginMatrix::MarginMatrix(std::size_t a, std::size_t b)
    : a_(a), b_(b), entries_((a + 1) * (b + 1), 0) {}

MarginMatrix::MarginMatrix(std::size_t a, std::size_t b, std::vector<Count> entries)
    : a_(a), b_(b), entries_(std::move(entries)) {
  if (entries_.size() != (a + 1) * (b + 1)) {
    throw InputError("margin matrix needs (a+1)*(b+1) entries");
  }
  if (entries_[0] != 0) throw InputError("margin matrix entry (0,0) must be 0");
}

std::uint64_t MarginMatrix::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

std::uint64_t MarginMatrix::interior_total() const {
  std::uint64_t out = 0;
  for (std::size_t i = 1; i <= a_; ++i)
    for (std::size_t j = 1; j <= b_; ++j) out += at(i, j);
  return out;
}

std::uint64_t MarginMatrix::row_sum(std::size_t i) const {
  std::uint64_t out = 0;
  for (std::size_t j = 0; j <= b_; ++j) out += at(i, j);
  return out;
}

std::uint64_t MarginMatrix::col_sum(std::size_t j) const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i <= a_; ++i) out += at(i, j);
  return out;
}

bool MarginMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Count c) { return c == 0; });
}

std::string to_string(const MarginMatrix& gamma) { return level_to_string(gamma.entries(), gamma.b()); }

MarginMatrix parse_margin_matrix(std::string_view text) {
  auto rows = parse_rows(text, 0);
  const std::size_t a = rows.size() - 1;
  const std::size_t b = rows.front().size() - 1;
  std::vector<Count> entries;
  for (const auto& row : rows) entries.insert(entries.end(), row.begin(), row.end());
  return MarginMatrix(a, b, std::move(entries));
}

CubicalMatrix::CubicalMatrix(std::size_t a, std::size_t b) : a_(a), b_(b) {}

CubicalMatrix::CubicalMatrix(std::size_t a, std::size_t b, std::vector<std::vector<Count>> levels)
    : a_(a), b_(b), levels_(std::move(levels)) {
  const std::size_t cells = (a + 1) * (b + 1);
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    const auto& level = levels_[k];
    if (level.size() != cells) throw InputError("cubical level needs (a+1)*(b+1) entries");
    if (level[0] != 0) throw InputError("Gamma^k_00 must be 0");
    if (k == 0) continue;
    for (std::size_t j = 0; j <= b; ++j) {
      if (level[j] != 0) throw InputError("row 0 must vanish above level 0");
    }
    for (std::size_t i = 0; i <= a; ++i) {
      if (level[i * (b + 1)] != 0) throw InputError("column 0 must vanish above level 0");
    }
  }
  trim();
}

CubicalMatrix CubicalMatrix::from_classical(const MarginMatrix& gamma) {
  return CubicalMatrix(gamma.a(), gamma.b(), {gamma.entries()});
}

void CubicalMatrix::trim() {
  while (!levels_.empty() &&
         std::all_of(levels_.back().begin(), levels_.back().end(), [](Count c) { return c == 0; })) {
    levels_.pop_back();
  }
}

Count CubicalMatrix::at(std::size_t k, std::size_t i, std::size_t j) const {
  if (k >= levels_.size()) return 0;
  return levels_[k][i * (b_ + 1) + j];
}

std::uint64_t CubicalMatrix::size() const {
  std::uint64_t out = 0;
  for (const auto& level : levels_) out = std::accumulate(level.begin(), level.end(), out);
  return out;
}

std::uint64_t CubicalMatrix::weight() const {
  std::uint64_t out = 0;
  for (std::size_t k = 1; k < levels_.size(); ++k) {
    out += k * std::accumulate(levels_[k].begin(), levels_[k].end(), std::uint64_t{0});
  }
  return out;
}

std::uint64_t CubicalMatrix::row_sum(std::size_t i) const {
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < levels_.size(); ++k)
    for (std::size_t j = 0; j <= b_; ++j) out += at(k, i, j);
  return out;
}

std::uint64_t CubicalMatrix::col_sum(std::size_t j) const {
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < levels_.size(); ++k)
    for (std::size_t i = 0; i <= a_; ++i) out += at(k, i, j);
  return out;
}

std::string to_string(const CubicalMatrix& gamma) {
  if (gamma.is_zero()) {
    return level_to_string(std::vector<Count>((gamma.a() + 1) * (gamma.b() + 1), 0), gamma.b());
  }
  std::string out;
  for (std::size_t k = 0; k < gamma.level_count(); ++k) {
    if (k > 0) out += '|';
    out += level_to_string(gamma.levels()[k], gamma.b());
  }
  return out;
}

CubicalMatrix parse_cubical_matrix(std::string_view text) {
  std::vector<std::vector<Count>> levels;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find('|', pos), text.size());
    auto rows = parse_rows(text.substr(pos, end - pos), pos);
    if (levels.empty()) {
      a = rows.size() - 1;
      b = rows.front().size() - 1;
    } else if (rows.size() != a + 1 || rows.front().size() != b + 1) {
      throw ParseError("levels differ in shape", pos);
    }
    std::vector<Count> level;
    for (const auto& row : rows) level.insert(level.end(), row.begin(), row.end());
    levels.push_back(std::move(level));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return CubicalMatrix(a, b, std::move(levels));
}

}  // namespace qstar
