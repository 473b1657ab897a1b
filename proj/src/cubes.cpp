#include "qstar/cubes.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "qstar/error.hpp"
#include "qstar/tables.hpp"

namespace qstar {

namespace {

// Backtracking over Gamma^k_ij for interior (i,j) and k = 0..top. Within a
// cell the levels are visited top-down so that the weight residual prunes
// early; level 0 absorbs whatever the margins still allow.
class QSearch {
 public:
  QSearch(const MultiIndex& alpha, const MultiIndex& beta, std::uint64_t n, std::uint64_t m,
          std::size_t top)
      : a_(alpha.size()),
        b_(beta.size()),
        top_(top),
        row_res_(alpha.entries()),
        col_res_(beta.entries()),
        weight_res_(m),
        levels_(top + 1, std::vector<Count>((alpha.size() + 1) * (beta.size() + 1), 0)) {
    const std::uint64_t margins = alpha.weight() + beta.weight();
    min_interior_ = margins > n ? margins - n : 0;
  }

  std::size_t variable_count() const { return a_ * b_ * (top_ + 1); }

  Count bound(std::size_t var) const {
    const std::size_t cell = var / (top_ + 1);
    const std::size_t k = level_of(var);
    std::uint64_t out = std::min(row_res_[cell / b_], col_res_[cell % b_]);
    if (k > 0) out = std::min<std::uint64_t>(out, weight_res_ / k);
    return static_cast<Count>(out);
  }

  std::vector<CubicalMatrix> run_with_first(Count first) {
    std::vector<CubicalMatrix> out;
    if (!viable(0, 0)) return out;
    place(0, first);
    descend(1, first, out);
    return out;
  }

 private:
  std::size_t level_of(std::size_t var) const { return top_ - var % (top_ + 1); }

  std::size_t index(std::size_t i, std::size_t j) const { return i * (b_ + 1) + j; }

  void place(std::size_t var, Count value) {
    const std::size_t cell = var / (top_ + 1);
    const std::size_t i = cell / b_;
    const std::size_t j = cell % b_;
    const std::size_t k = level_of(var);
    levels_[k][index(i + 1, j + 1)] = value;
    row_res_[i] -= value;
    col_res_[j] -= value;
    weight_res_ -= std::uint64_t{k} * value;
  }

  void unplace(std::size_t var, Count value) {
    const std::size_t cell = var / (top_ + 1);
    const std::size_t i = cell / b_;
    const std::size_t j = cell % b_;
    const std::size_t k = level_of(var);
    levels_[k][index(i + 1, j + 1)] = 0;
    row_res_[i] += value;
    col_res_[j] += value;
    weight_res_ += std::uint64_t{k} * value;
  }

  std::uint64_t capacity(std::size_t cell) const {
    std::uint64_t rows = 0;
    for (std::size_t r = cell / b_; r < a_; ++r) rows += row_res_[r];
    const std::uint64_t cols = std::accumulate(col_res_.begin(), col_res_.end(), std::uint64_t{0});
    return std::min(rows, cols);
  }

  // Checked whenever a new cell starts.
  bool viable(std::size_t cell, std::uint64_t interior) const {
    const std::uint64_t cap = cell < a_ * b_ ? capacity(cell) : 0;
    if (interior + cap < min_interior_) return false;
    return weight_res_ <= top_ * cap;
  }

  void descend(std::size_t var, std::uint64_t interior, std::vector<CubicalMatrix>& out) {
    if (var % (top_ + 1) == 0 && !viable(var / (top_ + 1), interior)) return;
    if (var == variable_count()) {
      auto levels = levels_;
      for (std::size_t i = 0; i < a_; ++i) levels[0][index(i + 1, 0)] = row_res_[i];
      for (std::size_t j = 0; j < b_; ++j) levels[0][index(0, j + 1)] = col_res_[j];
      out.emplace_back(a_, b_, std::move(levels));
      return;
    }
    const Count hi = bound(var);
    for (Count v = 0; v <= hi; ++v) {
      place(var, v);
      descend(var + 1, interior + v, out);
      unplace(var, v);
    }
  }

  std::size_t a_;
  std::size_t b_;
  std::size_t top_;
  std::vector<Count> row_res_;
  std::vector<Count> col_res_;
  std::uint64_t weight_res_;
  std::vector<std::vector<Count>> levels_;
  std::uint64_t min_interior_ = 0;
};

// Splits the interior units of gamma over levels 0..s, producing every
// assignment of total weight m.
class LiftSearch {
 public:
  LiftSearch(const MarginMatrix& gamma, std::size_t s, std::uint64_t m)
      : gamma_(gamma), s_(s), weight_res_(m), levels_(s + 1, gamma.entries()) {
    for (std::size_t k = 1; k <= s; ++k) std::fill(levels_[k].begin(), levels_[k].end(), 0);
    for (std::size_t i = 1; i <= gamma.a(); ++i)
      for (std::size_t j = 1; j <= gamma.b(); ++j)
        if (gamma.at(i, j) != 0) cells_.push_back(i * (gamma.b() + 1) + j);
    remaining_units_ = gamma.interior_total();
  }

  std::vector<CubicalMatrix> run() {
    std::vector<CubicalMatrix> out;
    split_cell(0, out);
    return out;
  }

 private:
  void split_cell(std::size_t c, std::vector<CubicalMatrix>& out) {
    if (weight_res_ > s_ * remaining_units_) return;
    if (c == cells_.size()) {
      if (weight_res_ == 0 && std::any_of(levels_[s_].begin(), levels_[s_].end(), [](Count v) { return v; })) {
        out.emplace_back(gamma_.a(), gamma_.b(), levels_);
      }
      return;
    }
    const Count units = levels_[0][cells_[c]];
    remaining_units_ -= units;
    distribute(c, s_, units, out);
    remaining_units_ += units;
  }

  // Moves units of cell c from level 0 up to levels k, k-1, ..., 1.
  void distribute(std::size_t c, std::size_t k, Count free, std::vector<CubicalMatrix>& out) {
    if (k == 0) {
      split_cell(c + 1, out);
      return;
    }
    const std::size_t cell = cells_[c];
    const Count hi = static_cast<Count>(std::min<std::uint64_t>(free, weight_res_ / k));
    for (Count v = 0; v <= hi; ++v) {
      levels_[k][cell] = v;
      levels_[0][cell] -= v;
      weight_res_ -= std::uint64_t{k} * v;
      distribute(c, k - 1, free - v, out);
      weight_res_ += std::uint64_t{k} * v;
      levels_[0][cell] += v;
      levels_[k][cell] = 0;
    }
  }

  const MarginMatrix& gamma_;
  std::size_t s_;
  std::uint64_t weight_res_;
  std::uint64_t remaining_units_ = 0;
  std::vector<std::vector<Count>> levels_;
  std::vector<std::size_t> cells_;
};

std::size_t effective_top(std::uint64_t m, std::optional<std::size_t> max_level) {
  std::uint64_t top = m;
  if (max_level) top = std::min<std::uint64_t>(top, *max_level);
  return static_cast<std::size_t>(top);
}

}  // namespace

std::vector<CubicalMatrix> enumerate_q(const MultiIndex& alpha, const MultiIndex& beta,
                                       std::uint64_t n, std::uint64_t m, Parallelism par,
                                       std::optional<std::size_t> max_level) {
  check_margins(alpha, beta, n);
  const std::size_t top = effective_top(m, max_level);
  if (top == 0 && m > 0) return {};
  const Count first = QSearch(alpha, beta, n, m, top).bound(0);
  auto parts = parallel_map(std::size_t{first} + 1, par, [&](std::size_t v) {
    return QSearch(alpha, beta, n, m, top).run_with_first(static_cast<Count>(v));
  });
  std::vector<CubicalMatrix> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t support_level(const CubicalMatrix& gamma) {
  return gamma.is_zero() ? 0 : gamma.level_count() - 1;
}

MarginMatrix smash(const CubicalMatrix& gamma) {
  MarginMatrix out(gamma.a(), gamma.b());
  for (const auto& level : gamma.levels()) {
    for (std::size_t idx = 0; idx < level.size(); ++idx) out.at(idx / (gamma.b() + 1), idx % (gamma.b() + 1)) += level[idx];
  }
  return out;
}

std::vector<CubicalMatrix> lift(const MarginMatrix& gamma, std::size_t s, std::uint64_t m) {
  if (s > m) {
    throw InputError("lift level " + std::to_string(s) + " exceeds weight " + std::to_string(m));
  }
  if (s == 0) {
    if (m != 0) return {};
    return {CubicalMatrix::from_classical(gamma)};
  }
  auto out = LiftSearch(gamma, s, m).run();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CubicalMatrix> lift_all(const MultiIndex& alpha, const MultiIndex& beta,
                                    std::uint64_t n, std::uint64_t m, Parallelism par,
                                    std::optional<std::size_t> max_level) {
  const auto classical = enumerate_l(alpha, beta, n, par);
  const std::size_t top = effective_top(m, max_level);
  auto parts = parallel_map(classical.size(), par, [&](std::size_t idx) {
    std::vector<CubicalMatrix> lifted;
    for (std::size_t s = 0; s <= top; ++s) {
      auto level = lift(classical[idx], s, m);
      std::move(level.begin(), level.end(), std::back_inserter(lifted));
    }
    return lifted;
  });
  std::vector<CubicalMatrix> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t max_support(const std::vector<Monomial2>& p, const std::vector<Monomial2>& q) {
  const std::size_t blocks = b_length(p, q) - (p.size() + q.size());
  const std::size_t ab = p.size() * q.size();
  return (blocks + ab - 1) / ab - 1;
}

std::uint64_t max_order(const MultiIndex& alpha, const MultiIndex& beta, std::uint64_t n,
                        std::size_t support) {
  std::uint64_t widest = 0;
  for (const auto& gamma : enumerate_l(alpha, beta, n)) widest = std::max(widest, gamma.interior_total());
  return support * widest;
}

std::size_t max_contributing_support(const BTable& btable) { return btable.max_depth(); }

std::uint64_t max_contributing_order(const MultiIndex& alpha, const MultiIndex& beta,
                                     std::uint64_t n, const BTable& btable) {
  if (alpha.size() != btable.a() || beta.size() != btable.b()) {
    throw InputError("margins do not match the shape of B(p,q)");
  }
  std::uint64_t out = 0;
  for (const auto& gamma : enumerate_l(alpha, beta, n)) {
    std::uint64_t order = 0;
    for (std::size_t i = 1; i <= gamma.a(); ++i)
      for (std::size_t j = 1; j <= gamma.b(); ++j) order += btable.depth(i - 1, j - 1) * gamma.at(i, j);
    out = std::max(out, order);
  }
  return out;
}

namespace {

void push_boundary(const CubicalMatrix& gamma, std::vector<Count>& out) {
  for (std::size_t i = 1; i <= gamma.a(); ++i) out.push_back(gamma.at(0, i, 0));
  for (std::size_t j = 1; j <= gamma.b(); ++j) out.push_back(gamma.at(0, 0, j));
}

std::vector<std::vector<Count>> boundary_level(std::span<const Count> vec, std::size_t a, std::size_t b) {
  std::vector<std::vector<Count>> levels(1, std::vector<Count>((a + 1) * (b + 1), 0));
  for (std::size_t i = 1; i <= a; ++i) levels[0][i * (b + 1)] = vec[i - 1];
  for (std::size_t j = 1; j <= b; ++j) levels[0][j] = vec[a + j - 1];
  return levels;
}

}  // namespace

std::vector<Count> to_vector_by_level(const CubicalMatrix& gamma, std::size_t min_levels) {
  std::vector<Count> out;
  push_boundary(gamma, out);
  const std::size_t levels = std::max({min_levels, gamma.level_count(), std::size_t{1}});
  for (std::size_t k = 0; k < levels; ++k)
    for (std::size_t i = 1; i <= gamma.a(); ++i)
      for (std::size_t j = 1; j <= gamma.b(); ++j) out.push_back(gamma.at(k, i, j));
  return out;
}

CubicalMatrix from_vector_by_level(std::span<const Count> vec, std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw InputError("shape must be positive");
  const std::size_t ab = a * b;
  if (vec.size() < a + b + ab || (vec.size() - a - b) % ab != 0) {
    throw InputError("by-level vector of length " + std::to_string(vec.size()) +
                     " does not fit shape " + std::to_string(a) + "x" + std::to_string(b));
  }
  auto levels = boundary_level(vec, a, b);
  const std::size_t count = (vec.size() - a - b) / ab;
  levels.resize(count, std::vector<Count>((a + 1) * (b + 1), 0));
  std::size_t pos = a + b;
  for (std::size_t k = 0; k < count; ++k)
    for (std::size_t i = 1; i <= a; ++i)
      for (std::size_t j = 1; j <= b; ++j) levels[k][i * (b + 1) + j] = vec[pos++];
  return CubicalMatrix(a, b, std::move(levels));
}

std::vector<Count> to_vector_by_pair(const CubicalMatrix& gamma, const BTable& btable) {
  if (gamma.a() != btable.a() || gamma.b() != btable.b()) {
    throw InputError("matrix shape does not match B(p,q)");
  }
  std::vector<Count> out;
  push_boundary(gamma, out);
  for (std::size_t i = 1; i <= gamma.a(); ++i) {
    for (std::size_t j = 1; j <= gamma.b(); ++j) {
      const std::size_t depth = btable.depth(i - 1, j - 1);
      for (std::size_t k = 0; k <= depth; ++k) out.push_back(gamma.at(k, i, j));
      for (std::size_t k = depth + 1; k < gamma.level_count(); ++k) {
        if (gamma.at(k, i, j) != 0) {
          throw InputError("level " + std::to_string(k) + " of cell (" + std::to_string(i) + "," +
                           std::to_string(j) + ") lies beyond B(p,q)");
        }
      }
    }
  }
  return out;
}

CubicalMatrix from_vector_by_pair(std::span<const Count> vec, const BTable& btable) {
  if (vec.size() != btable.flat_length()) {
    throw InputError("by-pair vector of length " + std::to_string(vec.size()) + " but l(B) = " +
                     std::to_string(btable.flat_length()));
  }
  const std::size_t a = btable.a();
  const std::size_t b = btable.b();
  auto levels = boundary_level(vec, a, b);
  levels.resize(btable.max_depth() + 1, std::vector<Count>((a + 1) * (b + 1), 0));
  std::size_t pos = a + b;
  for (std::size_t i = 1; i <= a; ++i)
    for (std::size_t j = 1; j <= b; ++j)
      for (std::size_t k = 0; k <= btable.depth(i - 1, j - 1); ++k) levels[k][i * (b + 1) + j] = vec[pos++];
  return CubicalMatrix(a, b, std::move(levels));
}

std::string format_vector(std::span<const Count> vec) {
  std::string out = "(";
  for (std::size_t t = 0; t < vec.size(); ++t) {
    if (t > 0) out += ", ";
    out += std::to_string(vec[t]);
  }
  return out + ")";
}

std::vector<Count> parse_vector(std::string_view text) {
  std::size_t pos = 0;
  std::size_t end = text.size();
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError("unbalanced parenthesis", text.size());
    pos = 1;
    end = text.size() - 1;
  }
  std::vector<Count> out;
  while (pos < end) {
    while (pos < end && text[pos] == ' ') ++pos;
    const std::size_t start = pos;
    while (pos < end && text[pos] != ',') ++pos;
    std::size_t stop = pos;
    while (stop > start && text[stop - 1] == ' ') --stop;
    Count value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + stop, value);
    if (start == stop || ec != std::errc{} || ptr != text.data() + stop) {
      const bool negative = start < stop && text[start] == '-';
      throw ParseError(negative ? "negative entry" : "expected nonnegative integer", start);
    }
    out.push_back(value);
    if (pos < end) {
      ++pos;  // comma
      if (pos == end) throw ParseError("trailing comma", pos);
    }
  }
  return out;
}

}  // namespace qstar
