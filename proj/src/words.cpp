#include "qstar/words.hpp"

#include <algorithm>
#include <numeric>

#include "qstar/cubes.hpp"
#include "qstar/error.hpp"
#include "qstar/tables.hpp"

namespace qstar {

namespace {

Count row_value(const WordColumn& col, int row) {
  switch (row) {
    case 1:
      return col.s;
    case 2:
      return col.i;
    case 3:
      return col.j;
    default:
      throw InputError("3-word rows are numbered 1..3");
  }
}

WordViolation violation(std::string condition, std::size_t column, std::string detail) {
  return WordViolation{std::move(condition), column, std::move(detail)};
}

std::vector<Count> pad(std::vector<Count> type, std::size_t length) {
  if (type.size() < length) type.resize(length, 0);
  return type;
}

std::string format_counts(const std::vector<Count>& v) { return format_vector(v); }

// Rules (i) and (ii) of A, which are also what decode needs.
WordCheck structural_check(const ThreeWord& word) {
  for (std::size_t t = 0; t < word.size(); ++t) {
    const auto& col = word.columns[t];
    if (col.i == col.j && col.i == 1) {
      return violation("i", t + 1, "column (" + std::to_string(col.s) + ",1,1) would fill Gamma_00");
    }
    if (col.s > 0 && (col.i <= 1 || col.j <= 1)) {
      return violation("ii", t + 1, "positive level on the boundary row or column");
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Count> row_type(const ThreeWord& word, int row) {
  if (row < 1 || row > 3) throw InputError("3-word rows are numbered 1..3");
  Count top = 0;
  for (const auto& col : word.columns) top = std::max(top, row_value(col, row));
  std::vector<Count> out(top, 0);
  for (const auto& col : word.columns) {
    const Count v = row_value(col, row);
    if (v > 0) ++out[v - 1];
  }
  return out;
}

WordCheck validate_word(const ThreeWord& word, SortRule rule) {
  for (std::size_t t = 0; t < word.size(); ++t) {
    const auto& col = word.columns[t];
    if (col.i == 0 || col.j == 0) return violation("2", t + 1, "row indices must be positive");
  }
  for (std::size_t t = 0; t + 1 < word.size(); ++t) {
    const auto& cur = word.columns[t];
    const auto& next = word.columns[t + 1];
    if (cur.s > next.s) return violation("1", t + 1, "s decreases");
    if (cur.s == next.s && cur.i > next.i) return violation("3", t + 1, "i decreases within equal s");
    const bool same_run = rule == SortRule::Literal ? cur.i == next.i : cur.s == next.s && cur.i == next.i;
    if (same_run && cur.j > next.j) return violation("4", t + 1, "j decreases within equal i");
  }
  return std::nullopt;
}

WordCheck in_a(const ThreeWord& word, const MultiIndex& alpha, const MultiIndex& beta,
               std::uint64_t n, std::uint64_t m) {
  if (word.size() > n) {
    return violation("size", 0, "N = " + std::to_string(word.size()) + " exceeds n = " + std::to_string(n));
  }
  if (auto bad = structural_check(word)) return bad;
  std::uint64_t weight = 0;
  for (const auto& col : word.columns) weight += col.s;
  if (weight != m) {
    return violation("iii", 0, "sum of s is " + std::to_string(weight) + ", expected " + std::to_string(m));
  }
  const std::uint64_t N = word.size();
  for (auto [row, margin] : {std::pair{2, &alpha}, std::pair{3, &beta}}) {
    if (margin->weight() > N) {
      return violation("iv", 0, "N is smaller than the margin weight " + std::to_string(margin->weight()));
    }
    std::vector<Count> expected{static_cast<Count>(N - margin->weight())};
    expected.insert(expected.end(), margin->entries().begin(), margin->entries().end());
    const auto actual = pad(row_type(word, row), expected.size());
    if (actual != expected) {
      return violation("iv", 0, "type^" + std::to_string(row) + " is " + format_counts(actual) +
                                    ", expected " + format_counts(expected));
    }
  }
  return std::nullopt;
}

ThreeWord encode(const CubicalMatrix& gamma) {
  ThreeWord out;
  for (std::size_t k = 0; k < gamma.level_count(); ++k)
    for (std::size_t i = 0; i <= gamma.a(); ++i)
      for (std::size_t j = 0; j <= gamma.b(); ++j)
        for (Count c = 0; c < gamma.at(k, i, j); ++c) {
          out.columns.push_back({static_cast<Count>(k), static_cast<Count>(i + 1), static_cast<Count>(j + 1)});
        }
  return out;
}

CubicalMatrix decode(const ThreeWord& word, std::optional<std::pair<std::size_t, std::size_t>> shape) {
  if (auto bad = validate_word(word)) {
    throw InputError("not a 3-word: condition " + bad->condition + " at t=" + std::to_string(bad->column) +
                     " (" + bad->detail + ")");
  }
  if (auto bad = structural_check(word)) {
    throw InputError("no preimage: condition " + bad->condition + " at t=" + std::to_string(bad->column) +
                     " (" + bad->detail + ")");
  }
  std::size_t a = 1;
  std::size_t b = 1;
  std::size_t top = 0;
  for (const auto& col : word.columns) {
    a = std::max<std::size_t>(a, col.i - 1);
    b = std::max<std::size_t>(b, col.j - 1);
    top = std::max<std::size_t>(top, col.s);
  }
  if (shape) {
    if (shape->first < a || shape->second < b) throw InputError("word does not fit the requested shape");
    std::tie(a, b) = *shape;
  }
  if (word.empty()) return CubicalMatrix(a, b);
  std::vector<std::vector<Count>> levels(top + 1, std::vector<Count>((a + 1) * (b + 1), 0));
  for (const auto& col : word.columns) ++levels[col.s][(col.i - 1) * (b + 1) + (col.j - 1)];
  return CubicalMatrix(a, b, std::move(levels));
}

WordStats word_stats(const ThreeWord& word, std::optional<std::pair<std::size_t, std::size_t>> shape) {
  WordStats out;
  out.size = word.size();
  out.support = word.empty() ? 0 : word.columns.back().s;
  for (const auto& col : word.columns) out.weight += col.s;
  auto margins = [&](int row, std::optional<std::size_t> length) {
    auto type = row_type(word, row);
    std::vector<Count> tail(type.begin() + std::min<std::size_t>(1, type.size()), type.end());
    if (length) tail = pad(std::move(tail), *length);
    return MultiIndex(std::move(tail));
  };
  out.alpha = margins(2, shape ? std::optional(shape->first) : std::nullopt);
  out.beta = margins(3, shape ? std::optional(shape->second) : std::nullopt);
  return out;
}

namespace {

// Chooses a multiplicity for each admissible column (s, i, j) in
// lexicographic order; the chosen columns therefore form a sorted word.
class WordSearch {
 public:
  WordSearch(const MultiIndex& alpha, const MultiIndex& beta, std::uint64_t n, std::uint64_t m)
      : n_(n), weight_res_(m), row_res_(alpha.entries()), col_res_(beta.entries()) {
    for (std::uint64_t s = 0; s <= m; ++s)
      for (Count i = 1; i <= alpha.size() + 1; ++i)
        for (Count j = 1; j <= beta.size() + 1; ++j) {
          if (i == 1 && j == 1) continue;
          if (s > 0 && (i == 1 || j == 1)) continue;
          candidates_.push_back({static_cast<Count>(s), i, j});
        }
  }

  std::size_t candidate_count() const { return candidates_.size(); }

  Count bound(std::size_t c) const {
    const auto& col = candidates_[c];
    std::uint64_t hi = n_ - current_.size();
    if (col.i > 1) hi = std::min<std::uint64_t>(hi, row_res_[col.i - 2]);
    if (col.j > 1) hi = std::min<std::uint64_t>(hi, col_res_[col.j - 2]);
    if (col.s > 0) hi = std::min<std::uint64_t>(hi, weight_res_ / col.s);
    return static_cast<Count>(hi);
  }

  std::vector<ThreeWord> run_with_first(Count first) {
    std::vector<ThreeWord> out;
    if (candidates_.empty()) {
      if (first == 0) finish(out);
      return out;
    }
    take(0, first);
    descend(1, out);
    return out;
  }

 private:
  void take(std::size_t c, Count count) {
    const auto& col = candidates_[c];
    for (Count t = 0; t < count; ++t) current_.columns.push_back(col);
    if (col.i > 1) row_res_[col.i - 2] -= count;
    if (col.j > 1) col_res_[col.j - 2] -= count;
    weight_res_ -= std::uint64_t{col.s} * count;
  }

  void give_back(std::size_t c, Count count) {
    const auto& col = candidates_[c];
    current_.columns.resize(current_.size() - count);
    if (col.i > 1) row_res_[col.i - 2] += count;
    if (col.j > 1) col_res_[col.j - 2] += count;
    weight_res_ += std::uint64_t{col.s} * count;
  }

  void finish(std::vector<ThreeWord>& out) const {
    const bool done = weight_res_ == 0 &&
                      std::all_of(row_res_.begin(), row_res_.end(), [](Count v) { return v == 0; }) &&
                      std::all_of(col_res_.begin(), col_res_.end(), [](Count v) { return v == 0; });
    if (done) out.push_back(current_);
  }

  void descend(std::size_t c, std::vector<ThreeWord>& out) {
    const std::uint64_t rows = std::accumulate(row_res_.begin(), row_res_.end(), std::uint64_t{0});
    const std::uint64_t cols = std::accumulate(col_res_.begin(), col_res_.end(), std::uint64_t{0});
    // every remaining column lowers each residual sum by at most one
    if (current_.size() + std::max(rows, cols) > n_) return;
    if (c == candidates_.size()) {
      finish(out);
      return;
    }
    if (weight_res_ > std::uint64_t{candidates_.back().s} * std::min(rows, cols)) return;
    const Count hi = bound(c);
    for (Count v = 0; v <= hi; ++v) {
      take(c, v);
      descend(c + 1, out);
      give_back(c, v);
    }
  }

  std::uint64_t n_;
  std::uint64_t weight_res_;
  std::vector<Count> row_res_;
  std::vector<Count> col_res_;
  std::vector<WordColumn> candidates_;
  ThreeWord current_;
};

}  // namespace

std::vector<ThreeWord> enumerate_a(const MultiIndex& alpha, const MultiIndex& beta,
                                   std::uint64_t n, std::uint64_t m, Parallelism par) {
  check_margins(alpha, beta, n);
  const WordSearch probe(alpha, beta, n, m);
  const Count first = probe.candidate_count() == 0 ? 0 : probe.bound(0);
  auto parts = parallel_map(std::size_t{first} + 1, par, [&](std::size_t v) {
    return WordSearch(alpha, beta, n, m).run_with_first(static_cast<Count>(v));
  });
  std::vector<ThreeWord> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const ThreeWord& word) {
  std::string out;
  for (std::size_t t = 0; t < word.size(); ++t) {
    const auto& col = word.columns[t];
    if (t > 0) out += ';';
    out += "(" + std::to_string(col.s) + "," + std::to_string(col.i) + "," + std::to_string(col.j) + ")";
  }
  return out;
}

ThreeWord parse_word(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) text.remove_suffix(1);
  ThreeWord out;
  if (text.empty()) return out;
  if (text.find('(') != std::string_view::npos) {
    std::size_t pos = 0;
    while (true) {
      const std::size_t end = std::min(text.find(';', pos), text.size());
      const auto triple = parse_vector(text.substr(pos, end - pos));
      if (triple.size() != 3 || text[pos] != '(') throw ParseError("expected (s,i,j)", pos);
      out.columns.push_back({triple[0], triple[1], triple[2]});
      if (end == text.size()) break;
      pos = end + 1;
    }
    return out;
  }
  std::vector<std::vector<Count>> rows;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    rows.push_back(parse_vector(text.substr(pos, end - pos)));
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (rows.size() != 3 || rows[1].size() != rows[0].size() || rows[2].size() != rows[0].size()) {
    throw ParseError("expected three rows of equal length", 0);
  }
  for (std::size_t t = 0; t < rows[0].size(); ++t) out.columns.push_back({rows[0][t], rows[1][t], rows[2][t]});
  return out;
}

}  // namespace qstar
