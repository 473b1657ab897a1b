#include "qstar/tables.hpp"

#include <algorithm>
#include <numeric>

#include "qstar/error.hpp"

namespace qstar {

void check_margins(const MultiIndex& alpha, const MultiIndex& beta, std::uint64_t n) {
  if (alpha.empty() || beta.empty()) throw InputError("alpha and beta must be nonempty");
  if (alpha.weight() > n) {
    throw InputError("|alpha| = " + std::to_string(alpha.weight()) + " exceeds n = " + std::to_string(n));
  }
  if (beta.weight() > n) {
    throw InputError("|beta| = " + std::to_string(beta.weight()) + " exceeds n = " + std::to_string(n));
  }
}

namespace {

class LSearch {
 public:
  LSearch(const MultiIndex& alpha, const MultiIndex& beta, std::uint64_t n)
      : a_(alpha.size()),
        b_(beta.size()),
        row_res_(alpha.entries()),
        col_res_(beta.entries()),
        current_(alpha.size(), beta.size()) {
    const std::uint64_t margins = alpha.weight() + beta.weight();
    min_interior_ = margins > n ? margins - n : 0;
  }

  /// Number of values the first interior cell can take.
  Count first_cell_bound() const { return std::min(row_res_[0], col_res_[0]); }

  std::vector<MarginMatrix> run_with_first(Count first) {
    std::vector<MarginMatrix> out;
    place(0, first);
    descend(1, first, out);
    return out;
  }

 private:
  void place(std::size_t cell, Count value) {
    const std::size_t i = cell / b_;
    const std::size_t j = cell % b_;
    current_.at(i + 1, j + 1) = value;
    row_res_[i] -= value;
    col_res_[j] -= value;
  }

  void unplace(std::size_t cell, Count value) {
    const std::size_t i = cell / b_;
    const std::size_t j = cell % b_;
    current_.at(i + 1, j + 1) = 0;
    row_res_[i] += value;
    col_res_[j] += value;
  }

  // Largest interior mass the cells from `cell` onwards can still absorb.
  std::uint64_t capacity(std::size_t cell) const {
    const std::size_t i = cell / b_;
    std::uint64_t rows = 0;
    for (std::size_t r = i; r < a_; ++r) rows += row_res_[r];
    const std::uint64_t cols = std::accumulate(col_res_.begin(), col_res_.end(), std::uint64_t{0});
    return std::min(rows, cols);
  }

  void descend(std::size_t cell, std::uint64_t interior, std::vector<MarginMatrix>& out) {
    if (interior + (cell < a_ * b_ ? capacity(cell) : 0) < min_interior_) return;
    if (cell == a_ * b_) {
      MarginMatrix gamma = current_;
      for (std::size_t i = 0; i < a_; ++i) gamma.at(i + 1, 0) = row_res_[i];
      for (std::size_t j = 0; j < b_; ++j) gamma.at(0, j + 1) = col_res_[j];
      out.push_back(std::move(gamma));
      return;
    }
    const Count bound = std::min(row_res_[cell / b_], col_res_[cell % b_]);
    for (Count v = 0; v <= bound; ++v) {
      place(cell, v);
      descend(cell + 1, interior + v, out);
      unplace(cell, v);
    }
  }

  std::size_t a_;
  std::size_t b_;
  std::vector<Count> row_res_;
  std::vector<Count> col_res_;
  MarginMatrix current_;
  std::uint64_t min_interior_ = 0;
};

}  // namespace

std::vector<MarginMatrix> enumerate_l(const MultiIndex& alpha, const MultiIndex& beta,
                                      std::uint64_t n, Parallelism par) {
  check_margins(alpha, beta, n);
  const Count bound = LSearch(alpha, beta, n).first_cell_bound();
  auto parts = parallel_map(std::size_t{bound} + 1, par, [&](std::size_t v) {
    return LSearch(alpha, beta, n).run_with_first(static_cast<Count>(v));
  });
  std::vector<MarginMatrix> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end(),
            [](const MarginMatrix& l, const MarginMatrix& r) { return l.entries() < r.entries(); });
  return out;
}

std::size_t interior_support_count(const MarginMatrix& gamma) {
  std::size_t out = 0;
  for (std::size_t i = 1; i <= gamma.a(); ++i)
    for (std::size_t j = 1; j <= gamma.b(); ++j) out += gamma.at(i, j) != 0;
  return out;
}

std::vector<ETerm> classical_product(const MultiIndex& alpha, const std::vector<Monomial2>& p,
                                     const MultiIndex& beta, const std::vector<Monomial2>& q,
                                     std::uint64_t n) {
  if (p.size() != alpha.size() || q.size() != beta.size()) {
    throw InputError("argument lists must match the lengths of alpha and beta");
  }
  std::vector<ETerm> out;
  for (const auto& gamma : enumerate_l(alpha, beta, n)) {
    ETerm term;
    for (std::size_t i = 1; i <= gamma.a(); ++i) term.slots.push_back({gamma.at(i, 0), p[i - 1]});
    for (std::size_t j = 1; j <= gamma.b(); ++j) term.slots.push_back({gamma.at(0, j), q[j - 1]});
    for (std::size_t i = 1; i <= gamma.a(); ++i)
      for (std::size_t j = 1; j <= gamma.b(); ++j)
        term.slots.push_back({gamma.at(i, j), p[i - 1] * q[j - 1]});
    term.origin = CubicalMatrix::from_classical(gamma);
    term.canonicalize();
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace qstar
