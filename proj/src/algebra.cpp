#include "qstar/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "qstar/error.hpp"

namespace qstar {

bool degree_less(const Monomial2& lhs, const Monomial2& rhs) {
  if (lhs.degree() != rhs.degree()) return lhs.degree() < rhs.degree();
  return lhs < rhs;
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class MonomialParser {
 public:
  MonomialParser(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  ScaledMonomial parse() {
    ScaledMonomial out;
    bool negative = false;
    bool have_coeff = false;
    bool have_var = false;

    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    if (is_digit(peek())) {
      const std::size_t start = pos_;
      while (is_digit(peek())) ++pos_;
      out.coeff = mpz_class(std::string(text_.substr(start, pos_ - start)));
      have_coeff = true;
    }
    if (peek() == 'x') {
      ++pos_;
      out.mono.xExp = exponent();
      have_var = true;
    }
    if (peek() == 'y') {
      ++pos_;
      out.mono.yExp = exponent();
      have_var = true;
    }
    if (!have_coeff && !have_var) fail("expected coefficient, 'x' or 'y'");
    if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    if (negative) out.coeff = -out.coeff;
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("monomial: " + what, base_ + pos_);
  }

  Exponent exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    if (peek() == '-') fail("negative exponent");
    if (!is_digit(peek())) fail("expected exponent digits after '^'");
    const std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    Exponent value = 0;
    auto [end, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) {
      pos_ = start;
      fail("exponent out of range");
    }
    return value;
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace

ScaledMonomial parse_monomial(std::string_view text) { return MonomialParser(text, 0).parse(); }

std::vector<ScaledMonomial> parse_monomial_list(std::string_view text) {
  std::vector<ScaledMonomial> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(MonomialParser(text.substr(start, end - start), start).parse());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<Monomial2> parse_bare_monomials(std::string_view text) {
  std::vector<Monomial2> out;
  for (const auto& term : parse_monomial_list(text)) {
    if (term.coeff != 1) {
      throw InputError("arguments must be bare monomials, got '" + to_string(term) + "'");
    }
    out.push_back(term.mono);
  }
  return out;
}

std::string to_string(const Monomial2& mono) {
  std::string out;
  if (mono.xExp > 0) {
    out += 'x';
    if (mono.xExp > 1) out += '^' + std::to_string(mono.xExp);
  }
  if (mono.yExp > 0) {
    out += 'y';
    if (mono.yExp > 1) out += '^' + std::to_string(mono.yExp);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const ScaledMonomial& term) {
  if (term.is_zero()) return "0";
  const bool constant = term.mono.xExp == 0 && term.mono.yExp == 0;
  if (constant) return term.coeff.get_str();
  std::string out;
  if (term.coeff == -1) {
    out = "-";
  } else if (term.coeff != 1) {
    out = term.coeff.get_str();
  }
  return out + to_string(term.mono);
}

std::size_t star_depth(const Monomial2& p, const Monomial2& q) {
  const Exponent depth = std::min(p.yExp, q.xExp);
  if (depth >= std::numeric_limits<std::size_t>::max()) {
    throw InputError("star depth does not fit in memory");
  }
  return static_cast<std::size_t>(depth);
}

std::vector<StarTerm> star_pair(const Monomial2& p, const Monomial2& q) {
  const std::size_t depth = star_depth(p, q);
  std::vector<StarTerm> out;
  out.reserve(depth + 1);
  mpz_class falling{1};  // (f)_k
  for (std::size_t k = 0; k <= depth; ++k) {
    if (k > 0) falling *= mpz_class(q.xExp - (k - 1));
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), p.yExp, k);
    out.push_back({k, ScaledMonomial{binom * falling, {p.xExp + q.xExp - k, p.yExp + q.yExp - k}}});
  }
  return out;
}

ScaledMonomial b_term(const Monomial2& p, const Monomial2& q, std::size_t k) {
  if (k > star_depth(p, q)) return ScaledMonomial{0, {}};
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), p.yExp, k);
  mpz_class falling{1};
  for (std::size_t t = 0; t < k; ++t) falling *= mpz_class(q.xExp - t);
  return ScaledMonomial{binom * falling, {p.xExp + q.xExp - k, p.yExp + q.yExp - k}};
}

BTable::BTable(std::vector<Monomial2> p, std::vector<Monomial2> q)
    : p_(std::move(p)), q_(std::move(q)) {
  if (p_.empty() || q_.empty()) throw InputError("B(p,q) needs nonempty p and q");
  for (std::size_t i = 0; i < a(); ++i) flat_.push_back({SlotKind::P, i, 0, 0});
  for (std::size_t j = 0; j < b(); ++j) flat_.push_back({SlotKind::Q, 0, j, 0});
  pairs_.reserve(a() * b());
  for (std::size_t i = 0; i < a(); ++i) {
    for (std::size_t j = 0; j < b(); ++j) {
      std::vector<ScaledMonomial> block;
      for (auto& term : star_pair(p_[i], q_[j])) {
        flat_.push_back({SlotKind::Pair, i, j, term.k});
        block.push_back(std::move(term.term));
      }
      pairs_.push_back(std::move(block));
    }
  }
}

std::size_t BTable::depth(std::size_t i, std::size_t j) const {
  return pairs_.at(i * b() + j).size() - 1;
}

std::size_t BTable::max_depth() const {
  std::size_t out = 0;
  for (const auto& block : pairs_) out = std::max(out, block.size() - 1);
  return out;
}

ScaledMonomial BTable::entry(std::size_t i, std::size_t j, std::size_t k) const {
  const auto& block = pairs_.at(i * b() + j);
  if (k >= block.size()) return ScaledMonomial{0, {}};
  return block[k];
}

ScaledMonomial BTable::flat_entry(std::size_t pos) const {
  const Slot& slot = flat_.at(pos);
  switch (slot.kind) {
    case SlotKind::P:
      return ScaledMonomial{1, p_[slot.i]};
    case SlotKind::Q:
      return ScaledMonomial{1, q_[slot.j]};
    case SlotKind::Pair:
      break;
  }
  return entry(slot.i, slot.j, slot.k);
}

BTable build_b(const std::vector<Monomial2>& p, const std::vector<Monomial2>& q) {
  return BTable(p, q);
}

std::size_t b_length(const std::vector<Monomial2>& p, const std::vector<Monomial2>& q) {
  if (p.empty() || q.empty()) throw InputError("B(p,q) needs nonempty p and q");
  std::size_t total = p.size() + q.size();
  for (const auto& pi : p) {
    for (const auto& qj : q) total += static_cast<std::size_t>(std::min(pi.yExp, qj.xExp)) + 1;
  }
  return total;
}

}  // namespace qstar
