#pragma once

// Two-variable monomials, the single-copy star kernel and the B(p,q)
// argument table.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qstar {

using Exponent = std::uint64_t;

/// x^xExp y^yExp
struct Monomial2 {
  Exponent xExp = 0;
  Exponent yExp = 0;

  Exponent degree() const { return xExp + yExp; }

  /// Product in the commutative polynomial ring.
  Monomial2 operator*(const Monomial2& other) const {
    return {xExp + other.xExp, yExp + other.yExp};
  }

  friend bool operator==(const Monomial2&, const Monomial2&) = default;
  friend auto operator<=>(const Monomial2&, const Monomial2&) = default;
};

/// Ordering used wherever monomials are listed canonically: total degree,
/// then x exponent, then y exponent.
bool degree_less(const Monomial2& lhs, const Monomial2& rhs);

struct ScaledMonomial {
  mpz_class coeff{1};
  Monomial2 mono;

  bool is_zero() const { return coeff == 0; }

  /// Zero terms compare equal regardless of their monomial.
  friend bool operator==(const ScaledMonomial& lhs, const ScaledMonomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return lhs.is_zero() && rhs.is_zero();
    return lhs.coeff == rhs.coeff && lhs.mono == rhs.mono;
  }
};

/// Parses `sign? digits? ("x" ("^" digits)?)? ("y" ("^" digits)?)?` with no
/// whitespace. At least one of digits/x/y must be present. Throws ParseError
/// (with byte offset) on malformed input or negative exponents.
ScaledMonomial parse_monomial(std::string_view text);

/// Comma-separated list of monomials in the above grammar.
std::vector<ScaledMonomial> parse_monomial_list(std::string_view text);

/// Like parse_monomial_list, but every entry must have coefficient 1.
std::vector<Monomial2> parse_bare_monomials(std::string_view text);

/// Canonical rendering: "1", "x", "x^2y", "3x^4", "-y^2", "0".
std::string to_string(const Monomial2& mono);
std::string to_string(const ScaledMonomial& term);

/// One term B_k(p,q) hbar^k of the single-copy star product.
struct StarTerm {
  std::size_t k = 0;
  ScaledMonomial term;
};

/// (x^c y^d) * (x^f y^g) = sum_{k=0}^{min(d,f)} C(d,k) (f)_k x^{c+f-k} y^{d+g-k} hbar^k.
/// Always returns exactly min(d,f)+1 entries.
std::vector<StarTerm> star_pair(const Monomial2& p, const Monomial2& q);

/// The k-th coefficient term of star_pair(p, q); zero when k > min(d, f).
ScaledMonomial b_term(const Monomial2& p, const Monomial2& q, std::size_t k);

/// Highest hbar power in p * q, i.e. min(deg_y p, deg_x q).
std::size_t star_depth(const Monomial2& p, const Monomial2& q);

/// B(p,q): the arguments p, q and every p_i * q_j expanded by hbar order.
class BTable {
 public:
  enum class SlotKind { P, Q, Pair };

  /// A position of the flattened table. For P slots only `i` is meaningful,
  /// for Q slots only `j`; indices are 0-based.
  struct Slot {
    SlotKind kind = SlotKind::P;
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;

    friend bool operator==(const Slot&, const Slot&) = default;
  };

  BTable(std::vector<Monomial2> p, std::vector<Monomial2> q);

  std::size_t a() const { return p_.size(); }
  std::size_t b() const { return q_.size(); }
  const std::vector<Monomial2>& p_args() const { return p_; }
  const std::vector<Monomial2>& q_args() const { return q_; }

  /// K_ij = min(deg_y p_i, deg_x q_j); the pair block holds K_ij + 1 entries.
  std::size_t depth(std::size_t i, std::size_t j) const;
  std::size_t max_depth() const;

  /// b_term(p_i, q_j, k), zero beyond the depth.
  ScaledMonomial entry(std::size_t i, std::size_t j, std::size_t k) const;

  /// Flat order: p_1..p_a, q_1..q_b, then pairs row-major with k innermost.
  const std::vector<Slot>& flat_order() const { return flat_; }
  std::size_t flat_length() const { return flat_.size(); }
  ScaledMonomial flat_entry(std::size_t pos) const;

 private:
  std::vector<Monomial2> p_;
  std::vector<Monomial2> q_;
  // row-major over (i, j), each holding star_pair(p_i, q_j) by k
  std::vector<std::vector<ScaledMonomial>> pairs_;
  std::vector<Slot> flat_;
};

/// Throws InputError when either list is empty.
BTable build_b(const std::vector<Monomial2>& p, const std::vector<Monomial2>& q);

/// l(B(p,q)) = a + b + sum_{i,j} (min(deg_y p_i, deg_x q_j) + 1), evaluated
/// directly from the exponents.
std::size_t b_length(const std::vector<Monomial2>& p, const std::vector<Monomial2>& q);

}  // namespace qstar
