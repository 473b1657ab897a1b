#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qstar/algebra.hpp"
#include "qstar/matrices.hpp"

namespace qstar {

/// One argument slot of an elementary multisymmetric function: the argument
/// monomial and its multiplicity in the multi-index.
struct ESlot {
  Count mult = 0;
  Monomial2 mono;

  friend bool operator==(const ESlot&, const ESlot&) = default;
};

/// (total degree, x exponent, y exponent, multiplicity)
bool slot_less(const ESlot& lhs, const ESlot& rhs);

/// scalar * e_(mults)(monomials) * hbar^hbarPower.
///
/// Slots are kept sorted by slot_less. Equal monomials in distinct slots stay
/// distinct, since e_(1,1)(u,u) = 2 e_(2)(u) is a different multi-index.
/// `origin` records the cubical matrix the term came from and takes no part
/// in comparisons.
struct ETerm {
  std::size_t hbarPower = 0;
  mpz_class scalar{1};
  std::vector<ESlot> slots;
  CubicalMatrix origin;

  /// Sorts slots and drops zero-multiplicity ones.
  void canonicalize();

  friend bool operator==(const ETerm& lhs, const ETerm& rhs) {
    return lhs.hbarPower == rhs.hbarPower && lhs.scalar == rhs.scalar && lhs.slots == rhs.slots;
  }
};

/// Canonical order: hbar power, then slots, then scalar.
bool eterm_less(const ETerm& lhs, const ETerm& rhs);

/// "2 e_(1,1,1)(x^3,x^5y,x^4y^2) h". A term with no slots renders as its scalar.
std::string to_string(const ETerm& term);

}  // namespace qstar
