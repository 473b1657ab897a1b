#pragma once

// Ground truth: explicit polynomials in x_1..x_n, y_1..y_n and hbar, the
// n-copy Moyal product computed by repeated differentiation, and the
// end-to-end check of the cubical-matrix expansion against it.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qstar/algebra.hpp"
#include "qstar/eterm.hpp"
#include "qstar/expansion.hpp"
#include "qstar/matrices.hpp"

namespace qstar {

/// Polynomial over Q in x_1..x_n, y_1..y_n, hbar. Exponent vectors are laid
/// out as (x_1..x_n, y_1..y_n, hbar); zero coefficients are never stored.
class NPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using Terms = std::map<Exponents, mpq_class>;

  explicit NPoly(std::size_t n);

  static NPoly constant(std::size_t n, const mpq_class& value);
  /// coeff * x_copy^c y_copy^d, with `copy` 0-based.
  static NPoly monomial(std::size_t n, std::size_t copy, const Monomial2& mono, const mpq_class& coeff = 1);
  static NPoly hbar_power(std::size_t n, std::uint32_t power);

  std::size_t n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& exps, const mpq_class& coeff);

  NPoly& operator+=(const NPoly& other);
  NPoly& operator-=(const NPoly& other);
  NPoly operator+(const NPoly& other) const;
  NPoly operator-(const NPoly& other) const;
  NPoly operator*(const NPoly& other) const;
  NPoly operator*(const mpq_class& scalar) const;

  NPoly d_x(std::size_t copy) const;
  NPoly d_y(std::size_t copy) const;

  bool hbar_free() const;
  /// Coefficient of hbar^k as an hbar-free polynomial.
  NPoly hbar_coefficient(std::uint32_t k) const;
  /// Sets hbar = 0.
  NPoly classical_part() const { return hbar_coefficient(0); }
  bool is_integral() const;

  /// Relabels copies: copy c becomes copy perm[c].
  NPoly permute_copies(std::span<const std::size_t> perm) const;

  friend bool operator==(const NPoly&, const NPoly&) = default;

 private:
  void check_same_n(const NPoly& other) const;

  std::size_t n_;
  Terms terms_;
};

/// "3*x1^2*y2*h^2 + x2"; the zero polynomial is "0".
std::string to_string(const NPoly& poly);
std::string exponents_to_string(const NPoly::Exponents& exps, std::size_t n);

/// Receives diagnostics for out-of-range requests that return zero.
using WarningSink = std::function<void(std::string_view)>;

/// Coefficient of t^alpha in prod_{copy} (1 + p_1(copy) t_1 + ... + p_a(copy) t_a).
/// |alpha| > n yields zero and a warning (default sink: std::clog).
NPoly expand_elementary(const MultiIndex& alpha, const std::vector<Monomial2>& p, std::size_t n,
                        const WarningSink& warn = {});

/// scalar * e_(mults)(monomials) * hbar^m in n copies.
NPoly expand_eterm(const ETerm& term, std::size_t n, const WarningSink& warn = {});

/// f * g = sum_k hbar^k / k! (sum_i d/dy_i (x) d/dx_i)^k (f, g), the operator
/// applied literally to f (x) g before multiplying out.
NPoly moyal(const NPoly& f, const NPoly& g);

/// {f, g} = sum_i (df/dx_i dg/dy_i - df/dy_i dg/dx_i). Inputs must be hbar-free.
NPoly poisson(const NPoly& f, const NPoly& g);

struct CheckOutcome {
  bool passed = false;
  std::string diff;
};

struct VerifyReport {
  /// Expanded cubical-matrix sum against moyal(e_alpha(p), e_beta(q)).
  CheckOutcome oracleIdentity;
  /// hbar^0 slice against the classical product, symbolically and expanded.
  CheckOutcome classicalLimit;
  /// Enumerate and lift paths give the same terms.
  CheckOutcome pathEquivalence;

  bool passed() const { return oracleIdentity.passed && classicalLimit.passed && pathEquivalence.passed; }
};

struct VerifyOptions {
  /// Negative control: forget every term's scalar before comparing.
  bool dropScalars = false;
  Parallelism par;
};

VerifyReport verify(const ProblemSpec& spec, const VerifyOptions& options = {});

/// Lists up to `limit` coefficients where the two polynomials differ.
std::string poly_diff(const NPoly& actual, const NPoly& expected, std::string_view actual_name,
                      std::string_view expected_name, std::size_t limit = 8);

}  // namespace qstar
