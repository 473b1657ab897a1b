#pragma once

// Assembly of the symbolic terms scalar * e_Gamma(B(p,q)) * hbar^m and the
// full star product e_alpha(p) * e_beta(q).

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qstar/algebra.hpp"
#include "qstar/eterm.hpp"
#include "qstar/matrices.hpp"
#include "qstar/parallel.hpp"

namespace qstar {

/// The inputs of a product e_alpha(p) * e_beta(q) on n copies of R^2.
struct ProblemSpec {
  MultiIndex alpha;
  MultiIndex beta;
  std::vector<Monomial2> p;
  std::vector<Monomial2> q;
  std::uint64_t n = 0;

  /// Throws InputError on mismatched lengths, empty lists or |alpha|, |beta| > n.
  void validate() const;
};

enum class Path {
  Enumerate,  // Q(alpha, beta, n, m) by direct backtracking
  Lift,       // lifts of L(alpha, beta, n)
};

struct StarOptions {
  Path path = Path::Lift;
  /// When false, sweep every order up to `raw_order_cap` over all supports.
  bool truncate = true;
  /// 0 picks max_ij K_ij * n + 2, past the last order any matrix can reach
  /// with a nonzero term.
  std::uint64_t raw_order_cap = 0;
  Parallelism par;
};

struct StarBounds {
  /// ceil((l(B) - (a+b)) / ab) - 1 and S * max interior sum.
  std::size_t S = 0;
  std::uint64_t M = 0;
  /// max K_ij and max_gamma sum K_ij gamma_ij; these are what the sum is
  /// actually truncated to. They agree with S, M when all K_ij are equal.
  std::size_t effectiveS = 0;
  std::uint64_t effectiveM = 0;
};

struct StarExpansion {
  /// Nonempty orders only, each sorted by eterm_less.
  std::map<std::uint64_t, std::vector<ETerm>> byOrder;
  ProblemSpec params;
  StarBounds bounds;

  std::size_t term_count() const;
  std::size_t term_count(std::uint64_t order) const;
  /// All terms, by order then canonically.
  std::vector<ETerm> terms() const;
};

/// The term of Gamma: slots (Gamma_i0, p_i), (Gamma_0j, q_j) and
/// (Gamma^k_ij, monomial of B_k(p_i, q_j)); scalar prod coeff^mult; hbar power
/// m(Gamma). Empty when a unit sits above the depth K_ij of its pair.
std::optional<ETerm> gamma_to_eterm(const CubicalMatrix& gamma, const BTable& btable);

StarExpansion star_product(const ProblemSpec& spec, const StarOptions& options = {});

/// "e_(1)(xy) + e_(1)(1) h"; empty expansion renders as "".
std::string render_text(const StarExpansion& expansion);
/// Document with "params", "bounds" and "terms"; see schemas/star_expansion.schema.json.
std::string render_json(const StarExpansion& expansion);

}  // namespace qstar
