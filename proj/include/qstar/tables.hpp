#pragma once

// The classical sets L(alpha, beta, n): lattice points of a transportation
// polytope with a slack row and column, and the classical product they index.

#include <cstddef>
#include <vector>

#include "qstar/algebra.hpp"
#include "qstar/eterm.hpp"
#include "qstar/matrices.hpp"
#include "qstar/parallel.hpp"

namespace qstar {

/// Throws InputError unless |alpha| <= n, |beta| <= n and both are nonempty.
void check_margins(const MultiIndex& alpha, const MultiIndex& beta, std::uint64_t n);

/// All gamma with gamma_00 = 0, row sums alpha, column sums beta over the
/// interior rows/columns, and total <= n; sorted lexicographically on the
/// row-major entries.
///
/// Backtracks over the interior cells with running margin residuals; row 0 and
/// column 0 are whatever the residuals leave, and the slack bound forces the
/// interior to absorb at least |alpha| + |beta| - n.
std::vector<MarginMatrix> enumerate_l(const MultiIndex& alpha, const MultiIndex& beta,
                                      std::uint64_t n, Parallelism par = {});

/// f_gamma: number of nonzero interior entries.
std::size_t interior_support_count(const MarginMatrix& gamma);

/// e_alpha(p) * e_beta(q) = sum over gamma in L of e_gamma(p, q, pq), one
/// canonical hbar^0 term per gamma, in the order of enumerate_l.
std::vector<ETerm> classical_product(const MultiIndex& alpha, const std::vector<Monomial2>& p,
                                     const MultiIndex& beta, const std::vector<Monomial2>& q,
                                     std::uint64_t n);

}  // namespace qstar
