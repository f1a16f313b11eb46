#pragma once

#include "nilpotent/ring.hpp"
#include "nilpotent/trunc_series.hpp"
#include "nilpotent/words.hpp"

#include <optional>
#include <vector>

namespace nilpotent {

/// Image of w under x_i -> 1 + u_i in the degree-D truncation; inverse
/// letters go through unit_inverse. Throws DomainError for generators > q.
TruncSeries magnus_embed(const Word &w, int q, int degree_bound, CoeffRing ring);

/// Lie element of e: Leaf(i) -> u_i, Bracket(a, b) -> ab - ba.
TruncSeries lie_expand(const CommutatorExpr &e, int q, int degree_bound, CoeffRing ring);

/// Least k >= 1 such that magnus_embed(w) - 1 has a nonzero degree-k part
/// over Q, or nullopt when there is none up to degree D.
std::optional<int> dimension_weight(const Word &w, int q, int degree_bound);

/// d_0..d_jmax in sum_j d_j t^j = prod_{i<=c} (1 - t^i)^(-witt_number(i, q)).
std::vector<Integer> hilbert_coeffs(int q, int c, int jmax);

/// Certificate that a word survives in a finite p-group quotient.
struct Witness {
  Word word;
  unsigned long prime = 2;
  int generators = 2;
  /// Truncation degree N = sum_a p^{s_a}.
  int degree = 0;
  /// u_{i_1}^{p^{s_1}} ... u_{i_n}^{p^{s_n}}
  Monomial monomial;
  /// Coefficient of the monomial in the degree-N expansion over F_p (nonzero).
  Rational coefficient;
  /// The unit group of the truncated algebra has order p^m, m = q + q^2 + ... + q^N.
  Integer group_order_exponent;
};

/// Writes each exponent r_a = p^{s_a} m_a with p not dividing m_a, expands
/// the word over F_p to degree N = sum p^{s_a} and reads off the designated
/// coefficient. Throws DomainError for the trivial word, for generators > q,
/// or if the coefficient vanishes (which would contradict the theory).
Witness residual_witness(const Word &w, unsigned long p, int q);

} // namespace nilpotent
