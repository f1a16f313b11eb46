#pragma once

#include "nilpotent/collector.hpp"
#include "nilpotent/ring.hpp"
#include "nilpotent/trunc_series.hpp"
#include "nilpotent/words.hpp"

#include <map>
#include <span>
#include <vector>

namespace nilpotent {

/// Upper unitriangular n x n matrix over Z, Q or F_p.
///
/// Only the strictly upper part is stored, row by row and sparsely, so the
/// large regular representations stay cheap. Indices are 0-based.
class UniTriMatrix {
public:
  using Row = std::map<std::size_t, Rational>;

  static UniTriMatrix identity(std::size_t n, CoeffRing ring);
  /// I + value * e_{row,col}, row < col.
  static UniTriMatrix elementary(std::size_t n, std::size_t row, std::size_t col, const Rational &value,
                                 CoeffRing ring);
  /// Validates diagonal == 1 and lower part == 0.
  static UniTriMatrix from_dense(const std::vector<std::vector<Rational>> &rows, CoeffRing ring);

  std::size_t dimension() const { return n_; }
  const CoeffRing &ring() const { return ring_; }
  Rational entry(std::size_t row, std::size_t col) const;
  /// Strictly-upper entries of one row.
  const Row &upper_row(std::size_t row) const { return upper_[row]; }
  void set_entry(std::size_t row, std::size_t col, const Rational &value);

  bool is_identity() const;
  std::vector<std::vector<Rational>> dense() const;
  std::size_t nonzeros() const;

  friend bool operator==(const UniTriMatrix &, const UniTriMatrix &) = default;

private:
  UniTriMatrix(std::size_t n, CoeffRing ring) : n_(n), ring_(ring), upper_(n) {}

  std::size_t n_;
  CoeffRing ring_;
  std::vector<Row> upper_;
};

UniTriMatrix mat_mul(const UniTriMatrix &a, const UniTriMatrix &b);
/// Geometric series I - u + u^2 - ... with u = a - I.
UniTriMatrix mat_inv(const UniTriMatrix &a);
UniTriMatrix mat_pow(const UniTriMatrix &a, const Integer &lambda);
/// a^-1 b^-1 a b
UniTriMatrix mat_commutator(const UniTriMatrix &a, const UniTriMatrix &b);
/// [m_1, m_2, ..., m_k] = [[m_1, ..., m_{k-1}], m_k]
UniTriMatrix left_normed_commutator(std::span<const UniTriMatrix> ms);

/// sum_{k < n} C(lambda, k) u^k with u = a - I; over Q only.
UniTriMatrix binomial_pow(const UniTriMatrix &a, const Rational &lambda);

/// Least d >= 1 with a nonzero entry on the d-th superdiagonal; n for I.
std::size_t level(const UniTriMatrix &a);

/// t_k = I + e_{k,k+1}, k = 1..n-1, over F_p.
std::vector<UniTriMatrix> class_witness(std::size_t n, unsigned long p);

/// Right-multiplication representation of F on the truncated free algebra
/// of degree <= c: x_i acts as v -> v (1 + u_i) in the row-vector
/// convention. The monomial basis is ordered by degree then lexicographically,
/// which makes every image upper unitriangular.
class RegularRepresentation {
public:
  RegularRepresentation(int q, int c, CoeffRing ring);

  int generators() const { return q_; }
  int degree_bound() const { return c_; }
  const CoeffRing &ring() const { return ring_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Monomial> &basis() const { return basis_; }

  const UniTriMatrix &generator(int i) const { return gens_[static_cast<std::size_t>(i - 1)]; }
  const UniTriMatrix &generator_inverse(int i) const { return gen_inverses_[static_cast<std::size_t>(i - 1)]; }

  /// Matrix of v -> v s.
  UniTriMatrix right_multiplication(const TruncSeries &s) const;

  UniTriMatrix image(const Word &w) const;
  /// Product of basis-commutator images raised to the exponents of g.
  UniTriMatrix image(const GroupElement &g) const;
  /// Same with rational Mal'cev coordinates (ring must be Q); rational
  /// powers go through binomial_pow.
  UniTriMatrix image(const NilpotentContext &ctx, std::span<const Rational> coords) const;

private:
  std::vector<UniTriMatrix> basis_commutator_images(const NilpotentContext &ctx) const;

  int q_;
  int c_;
  CoeffRing ring_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t, MonomialLess> position_;
  std::vector<UniTriMatrix> gens_;
  std::vector<UniTriMatrix> gen_inverses_;
};

/// Dimension 1 + q + ... + q^c of the regular representation.
Integer regular_rep_dimension(int q, int c);

RegularRepresentation regular_rep(int q, int c, CoeffRing ring);

} // namespace nilpotent
