#pragma once

#include "nilpotent/ring.hpp"
#include "nilpotent/words.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <optional>
#include <vector>

namespace nilpotent {

/// One term b_k of a basic sequence.
struct BasicCommutator {
  static constexpr std::size_t no_child = static_cast<std::size_t>(-1);

  CommutatorExpr expr;
  int weight = 1;
  /// 1-based position in the basis.
  std::size_t index = 0;
  /// 0-based positions of the two bracket arguments (no_child for leaves).
  std::size_t left = no_child;
  std::size_t right = no_child;
};

/// Basic sequence of weight <= c on q generators.
///
/// Built by the working-set construction: X_0 = {x_1..x_q}; b_k is the
/// least element of X_{k-1} (by weight, then the structural order on
/// CommutatorExpr); X_k replaces X_{k-1} by all iterated brackets
/// [a, b_k, ..., b_k] of its other elements. Everything of weight > c is
/// dropped on creation. Every bracket argument of an entry is itself an
/// earlier-or-later entry, so the basis is closed under "left/right child".
class HallBasis {
public:
  HallBasis(int q, int c);

  int generators() const { return q_; }
  int max_class() const { return c_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<BasicCommutator> &entries() const { return entries_; }
  /// 0-based access.
  const BasicCommutator &operator[](std::size_t pos) const { return entries_[pos]; }
  int weight(std::size_t pos) const { return entries_[pos].weight; }

  /// Position of the entry Bracket(b_left, b_right), if it is in the basis.
  std::optional<std::size_t> find_bracket(std::size_t left, std::size_t right) const;
  /// Position of an entry with this expression, if any.
  std::optional<std::size_t> find(const CommutatorExpr &e) const;

  /// Number of entries of weight w.
  std::size_t count_of_weight(int w) const;

private:
  int q_;
  int c_;
  std::vector<BasicCommutator> entries_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> bracket_position_;
};

HallBasis generate_basis(int q, int c);

/// Moebius function.
int moebius(unsigned long d);

/// Witt's necklace count (1/w) sum_{d | w} mu(d) q^(w/d).
Integer witt_number(int w, int q);

} // namespace nilpotent
