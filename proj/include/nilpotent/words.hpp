#pragma once

#include "nilpotent/ring.hpp"

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace nilpotent {

/// One syllable x_generator^exponent of a free-group word (generator is 1-based).
struct Letter {
  int generator = 1;
  Integer exponent = 1;

  friend bool operator==(const Letter &, const Letter &) = default;
};

/// Freely reduced word in the free group on x_1, x_2, ...
///
/// The letter sequence never contains a zero exponent or two adjacent
/// letters on the same generator; the empty sequence is the identity.
class Word {
public:
  Word() = default;

  /// Freely reduces the given letters.
  static Word from_letters(std::vector<Letter> letters);
  static Word generator(int index, Integer exponent = 1);

  const std::vector<Letter> &letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  /// Largest generator index occurring, 0 for the identity.
  int max_generator() const;

  friend bool operator==(const Word &, const Word &) = default;

private:
  std::vector<Letter> letters_;
};

std::vector<Letter> free_reduce(std::vector<Letter> letters);
Word invert(const Word &w);
Word concat(const Word &u, const Word &v);
Word power(const Word &w, const Integer &n);
/// u^-1 v^-1 u v
Word commutator(const Word &u, const Word &v);
/// v^-1 u v
Word conjugate(const Word &u, const Word &v);

/// Canonical text rendering, e.g. "x1^2*x2^-1"; the identity renders as "1".
std::string render(const Word &w);

/// Parses the word grammar
///   word := term ('*'? term)*      term := atom ('^' int)?
///   atom := 'x' posint | '1' | '(' word ')' | '[' word ',' word (',' word)* ']'
/// Brackets with more than two entries are left-normed. Generator indices
/// must lie in 1..generator_count.
Word parse_word(std::string_view text, int generator_count);

/// Binary bracket tree over generators: Leaf(i) or Bracket(u, v).
/// Immutable; copies share structure.
class CommutatorExpr {
public:
  static CommutatorExpr leaf(int generator);
  static CommutatorExpr bracket(const CommutatorExpr &left, const CommutatorExpr &right);
  /// Left-normed [e1, e2, ..., en].
  static CommutatorExpr left_normed(const std::vector<CommutatorExpr> &entries);

  bool is_leaf() const { return node_->generator != 0; }
  int generator() const { return node_->generator; }
  CommutatorExpr left() const { return CommutatorExpr(node_->left); }
  CommutatorExpr right() const { return CommutatorExpr(node_->right); }
  int weight() const { return node_->weight; }

  /// Total order: weight, then generator index for leaves, then left
  /// subtree, then right subtree.
  friend std::strong_ordering operator<=>(const CommutatorExpr &a, const CommutatorExpr &b);
  friend bool operator==(const CommutatorExpr &a, const CommutatorExpr &b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

private:
  struct Node {
    int generator = 0;
    int weight = 1;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit CommutatorExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Bracket notation, e.g. "[[x2,x1],x2]".
std::string render(const CommutatorExpr &e);
/// Inverse of render(CommutatorExpr); accepts left-normed brackets.
CommutatorExpr parse_commutator_expr(std::string_view text, int generator_count);

/// Replaces every Bracket(u, v) by u^-1 v^-1 u v and freely reduces.
Word expand_commutator(const CommutatorExpr &e);

} // namespace nilpotent
