#pragma once

#include "nilpotent/hall_basis.hpp"
#include "nilpotent/ring.hpp"
#include "nilpotent/words.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <tuple>
#include <vector>

namespace nilpotent {

/// The free nilpotent group F/gamma_{c+1}(F) on q generators, coordinatised
/// by its Hall basis. Immutable and shareable between threads.
class NilpotentContext {
public:
  static std::shared_ptr<const NilpotentContext> make(int q, int c);

  int generators() const { return basis_.generators(); }
  int max_class() const { return basis_.max_class(); }
  const HallBasis &basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }

  /// Position of [b_s, b_k] for s != k when it has weight <= c.
  std::optional<std::size_t> bracket(std::size_t s, std::size_t k) const {
    return basis_.find_bracket(s, k);
  }

  bool same_as(const NilpotentContext &other) const {
    return generators() == other.generators() && max_class() == other.max_class();
  }

  /// Normal-form exponents of b_k^-eps b_s b_k^eps (0-based positions,
  /// eps = +-1). Memoised; safe to call concurrently.
  const std::vector<Integer> &conjugate(std::size_t s, std::size_t k, int eps) const;

private:
  NilpotentContext(int q, int c) : basis_(q, c) {}

  HallBasis basis_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::tuple<std::size_t, std::size_t, int>, std::vector<Integer>> conjugates_;
};

using ContextPtr = std::shared_ptr<const NilpotentContext>;

/// Element of F/gamma_{c+1}(F) in collected normal form
/// b_1^{e_1} b_2^{e_2} ... b_N^{e_N}.
class GroupElement {
public:
  GroupElement(ContextPtr ctx, std::vector<Integer> exponents);
  static GroupElement identity(ContextPtr ctx);
  /// Image of the generator x_i.
  static GroupElement generator(ContextPtr ctx, int i);

  const ContextPtr &context() const { return ctx_; }
  const std::vector<Integer> &exponents() const { return exponents_; }
  bool is_identity() const;

  friend bool operator==(const GroupElement &a, const GroupElement &b);

private:
  ContextPtr ctx_;
  std::vector<Integer> exponents_;
};

/// One symbol of the collection string: a basis position raised to a power.
struct Syllable {
  std::size_t symbol = 0;
  Integer exponent;
};

/// Collects an arbitrary product of basis symbols into normal form.
///
/// For k = 1..N every occurrence of b_k^{+-1} is moved to the left, each
/// move conjugating the symbols it passes: c b = b c [c,b] and
/// c b^-1 = b^-1 c c_2 c_4 ... c_5^-1 c_3^-1 c_1^-1 with c_{j+1} = [c_j, b].
/// Symbols of weight > c are dropped when created; a symbol s whose
/// brackets with every remaining symbol vanish (wt(s) + wt(b_k) > c) is
/// central in what is left and goes straight into the exponent vector.
std::vector<Integer> collect_syllables(const NilpotentContext &ctx, std::vector<Syllable> input);

/// Normal form of the image of w. Throws DomainError if w uses a generator > q.
GroupElement collect(const ContextPtr &ctx, const Word &w);

GroupElement mul(const GroupElement &a, const GroupElement &b);
GroupElement inv(const GroupElement &a);
GroupElement pow(const GroupElement &a, const Integer &lambda);
/// a^-1 b^-1 a b
GroupElement commutator(const GroupElement &a, const GroupElement &b);

/// Least weight of a basis entry with nonzero exponent; c+1 for the identity.
int lcs_weight(const GroupElement &g);

/// b_1^{e_1} ... b_N^{e_N} with each b_j expanded into generators.
Word representative_word(const GroupElement &g);

/// Image of g under the endomorphism x_i -> images[i-1].
GroupElement substitute(const GroupElement &g, std::span<const GroupElement> images);

} // namespace nilpotent
