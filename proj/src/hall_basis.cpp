#include "nilpotent/hall_basis.hpp"

#include "nilpotent/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nilpotent {

HallBasis::HallBasis(int q, int c) : q_(q), c_(c) {
  if (q < 1 || c < 1)
    throw DomainError("basis requires q >= 1 and c >= 1");

  std::set<CommutatorExpr> working;
  for (int i = 1; i <= q; ++i)
    working.insert(CommutatorExpr::leaf(i));

  std::vector<CommutatorExpr> chosen;
  while (!working.empty()) {
    CommutatorExpr b = *working.begin();
    working.erase(working.begin());
    chosen.push_back(b);

    std::set<CommutatorExpr> next;
    for (const auto &a : working) {
      CommutatorExpr cur = a;
      next.insert(cur);
      while (cur.weight() + b.weight() <= c) {
        cur = CommutatorExpr::bracket(cur, b);
        next.insert(cur);
      }
    }
    working = std::move(next);
  }

  std::map<CommutatorExpr, std::size_t> position;
  for (std::size_t i = 0; i < chosen.size(); ++i)
    position.emplace(chosen[i], i);

  entries_.reserve(chosen.size());
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    BasicCommutator entry{chosen[i]};
    entry.weight = chosen[i].weight();
    entry.index = i + 1;
    if (!chosen[i].is_leaf()) {
      entry.left = position.at(chosen[i].left());
      entry.right = position.at(chosen[i].right());
      bracket_position_.emplace(std::make_pair(entry.left, entry.right), i);
    }
    entries_.push_back(std::move(entry));
  }
}

std::optional<std::size_t> HallBasis::find_bracket(std::size_t left, std::size_t right) const {
  if (left >= entries_.size() || right >= entries_.size())
    return std::nullopt;
  auto it = bracket_position_.find({left, right});
  if (it == bracket_position_.end())
    return std::nullopt;
  return it->second;
}

std::optional<std::size_t> HallBasis::find(const CommutatorExpr &e) const {
  for (const auto &entry : entries_)
    if (entry.weight == e.weight() && entry.expr == e)
      return entry.index - 1;
  return std::nullopt;
}

std::size_t HallBasis::count_of_weight(int w) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [w](const auto &e) { return e.weight == w; }));
}

HallBasis generate_basis(int q, int c) { return HallBasis(q, c); }

int moebius(unsigned long d) {
  if (d == 0)
    throw DomainError("moebius(0) is undefined");
  int sign = 1;
  for (unsigned long p = 2; p * p <= d; ++p) {
    if (d % p != 0)
      continue;
    d /= p;
    if (d % p == 0)
      return 0;
    sign = -sign;
  }
  if (d > 1)
    sign = -sign;
  return sign;
}

Integer witt_number(int w, int q) {
  if (w < 1 || q < 1)
    throw DomainError("witt_number requires w >= 1 and q >= 1");
  Integer sum = 0;
  for (int d = 1; d <= w; ++d) {
    if (w % d != 0)
      continue;
    int mu = moebius(static_cast<unsigned long>(d));
    if (mu == 0)
      continue;
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(w / d));
    sum += mu * term;
  }
  return sum / w;
}

} // namespace nilpotent
