#include "nilpotent/petresco.hpp"

#include "nilpotent/errors.hpp"

namespace nilpotent {

namespace {

Integer choose(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

GroupElement powers_product(std::span<const GroupElement> xs, unsigned long w) {
  GroupElement acc = GroupElement::identity(xs.front().context());
  for (const auto &x : xs)
    acc = mul(acc, pow(x, Integer(w)));
  return acc;
}

// tau_1^w tau_2^C(w,2) ... tau_k^C(w,k) for k = min(w, taus.size())
GroupElement tau_product(std::span<const GroupElement> taus, unsigned long w, std::size_t upto) {
  GroupElement acc = GroupElement::identity(taus.front().context());
  for (std::size_t k = 1; k <= upto; ++k)
    acc = mul(acc, pow(taus[k - 1], choose(w, k)));
  return acc;
}

} // namespace

PetrescoResult petresco(std::span<const GroupElement> xs, int upto) {
  if (xs.empty())
    throw DomainError("petresco needs at least one element");
  if (upto < 1)
    throw DomainError("petresco needs upto >= 1");
  for (const auto &x : xs)
    if (!x.context()->same_as(*xs.front().context()))
      throw DomainError("petresco inputs belong to different contexts");

  PetrescoResult result;
  result.inputs.assign(xs.begin(), xs.end());
  for (int w = 1; w <= upto; ++w) {
    auto uw = static_cast<unsigned long>(w);
    GroupElement rhs = powers_product(xs, uw);
    if (w == 1) {
      result.taus.push_back(rhs);
      continue;
    }
    GroupElement lower = tau_product(result.taus, uw, result.taus.size());
    result.taus.push_back(mul(inv(lower), rhs));
  }
  return result;
}

bool verify_tau_weight(const PetrescoResult &result) {
  for (std::size_t i = 0; i < result.taus.size(); ++i) {
    const auto &tau = result.taus[i];
    int w = static_cast<int>(i) + 1;
    if (lcs_weight(tau) < std::min(w, tau.context()->max_class() + 1))
      return false;
  }
  return true;
}

bool verify_recurrence(const PetrescoResult &result) {
  for (std::size_t i = 0; i < result.taus.size(); ++i) {
    auto w = static_cast<unsigned long>(i + 1);
    GroupElement lhs = powers_product(result.inputs, w);
    GroupElement rhs = tau_product(result.taus, w, i + 1);
    if (!(lhs == rhs))
      return false;
  }
  return true;
}

} // namespace nilpotent
