#pragma once

#include "nilpotent/collector.hpp"

#include <span>
#include <vector>

namespace nilpotent {

/// Hall-Petresco words tau_1..tau_W evaluated at a tuple of group elements.
struct PetrescoResult {
  std::vector<GroupElement> inputs;
  /// taus[w-1] = tau_w
  std::vector<GroupElement> taus;
};

/// tau_1 = x_1 ... x_n and, for w >= 2,
///   tau_w = (tau_1^w tau_2^C(w,2) ... tau_{w-1}^C(w,w-1))^-1 x_1^w ... x_n^w.
PetrescoResult petresco(std::span<const GroupElement> xs, int upto);

/// lcs_weight(tau_w) >= min(w, c+1) for every computed w.
bool verify_tau_weight(const PetrescoResult &result);

/// Recomputes both sides of x_1^w ... x_n^w = tau_1^w tau_2^C(w,2) ... tau_w.
bool verify_recurrence(const PetrescoResult &result);

} // namespace nilpotent
