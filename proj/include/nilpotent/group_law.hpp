#pragma once

#include "nilpotent/collector.hpp"
#include "nilpotent/errors.hpp"
#include "nilpotent/ring.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace nilpotent {

/// Variable of a group-law polynomial: xi_i, eta_i (1-based) or lambda.
struct LawVariable {
  enum class Kind { xi, eta, lambda };
  Kind kind = Kind::xi;
  int index = 0;

  std::string name() const;
  static LawVariable parse(const std::string &name);
  friend auto operator<=>(const LawVariable &, const LawVariable &) = default;
};

/// Factor C(var, r).
struct BinomialFactor {
  LawVariable var;
  int r = 1;
  friend bool operator==(const BinomialFactor &, const BinomialFactor &) = default;
};

struct PolyTerm {
  Integer coeff;
  std::vector<BinomialFactor> factors;
  friend bool operator==(const PolyTerm &, const PolyTerm &) = default;
};

/// Integer combination of products of binomial coefficients C(var, r);
/// integer-valued on integer arguments.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<PolyTerm> terms);

  const std::vector<PolyTerm> &terms() const { return terms_; }
  Rational evaluate(const std::function<Rational(const LawVariable &)> &value) const;
  bool mentions(const LawVariable &var) const;

  friend bool operator==(const IntPolynomial &, const IntPolynomial &) = default;

private:
  std::vector<PolyTerm> terms_;
};

/// Multiplication polynomials zeta_i(xi, eta) and power polynomials
/// omega_i(lambda, xi) for the Hall-basis coordinates of a free nilpotent group.
struct GroupLaw {
  ContextPtr ctx;
  std::vector<IntPolynomial> mul_polys;
  std::vector<IntPolynomial> pow_polys;
};

struct FitOptions {
  int max_class = 4;
  std::size_t validation_points = 100;
  int validation_box = 5;
  std::uint64_t seed = 0x5eed;
};

/// Fitting did not reproduce the collector at the weighted-degree bound.
class FitError : public DomainError {
public:
  FitError(const std::string &what, std::size_t coordinate)
      : DomainError(what), coordinate_(coordinate) {}
  /// 1-based coordinate whose polynomial failed.
  std::size_t coordinate() const { return coordinate_; }

private:
  std::size_t coordinate_;
};

/// Interpolates the group law from collector evaluations.
///
/// Support of zeta_i: binomial products in xi_j, eta_j (j <= i) whose
/// weighted degree (xi_j, eta_j weigh wt(b_j)) is <= wt(b_i); omega_i
/// additionally allows C(lambda, r) with r <= wt(b_i). The evaluation grid
/// is the support lattice itself, on which the system is unit
/// lower-triangular, plus an equal number of random points in a box; the
/// coefficients are solved exactly on the lattice and every remaining grid
/// row is checked, then a disjoint random validation set is checked.
GroupLaw fit_group_law(const ContextPtr &ctx, const FitOptions &options = {});

std::vector<Rational> law_mul(const GroupLaw &law, std::span<const Rational> a, std::span<const Rational> b);
std::vector<Rational> law_pow(const GroupLaw &law, std::span<const Rational> a, const Rational &lambda);

/// zeta_i mentions only xi_j, eta_j with j <= i; omega_i only lambda, xi_j with j <= i.
bool is_triangular(const GroupLaw &law);

} // namespace nilpotent
