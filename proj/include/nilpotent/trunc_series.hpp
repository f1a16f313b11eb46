#pragma once

#include "nilpotent/ring.hpp"

#include <map>
#include <vector>

namespace nilpotent {

/// Product u_{i1} u_{i2} ... u_{ik} of non-commuting variables (1-based indices).
using Monomial = std::vector<int>;

/// Degree first, then lexicographic on the index sequence.
struct MonomialLess {
  bool operator()(const Monomial &a, const Monomial &b) const {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  }
};

/// Element of the free associative ring over a coefficient ring, modulo
/// all monomials of degree > D. Only nonzero coefficients are stored.
class TruncSeries {
public:
  using Terms = std::map<Monomial, Rational, MonomialLess>;

  TruncSeries(int degree_bound, CoeffRing ring);

  static TruncSeries one(int degree_bound, CoeffRing ring);
  static TruncSeries constant(const Rational &value, int degree_bound, CoeffRing ring);
  /// The variable u_i.
  static TruncSeries variable(int i, int degree_bound, CoeffRing ring);

  int degree_bound() const { return degree_bound_; }
  const CoeffRing &ring() const { return ring_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial &m) const;
  /// Adds value to the coefficient of m (dropped if deg m > D).
  void add_term(const Monomial &m, const Rational &value);

  /// Degree-k homogeneous part.
  TruncSeries homogeneous(int k) const;
  /// Lowest degree with a nonzero term, -1 for zero.
  int lowest_degree() const;

  TruncSeries &operator+=(const TruncSeries &other);
  TruncSeries &operator-=(const TruncSeries &other);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries &b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries &b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b);
  TruncSeries scaled(const Rational &factor) const;

  friend bool operator==(const TruncSeries &a, const TruncSeries &b) {
    return a.degree_bound_ == b.degree_bound_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

private:
  void check_compatible(const TruncSeries &other) const;

  int degree_bound_;
  CoeffRing ring_;
  Terms terms_;
};

TruncSeries add(const TruncSeries &a, const TruncSeries &b);
TruncSeries ring_mul(const TruncSeries &a, const TruncSeries &b);
/// Inverse of a series with constant term 1: 1 - v + v^2 - ... for s = 1 + v.
TruncSeries unit_inverse(const TruncSeries &s);
/// s^n for n >= 0; for n < 0 requires constant term 1.
TruncSeries series_pow(const TruncSeries &s, const Integer &n);

} // namespace nilpotent
