#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nilpotent {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficient ring tag: the integers, the rationals, or a prime field.
/// Elements of every ring are carried as canonical rationals; reduce()
/// maps an arbitrary rational to the ring's representative.
class CoeffRing {
public:
  enum class Kind { integers, rationals, prime_field };

  static CoeffRing integers() { return CoeffRing(Kind::integers, 0); }
  static CoeffRing rationals() { return CoeffRing(Kind::rationals, 0); }
  /// Throws DomainError unless p is prime.
  static CoeffRing prime_field(unsigned long p);
  /// Accepts "Z", "Q" or "Fp:<p>".
  static CoeffRing parse(std::string_view text);

  Kind kind() const { return kind_; }
  unsigned long prime() const { return prime_; }
  bool is_prime_field() const { return kind_ == Kind::prime_field; }

  /// Canonical representative. Over Z a non-integer is a DomainError; over
  /// F_p the denominator is inverted modulo p (DomainError if p divides it).
  Rational reduce(const Rational &x) const;
  bool is_zero(const Rational &x) const { return sgn(x) == 0; }

  std::string name() const;

  friend bool operator==(const CoeffRing &, const CoeffRing &) = default;

private:
  CoeffRing(Kind kind, unsigned long p) : kind_(kind), prime_(p) {}

  Kind kind_;
  unsigned long prime_;
};

/// Generalised binomial coefficient x(x-1)...(x-r+1)/r! at a rational point.
Rational binomial(const Rational &x, unsigned long r);

/// Parses "a" or "a/b" (optional leading '-'); throws ParseError.
Rational parse_rational(std::string_view text);

} // namespace nilpotent
