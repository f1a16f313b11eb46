#include "nilpotent/ring.hpp"

#include "nilpotent/errors.hpp"

#include <cctype>

namespace nilpotent {

CoeffRing CoeffRing::prime_field(unsigned long p) {
  Integer value = p;
  if (p < 2 || mpz_probab_prime_p(value.get_mpz_t(), 30) == 0)
    throw DomainError("F_p requires a prime, got " + std::to_string(p));
  return CoeffRing(Kind::prime_field, p);
}

CoeffRing CoeffRing::parse(std::string_view text) {
  if (text == "Z")
    return integers();
  if (text == "Q")
    return rationals();
  if (text.starts_with("Fp:") && text.size() > 3) {
    unsigned long p = 0;
    for (char ch : text.substr(3)) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ParseError("bad prime in ring name '" + std::string(text) + "'");
      p = p * 10 + static_cast<unsigned long>(ch - '0');
      if (p > 1000000000UL)
        throw ParseError("prime too large in ring name");
    }
    return prime_field(p);
  }
  throw ParseError("unknown ring '" + std::string(text) + "' (expected Z, Q or Fp:<p>)");
}

Rational CoeffRing::reduce(const Rational &x) const {
  switch (kind_) {
  case Kind::rationals:
    return x;
  case Kind::integers:
    if (x.get_den() != 1)
      throw DomainError("non-integral value " + x.get_str() + " in Z");
    return x;
  case Kind::prime_field: {
    Integer p = prime_;
    Integer num = x.get_num() % p;
    if (num < 0)
      num += p;
    if (x.get_den() != 1) {
      Integer inv;
      Integer den = x.get_den();
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw DomainError("denominator " + den.get_str() + " not invertible mod " + p.get_str());
      num = (num * inv) % p;
    }
    return Rational(num);
  }
  }
  return x;
}

std::string CoeffRing::name() const {
  switch (kind_) {
  case Kind::integers:
    return "Z";
  case Kind::rationals:
    return "Q";
  case Kind::prime_field:
    return "Fp:" + std::to_string(prime_);
  }
  return "?";
}

Rational binomial(const Rational &x, unsigned long r) {
  Rational result = 1;
  for (unsigned long k = 0; k < r; ++k) {
    result *= x - k;
    result /= k + 1;
  }
  return result;
}

Rational parse_rational(std::string_view text) {
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-')
      s.remove_prefix(1);
    if (s.empty())
      return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer d{std::string(den)};
  if (d == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer{std::string(num)}, d);
  q.canonicalize();
  return q;
}

} // namespace nilpotent
