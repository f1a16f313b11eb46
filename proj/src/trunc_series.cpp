#include "nilpotent/trunc_series.hpp"

#include "nilpotent/errors.hpp"

namespace nilpotent {

TruncSeries::TruncSeries(int degree_bound, CoeffRing ring) : degree_bound_(degree_bound), ring_(ring) {
  if (degree_bound < 0)
    throw DomainError("negative truncation degree");
}

TruncSeries TruncSeries::one(int degree_bound, CoeffRing ring) {
  return constant(Rational(1), degree_bound, ring);
}

TruncSeries TruncSeries::constant(const Rational &value, int degree_bound, CoeffRing ring) {
  TruncSeries s(degree_bound, ring);
  s.add_term({}, value);
  return s;
}

TruncSeries TruncSeries::variable(int i, int degree_bound, CoeffRing ring) {
  if (i < 1)
    throw DomainError("variable index must be positive");
  TruncSeries s(degree_bound, ring);
  s.add_term({i}, Rational(1));
  return s;
}

Rational TruncSeries::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncSeries::add_term(const Monomial &m, const Rational &value) {
  if (static_cast<int>(m.size()) > degree_bound_)
    return;
  auto [it, inserted] = terms_.try_emplace(m, 0);
  it->second = ring_.reduce(it->second + value);
  if (it->second == 0)
    terms_.erase(it);
}

TruncSeries TruncSeries::homogeneous(int k) const {
  TruncSeries out(degree_bound_, ring_);
  for (const auto &[m, v] : terms_)
    if (static_cast<int>(m.size()) == k)
      out.terms_.emplace(m, v);
  return out;
}

int TruncSeries::lowest_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size());
}

void TruncSeries::check_compatible(const TruncSeries &other) const {
  if (degree_bound_ != other.degree_bound_)
    throw DomainError("truncation degrees differ");
  if (!(ring_ == other.ring_))
    throw DomainError("coefficient rings differ");
}

TruncSeries &TruncSeries::operator+=(const TruncSeries &other) {
  check_compatible(other);
  for (const auto &[m, v] : other.terms_)
    add_term(m, v);
  return *this;
}

TruncSeries &TruncSeries::operator-=(const TruncSeries &other) {
  check_compatible(other);
  for (const auto &[m, v] : other.terms_)
    add_term(m, -v);
  return *this;
}

TruncSeries operator*(const TruncSeries &a, const TruncSeries &b) {
  a.check_compatible(b);
  TruncSeries out(a.degree_bound_, a.ring_);
  const auto D = static_cast<std::size_t>(a.degree_bound_);
  Monomial buf;
  for (const auto &[ma, va] : a.terms_) {
    if (ma.size() > D)
      break;
    for (const auto &[mb, vb] : b.terms_) {
      if (ma.size() + mb.size() > D)
        break; // terms are degree-ordered
      buf.assign(ma.begin(), ma.end());
      buf.insert(buf.end(), mb.begin(), mb.end());
      out.add_term(buf, va * vb);
    }
  }
  return out;
}

TruncSeries TruncSeries::scaled(const Rational &factor) const {
  TruncSeries out(degree_bound_, ring_);
  for (const auto &[m, v] : terms_)
    out.add_term(m, v * factor);
  return out;
}

TruncSeries add(const TruncSeries &a, const TruncSeries &b) { return a + b; }

TruncSeries ring_mul(const TruncSeries &a, const TruncSeries &b) { return a * b; }

TruncSeries unit_inverse(const TruncSeries &s) {
  if (s.coefficient({}) != 1)
    throw DomainError("unit_inverse needs constant term 1");
  TruncSeries one = TruncSeries::one(s.degree_bound(), s.ring());
  TruncSeries minus_v = one - s; // -v
  TruncSeries result = one;
  TruncSeries term = one;
  for (int k = 1; k <= s.degree_bound(); ++k) {
    term = term * minus_v;
    if (term.is_zero())
      break;
    result += term;
  }
  return result;
}

TruncSeries series_pow(const TruncSeries &s, const Integer &n) {
  if (n < 0)
    return series_pow(unit_inverse(s), -n);
  TruncSeries result = TruncSeries::one(s.degree_bound(), s.ring());
  TruncSeries base = s;
  Integer e = n;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t()))
      result = result * base;
    e >>= 1;
    if (e > 0)
      base = base * base;
  }
  return result;
}

} // namespace nilpotent
