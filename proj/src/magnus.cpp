#include "nilpotent/magnus.hpp"

#include "nilpotent/errors.hpp"
#include "nilpotent/hall_basis.hpp"

#include <limits>

namespace nilpotent {

namespace {

void check_generators(const Word &w, int q) {
  for (const auto &l : w.letters())
    if (l.generator < 1 || l.generator > q)
      throw DomainError("generator x" + std::to_string(l.generator) + " outside 1.." + std::to_string(q));
}

TruncSeries one_plus_u(int i, int degree_bound, const CoeffRing &ring) {
  return TruncSeries::one(degree_bound, ring) + TruncSeries::variable(i, degree_bound, ring);
}

} // namespace

TruncSeries magnus_embed(const Word &w, int q, int degree_bound, CoeffRing ring) {
  check_generators(w, q);
  TruncSeries result = TruncSeries::one(degree_bound, ring);
  for (const auto &l : w.letters())
    result = result * series_pow(one_plus_u(l.generator, degree_bound, ring), l.exponent);
  return result;
}

TruncSeries lie_expand(const CommutatorExpr &e, int q, int degree_bound, CoeffRing ring) {
  if (e.weight() > degree_bound)
    throw DomainError("commutator weight " + std::to_string(e.weight()) + " exceeds degree " +
                      std::to_string(degree_bound));
  if (e.is_leaf()) {
    if (e.generator() > q)
      throw DomainError("generator x" + std::to_string(e.generator()) + " outside 1.." + std::to_string(q));
    return TruncSeries::variable(e.generator(), degree_bound, ring);
  }
  TruncSeries a = lie_expand(e.left(), q, degree_bound, ring);
  TruncSeries b = lie_expand(e.right(), q, degree_bound, ring);
  return a * b - b * a;
}

std::optional<int> dimension_weight(const Word &w, int q, int degree_bound) {
  CoeffRing Q = CoeffRing::rationals();
  TruncSeries d = magnus_embed(w, q, degree_bound, Q) - TruncSeries::one(degree_bound, Q);
  int low = d.lowest_degree();
  if (low < 1)
    return std::nullopt;
  return low;
}

std::vector<Integer> hilbert_coeffs(int q, int c, int jmax) {
  if (q < 1 || c < 1 || jmax < 0)
    throw DomainError("hilbert_coeffs requires q >= 1, c >= 1, jmax >= 0");
  const auto len = static_cast<std::size_t>(jmax) + 1;
  std::vector<Integer> series(len);
  series[0] = 1;
  for (int i = 1; i <= c; ++i) {
    Integer m = witt_number(i, q);
    // multiply by (1 - t^i)^{-1}, m times: prefix sums with stride i
    for (Integer r = 0; r < m; ++r)
      for (std::size_t j = static_cast<std::size_t>(i); j < len; ++j)
        series[j] += series[j - static_cast<std::size_t>(i)];
  }
  return series;
}

Witness residual_witness(const Word &w, unsigned long p, int q) {
  CoeffRing field = CoeffRing::prime_field(p);
  if (w.empty())
    throw DomainError("the trivial word has no residual witness");
  check_generators(w, q);

  Witness out;
  out.word = w;
  out.prime = p;
  out.generators = q;

  // Word::from_letters already merged adjacent letters on the same generator.
  Integer degree = 0;
  Integer pz = p;
  for (const auto &l : w.letters()) {
    Integer m = abs(l.exponent);
    Integer pp = 1;
    while (mpz_divisible_p(m.get_mpz_t(), pz.get_mpz_t())) {
      m /= pz;
      pp *= pz;
    }
    degree += pp;
    if (!pp.fits_sint_p() || degree > 4096)
      throw DomainError("witness degree too large for the word " + render(w));
    out.monomial.insert(out.monomial.end(), pp.get_ui(), l.generator);
  }
  out.degree = static_cast<int>(degree.get_si());

  TruncSeries image = magnus_embed(w, q, out.degree, field);
  out.coefficient = image.coefficient(out.monomial);
  if (out.coefficient == 0)
    throw DomainError("witness coefficient vanished for " + render(w));

  out.group_order_exponent = 0;
  Integer qpow = 1;
  for (int j = 1; j <= out.degree; ++j) {
    qpow *= q;
    out.group_order_exponent += qpow;
  }
  return out;
}

} // namespace nilpotent
