#include "nilpotent/collector.hpp"
#include "nilpotent/errors.hpp"
#include "nilpotent/magnus.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace nilpotent;
using namespace nilpotent::testing;

namespace {

const CoeffRing Z = CoeffRing::integers();
const CoeffRing Q = CoeffRing::rationals();

TruncSeries series(int D, CoeffRing ring, std::initializer_list<std::pair<Monomial, long>> terms) {
  TruncSeries s(D, ring);
  for (const auto &[m, v] : terms)
    s.add_term(m, v);
  return s;
}

NcPoly as_nc(const TruncSeries &s) {
  NcPoly out;
  for (const auto &[m, v] : s.terms())
    out[m] = v.get_num();
  return out;
}

// Rank of an integer matrix by fraction-free elimination over Q.
std::size_t rank_of(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0)
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k < cols; ++k)
        rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

} // namespace

TEST_CASE("ring arithmetic") {
  auto u1 = TruncSeries::variable(1, 2, Z), u2 = TruncSeries::variable(2, 2, Z);
  CHECK(ring_mul(u1, u2) == series(2, Z, {{{1, 2}, 1}}));
  CHECK(ring_mul(ring_mul(u1, u2), u1).is_zero());
  auto one = TruncSeries::one(2, Z);
  CHECK(ring_mul(add(one, u1), add(one, u2)) == series(2, Z, {{{}, 1}, {{1}, 1}, {{2}, 1}, {{1, 2}, 1}}));
  CHECK_THROWS_AS(add(one, TruncSeries::one(3, Z)), DomainError);
  CHECK_THROWS_AS(add(one, TruncSeries::one(2, Q)), DomainError);
  CHECK((u1 - u1).is_zero());
}

TEST_CASE("unit_inverse") {
  auto s = series(3, Z, {{{}, 1}, {{1}, 1}});
  CHECK(unit_inverse(s) == series(3, Z, {{{}, 1}, {{1}, -1}, {{1, 1}, 1}, {{1, 1, 1}, -1}}));
  CHECK(unit_inverse(TruncSeries::one(3, Z)) == TruncSeries::one(3, Z));
  auto t = series(2, Z, {{{}, 1}, {{1}, 1}, {{2}, 1}});
  auto expected = series(2, Z, {{{}, 1}, {{1}, -1}, {{2}, -1}, {{1, 1}, 1}, {{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, 1}});
  CHECK(unit_inverse(t) == expected);
  CHECK(ring_mul(t, expected) == TruncSeries::one(2, Z));
  CHECK(ring_mul(expected, t) == TruncSeries::one(2, Z));
  CHECK_THROWS_AS(unit_inverse(series(2, Z, {{{}, 2}})), DomainError);
}

TEST_CASE("series over F_p reduce coefficients") {
  auto F3 = CoeffRing::prime_field(3);
  CHECK(magnus_embed(parse_word("x1^2", 1), 1, 1, F3) == series(1, F3, {{{}, 1}, {{1}, 2}}));
  CHECK(magnus_embed(parse_word("x1^3", 1), 1, 2, F3) == TruncSeries::one(2, F3));
  CHECK_THROWS_AS(CoeffRing::prime_field(4), DomainError);
  CHECK(CoeffRing::parse("Fp:7").prime() == 7);
  CHECK_THROWS_AS(CoeffRing::parse("R"), ParseError);
}

TEST_CASE("magnus_embed examples and oracle") {
  CHECK(magnus_embed(Word::generator(1), 2, 2, Z) == series(2, Z, {{{}, 1}, {{1}, 1}}));
  CHECK(magnus_embed(parse_word("[x1,x2]", 2), 2, 2, Z) == series(2, Z, {{{}, 1}, {{1, 2}, 1}, {{2, 1}, -1}}));
  CHECK_THROWS_AS(magnus_embed(Word::generator(3), 2, 2, Z), DomainError);

  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    Word u = random_word(rng, 3, 6), v = random_word(rng, 3, 6);
    auto mu = magnus_embed(u, 3, 4, Z);
    CHECK(as_nc(mu) == nc_embed(u, 4));
    CHECK(magnus_embed(concat(u, v), 3, 4, Z) == ring_mul(mu, magnus_embed(v, 3, 4, Z)));
  }
}

TEST_CASE("lie_expand") {
  auto x1 = CommutatorExpr::leaf(1), x2 = CommutatorExpr::leaf(2);
  CHECK(lie_expand(x1, 2, 3, Z) == series(3, Z, {{{1}, 1}}));
  CHECK(lie_expand(CommutatorExpr::bracket(x1, x2), 2, 3, Z) == series(3, Z, {{{1, 2}, 1}, {{2, 1}, -1}}));
  CHECK(lie_expand(CommutatorExpr::bracket(CommutatorExpr::bracket(x1, x2), x1), 2, 3, Z) ==
        series(3, Z, {{{1, 1, 2}, -1}, {{1, 2, 1}, 2}, {{2, 1, 1}, -1}}));
  CHECK_THROWS_AS(lie_expand(CommutatorExpr::bracket(x1, x2), 2, 1, Z), DomainError);
}

TEST_CASE("leading term of a basic commutator is its Lie element") {
  for (int q = 2; q <= 3; ++q) {
    int c = q == 2 ? 5 : 4;
    auto basis = generate_basis(q, c);
    for (int w = 1; w <= c; ++w) {
      std::vector<std::vector<Rational>> rows;
      std::vector<Monomial> columns;
      std::vector<TruncSeries> lies;
      for (const auto &entry : basis.entries()) {
        if (entry.weight != w)
          continue;
        auto m = magnus_embed(expand_commutator(entry.expr), q, w, Z);
        auto lie = lie_expand(entry.expr, q, w, Z);
        CHECK((m - TruncSeries::one(w, Z) - lie).is_zero());
        lies.push_back(lie);
        for (const auto &[mono, v] : lie.terms())
          if (std::find(columns.begin(), columns.end(), mono) == columns.end())
            columns.push_back(mono);
      }
      for (const auto &lie : lies) {
        std::vector<Rational> row;
        for (const auto &mono : columns)
          row.push_back(lie.coefficient(mono));
        rows.push_back(std::move(row));
      }
      CHECK(rank_of(rows) == lies.size());
    }
  }
}

TEST_CASE("dimension_weight") {
  CHECK(dimension_weight(parse_word("x1", 2), 2, 3) == 1);
  CHECK(dimension_weight(parse_word("[x1,x2]", 2), 2, 3) == 2);
  CHECK(dimension_weight(parse_word("[x1,x2,x2]", 2), 2, 3) == 3);
  CHECK(!dimension_weight(Word(), 2, 3));
  CHECK(!dimension_weight(parse_word("[x1,x2,x2,x1]", 2), 2, 3));

  auto ctx = NilpotentContext::make(2, 4);
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    Word w = random_word(rng, 2, 10);
    int k = lcs_weight(collect(ctx, w));
    auto d = dimension_weight(w, 2, 4);
    CHECK((k == 5 ? !d : d == k));
  }
}

TEST_CASE("hilbert_coeffs") {
  CHECK(hilbert_coeffs(2, 1, 3) == std::vector<Integer>{1, 2, 3, 4});
  CHECK(hilbert_coeffs(2, 2, 4) == std::vector<Integer>{1, 2, 4, 6, 9});
  CHECK(hilbert_coeffs(2, 3, 3) == std::vector<Integer>{1, 2, 4, 8});

  // Brute force: multisets of basis entries with total weight j.
  for (int c = 1; c <= 3; ++c) {
    auto basis = generate_basis(2, c);
    std::vector<Integer> counts(11);
    counts[0] = 1;
    for (const auto &entry : basis.entries())
      for (int j = entry.weight; j <= 10; ++j)
        counts[static_cast<std::size_t>(j)] += counts[static_cast<std::size_t>(j - entry.weight)];
    CHECK(hilbert_coeffs(2, c, 10) == counts);
  }
}

TEST_CASE("residual_witness") {
  auto w1 = residual_witness(parse_word("x1^2", 1), 3, 2);
  CHECK(w1.degree == 1);
  CHECK(w1.monomial == Monomial{1});
  CHECK(w1.coefficient == 2);
  CHECK(w1.group_order_exponent == 2);

  auto w2 = residual_witness(parse_word("[x1,x2]", 2), 2, 2);
  CHECK(w2.degree == 4);
  CHECK(w2.monomial == Monomial{1, 2, 1, 2});
  CHECK(w2.coefficient == 1);
  CHECK(w2.group_order_exponent == 2 + 4 + 8 + 16);

  auto w3 = residual_witness(Word::generator(1), 2, 2);
  CHECK(w3.degree == 1);
  CHECK(w3.coefficient == 1);

  auto w4 = residual_witness(parse_word("x1^-6x2^4", 2), 2, 2);
  CHECK(w4.degree == 2 + 4);
  CHECK(w4.monomial == Monomial{1, 1, 2, 2, 2, 2});
  CHECK(w4.coefficient != 0);

  CHECK_THROWS_AS(residual_witness(Word(), 2, 2), DomainError);
  CHECK_THROWS_AS(residual_witness(parse_word("x1x1^-1", 2), 2, 2), DomainError);

  Rng rng(29);
  for (unsigned long p : {2ul, 3ul, 5ul})
    for (int trial = 0; trial < 30; ++trial) {
      Word w = random_word(rng, 2, 5, 3);
      if (w.empty())
        continue;
      auto wit = residual_witness(w, p, 2);
      CHECK(wit.coefficient > 0);
      CHECK(wit.coefficient < static_cast<long>(p));
      auto raw = nc_embed(w, static_cast<std::size_t>(wit.degree));
      Integer expected = raw.count(wit.monomial) ? raw.at(wit.monomial) : Integer(0);
      expected %= static_cast<long>(p);
      if (expected < 0)
        expected += static_cast<long>(p);
      CHECK(wit.coefficient == expected);
    }
}
