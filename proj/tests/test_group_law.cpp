#include "nilpotent/errors.hpp"
#include "nilpotent/group_law.hpp"
#include "nilpotent/unitriangular.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace nilpotent;
using namespace nilpotent::testing;

namespace {

std::vector<Rational> R(std::initializer_list<Rational> xs) { return xs; }

LawVariable xi(int i) { return {LawVariable::Kind::xi, i}; }
LawVariable eta(int i) { return {LawVariable::Kind::eta, i}; }
LawVariable lambda() { return {LawVariable::Kind::lambda, 0}; }

// Evaluates a polynomial at integer values via products of binomials, to
// compare against closed forms without going through law_mul.
Rational eval(const IntPolynomial &p, const std::map<LawVariable, Rational> &values) {
  return p.evaluate([&](const LawVariable &v) { return values.at(v); });
}

std::vector<Rational> random_rationals(Rng &rng, std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) {
    Rational r(uniform(rng, -9, 9), uniform(rng, 1, 4));
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

std::vector<Rational> to_rationals(const GroupElement &g) { return {g.exponents().begin(), g.exponents().end()}; }

} // namespace

TEST_CASE("Heisenberg closed forms") {
  auto law = fit_group_law(NilpotentContext::make(2, 2));
  CHECK(is_triangular(law));
  Rng rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_rationals(rng, 3), b = random_rationals(rng, 3);
    Rational l = random_rationals(rng, 1)[0];
    std::map<LawVariable, Rational> v{{xi(1), a[0]},  {xi(2), a[1]},  {xi(3), a[2]}, {eta(1), b[0]},
                                      {eta(2), b[1]}, {eta(3), b[2]}, {lambda(), l}};
    CHECK(eval(law.mul_polys[0], v) == a[0] + b[0]);
    CHECK(eval(law.mul_polys[1], v) == a[1] + b[1]);
    CHECK(eval(law.mul_polys[2], v) == a[2] + b[2] + a[1] * b[0]);
    CHECK(eval(law.pow_polys[2], v) == l * a[2] + binomial(l, 2) * a[0] * a[1]);
  }
  CHECK(law_mul(law, R({1, 2, 3}), R({4, 5, 6})) == R({5, 7, 17}));
  CHECK(law_pow(law, R({1, 1, 1}), 2) == R({2, 2, 3}));
  CHECK(law_pow(law, R({2, 2, 3}), Rational(1, 2)) == R({1, 1, 1}));
  CHECK(law_pow(law, R({7, -3, 5}), 0) == R({0, 0, 0}));
  CHECK(law_pow(law, R({1, 1, 0}), 3) == R({3, 3, 3}));
  CHECK_THROWS_AS(law_mul(law, R({1, 2}), R({1, 2, 3})), DomainError);
}

TEST_CASE("fitted laws reproduce the collector and the group axioms") {
  Rng rng(67);
  for (auto [q, c] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 4}}) {
    auto ctx = NilpotentContext::make(q, c);
    auto law = fit_group_law(ctx);
    CHECK(is_triangular(law));
    for (int trial = 0; trial < 20; ++trial) {
      auto g = random_element(rng, ctx, 5), h = random_element(rng, ctx, 5);
      int l = uniform(rng, -5, 5);
      CHECK(law_mul(law, to_rationals(g), to_rationals(h)) == to_rationals(mul(g, h)));
      CHECK(law_pow(law, to_rationals(g), l) == to_rationals(pow(g, l)));
      auto a = random_rationals(rng, ctx->rank()), b = random_rationals(rng, ctx->rank()),
           d = random_rationals(rng, ctx->rank());
      CHECK(law_mul(law, law_mul(law, a, b), d) == law_mul(law, a, law_mul(law, b, d)));
      CHECK(law_mul(law, a, law_pow(law, a, -1)) == std::vector<Rational>(ctx->rank()));
      Rational x = random_rationals(rng, 1)[0], y = random_rationals(rng, 1)[0];
      CHECK(law_pow(law, a, x + y) == law_mul(law, law_pow(law, a, x), law_pow(law, a, y)));
      CHECK(law_pow(law, a, x * y) == law_pow(law, law_pow(law, a, x), y));
    }
  }
}

TEST_CASE("roots agree with matrix binomial powers") {
  auto ctx = NilpotentContext::make(2, 2);
  auto law = fit_group_law(ctx);
  auto rep = regular_rep(2, 2, CoeffRing::rationals());
  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_rationals(rng, 3);
    int m = uniform(rng, 1, 5);
    auto root = law_pow(law, a, Rational(1, m));
    CHECK(law_pow(law, root, m) == a);
    CHECK(rep.image(*ctx, root) == binomial_pow(rep.image(*ctx, a), Rational(1, m)));
  }
}

TEST_CASE("fit limits") {
  FitOptions opts;
  opts.max_class = 2;
  CHECK_THROWS_AS(fit_group_law(NilpotentContext::make(2, 3), opts), DomainError);
  CHECK(LawVariable::parse("eta_12").index == 12);
  CHECK(LawVariable::parse("lambda").kind == LawVariable::Kind::lambda);
  CHECK_THROWS_AS(LawVariable::parse("zeta_1"), ParseError);
  FitError err("bad", 4);
  CHECK(err.coordinate() == 4);
}
