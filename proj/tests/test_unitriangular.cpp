#include "nilpotent/collector.hpp"
#include "nilpotent/errors.hpp"
#include "nilpotent/magnus.hpp"
#include "nilpotent/unitriangular.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace nilpotent;
using namespace nilpotent::testing;

namespace {

const CoeffRing Z = CoeffRing::integers();
const CoeffRing Q = CoeffRing::rationals();

UniTriMatrix E(std::size_t n, std::size_t r, std::size_t c, long v = 1, CoeffRing ring = Z) {
  return UniTriMatrix::elementary(n, r, c, v, ring);
}

UniTriMatrix random_matrix(Rng &rng, std::size_t n, CoeffRing ring, std::size_t min_level = 1) {
  auto m = UniTriMatrix::identity(n, ring);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + min_level; c < n; ++c)
      if (uniform(rng, 0, 2) != 0)
        m.set_entry(r, c, uniform(rng, -3, 3));
  return m;
}

Dense to_dense(const UniTriMatrix &m) {
  Dense d;
  for (const auto &row : m.dense()) {
    std::vector<Integer> r;
    for (const auto &v : row)
      r.push_back(v.get_num());
    d.push_back(r);
  }
  return d;
}

} // namespace

TEST_CASE("3x3 examples") {
  auto x = E(3, 0, 1), y = E(3, 1, 2);
  CHECK(mat_commutator(x, y) == E(3, 0, 2));
  CHECK(mat_inv(x) == E(3, 0, 1, -1));
  CHECK(mat_pow(x, 5) == E(3, 0, 1, 5));
  CHECK(level(E(3, 0, 2)) == 2);
  CHECK(level(UniTriMatrix::identity(4, Z)) == 4);
  CHECK(level(mat_commutator(x, y)) == 2);
  CHECK_THROWS_AS(mat_mul(x, E(4, 0, 1)), DomainError);
  CHECK_THROWS_AS(mat_mul(x, E(3, 0, 1, 1, Q)), DomainError);
  CHECK_THROWS_AS(UniTriMatrix::from_dense({{1, 0}, {1, 1}}, Z), DomainError);
  CHECK_THROWS_AS(UniTriMatrix::from_dense({{2, 0}, {0, 1}}, Z), DomainError);
}

TEST_CASE("arithmetic agrees with dense multiplication") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 6));
    auto a = random_matrix(rng, n, Z), b = random_matrix(rng, n, Z);
    CHECK(to_dense(mat_mul(a, b)) == dense_mul(to_dense(a), to_dense(b)));
    CHECK(to_dense(mat_inv(a)) == dense_inv(to_dense(a)));
    int e = uniform(rng, -4, 4);
    CHECK(to_dense(mat_pow(a, e)) == dense_pow(to_dense(a), e));
  }
}

TEST_CASE("level filtration and subgroup property") {
  Rng rng(37);
  for (CoeffRing ring : {Z, CoeffRing::prime_field(2), CoeffRing::prime_field(5)})
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 6));
      std::size_t i = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(n) - 1));
      std::size_t j = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(n) - 1));
      auto a = random_matrix(rng, n, ring, i), b = random_matrix(rng, n, ring, j);
      CHECK(level(a) >= i);
      CHECK(level(mat_commutator(a, b)) >= std::min(n, level(a) + level(b)));
      auto c = random_matrix(rng, n, ring, i);
      CHECK(level(mat_mul(a, c)) >= i);
      CHECK(level(mat_inv(a)) >= i);
    }
}

TEST_CASE("class_witness") {
  auto t = class_witness(3, 2);
  REQUIRE(t.size() == 2);
  CHECK(mat_commutator(t[0], t[1]) == E(3, 0, 2, 1, CoeffRing::prime_field(2)));
  auto t4 = class_witness(4, 2);
  CHECK(left_normed_commutator(t4) == E(4, 0, 3, 1, CoeffRing::prime_field(2)));
  auto t2 = class_witness(2, 2);
  CHECK(t2.size() == 1);
  CHECK(mat_commutator(t2[0], t2[0]).is_identity());
  CHECK_THROWS_AS(class_witness(1, 2), DomainError);
  CHECK_THROWS_AS(class_witness(3, 4), DomainError);
}

TEST_CASE("binomial powers and roots") {
  CHECK(binomial_pow(E(2, 0, 1, 2, Q), Rational(1, 2)) == E(2, 0, 1, 1, Q));
  CHECK_THROWS_AS(binomial_pow(E(2, 0, 1), 2), DomainError);
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 5));
    auto a = random_matrix(rng, n, Q);
    int m = uniform(rng, 1, 5);
    CHECK(binomial_pow(a, m) == mat_pow(a, m));
    CHECK(binomial_pow(a, -m) == mat_pow(a, -m));
    auto root = binomial_pow(a, Rational(1, m));
    CHECK(mat_pow(root, m) == a);
    CHECK(binomial_pow(root, m) == a);
  }
}

TEST_CASE("regular representation") {
  auto rep1 = regular_rep(2, 1, Z);
  CHECK(rep1.dimension() == 3);
  CHECK(rep1.generator(1) == E(3, 0, 1));
  CHECK(regular_rep_dimension(2, 2) == 7);
  CHECK(regular_rep_dimension(3, 3) == 40);

  auto rep = regular_rep(2, 2, Z);
  REQUIRE(rep.dimension() == 7);
  auto img = rep.image(parse_word("[x1,x2]", 2));
  // Row of the basis element 1 reads off u1u2 - u2u1.
  auto expected = UniTriMatrix::identity(7, Z);
  auto pos = [&](Monomial m) {
    return static_cast<std::size_t>(std::find(rep.basis().begin(), rep.basis().end(), m) - rep.basis().begin());
  };
  expected.set_entry(0, pos({1, 2}), 1);
  expected.set_entry(0, pos({2, 1}), -1);
  CHECK(img == expected);
  CHECK(rep.image(GroupElement::identity(NilpotentContext::make(2, 2))).is_identity());
  CHECK(mat_mul(rep.generator(1), rep.generator_inverse(1)).is_identity());

  auto ctx = NilpotentContext::make(2, 3);
  auto rep3 = regular_rep(2, 3, Z);
  Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_element(rng, ctx, 2), h = random_element(rng, ctx, 2);
    CHECK(rep3.image(g) == rep3.image(representative_word(g)));
    CHECK(rep3.image(mul(g, h)) == mat_mul(rep3.image(g), rep3.image(h)));
    CHECK(rep3.image(g).is_identity() == g.is_identity());
    Word w = random_word(rng, 2, 6);
    auto first_row = rep3.image(w).upper_row(0);
    auto m = magnus_embed(w, 2, 3, Z);
    for (const auto &[mono, v] : m.terms()) {
      if (mono.empty())
        continue;
      auto col = static_cast<std::size_t>(std::find(rep3.basis().begin(), rep3.basis().end(), mono) -
                                          rep3.basis().begin());
      CHECK(first_row[col] == v);
    }
  }
  CHECK_THROWS_AS(regular_rep(2, 3, Z).image(GroupElement::identity(NilpotentContext::make(2, 2))), DomainError);
}
