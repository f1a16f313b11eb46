#include "nilpotent/unitriangular.hpp"

#include "nilpotent/errors.hpp"
#include "nilpotent/magnus.hpp"

namespace nilpotent {

namespace {

using Rows = std::vector<UniTriMatrix::Row>;

void add_into(UniTriMatrix::Row &row, std::size_t col, const Rational &value, const CoeffRing &ring) {
  auto [it, inserted] = row.try_emplace(col, 0);
  it->second = ring.reduce(it->second + value);
  if (it->second == 0)
    row.erase(it);
}

// Product of two strictly upper triangular matrices given by their rows.
Rows strict_product(const Rows &a, const Rows &b, const CoeffRing &ring) {
  Rows out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (const auto &[k, va] : a[r])
      for (const auto &[col, vb] : b[k])
        add_into(out[r], col, va * vb, ring);
  return out;
}

bool all_zero(const Rows &rows) {
  for (const auto &row : rows)
    if (!row.empty())
      return false;
  return true;
}

void check_same_shape(const UniTriMatrix &a, const UniTriMatrix &b) {
  if (a.dimension() != b.dimension())
    throw DomainError("matrix dimensions differ: " + std::to_string(a.dimension()) + " vs " +
                      std::to_string(b.dimension()));
  if (!(a.ring() == b.ring()))
    throw DomainError("matrix rings differ: " + a.ring().name() + " vs " + b.ring().name());
}

Rows strict_part(const UniTriMatrix &a) {
  Rows rows(a.dimension());
  for (std::size_t r = 0; r < a.dimension(); ++r)
    rows[r] = a.upper_row(r);
  return rows;
}

} // namespace

UniTriMatrix UniTriMatrix::identity(std::size_t n, CoeffRing ring) {
  if (n == 0)
    throw DomainError("matrix dimension must be positive");
  return UniTriMatrix(n, ring);
}

UniTriMatrix UniTriMatrix::elementary(std::size_t n, std::size_t row, std::size_t col, const Rational &value,
                                      CoeffRing ring) {
  UniTriMatrix m = identity(n, ring);
  m.set_entry(row, col, value);
  return m;
}

UniTriMatrix UniTriMatrix::from_dense(const std::vector<std::vector<Rational>> &rows, CoeffRing ring) {
  UniTriMatrix m = identity(rows.size(), ring);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size())
      throw DomainError("matrix is not square");
    for (std::size_t c = 0; c < rows.size(); ++c) {
      Rational v = ring.reduce(rows[r][c]);
      if (c < r && v != 0)
        throw DomainError("entry below the diagonal is nonzero");
      if (c == r && v != 1)
        throw DomainError("diagonal entry is not 1");
      if (c > r && v != 0)
        m.upper_[r].emplace(c, v);
    }
  }
  return m;
}

Rational UniTriMatrix::entry(std::size_t row, std::size_t col) const {
  if (row >= n_ || col >= n_)
    throw DomainError("matrix index out of range");
  if (row == col)
    return 1;
  if (col < row)
    return 0;
  auto it = upper_[row].find(col);
  return it == upper_[row].end() ? Rational(0) : it->second;
}

void UniTriMatrix::set_entry(std::size_t row, std::size_t col, const Rational &value) {
  if (row >= col || col >= n_)
    throw DomainError("only strictly upper entries can be set");
  Rational v = ring_.reduce(value);
  if (v == 0)
    upper_[row].erase(col);
  else
    upper_[row][col] = v;
}

bool UniTriMatrix::is_identity() const { return all_zero(upper_); }

std::vector<std::vector<Rational>> UniTriMatrix::dense() const {
  std::vector<std::vector<Rational>> out(n_, std::vector<Rational>(n_));
  for (std::size_t r = 0; r < n_; ++r) {
    out[r][r] = 1;
    for (const auto &[c, v] : upper_[r])
      out[r][c] = v;
  }
  return out;
}

std::size_t UniTriMatrix::nonzeros() const {
  std::size_t count = n_;
  for (const auto &row : upper_)
    count += row.size();
  return count;
}

UniTriMatrix mat_mul(const UniTriMatrix &a, const UniTriMatrix &b) {
  check_same_shape(a, b);
  // (I + A)(I + B) = I + A + B + AB
  Rows prod = strict_product(strict_part(a), strict_part(b), a.ring());
  UniTriMatrix out = UniTriMatrix::identity(a.dimension(), a.ring());
  for (std::size_t r = 0; r < a.dimension(); ++r) {
    auto &row = prod[r];
    for (const auto &[c, v] : a.upper_row(r))
      add_into(row, c, v, a.ring());
    for (const auto &[c, v] : b.upper_row(r))
      add_into(row, c, v, a.ring());
    for (const auto &[c, v] : row)
      out.set_entry(r, c, v);
  }
  return out;
}

namespace {

// sum_k coeff(k) u^k for the nilpotent part u of a.
template <class Coeff> UniTriMatrix nilpotent_series(const UniTriMatrix &a, Coeff coeff) {
  const CoeffRing &ring = a.ring();
  Rows u = strict_part(a);
  Rows acc(a.dimension());
  Rows power = u;
  for (unsigned long k = 1; !all_zero(power); ++k) {
    Rational ck = coeff(k);
    if (ck != 0)
      for (std::size_t r = 0; r < power.size(); ++r)
        for (const auto &[c, v] : power[r])
          add_into(acc[r], c, ck * v, ring);
    power = strict_product(power, u, ring);
  }
  UniTriMatrix out = UniTriMatrix::identity(a.dimension(), ring);
  for (std::size_t r = 0; r < acc.size(); ++r)
    for (const auto &[c, v] : acc[r])
      out.set_entry(r, c, v);
  return out;
}

} // namespace

UniTriMatrix mat_inv(const UniTriMatrix &a) {
  return nilpotent_series(a, [](unsigned long k) { return Rational(k % 2 == 0 ? 1 : -1); });
}

UniTriMatrix mat_pow(const UniTriMatrix &a, const Integer &lambda) {
  if (lambda < 0)
    return mat_pow(mat_inv(a), -lambda);
  UniTriMatrix result = UniTriMatrix::identity(a.dimension(), a.ring());
  UniTriMatrix base = a;
  Integer n = lambda;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t()))
      result = mat_mul(result, base);
    n >>= 1;
    if (n > 0)
      base = mat_mul(base, base);
  }
  return result;
}

UniTriMatrix mat_commutator(const UniTriMatrix &a, const UniTriMatrix &b) {
  return mat_mul(mat_inv(mat_mul(b, a)), mat_mul(a, b));
}

UniTriMatrix left_normed_commutator(std::span<const UniTriMatrix> ms) {
  if (ms.empty())
    throw DomainError("empty commutator");
  UniTriMatrix acc = ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i)
    acc = mat_commutator(acc, ms[i]);
  return acc;
}

UniTriMatrix binomial_pow(const UniTriMatrix &a, const Rational &lambda) {
  if (a.ring().kind() != CoeffRing::Kind::rationals)
    throw DomainError("binomial_pow needs a matrix over Q");
  return nilpotent_series(a, [&](unsigned long k) { return binomial(lambda, k); });
}

std::size_t level(const UniTriMatrix &a) {
  std::size_t best = a.dimension();
  for (std::size_t r = 0; r < a.dimension(); ++r) {
    const auto &row = a.upper_row(r);
    if (!row.empty())
      best = std::min(best, row.begin()->first - r);
  }
  return best;
}

std::vector<UniTriMatrix> class_witness(std::size_t n, unsigned long p) {
  if (n < 2)
    throw DomainError("class_witness needs n >= 2");
  CoeffRing field = CoeffRing::prime_field(p);
  std::vector<UniTriMatrix> out;
  for (std::size_t k = 0; k + 1 < n; ++k)
    out.push_back(UniTriMatrix::elementary(n, k, k + 1, 1, field));
  return out;
}

Integer regular_rep_dimension(int q, int c) {
  Integer total = 0;
  Integer term = 1;
  for (int j = 0; j <= c; ++j) {
    total += term;
    term *= q;
  }
  return total;
}

RegularRepresentation::RegularRepresentation(int q, int c, CoeffRing ring) : q_(q), c_(c), ring_(ring) {
  if (q < 1 || c < 0)
    throw DomainError("regular representation needs q >= 1 and c >= 0");
  basis_.push_back({});
  std::size_t layer_start = 0;
  for (int d = 1; d <= c; ++d) {
    std::size_t layer_end = basis_.size();
    for (std::size_t i = layer_start; i < layer_end; ++i)
      for (int g = 1; g <= q; ++g) {
        Monomial m = basis_[i];
        m.push_back(g);
        basis_.push_back(std::move(m));
      }
    layer_start = layer_end;
  }
  for (std::size_t i = 0; i < basis_.size(); ++i)
    position_.emplace(basis_[i], i);

  for (int g = 1; g <= q; ++g) {
    TruncSeries y = TruncSeries::one(c, ring) + TruncSeries::variable(g, c, ring);
    gens_.push_back(right_multiplication(y));
    gen_inverses_.push_back(right_multiplication(unit_inverse(y)));
  }
}

UniTriMatrix RegularRepresentation::right_multiplication(const TruncSeries &s) const {
  if (s.degree_bound() < c_ || !(s.ring() == ring_))
    throw DomainError("series does not match the representation");
  if (s.coefficient({}) != 1)
    throw DomainError("right multiplication needs constant term 1");
  UniTriMatrix out = UniTriMatrix::identity(basis_.size(), ring_);
  Monomial buf;
  for (std::size_t row = 0; row < basis_.size(); ++row) {
    const Monomial &m = basis_[row];
    for (const auto &[t, v] : s.terms()) {
      if (t.empty())
        continue;
      if (m.size() + t.size() > static_cast<std::size_t>(c_))
        break;
      buf.assign(m.begin(), m.end());
      buf.insert(buf.end(), t.begin(), t.end());
      out.set_entry(row, position_.at(buf), v);
    }
  }
  return out;
}

UniTriMatrix RegularRepresentation::image(const Word &w) const {
  UniTriMatrix result = UniTriMatrix::identity(basis_.size(), ring_);
  for (const auto &l : w.letters()) {
    if (l.generator < 1 || l.generator > q_)
      throw DomainError("generator x" + std::to_string(l.generator) + " outside 1.." + std::to_string(q_));
    const UniTriMatrix &g = l.exponent > 0 ? generator(l.generator) : generator_inverse(l.generator);
    result = mat_mul(result, mat_pow(g, abs(l.exponent)));
  }
  return result;
}

std::vector<UniTriMatrix> RegularRepresentation::basis_commutator_images(const NilpotentContext &ctx) const {
  if (ctx.generators() != q_)
    throw DomainError("context and representation have different generator counts");
  if (ctx.max_class() < c_)
    throw DomainError("representation degree exceeds the class of the context");
  const auto &basis = ctx.basis();
  std::vector<UniTriMatrix> images;
  images.reserve(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto &entry = basis[j];
    if (entry.expr.is_leaf())
      images.push_back(generator(entry.expr.generator()));
    else
      images.push_back(mat_commutator(images[entry.left], images[entry.right]));
  }
  return images;
}

UniTriMatrix RegularRepresentation::image(const GroupElement &g) const {
  auto images = basis_commutator_images(*g.context());
  UniTriMatrix result = UniTriMatrix::identity(basis_.size(), ring_);
  const auto &e = g.exponents();
  for (std::size_t j = 0; j < e.size(); ++j)
    if (e[j] != 0)
      result = mat_mul(result, mat_pow(images[j], e[j]));
  return result;
}

UniTriMatrix RegularRepresentation::image(const NilpotentContext &ctx, std::span<const Rational> coords) const {
  if (ring_.kind() != CoeffRing::Kind::rationals)
    throw DomainError("rational coordinates need a representation over Q");
  if (coords.size() != ctx.rank())
    throw DomainError("coordinate vector length does not match the basis");
  auto images = basis_commutator_images(ctx);
  UniTriMatrix result = UniTriMatrix::identity(basis_.size(), ring_);
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (coords[j] != 0)
      result = mat_mul(result, binomial_pow(images[j], coords[j]));
  return result;
}

RegularRepresentation regular_rep(int q, int c, CoeffRing ring) { return RegularRepresentation(q, c, ring); }

} // namespace nilpotent
