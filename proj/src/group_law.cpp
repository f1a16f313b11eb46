#include "nilpotent/group_law.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace nilpotent {

std::string LawVariable::name() const {
  switch (kind) {
  case Kind::xi:
    return "xi_" + std::to_string(index);
  case Kind::eta:
    return "eta_" + std::to_string(index);
  case Kind::lambda:
    return "lambda";
  }
  return "?";
}

LawVariable LawVariable::parse(const std::string &name) {
  if (name == "lambda")
    return {Kind::lambda, 0};
  auto parse_index = [&](std::size_t offset) {
    std::string digits = name.substr(offset);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw ParseError("bad variable name '" + name + "'");
    int idx = std::stoi(digits);
    if (idx < 1)
      throw ParseError("bad variable index in '" + name + "'");
    return idx;
  };
  if (name.starts_with("xi_"))
    return {Kind::xi, parse_index(3)};
  if (name.starts_with("eta_"))
    return {Kind::eta, parse_index(4)};
  throw ParseError("bad variable name '" + name + "'");
}

IntPolynomial::IntPolynomial(std::vector<PolyTerm> terms) : terms_(std::move(terms)) {}

Rational IntPolynomial::evaluate(const std::function<Rational(const LawVariable &)> &value) const {
  Rational total = 0;
  for (const auto &term : terms_) {
    Rational prod = term.coeff;
    for (const auto &f : term.factors) {
      prod *= binomial(value(f.var), static_cast<unsigned long>(f.r));
      if (prod == 0)
        break;
    }
    total += prod;
  }
  return total;
}

bool IntPolynomial::mentions(const LawVariable &var) const {
  for (const auto &term : terms_)
    for (const auto &f : term.factors)
      if (f.var == var)
        return true;
  return false;
}

namespace {

using MultiIndex = std::vector<int>;
using Grid = std::map<MultiIndex, std::vector<Integer>>;

/// All multi-indices over the variables with nonzero weight whose weighted
/// degree is <= bound. Variables with weight 0 are held at 0. If
/// free_slot >= 0 that variable ranges over 0..free_bound independently.
std::vector<MultiIndex> enumerate_support(const std::vector<int> &weights, int bound, int free_slot,
                                          int free_bound) {
  std::vector<MultiIndex> out;
  MultiIndex cur(weights.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int remaining) {
    if (v == weights.size()) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(v) == free_slot) {
      for (int r = 0; r <= free_bound; ++r) {
        cur[v] = r;
        rec(v + 1, remaining);
      }
      cur[v] = 0;
      return;
    }
    if (weights[v] == 0) {
      rec(v + 1, remaining);
      return;
    }
    for (int r = 0; r * weights[v] <= remaining; ++r) {
      cur[v] = r;
      rec(v + 1, remaining - r * weights[v]);
    }
    cur[v] = 0;
  };
  rec(0, bound);
  return out;
}

Integer choose(long n, long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

/// Newton coefficient of prod C(x_v, r_v): sum over s <= r of
/// (-1)^{|r|-|s|} prod C(r_v, s_v) f(s).
Integer newton_coefficient(const MultiIndex &r, const Grid &grid, std::size_t coord) {
  Integer total = 0;
  MultiIndex s(r.size(), 0);
  for (;;) {
    Integer term = grid.at(s)[coord];
    int parity = 0;
    for (std::size_t v = 0; v < r.size(); ++v) {
      if (r[v] == 0)
        continue;
      term *= choose(r[v], s[v]);
      parity += r[v] - s[v];
    }
    total += parity % 2 == 0 ? term : Integer(-term);
    // odometer over s <= r
    std::size_t v = 0;
    while (v < r.size() && s[v] == r[v]) {
      s[v] = 0;
      ++v;
    }
    if (v == r.size())
      break;
    ++s[v];
  }
  return total;
}

struct CoordinateFit {
  std::vector<MultiIndex> support;
  std::vector<Integer> coeffs;
};

Integer evaluate_fit(const CoordinateFit &fit, const MultiIndex &point) {
  Integer total = 0;
  for (std::size_t t = 0; t < fit.support.size(); ++t) {
    if (fit.coeffs[t] == 0)
      continue;
    Integer term = fit.coeffs[t];
    for (std::size_t v = 0; v < point.size() && term != 0; ++v) {
      int r = fit.support[t][v];
      if (r == 0)
        continue;
      Rational b = binomial(Rational(point[v]), static_cast<unsigned long>(r));
      term *= b.get_num();
    }
    total += term;
  }
  return total;
}

/// Shared machinery for the multiplication and power fits: variable
/// weights, an evaluator, and which variables coordinate i may use.
struct FitProblem {
  std::vector<int> weights;   // per variable
  std::vector<int> var_coord; // 0-based basis position a variable belongs to (-1: lambda)
  int lambda_slot = -1;
  std::function<std::vector<Integer>(const MultiIndex &)> evaluate;
  std::function<LawVariable(std::size_t)> variable;
};

std::vector<IntPolynomial> fit_problem(const NilpotentContext &ctx, const FitProblem &problem,
                                       const FitOptions &options, std::mt19937_64 &rng, const char *label) {
  const auto &basis = ctx.basis();
  const std::size_t N = ctx.rank();
  const int c = ctx.max_class();
  const std::size_t nvars = problem.weights.size();

  // Grid: the full support lattice for weight c, plus as many random points.
  Grid grid;
  for (auto &point : enumerate_support(problem.weights, c, problem.lambda_slot, c))
    grid.emplace(std::move(point), std::vector<Integer>{});
  const std::size_t lattice_size = grid.size();
  std::uniform_int_distribution<int> box(-3, 3);
  for (std::size_t attempts = 0; grid.size() < 2 * lattice_size && attempts < 50 * lattice_size; ++attempts) {
    MultiIndex p(nvars);
    for (auto &x : p)
      x = box(rng);
    grid.emplace(std::move(p), std::vector<Integer>{});
  }
  for (auto &[point, values] : grid)
    values = problem.evaluate(point);

  std::vector<CoordinateFit> fits(N);
  for (std::size_t i = 0; i < N; ++i) {
    std::vector<int> weights = problem.weights;
    for (std::size_t v = 0; v < nvars; ++v)
      if (problem.var_coord[v] > static_cast<int>(i))
        weights[v] = 0;
    int bound = basis.weight(i);
    fits[i].support = enumerate_support(weights, bound, problem.lambda_slot, bound);
    for (const auto &r : fits[i].support)
      fits[i].coeffs.push_back(newton_coefficient(r, grid, i));
    for (const auto &[point, values] : grid)
      if (evaluate_fit(fits[i], point) != values[i])
        throw FitError(std::string(label) + " polynomial for coordinate " + std::to_string(i + 1) +
                           " is inconsistent on the fitting grid",
                       i + 1);
  }

  std::uniform_int_distribution<int> wide(-options.validation_box, options.validation_box);
  std::size_t checked = 0;
  for (std::size_t attempts = 0; checked < options.validation_points && attempts < 100 * options.validation_points;
       ++attempts) {
    MultiIndex p(nvars);
    for (auto &x : p)
      x = wide(rng);
    if (grid.contains(p))
      continue;
    auto values = problem.evaluate(p);
    for (std::size_t i = 0; i < N; ++i)
      if (evaluate_fit(fits[i], p) != values[i])
        throw FitError(std::string(label) + " polynomial for coordinate " + std::to_string(i + 1) +
                           " fails validation",
                       i + 1);
    ++checked;
  }

  std::vector<IntPolynomial> polys;
  for (const auto &fit : fits) {
    std::vector<std::pair<MultiIndex, Integer>> nonzero;
    for (std::size_t t = 0; t < fit.support.size(); ++t)
      if (fit.coeffs[t] != 0)
        nonzero.emplace_back(fit.support[t], fit.coeffs[t]);
    std::sort(nonzero.begin(), nonzero.end(), [&](const auto &a, const auto &b) {
      int da = 0, db = 0;
      for (std::size_t v = 0; v < nvars; ++v) {
        da += a.first[v];
        db += b.first[v];
      }
      if (da != db)
        return da < db;
      return a.first > b.first;
    });
    std::vector<PolyTerm> terms;
    for (const auto &[r, coeff] : nonzero) {
      PolyTerm term{coeff, {}};
      for (std::size_t v = 0; v < nvars; ++v)
        if (r[v] > 0)
          term.factors.push_back(BinomialFactor{problem.variable(v), r[v]});
      terms.push_back(std::move(term));
    }
    polys.emplace_back(std::move(terms));
  }
  return polys;
}

GroupElement element_from(const ContextPtr &ctx, MultiIndex::const_iterator first) {
  std::vector<Integer> e(ctx->rank());
  for (auto &x : e)
    x = *first++;
  return GroupElement(ctx, std::move(e));
}

void check_length(const GroupLaw &law, std::size_t n) {
  if (n != law.ctx->rank())
    throw DomainError("coordinate vector has length " + std::to_string(n) + ", expected " +
                      std::to_string(law.ctx->rank()));
}

} // namespace

GroupLaw fit_group_law(const ContextPtr &ctx, const FitOptions &options) {
  if (ctx->max_class() > options.max_class)
    throw DomainError("group law fitting is limited to class <= " + std::to_string(options.max_class));
  const std::size_t N = ctx->rank();
  const auto &basis = ctx->basis();
  std::mt19937_64 rng(options.seed);

  FitProblem mul_problem;
  for (std::size_t v = 0; v < 2 * N; ++v) {
    mul_problem.weights.push_back(basis.weight(v % N));
    mul_problem.var_coord.push_back(static_cast<int>(v % N));
  }
  mul_problem.evaluate = [&](const MultiIndex &p) {
    return mul(element_from(ctx, p.begin()), element_from(ctx, p.begin() + static_cast<long>(N))).exponents();
  };
  mul_problem.variable = [N](std::size_t v) {
    return v < N ? LawVariable{LawVariable::Kind::xi, static_cast<int>(v + 1)}
                 : LawVariable{LawVariable::Kind::eta, static_cast<int>(v - N + 1)};
  };

  FitProblem pow_problem;
  pow_problem.lambda_slot = 0;
  pow_problem.weights.push_back(0);
  pow_problem.var_coord.push_back(-1);
  for (std::size_t j = 0; j < N; ++j) {
    pow_problem.weights.push_back(basis.weight(j));
    pow_problem.var_coord.push_back(static_cast<int>(j));
  }
  pow_problem.evaluate = [&](const MultiIndex &p) {
    return pow(element_from(ctx, p.begin() + 1), Integer(p[0])).exponents();
  };
  pow_problem.variable = [](std::size_t v) {
    return v == 0 ? LawVariable{LawVariable::Kind::lambda, 0}
                  : LawVariable{LawVariable::Kind::xi, static_cast<int>(v)};
  };

  GroupLaw law;
  law.ctx = ctx;
  law.mul_polys = fit_problem(*ctx, mul_problem, options, rng, "multiplication");
  law.pow_polys = fit_problem(*ctx, pow_problem, options, rng, "power");
  return law;
}

std::vector<Rational> law_mul(const GroupLaw &law, std::span<const Rational> a, std::span<const Rational> b) {
  check_length(law, a.size());
  check_length(law, b.size());
  auto value = [&](const LawVariable &v) -> Rational {
    const auto idx = static_cast<std::size_t>(v.index - 1);
    switch (v.kind) {
    case LawVariable::Kind::xi:
      return a[idx];
    case LawVariable::Kind::eta:
      return b[idx];
    case LawVariable::Kind::lambda:
      break;
    }
    throw DomainError("multiplication polynomial mentions lambda");
  };
  std::vector<Rational> out;
  for (const auto &p : law.mul_polys)
    out.push_back(p.evaluate(value));
  return out;
}

std::vector<Rational> law_pow(const GroupLaw &law, std::span<const Rational> a, const Rational &lambda) {
  check_length(law, a.size());
  auto value = [&](const LawVariable &v) -> Rational {
    switch (v.kind) {
    case LawVariable::Kind::xi:
      return a[static_cast<std::size_t>(v.index - 1)];
    case LawVariable::Kind::lambda:
      return lambda;
    case LawVariable::Kind::eta:
      break;
    }
    throw DomainError("power polynomial mentions eta");
  };
  std::vector<Rational> out;
  for (const auto &p : law.pow_polys)
    out.push_back(p.evaluate(value));
  return out;
}

bool is_triangular(const GroupLaw &law) {
  auto ok = [](const IntPolynomial &p, std::size_t i, bool allow_eta, bool allow_lambda) {
    for (const auto &term : p.terms())
      for (const auto &f : term.factors) {
        switch (f.var.kind) {
        case LawVariable::Kind::lambda:
          if (!allow_lambda)
            return false;
          break;
        case LawVariable::Kind::eta:
          if (!allow_eta)
            return false;
          [[fallthrough]];
        case LawVariable::Kind::xi:
          if (f.var.index < 1 || static_cast<std::size_t>(f.var.index) > i)
            return false;
          break;
        }
      }
    return true;
  };
  for (std::size_t i = 0; i < law.mul_polys.size(); ++i)
    if (!ok(law.mul_polys[i], i + 1, true, false))
      return false;
  for (std::size_t i = 0; i < law.pow_polys.size(); ++i)
    if (!ok(law.pow_polys[i], i + 1, false, true))
      return false;
  return true;
}

} // namespace nilpotent
