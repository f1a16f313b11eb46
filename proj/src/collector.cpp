#include "nilpotent/collector.hpp"

#include "nilpotent/errors.hpp"

#include <limits>
#include <utility>

namespace nilpotent {

std::shared_ptr<const NilpotentContext> NilpotentContext::make(int q, int c) {
  if (q < 1 || c < 1)
    throw DomainError("context requires q >= 1 and c >= 1");
  return std::shared_ptr<const NilpotentContext>(new NilpotentContext(q, c));
}

GroupElement::GroupElement(ContextPtr ctx, std::vector<Integer> exponents)
    : ctx_(std::move(ctx)), exponents_(std::move(exponents)) {
  if (!ctx_)
    throw DomainError("group element without context");
  if (exponents_.size() != ctx_->rank())
    throw DomainError("exponent vector has length " + std::to_string(exponents_.size()) +
                      ", basis has " + std::to_string(ctx_->rank()) + " entries");
}

GroupElement GroupElement::identity(ContextPtr ctx) {
  std::size_t n = ctx->rank();
  return GroupElement(std::move(ctx), std::vector<Integer>(n));
}

GroupElement GroupElement::generator(ContextPtr ctx, int i) {
  if (i < 1 || i > ctx->generators())
    throw DomainError("generator x" + std::to_string(i) + " out of range");
  std::vector<Integer> e(ctx->rank());
  e[static_cast<std::size_t>(i - 1)] = 1;
  return GroupElement(std::move(ctx), std::move(e));
}

bool GroupElement::is_identity() const {
  for (const auto &e : exponents_)
    if (e != 0)
      return false;
  return true;
}

bool operator==(const GroupElement &a, const GroupElement &b) {
  return a.ctx_->same_as(*b.ctx_) && a.exponents_ == b.exponents_;
}

namespace {

unsigned long small_count(const Integer &n) {
  Integer m = abs(n);
  if (!m.fits_ulong_p())
    throw DomainError("collection exponent too large: " + n.get_str());
  return m.get_ui();
}

/// One syllable of a conjugate word.
struct Unit {
  std::size_t symbol;
  Integer exponent;
};

/// Conjugate of a symbol split into the part that still has to be moved
/// and the part that is already central.
struct ConjugateWord {
  std::vector<Unit> moving;
  std::vector<Unit> central;
};

class Collection {
public:
  explicit Collection(const NilpotentContext &ctx)
      : ctx_(ctx), c_(ctx.max_class()), exps_(ctx.rank()) {}

  std::vector<Integer> run(std::vector<Syllable> input) {
    std::vector<Syllable> current = std::move(input);
    for (std::size_t k = 0; k < ctx_.rank() && !current.empty(); ++k) {
      begin_stage(k);
      Integer collected = 0;
      for (auto &syl : current) {
        if (syl.exponent == 0)
          continue;
        if (syl.symbol == k) {
          if (!out_.empty()) {
            int sign = sgn(syl.exponent);
            for (unsigned long n = small_count(syl.exponent); n > 0; --n)
              conjugate_all(sign);
          }
          collected += syl.exponent;
        } else {
          if (syl.symbol < k)
            throw std::logic_error("collection: symbol below the current stage");
          append(syl.symbol, syl.exponent);
        }
      }
      exps_[k] += collected;
      current = std::move(out_);
      out_.clear();
    }
    if (!current.empty())
      throw std::logic_error("collection: symbols left after the last stage");
    return std::move(exps_);
  }

private:
  void begin_stage(std::size_t k) {
    stage_ = k;
    stage_weight_ = ctx_.basis().weight(k);
    cache_plus_.assign(ctx_.rank(), std::nullopt);
    cache_minus_.assign(ctx_.rank(), std::nullopt);
  }

  bool central(std::size_t symbol) const {
    return ctx_.basis().weight(symbol) + stage_weight_ > c_;
  }

  void append(std::size_t symbol, const Integer &e) {
    if (e == 0)
      return;
    if (central(symbol)) {
      exps_[symbol] += e;
      return;
    }
    if (!out_.empty() && out_.back().symbol == symbol) {
      out_.back().exponent += e;
      if (out_.back().exponent == 0)
        out_.pop_back();
      return;
    }
    out_.push_back(Syllable{symbol, e});
  }

  // s^(b^eps) as a product of basis symbols, b = b_stage.
  const ConjugateWord &conjugate_word(std::size_t s, int eps) {
    auto &slot = eps > 0 ? cache_plus_[s] : cache_minus_[s];
    if (slot)
      return *slot;

    std::vector<Unit> units;
    if (central(s)) {
      units.push_back({s, 1});
    } else if (!ctx_.bracket(s, stage_)) {
      // s is not in the current working set (it came from a normal-form
      // input), so [s, b] need not be basic: use the exact normal form.
      const auto &e = ctx_.conjugate(s, stage_, eps);
      for (std::size_t j = 0; j < e.size(); ++j)
        if (e[j] != 0)
          units.push_back({j, e[j]});
    } else {
      // chain[j] = [s, b, ..., b] with j copies of b, while weight <= c
      std::vector<std::size_t> chain{s};
      for (;;) {
        std::size_t last = chain.back();
        if (ctx_.basis().weight(last) + stage_weight_ > c_)
          break;
        auto next = ctx_.bracket(last, stage_);
        if (!next)
          throw std::logic_error("collection: bracket missing from basis table");
        chain.push_back(*next);
      }
      units.push_back({s, 1});
      if (eps > 0) {
        units.push_back({chain[1], 1});
      } else {
        for (std::size_t j = 2; j < chain.size(); j += 2)
          units.push_back({chain[j], 1});
        std::size_t top = chain.size() - 1;
        if (top % 2 == 0)
          --top;
        for (std::size_t j = top; j >= 1; j -= 2) {
          units.push_back({chain[j], -1});
          if (j == 1)
            break;
        }
      }
    }

    ConjugateWord word;
    for (const auto &u : units)
      (central(u.symbol) ? word.central : word.moving).push_back(u);
    slot = std::move(word);
    return *slot;
  }

  // Replaces the collected tail R by R^(b^eps).
  void conjugate_all(int eps) {
    std::vector<Syllable> previous = std::move(out_);
    out_.clear();
    for (const auto &syl : previous) {
      const ConjugateWord &w = conjugate_word(syl.symbol, eps);
      for (const auto &u : w.central)
        exps_[u.symbol] += syl.exponent * u.exponent;
      if (w.moving.size() == 1) {
        append(w.moving.front().symbol, syl.exponent * w.moving.front().exponent);
        continue;
      }
      unsigned long n = small_count(syl.exponent);
      if (syl.exponent > 0) {
        for (unsigned long r = 0; r < n; ++r)
          for (const auto &u : w.moving)
            append(u.symbol, u.exponent);
      } else {
        for (unsigned long r = 0; r < n; ++r)
          for (auto it = w.moving.rbegin(); it != w.moving.rend(); ++it)
            append(it->symbol, -it->exponent);
      }
    }
  }

  const NilpotentContext &ctx_;
  int c_;
  std::vector<Integer> exps_;
  std::vector<Syllable> out_;
  std::size_t stage_ = 0;
  int stage_weight_ = 1;
  std::vector<std::optional<ConjugateWord>> cache_plus_;
  std::vector<std::optional<ConjugateWord>> cache_minus_;
};

void require_same(const GroupElement &a, const GroupElement &b) {
  if (!a.context()->same_as(*b.context()))
    throw DomainError("group elements belong to different contexts");
}

void push_normal_form(std::vector<Syllable> &out, const GroupElement &g) {
  const auto &e = g.exponents();
  for (std::size_t j = 0; j < e.size(); ++j)
    if (e[j] != 0)
      out.push_back(Syllable{j, e[j]});
}

} // namespace

std::vector<Integer> collect_syllables(const NilpotentContext &ctx, std::vector<Syllable> input) {
  for (const auto &syl : input)
    if (syl.symbol >= ctx.rank())
      throw DomainError("symbol outside the basis");
  return Collection(ctx).run(std::move(input));
}

namespace {

std::vector<Integer> collect_letters(const NilpotentContext &ctx, const Word &w) {
  std::vector<Syllable> input;
  input.reserve(w.size());
  for (const auto &l : w.letters()) {
    if (l.generator < 1 || l.generator > ctx.generators())
      throw DomainError("generator x" + std::to_string(l.generator) + " outside 1.." +
                        std::to_string(ctx.generators()));
    input.push_back(Syllable{static_cast<std::size_t>(l.generator - 1), l.exponent});
  }
  return collect_syllables(ctx, std::move(input));
}

} // namespace

const std::vector<Integer> &NilpotentContext::conjugate(std::size_t s, std::size_t k, int eps) const {
  auto key = std::make_tuple(s, k, eps);
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = conjugates_.find(key); it != conjugates_.end())
      return it->second;
  }
  // A word in the generators only ever meets basic brackets during collection.
  Word b = expand_commutator(basis_[k].expr);
  Word w = concat(concat(power(b, -eps), expand_commutator(basis_[s].expr)), power(b, eps));
  std::vector<Integer> e = collect_letters(*this, w);
  std::lock_guard lock(memo_mutex_);
  return conjugates_.emplace(key, std::move(e)).first->second;
}

GroupElement collect(const ContextPtr &ctx, const Word &w) {
  return GroupElement(ctx, collect_letters(*ctx, w));
}

GroupElement mul(const GroupElement &a, const GroupElement &b) {
  require_same(a, b);
  std::vector<Syllable> input;
  push_normal_form(input, a);
  push_normal_form(input, b);
  return GroupElement(a.context(), collect_syllables(*a.context(), std::move(input)));
}

GroupElement inv(const GroupElement &a) {
  std::vector<Syllable> input;
  const auto &e = a.exponents();
  for (std::size_t j = e.size(); j-- > 0;)
    if (e[j] != 0)
      input.push_back(Syllable{j, -e[j]});
  return GroupElement(a.context(), collect_syllables(*a.context(), std::move(input)));
}

GroupElement pow(const GroupElement &a, const Integer &lambda) {
  if (lambda < 0)
    return pow(inv(a), -lambda);
  GroupElement result = GroupElement::identity(a.context());
  GroupElement base = a;
  Integer n = lambda;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t()))
      result = mul(result, base);
    n >>= 1;
    if (n > 0)
      base = mul(base, base);
  }
  return result;
}

GroupElement commutator(const GroupElement &a, const GroupElement &b) {
  require_same(a, b);
  return mul(inv(mul(b, a)), mul(a, b));
}

int lcs_weight(const GroupElement &g) {
  const auto &basis = g.context()->basis();
  const auto &e = g.exponents();
  for (std::size_t j = 0; j < e.size(); ++j)
    if (e[j] != 0)
      return basis.weight(j);
  return g.context()->max_class() + 1;
}

Word representative_word(const GroupElement &g) {
  Word w;
  const auto &basis = g.context()->basis();
  const auto &e = g.exponents();
  for (std::size_t j = 0; j < e.size(); ++j)
    if (e[j] != 0)
      w = concat(w, power(expand_commutator(basis[j].expr), e[j]));
  return w;
}

GroupElement substitute(const GroupElement &g, std::span<const GroupElement> images) {
  const auto &ctx = g.context();
  if (images.size() != static_cast<std::size_t>(ctx->generators()))
    throw DomainError("substitution needs one image per generator");
  for (const auto &img : images)
    require_same(g, img);

  const auto &basis = ctx->basis();
  std::vector<GroupElement> basis_images;
  basis_images.reserve(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto &entry = basis[j];
    if (entry.expr.is_leaf())
      basis_images.push_back(images[static_cast<std::size_t>(entry.expr.generator() - 1)]);
    else
      basis_images.push_back(commutator(basis_images[entry.left], basis_images[entry.right]));
  }

  GroupElement result = GroupElement::identity(ctx);
  const auto &e = g.exponents();
  for (std::size_t j = 0; j < e.size(); ++j)
    if (e[j] != 0)
      result = mul(result, pow(basis_images[j], e[j]));
  return result;
}

} // namespace nilpotent
