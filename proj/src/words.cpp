#include "nilpotent/words.hpp"

#include "nilpotent/errors.hpp"

#include <cctype>

namespace nilpotent {

std::vector<Letter> free_reduce(std::vector<Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (auto &letter : letters) {
    if (letter.exponent == 0)
      continue;
    if (!out.empty() && out.back().generator == letter.generator) {
      out.back().exponent += letter.exponent;
      if (out.back().exponent == 0)
        out.pop_back();
    } else {
      out.push_back(std::move(letter));
    }
  }
  return out;
}

Word Word::from_letters(std::vector<Letter> letters) {
  Word w;
  w.letters_ = free_reduce(std::move(letters));
  return w;
}

Word Word::generator(int index, Integer exponent) {
  return from_letters({Letter{index, std::move(exponent)}});
}

int Word::max_generator() const {
  int m = 0;
  for (const auto &l : letters_)
    m = std::max(m, l.generator);
  return m;
}

Word invert(const Word &w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (auto &l : out)
    l.exponent = -l.exponent;
  return Word::from_letters(std::move(out));
}

Word concat(const Word &u, const Word &v) {
  std::vector<Letter> out = u.letters();
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return Word::from_letters(std::move(out));
}

Word power(const Word &w, const Integer &n) {
  if (n < 0)
    return power(invert(w), -n);
  if (w.size() == 1) {
    const auto &l = w.letters().front();
    return Word::generator(l.generator, l.exponent * n);
  }
  Word result;
  Word base = w;
  Integer e = n;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t()))
      result = concat(result, base);
    e >>= 1;
    if (e > 0)
      base = concat(base, base);
  }
  return result;
}

Word commutator(const Word &u, const Word &v) {
  return concat(concat(invert(u), invert(v)), concat(u, v));
}

Word conjugate(const Word &u, const Word &v) { return concat(concat(invert(v), u), v); }

std::string render(const Word &w) {
  if (w.empty())
    return "1";
  std::string out;
  for (const auto &l : w.letters()) {
    if (!out.empty())
      out += '*';
    out += 'x';
    out += std::to_string(l.generator);
    if (l.exponent != 1) {
      out += '^';
      out += l.exponent.get_str();
    }
  }
  return out;
}

namespace {

/// Single-pass recursive-descent parser over the word / bracket grammar.
class Parser {
public:
  Parser(std::string_view text, int generator_count) : text_(text), q_(generator_count) {}

  Word parse_full_word() {
    Word w = word();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

  CommutatorExpr parse_full_expr() {
    CommutatorExpr e = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string &what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char ch) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  void expect(char ch) {
    if (!peek(ch))
      fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  bool starts_term() {
    skip_ws();
    if (pos_ >= text_.size())
      return false;
    char ch = text_[pos_];
    return ch == 'x' || ch == '[' || ch == '(' || ch == '1';
  }

  Integer digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  int generator_index() {
    std::size_t at = pos_;
    Integer idx = digits();
    if (idx < 1 || idx > q_) {
      pos_ = at;
      fail("generator index " + idx.get_str() + " outside 1.." + std::to_string(q_));
    }
    return static_cast<int>(idx.get_si());
  }

  Word word() {
    Word w = term();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        w = concat(w, term());
      } else if (starts_term()) {
        w = concat(w, term());
      } else {
        return w;
      }
    }
  }

  Word term() {
    Word base = atom();
    if (peek('^')) {
      ++pos_;
      bool negative = false;
      if (peek('-')) {
        ++pos_;
        negative = true;
      }
      Integer n = digits();
      base = power(base, negative ? Integer(-n) : n);
    }
    return base;
  }

  Word atom() {
    skip_ws();
    if (pos_ >= text_.size())
      fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == 'x') {
      ++pos_;
      return Word::generator(generator_index());
    }
    if (ch == '1') {
      ++pos_;
      return Word();
    }
    if (ch == '(') {
      ++pos_;
      Word w = word();
      expect(')');
      return w;
    }
    if (ch == '[') {
      ++pos_;
      Word acc = word();
      expect(',');
      acc = commutator(acc, word());
      while (peek(',')) {
        ++pos_;
        acc = commutator(acc, word());
      }
      expect(']');
      return acc;
    }
    fail("unexpected character '" + std::string(1, ch) + "'");
  }

  CommutatorExpr expr() {
    skip_ws();
    if (pos_ >= text_.size())
      fail("unexpected end of input");
    if (text_[pos_] == 'x') {
      ++pos_;
      return CommutatorExpr::leaf(generator_index());
    }
    if (text_[pos_] == '[') {
      ++pos_;
      std::vector<CommutatorExpr> entries{expr()};
      expect(',');
      entries.push_back(expr());
      while (peek(',')) {
        ++pos_;
        entries.push_back(expr());
      }
      expect(']');
      return CommutatorExpr::left_normed(entries);
    }
    fail("expected 'x' or '['");
  }

  std::string_view text_;
  int q_;
  std::size_t pos_ = 0;
};

} // namespace

Word parse_word(std::string_view text, int generator_count) {
  return Parser(text, generator_count).parse_full_word();
}

CommutatorExpr parse_commutator_expr(std::string_view text, int generator_count) {
  return Parser(text, generator_count).parse_full_expr();
}

CommutatorExpr CommutatorExpr::leaf(int generator) {
  if (generator < 1)
    throw DomainError("generator index must be positive");
  auto node = std::make_shared<Node>();
  node->generator = generator;
  node->weight = 1;
  return CommutatorExpr(std::move(node));
}

CommutatorExpr CommutatorExpr::bracket(const CommutatorExpr &left, const CommutatorExpr &right) {
  auto node = std::make_shared<Node>();
  node->generator = 0;
  node->weight = left.weight() + right.weight();
  node->left = left.node_;
  node->right = right.node_;
  return CommutatorExpr(std::move(node));
}

CommutatorExpr CommutatorExpr::left_normed(const std::vector<CommutatorExpr> &entries) {
  if (entries.empty())
    throw DomainError("empty commutator");
  CommutatorExpr acc = entries.front();
  for (std::size_t i = 1; i < entries.size(); ++i)
    acc = bracket(acc, entries[i]);
  return acc;
}

std::strong_ordering operator<=>(const CommutatorExpr &a, const CommutatorExpr &b) {
  if (a.node_ == b.node_)
    return std::strong_ordering::equal;
  if (auto cmp = a.weight() <=> b.weight(); cmp != 0)
    return cmp;
  if (a.is_leaf() || b.is_leaf()) {
    if (a.is_leaf() && b.is_leaf())
      return a.generator() <=> b.generator();
    return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto cmp = a.left() <=> b.left(); cmp != 0)
    return cmp;
  return a.right() <=> b.right();
}

std::string render(const CommutatorExpr &e) {
  if (e.is_leaf())
    return "x" + std::to_string(e.generator());
  return "[" + render(e.left()) + "," + render(e.right()) + "]";
}

Word expand_commutator(const CommutatorExpr &e) {
  if (e.is_leaf())
    return Word::generator(e.generator());
  return commutator(expand_commutator(e.left()), expand_commutator(e.right()));
}

} // namespace nilpotent
