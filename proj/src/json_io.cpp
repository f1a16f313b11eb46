#include "nilpotent/json_io.hpp"

#include "nilpotent/errors.hpp"

namespace nilpotent::json_io {

namespace {

template <class T> T field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

const Json &array_field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    throw ParseError(std::string("missing array field '") + key + "'");
  return j.at(key);
}

Integer integer_from(const Json &j) {
  if (j.is_number_integer())
    return Integer(j.dump());
  if (!j.is_string())
    throw ParseError("expected a decimal string");
  Rational r = parse_rational(j.get<std::string>());
  if (r.get_den() != 1)
    throw ParseError("expected an integer, got " + j.get<std::string>());
  return r.get_num();
}

Rational rational_from(const Json &j) {
  if (j.is_number_integer())
    return Rational(integer_from(j));
  if (!j.is_string())
    throw ParseError("expected a rational string");
  return parse_rational(j.get<std::string>());
}

} // namespace

Json parse(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

Json basis_to_json(const HallBasis &basis) {
  Json out = Json::array();
  for (const auto &entry : basis.entries())
    out.push_back({{"index", entry.index}, {"weight", entry.weight}, {"expr", render(entry.expr)}});
  return out;
}

HallBasis basis_from_json(const Json &j, int q, int c) {
  if (!j.is_array())
    throw ParseError("basis must be a JSON array");
  HallBasis basis(q, c);
  if (j.size() != basis.size())
    throw ParseError("basis has " + std::to_string(j.size()) + " entries, expected " + std::to_string(basis.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    CommutatorExpr e = parse_commutator_expr(field<std::string>(j[i], "expr"), q);
    if (field<std::size_t>(j[i], "index") != i + 1 || field<int>(j[i], "weight") != e.weight() ||
        !(e == basis[i].expr))
      throw ParseError("basis entry " + std::to_string(i + 1) + " does not match the generated basis");
  }
  return basis;
}

Json element_to_json(const GroupElement &g) {
  Json exps = Json::array();
  for (const auto &e : g.exponents())
    exps.push_back(e.get_str());
  return {{"q", g.context()->generators()}, {"c", g.context()->max_class()}, {"exponents", exps}};
}

GroupElement element_from_json(const Json &j) {
  int q = field<int>(j, "q");
  int c = field<int>(j, "c");
  if (q < 1 || c < 1)
    throw ParseError("element needs q >= 1 and c >= 1");
  auto ctx = NilpotentContext::make(q, c);
  std::vector<Integer> exps;
  for (const auto &e : array_field(j, "exponents"))
    exps.push_back(integer_from(e));
  if (exps.size() != ctx->rank())
    throw ParseError("element has " + std::to_string(exps.size()) + " exponents, basis has " +
                     std::to_string(ctx->rank()));
  return GroupElement(ctx, std::move(exps));
}

Json series_to_json(const TruncSeries &s) {
  Json terms = Json::array();
  for (const auto &[m, v] : s.terms())
    terms.push_back({{"mono", m}, {"coeff", v.get_str()}});
  return {{"D", s.degree_bound()}, {"ring", s.ring().name()}, {"terms", terms}};
}

TruncSeries series_from_json(const Json &j) {
  TruncSeries s(field<int>(j, "D"), CoeffRing::parse(field<std::string>(j, "ring")));
  for (const auto &t : array_field(j, "terms")) {
    Monomial m = field<Monomial>(t, "mono");
    for (int g : m)
      if (g < 1)
        throw ParseError("monomial index must be positive");
    if (static_cast<int>(m.size()) > s.degree_bound())
      throw ParseError("monomial exceeds the truncation degree");
    s.add_term(m, rational_from(t.at("coeff")));
  }
  return s;
}

Json witness_to_json(const Witness &w) {
  return {{"word", render(w.word)},
          {"prime", w.prime},
          {"q", w.generators},
          {"N", w.degree},
          {"monomial", w.monomial},
          {"coeff", w.coefficient.get_str()},
          {"group_order_exponent", w.group_order_exponent.get_str()}};
}

Witness witness_from_json(const Json &j) {
  Witness w;
  w.generators = field<int>(j, "q");
  w.word = parse_word(field<std::string>(j, "word"), w.generators);
  w.prime = field<unsigned long>(j, "prime");
  w.degree = field<int>(j, "N");
  w.monomial = field<Monomial>(j, "monomial");
  w.coefficient = rational_from(j.at("coeff"));
  w.group_order_exponent = integer_from(j.at("group_order_exponent"));
  return w;
}

Json matrix_to_json(const UniTriMatrix &m) {
  Json rows = Json::array();
  for (const auto &row : m.dense()) {
    Json r = Json::array();
    for (const auto &v : row)
      r.push_back(v.get_str());
    rows.push_back(std::move(r));
  }
  return {{"n", m.dimension()}, {"ring", m.ring().name()}, {"rows", rows}};
}

UniTriMatrix matrix_from_json(const Json &j) {
  std::size_t n = field<std::size_t>(j, "n");
  CoeffRing ring = CoeffRing::parse(field<std::string>(j, "ring"));
  const Json &rows = array_field(j, "rows");
  if (rows.size() != n)
    throw ParseError("matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
  std::vector<std::vector<Rational>> dense;
  for (const auto &row : rows) {
    if (!row.is_array() || row.size() != n)
      throw ParseError("matrix row has the wrong length");
    std::vector<Rational> r;
    for (const auto &v : row)
      r.push_back(rational_from(v));
    dense.push_back(std::move(r));
  }
  try {
    return UniTriMatrix::from_dense(dense, ring);
  } catch (const DomainError &e) {
    throw ParseError(std::string("not unitriangular: ") + e.what());
  }
}

void write_matrix_json(std::ostream &out, const UniTriMatrix &m) {
  const std::size_t n = m.dimension();
  out << "{\"n\":" << n << ",\"ring\":\"" << m.ring().name() << "\",\"rows\":[";
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0)
      out << ',';
    out << '[';
    const auto &upper = m.upper_row(r);
    auto it = upper.begin();
    for (std::size_t c = 0; c < n; ++c) {
      if (c > 0)
        out << ',';
      if (c == r) {
        out << "\"1\"";
      } else if (it != upper.end() && it->first == c) {
        out << '"' << it->second.get_str() << '"';
        ++it;
      } else {
        out << "\"0\"";
      }
    }
    out << ']';
  }
  out << "]}";
}

Json polynomial_to_json(const IntPolynomial &p) {
  Json out = Json::array();
  for (const auto &term : p.terms()) {
    Json factors = Json::array();
    for (const auto &f : term.factors)
      factors.push_back({{"var", f.var.name()}, {"r", f.r}});
    out.push_back({{"coeff", term.coeff.get_str()}, {"factors", factors}});
  }
  return out;
}

IntPolynomial polynomial_from_json(const Json &j) {
  if (!j.is_array())
    throw ParseError("polynomial must be a JSON array of terms");
  std::vector<PolyTerm> terms;
  for (const auto &t : j) {
    PolyTerm term{integer_from(t.at("coeff")), {}};
    for (const auto &f : array_field(t, "factors")) {
      int r = field<int>(f, "r");
      if (r < 0)
        throw ParseError("binomial order must be nonnegative");
      term.factors.push_back(BinomialFactor{LawVariable::parse(field<std::string>(f, "var")), r});
    }
    terms.push_back(std::move(term));
  }
  return IntPolynomial(std::move(terms));
}

Json group_law_to_json(const GroupLaw &law) {
  Json zeta = Json::array();
  Json omega = Json::array();
  for (const auto &p : law.mul_polys)
    zeta.push_back(polynomial_to_json(p));
  for (const auto &p : law.pow_polys)
    omega.push_back(polynomial_to_json(p));
  return {{"q", law.ctx->generators()}, {"c", law.ctx->max_class()}, {"zeta", zeta}, {"omega", omega}};
}

GroupLaw group_law_from_json(const Json &j) {
  GroupLaw law;
  law.ctx = NilpotentContext::make(field<int>(j, "q"), field<int>(j, "c"));
  for (const auto &p : array_field(j, "zeta"))
    law.mul_polys.push_back(polynomial_from_json(p));
  for (const auto &p : array_field(j, "omega"))
    law.pow_polys.push_back(polynomial_from_json(p));
  if (law.mul_polys.size() != law.ctx->rank() || law.pow_polys.size() != law.ctx->rank())
    throw ParseError("group law has the wrong number of polynomials");
  return law;
}

} // namespace nilpotent::json_io
