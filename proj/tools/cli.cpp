#include "cli.hpp"

#include "nilpotent/errors.hpp"
#include "nilpotent/json_io.hpp"
#include "nilpotent/petresco.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace nilpotent::cli {

namespace {

using json_io::Json;

constexpr int any_generator = 1 << 20;

enum class Format { text, json };

struct Options {
  Format format = Format::text;
  int gens = 2;
  int cls = 2;
  int weight = 1;
  int degree = 2;
  int terms = 5;
  int count = 2;
  int upto = 2;
  int max_class = 4;
  unsigned long prime = 2;
  std::size_t max_dim = 10000;
  std::uint64_t seed = FitOptions{}.seed;
  Integer lambda_int;
  std::string lambda = "1";
  std::string ring = "Z";
  std::string word;
  std::string matrix;
  std::string coords;
  std::vector<std::string> elements;
  std::vector<std::string> words;
};

/// JSON given inline or as @path.
Json read_json(const std::string &arg) {
  if (!arg.starts_with("@"))
    return json_io::parse(arg);
  std::ifstream in(arg.substr(1));
  if (!in)
    throw ParseError("cannot read '" + arg.substr(1) + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return json_io::parse(buf.str());
}

std::string render_exponents(const std::vector<Integer> &e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i)
    s += (i ? ", " : "") + e[i].get_str();
  return s + ")";
}

std::string render_rationals(const std::vector<Rational> &e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i)
    s += (i ? ", " : "") + e[i].get_str();
  return s + ")";
}

std::string render_monomial(const Monomial &m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i)
    s += (i ? "*u" : "u") + std::to_string(m[i]);
  return s;
}

std::string render_series(const TruncSeries &s) {
  if (s.is_zero())
    return "0";
  std::string out;
  for (const auto &[m, v] : s.terms()) {
    Rational mag = abs(v);
    if (out.empty())
      out += sgn(v) < 0 ? "-" : "";
    else
      out += sgn(v) < 0 ? " - " : " + ";
    if (m.empty())
      out += mag.get_str();
    else
      out += (mag == 1 ? "" : mag.get_str() + "*") + render_monomial(m);
  }
  return out;
}

std::string render_polynomial(const IntPolynomial &p) {
  if (p.terms().empty())
    return "0";
  std::string out;
  for (const auto &t : p.terms()) {
    Integer mag = abs(t.coeff);
    if (out.empty())
      out += sgn(t.coeff) < 0 ? "-" : "";
    else
      out += sgn(t.coeff) < 0 ? " - " : " + ";
    std::string factors;
    for (const auto &f : t.factors) {
      if (!factors.empty())
        factors += "*";
      factors += f.r == 1 ? f.var.name() : "C(" + f.var.name() + "," + std::to_string(f.r) + ")";
    }
    if (factors.empty())
      out += mag.get_str();
    else
      out += (mag == 1 ? "" : mag.get_str() + "*") + factors;
  }
  return out;
}

void print_matrix_text(std::ostream &out, const UniTriMatrix &m) {
  for (const auto &row : m.dense()) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? " " : "") << row[c].get_str();
    out << '\n';
  }
}

std::vector<Rational> parse_coords(const std::string &text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    out.push_back(parse_rational(item));
  if (out.empty())
    throw ParseError("empty coordinate list");
  return out;
}

GroupElement element_arg(const std::string &arg) { return json_io::element_from_json(read_json(arg)); }

void emit_element(std::ostream &out, Format f, const GroupElement &g) {
  if (f == Format::json)
    out << json_io::element_to_json(g).dump() << '\n';
  else
    out << render_exponents(g.exponents()) << '\n';
}

void cmd_basis(const Options &o, std::ostream &out) {
  HallBasis basis(o.gens, o.cls);
  if (o.format == Format::json) {
    out << json_io::basis_to_json(basis).dump() << '\n';
    return;
  }
  for (const auto &e : basis.entries())
    out << e.index << '\t' << e.weight << '\t' << render(e.expr) << '\n';
}

void cmd_witt(const Options &o, std::ostream &out) {
  Integer n = witt_number(o.weight, o.gens);
  if (o.format == Format::json)
    out << Json{{"q", o.gens}, {"w", o.weight}, {"n", n.get_str()}}.dump() << '\n';
  else
    out << n << '\n';
}

void cmd_collect(const Options &o, std::ostream &out) {
  auto ctx = NilpotentContext::make(o.gens, o.cls);
  emit_element(out, o.format, collect(ctx, parse_word(o.word, o.gens)));
}

void cmd_binary(const Options &o, std::ostream &out, bool is_mul) {
  if (o.elements.size() != 2)
    throw ParseError("expected two elements");
  auto a = element_arg(o.elements[0]);
  auto b = element_arg(o.elements[1]);
  emit_element(out, o.format, is_mul ? mul(a, b) : commutator(a, b));
}

void cmd_pow(const Options &o, std::ostream &out) {
  if (o.elements.size() != 1)
    throw ParseError("expected one element");
  emit_element(out, o.format, pow(element_arg(o.elements[0]), o.lambda_int));
}

void cmd_magnus(const Options &o, std::ostream &out) {
  auto s = magnus_embed(parse_word(o.word, o.gens), o.gens, o.degree, CoeffRing::parse(o.ring));
  if (o.format == Format::json)
    out << json_io::series_to_json(s).dump() << '\n';
  else
    out << render_series(s) << '\n';
}

void cmd_dimweight(const Options &o, std::ostream &out) {
  auto d = dimension_weight(parse_word(o.word, o.gens), o.gens, o.degree);
  if (o.format == Format::json) {
    Json j{{"D", o.degree}, {"weight", nullptr}};
    if (d)
      j["weight"] = *d;
    out << j.dump() << '\n';
  } else if (d) {
    out << *d << '\n';
  } else {
    out << '>' << o.degree << '\n';
  }
}

void cmd_hilbert(const Options &o, std::ostream &out) {
  auto d = hilbert_coeffs(o.gens, o.cls, o.terms);
  if (o.format == Format::json) {
    Json j = Json::array();
    for (const auto &x : d)
      j.push_back(x.get_str());
    out << j.dump() << '\n';
    return;
  }
  for (std::size_t i = 0; i < d.size(); ++i)
    out << (i ? " " : "") << d[i];
  out << '\n';
}

void cmd_petresco(const Options &o, std::ostream &out, bool gens_given) {
  int q = gens_given ? o.gens : std::max(o.count, 1);
  auto ctx = NilpotentContext::make(q, o.cls);
  std::vector<GroupElement> xs;
  if (o.words.empty()) {
    if (o.count > q)
      throw DomainError("--count exceeds the number of generators");
    for (int i = 1; i <= o.count; ++i)
      xs.push_back(GroupElement::generator(ctx, i));
  } else {
    for (const auto &w : o.words)
      xs.push_back(collect(ctx, parse_word(w, q)));
  }
  auto r = petresco(xs, o.upto);
  bool weights = verify_tau_weight(r);
  bool recurrence = verify_recurrence(r);
  if (o.format == Format::json) {
    Json inputs = Json::array(), taus = Json::array();
    for (const auto &x : r.inputs)
      inputs.push_back(json_io::element_to_json(x));
    for (const auto &t : r.taus)
      taus.push_back(json_io::element_to_json(t));
    out << Json{{"inputs", inputs}, {"taus", taus}, {"weights_ok", weights}, {"recurrence_ok", recurrence}}.dump()
        << '\n';
    return;
  }
  for (std::size_t w = 0; w < r.taus.size(); ++w)
    out << "tau_" << w + 1 << " = " << render_exponents(r.taus[w].exponents()) << "  lcs_weight "
        << lcs_weight(r.taus[w]) << '\n';
  out << "weights " << (weights ? "ok" : "FAILED") << ", recurrence " << (recurrence ? "ok" : "FAILED") << '\n';
}

void cmd_witness(const Options &o, std::ostream &out, bool gens_given) {
  Word w = parse_word(o.word, gens_given ? o.gens : any_generator);
  int q = gens_given ? o.gens : std::max(2, w.max_generator());
  auto wit = residual_witness(w, o.prime, q);
  if (o.format == Format::json) {
    out << json_io::witness_to_json(wit).dump() << '\n';
    return;
  }
  out << "word " << render(wit.word) << "\nprime " << wit.prime << "\nN " << wit.degree << "\nmonomial "
      << render_monomial(wit.monomial) << "\ncoeff " << wit.coefficient << "\ngroup order " << wit.prime << '^'
      << wit.group_order_exponent << '\n';
}

void cmd_rep(const Options &o, std::ostream &out) {
  Integer dim = regular_rep_dimension(o.gens, o.cls);
  if (dim > o.max_dim)
    throw DomainError("representation dimension " + dim.get_str() + " exceeds --max-dim " +
                      std::to_string(o.max_dim));
  RegularRepresentation rep(o.gens, o.cls, CoeffRing::parse(o.ring));
  std::vector<UniTriMatrix> mats;
  if (!o.word.empty()) {
    mats.push_back(rep.image(parse_word(o.word, o.gens)));
  } else {
    for (int i = 1; i <= o.gens; ++i)
      mats.push_back(rep.generator(i));
  }
  if (o.format == Format::json) {
    if (!o.word.empty()) {
      json_io::write_matrix_json(out, mats.front());
      out << '\n';
      return;
    }
    Json basis = Json::array();
    for (const auto &m : rep.basis())
      basis.push_back(m);
    out << "{\"dimension\":" << rep.dimension() << ",\"basis\":" << basis.dump() << ",\"generators\":[";
    for (std::size_t i = 0; i < mats.size(); ++i) {
      if (i)
        out << ',';
      json_io::write_matrix_json(out, mats[i]);
    }
    out << "]}\n";
    return;
  }
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (o.word.empty())
      out << "x" << i + 1 << ":\n";
    print_matrix_text(out, mats[i]);
  }
}

void cmd_grouplaw(const Options &o, std::ostream &out) {
  FitOptions fit;
  fit.max_class = o.max_class;
  fit.seed = o.seed;
  auto law = fit_group_law(NilpotentContext::make(o.gens, o.cls), fit);
  if (o.format == Format::json) {
    out << json_io::group_law_to_json(law).dump() << '\n';
    return;
  }
  for (std::size_t i = 0; i < law.mul_polys.size(); ++i)
    out << "zeta_" << i + 1 << " = " << render_polynomial(law.mul_polys[i]) << '\n';
  for (std::size_t i = 0; i < law.pow_polys.size(); ++i)
    out << "omega_" << i + 1 << " = " << render_polynomial(law.pow_polys[i]) << '\n';
}

void cmd_roots(const Options &o, std::ostream &out) {
  Rational lambda = parse_rational(o.lambda);
  if (o.matrix.empty() == o.coords.empty())
    throw ParseError("roots needs exactly one of --matrix or --coords");
  if (!o.matrix.empty()) {
    auto m = json_io::matrix_from_json(read_json(o.matrix));
    if (m.ring() != CoeffRing::rationals())
      m = UniTriMatrix::from_dense(m.dense(), CoeffRing::rationals());
    auto r = binomial_pow(m, lambda);
    if (o.format == Format::json) {
      json_io::write_matrix_json(out, r);
      out << '\n';
    } else {
      print_matrix_text(out, r);
    }
    return;
  }
  FitOptions fit;
  fit.max_class = o.max_class;
  auto law = fit_group_law(NilpotentContext::make(o.gens, o.cls), fit);
  auto r = law_pow(law, parse_coords(o.coords), lambda);
  if (o.format == Format::json) {
    Json j = Json::array();
    for (const auto &x : r)
      j.push_back(x.get_str());
    out << Json{{"q", o.gens}, {"c", o.cls}, {"coords", j}}.dump() << '\n';
  } else {
    out << render_rationals(r) << '\n';
  }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Free nilpotent groups: Hall bases, collection, Magnus embeddings and group laws", "nilq"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto positive = CLI::PositiveNumber;
  auto add_gens = [&](CLI::App *s, bool required) {
    auto *opt = s->add_option("--gens,-q", o.gens, "Number of generators")->check(positive);
    if (required)
      opt->required();
    return opt;
  };
  auto add_class = [&](CLI::App *s) {
    return s->add_option("--class,-c", o.cls, "Nilpotency class")->required()->check(positive);
  };
  auto add_word = [&](CLI::App *s, bool required = true) {
    auto *opt = s->add_option("word", o.word, "Word, e.g. \"[x1,x2]*x1^-2\"");
    if (required)
      opt->required();
  };

  auto *basis = app.add_subcommand("basis", "Hall basis of weight <= c");
  add_gens(basis, true);
  add_class(basis);

  auto *witt = app.add_subcommand("witt", "Witt number n(w, q)");
  add_gens(witt, true);
  witt->add_option("--weight,-w", o.weight, "Weight")->required()->check(positive);

  auto *collect_cmd = app.add_subcommand("collect", "Collected normal form of a word");
  add_gens(collect_cmd, true);
  add_class(collect_cmd);
  add_word(collect_cmd);

  auto *mul_cmd = app.add_subcommand("mul", "Product of two serialized elements");
  mul_cmd->add_option("elements", o.elements, "Two elements (JSON or @file)")->required()->expected(2);
  auto *comm_cmd = app.add_subcommand("comm", "Commutator a^-1 b^-1 a b of two serialized elements");
  comm_cmd->add_option("elements", o.elements, "Two elements (JSON or @file)")->required()->expected(2);
  auto *pow_cmd = app.add_subcommand("pow", "Integer power of a serialized element");
  pow_cmd->add_option("element", o.elements, "Element (JSON or @file)")->required()->expected(1);
  std::string lambda_text;
  pow_cmd->add_option("--lambda,-l", lambda_text, "Integer exponent")->required();

  auto *magnus = app.add_subcommand("magnus", "Magnus embedding x_i -> 1 + u_i");
  add_gens(magnus, true);
  magnus->add_option("--deg,-D", o.degree, "Truncation degree")->required()->check(CLI::NonNegativeNumber);
  magnus->add_option("--ring,-r", o.ring, "Z, Q or Fp:<p>")->default_str("Z");
  add_word(magnus);

  auto *dimweight = app.add_subcommand("dimweight", "Dimension-subgroup weight of a word over Q");
  add_gens(dimweight, true);
  dimweight->add_option("--deg,-D", o.degree, "Truncation degree")->required()->check(positive);
  add_word(dimweight);

  auto *hilbert = app.add_subcommand("hilbert", "Hilbert coefficients d_0..d_j");
  add_gens(hilbert, true);
  add_class(hilbert);
  hilbert->add_option("--terms,-j", o.terms, "Largest index j")->required()->check(CLI::NonNegativeNumber);

  auto *petresco_cmd = app.add_subcommand("petresco", "Petresco words tau_1..tau_W");
  auto *petresco_gens = add_gens(petresco_cmd, false);
  add_class(petresco_cmd);
  petresco_cmd->add_option("--count,-n", o.count, "Use x_1..x_n as inputs")->check(positive);
  petresco_cmd->add_option("--upto,-W", o.upto, "Largest w")->required()->check(positive);
  petresco_cmd->add_option("words", o.words, "Input words (default x1..xn)");

  auto *witness = app.add_subcommand("witness", "Finite p-quotient certificate for a nontrivial word");
  auto *witness_gens = add_gens(witness, false);
  witness->add_option("--prime,-p", o.prime, "Prime")->required();
  add_word(witness);

  auto *rep = app.add_subcommand("rep", "Regular representation of the free nilpotent group");
  add_gens(rep, true);
  add_class(rep);
  rep->add_option("--ring,-r", o.ring, "Z, Q or Fp:<p>")->default_str("Z");
  rep->add_option("--max-dim", o.max_dim, "Largest allowed matrix dimension")->default_str("10000");
  add_word(rep, false);

  auto *grouplaw = app.add_subcommand("grouplaw", "Polynomial group law in Hall coordinates");
  add_gens(grouplaw, true);
  add_class(grouplaw);
  grouplaw->add_option("--max-class", o.max_class, "Largest class accepted for fitting")->default_str("4");
  grouplaw->add_option("--seed", o.seed, "Seed for the random fitting and validation points");

  auto *roots = app.add_subcommand("roots", "Rational powers of a unitriangular matrix or coordinate vector");
  roots->add_option("--lambda,-l", o.lambda, "Rational exponent a/b")->required();
  roots->add_option("--matrix", o.matrix, "Matrix JSON or @file");
  roots->add_option("--coords", o.coords, "Comma-separated rational coordinates");
  add_gens(roots, false);
  roots->add_option("--class,-c", o.cls, "Nilpotency class for --coords")->check(positive);
  roots->add_option("--max-class", o.max_class, "Largest class accepted for fitting")->default_str("4");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  o.format = format == "json" ? Format::json : Format::text;
  try {
    if (basis->parsed())
      cmd_basis(o, out);
    else if (witt->parsed())
      cmd_witt(o, out);
    else if (collect_cmd->parsed())
      cmd_collect(o, out);
    else if (mul_cmd->parsed())
      cmd_binary(o, out, true);
    else if (comm_cmd->parsed())
      cmd_binary(o, out, false);
    else if (pow_cmd->parsed()) {
      Rational l = parse_rational(lambda_text);
      if (l.get_den() != 1)
        throw ParseError("pow needs an integer exponent");
      o.lambda_int = l.get_num();
      cmd_pow(o, out);
    } else if (magnus->parsed())
      cmd_magnus(o, out);
    else if (dimweight->parsed())
      cmd_dimweight(o, out);
    else if (hilbert->parsed())
      cmd_hilbert(o, out);
    else if (petresco_cmd->parsed())
      cmd_petresco(o, out, petresco_gens->count() > 0);
    else if (witness->parsed())
      cmd_witness(o, out, witness_gens->count() > 0);
    else if (rep->parsed())
      cmd_rep(o, out);
    else if (grouplaw->parsed())
      cmd_grouplaw(o, out);
    else if (roots->parsed())
      cmd_roots(o, out);
  } catch (const ParseError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError &e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

} // namespace nilpotent::cli
