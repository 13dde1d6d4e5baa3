#include "jkres/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <thread>

#include "jkres/errors.hpp"
#include "jkres/grothendieck.hpp"
#include "jkres/jk.hpp"
#include "jkres/oracle.hpp"
#include "jkres/poly_io.hpp"

namespace jkres::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string command;
  std::string input;
  bool report = false;
  bool terms = false;
  bool affine = false;
  int decimal = 0;
  unsigned jobs = 1;
};

struct Outcome {
  int code = exit_ok;
  std::string out;
  std::string err;
};

Rational read_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(std::to_string(v.get<std::uint64_t>()))
                                  : Rational(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected an integer or a \"p/q\" string, got " + v.dump());
}

QVector read_vector(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array, got " + v.dump());
  QVector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_rational(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

const json& field(const json& problem, const char* name) {
  if (!problem.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return problem.at(name);
}

std::string read_text(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": expected a polynomial string, got " + v.dump());
  return v.get<std::string>();
}

Polynomial read_polynomial(const json& v, const std::string& where, std::size_t nvars, MonomialOrder order) {
  const std::string text = read_text(v, where);
  try {
    return parse_polynomial(text, nvars, order);
  } catch (const ParseError& e) {
    throw ParseError(where + " \"" + text + "\": " + e.what());
  }
}

MonomialOrder read_order(const json& problem) {
  if (!problem.contains("order")) return MonomialOrder::grevlex;
  const json& v = problem.at("order");
  if (!v.is_string()) throw ParseError("order: expected a string, got " + v.dump());
  return parse_order(v.get<std::string>());
}

Configuration read_configuration(const json& problem) {
  const json& vs = field(problem, "vectors");
  if (!vs.is_array()) throw ParseError("vectors: expected an array of vectors");
  std::vector<QVector> vectors;
  for (std::size_t i = 0; i < vs.size(); ++i) vectors.push_back(read_vector(vs[i], "vectors[" + std::to_string(i) + "]"));
  return Configuration::from_vectors(vectors);
}

// Variable count for the free-standing polynomial commands: the "variables"
// field if given, else the largest xK mentioned.
std::size_t variable_count(const json& problem, const std::vector<std::string>& texts) {
  if (problem.contains("variables")) {
    const json& v = problem.at("variables");
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) {
      throw ParseError("variables: expected a positive integer, got " + v.dump());
    }
    return v.get<std::size_t>();
  }
  std::size_t n = 1;
  for (const auto& t : texts) n = std::max(n, max_variable_index(t));
  return n;
}

std::vector<std::string> read_texts(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array of polynomial strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_text(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const std::string& where, std::size_t nvars,
                                  MonomialOrder order) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    out.push_back(read_polynomial(json(texts[i]), where + "[" + std::to_string(i) + "]", nvars, order));
  }
  return out;
}

void print_value(std::ostream& os, const Rational& value, const Options& opt) {
  os << to_string(value) << '\n';
  if (opt.decimal > 0) os << "approx " << to_decimal(value, opt.decimal) << '\n';
}

std::string format_set(const IndexSet& set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) s += (i ? "," : "") + std::to_string(set[i] + 1);
  return s + "}";
}

void print_basis(std::ostream& os, const GroebnerBasis& gb) {
  for (const auto& g : gb.generators) os << format_polynomial(g) << '\n';
}

JKProblem read_jk_problem(const json& problem) {
  Configuration config = read_configuration(problem);
  const MonomialOrder order = read_order(problem);
  QVector epsilon = read_vector(field(problem, "epsilon"), "epsilon");
  Polynomial p = read_polynomial(field(problem, "polynomial"), "polynomial", config.dim(), order);
  return JKProblem{std::move(config), std::move(epsilon), std::move(p), order};
}

void run_jk(const json& problem, const Options& opt, std::ostream& os) {
  const JKProblem jp = read_jk_problem(problem);
  const JKReport rep = jk_residue(jp);
  print_value(os, rep.value, opt);
  if (!opt.report) return;
  os << "short-circuit: " << (rep.short_circuit ? std::string(to_string(*rep.short_circuit)) : "none") << '\n';
  if (rep.short_circuit) return;
  os << "J: " << format_set(rep.chosen_basis) << '\n';
  os << "gram factor: " << to_string(rep.gram_factor) << '\n';
  os << "effective numerator: " << format_polynomial(rep.effective_numerator) << '\n';
  os << "ideal basis:\n";
  print_basis(os, rep.ideal_basis);
  os << "N(P): " << format_polynomial(rep.normal_form_numerator) << '\n';
  os << "N(Delta): " << format_polynomial(rep.normal_form_delta) << '\n';
}

void run_oracle(const json& problem, const Options& opt, std::ostream& os) {
  const JKProblem jp = read_jk_problem(problem);
  print_value(os, jk_oracle(jp.config, jp.epsilon, jp.numerator), opt);
  if (!opt.terms) return;
  if (!jp.config.spans()) return;
  const Polynomial padded = effective_numerator(jp.config, jp.epsilon, jp.numerator);
  const PartialFractions parts = total_partial_fraction(padded, jp.config);
  for (const auto& [sigma, c] : parts.basis_terms) {
    os << "basis " << format_set(sigma) << ": " << to_string(c) << '\n';
  }
  for (const auto& t : parts.ng_terms) {
    os << "non-spanning " << format_set(t.denominator) << ": " << to_string(t.coefficient) << " * "
       << format_polynomial(t.numerator) << '\n';
  }
}

void run_ideal(const json& problem, const Options&, std::ostream& os) {
  const Configuration config = read_configuration(problem);
  const MonomialOrder order = read_order(problem);
  const QVector epsilon = read_vector(field(problem, "epsilon"), "epsilon");
  require_regular(config, epsilon);
  // Factors and generators are listed independently of the input order.
  std::set<std::pair<std::size_t, std::string>> lines;
  std::vector<Polynomial> gens;
  for (const auto& set : jk_ideal_generator_sets(config, epsilon)) {
    std::vector<LinearForm> forms;
    for (std::size_t i : set) forms.push_back(config.form(i));
    std::sort(forms.begin(), forms.end(), [](const LinearForm& a, const LinearForm& b) {
      return std::lexicographical_compare(a.coefficients().begin(), a.coefficients().end(),
                                          b.coefficients().begin(), b.coefficients().end());
    });
    lines.emplace(set.size(), format_product(forms));
    gens.push_back(config.product_of(set, order));
  }
  os << "generators:\n";
  for (const auto& [size, text] : lines) os << text << '\n';
  os << "reduced basis:\n";
  print_basis(os, groebner_basis(gens, order));
}

void run_groebner(const json& problem, const Options&, std::ostream& os) {
  const MonomialOrder order = read_order(problem);
  const auto texts = read_texts(field(problem, "generators"), "generators");
  const std::size_t nvars = variable_count(problem, texts);
  print_basis(os, groebner_basis(parse_all(texts, "generators", nvars, order), order));
}

void run_normal_form(const json& problem, const Options&, std::ostream& os) {
  const MonomialOrder order = read_order(problem);
  auto texts = read_texts(field(problem, "generators"), "generators");
  const std::string f_text = read_text(field(problem, "polynomial"), "polynomial");
  texts.push_back(f_text);
  const std::size_t nvars = variable_count(problem, texts);
  texts.pop_back();
  const GroebnerBasis gb = groebner_basis(parse_all(texts, "generators", nvars, order), order);
  const Polynomial f = read_polynomial(json(f_text), "polynomial", nvars, order);
  os << format_polynomial(normal_form(f, gb)) << '\n';
}

void run_groth(const json& problem, const Options& opt, std::ostream& os) {
  const MonomialOrder order = read_order(problem);
  const auto dens = read_texts(field(problem, "denominators"), "denominators");
  const std::string h_text = read_text(field(problem, "numerator"), "numerator");
  const std::size_t r = dens.size();
  if (r == 0) throw ValidationError("denominators: at least one denominator is required");
  std::vector<std::string> all = dens;
  all.push_back(h_text);
  if (variable_count(problem, all) > r) {
    throw DimensionError("the residue needs as many denominators as variables; got " + std::to_string(r) +
                         " denominators and variable x" + std::to_string(variable_count(problem, all)));
  }
  const auto system = parse_all(dens, "denominators", r, order);
  const Polynomial h = read_polynomial(json(h_text), "numerator", r, order);
  bool homogeneous = h.is_homogeneous();
  for (const auto& p : system) homogeneous = homogeneous && p.is_homogeneous();
  const Rational value = (opt.affine || !homogeneous) ? residue_affine(h, system, order)
                                                      : residue_homogeneous(h, system, order);
  print_value(os, value, opt);
}

Outcome solve_one(const json& problem, const Options& opt) {
  Outcome res;
  std::ostringstream os;
  try {
    if (!problem.is_object()) throw ParseError("a problem must be a JSON object, got " + problem.dump());
    if (opt.command == "jk") run_jk(problem, opt, os);
    else if (opt.command == "oracle") run_oracle(problem, opt, os);
    else if (opt.command == "ideal") run_ideal(problem, opt, os);
    else if (opt.command == "groebner") run_groebner(problem, opt, os);
    else if (opt.command == "normal-form") run_normal_form(problem, opt, os);
    else run_groth(problem, opt, os);
    res.out = os.str();
  } catch (const ParseError& e) {
    res = {exit_parse, "", std::string("parse error: ") + e.what()};
  } catch (const InternalError& e) {
    res = {exit_failure, "", std::string("internal error: ") + e.what()};
  } catch (const Error& e) {
    res = {exit_validation, "", std::string("error: ") + e.what()};
  } catch (const json::exception& e) {
    res = {exit_parse, "", std::string("parse error: ") + e.what()};
  }
  return res;
}

int execute(const Options& opt, std::ostream& out, std::ostream& err) {
  std::string text;
  if (opt.input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(opt.input, std::ios::binary);
    if (!in) {
      err << "error: cannot read " << opt.input << '\n';
      return exit_failure;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    err << "parse error: " << opt.input << ": " << e.what() << '\n';
    return exit_parse;
  }

  if (!doc.is_array()) {
    const Outcome res = solve_one(doc, opt);
    out << res.out;
    if (!res.err.empty()) err << res.err << '\n';
    return res.code;
  }

  std::vector<Outcome> results(doc.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < results.size(); i = next++) results[i] = solve_one(doc[i], opt);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(results.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = exit_ok;
  for (std::size_t i = 0; i < results.size(); ++i) {
    out << "[" << i + 1 << "]\n" << results[i].out;
    if (results[i].code != exit_ok) {
      out << "error\n";
      err << "problem " << i + 1 << ": " << results[i].err << '\n';
      if (code == exit_ok) code = results[i].code;
    }
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Jeffrey-Kirwan and Grothendieck residues"};
  app.require_subcommand(1);
  Options opt;
  int decimal = 0;
  unsigned jobs = 1;
  app.add_option("--decimal", decimal, "also print an N-digit decimal approximation")->check(CLI::Range(1, 1000));
  app.add_option("--jobs", jobs, "worker threads for batch files")->check(CLI::Range(1u, 256u));

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"jk", "Jeffrey-Kirwan residue by Groebner normal forms"},
      {"oracle", "Jeffrey-Kirwan residue by partial fractions"},
      {"ideal", "generators and reduced basis of the residue ideal"},
      {"groebner", "reduced Groebner basis of a generator list"},
      {"normal-form", "normal form of a polynomial modulo an ideal"},
      {"groth", "Grothendieck residue at the origin"},
  };
  for (const auto& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", opt.input, "problem file (JSON object or array), - for stdin")->required();
    sub->add_option("--decimal", decimal, "also print an N-digit decimal approximation")->check(CLI::Range(1, 1000));
    sub->add_option("--jobs", jobs, "worker threads for batch files")->check(CLI::Range(1u, 256u));
    if (std::string(s.name) == "jk") sub->add_flag("--report", opt.report, "print the intermediate data");
    if (std::string(s.name) == "oracle") sub->add_flag("--terms", opt.terms, "print the decomposition");
    if (std::string(s.name) == "groth") sub->add_flag("--affine", opt.affine, "use the affine reduction");
    sub->callback([&opt, name = std::string(s.name)] { opt.command = name; });
  }

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, ee;
    const int code = app.exit(e, o, ee);
    out << o.str();
    err << ee.str();
    return code == 0 ? exit_ok : exit_validation;
  }
  opt.decimal = decimal;
  opt.jobs = jobs;
  return execute(opt, out, err);
}

}  // namespace jkres::cli
