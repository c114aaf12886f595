// tl: batch front end for the Temperley-Lieb library.
//
// JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success,
// 1 domain error, 2 usage error (including malformed JSON).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tl/json.hpp"
#include "tl/render.hpp"

namespace {

using namespace tl;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "@path" reads a file, "-" reads stdin, anything else is literal JSON.
Json read_json(const std::string& arg) {
  std::string text = arg;
  if (arg == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    text = os.str();
  } else if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw UsageError("cannot read " + arg.substr(1));
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

struct SpecOpts {
  bool generic = false;
  std::string delta, v;
  std::uint64_t p = 0;

  void add(CLI::App* app) {
    app->add_flag("--generic", generic, "Keep delta symbolic (default)");
    app->add_option("--delta,--delta-value", delta, "Specialize delta to a rational a/b (or a residue with --p)");
    app->add_option("--v", v, "Specialize v to a rational a/b (or a residue with --p); delta = v + 1/v");
    app->add_option("--p", p, "Work over F_p");
  }

  FieldSpec spec() const {
    if (!delta.empty() && !v.empty()) throw UsageError("give at most one of --delta and --v");
    if (generic && (!delta.empty() || !v.empty())) throw UsageError("--generic excludes --delta and --v");
    const std::string& value = delta.empty() ? v : delta;
    const Var var = delta.empty() ? Var::V : Var::Delta;
    if (value.empty()) {
      if (p) throw UsageError("--p needs --delta or --v");
      return FieldSpec::generic(var);
    }
    if (p) {
      long r;
      try {
        r = std::stol(value);
      } catch (const std::exception&) {
        throw UsageError("residue must be an integer: " + value);
      }
      return FieldSpec::prime_field(p, r, var);
    }
    mpq_class q;
    if (q.set_str(value, 10) != 0) throw UsageError("not a rational: " + value);
    q.canonicalize();
    return FieldSpec::rationals(q, var);
  }
};

Permutation parse_permutation(const std::string& s) {
  Permutation w;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) w.push_back(std::stoi(tok));
  } else {
    for (char c : s) {
      if (c < '1' || c > '9') throw UsageError("permutation digits must be 1-9; use commas for n > 9");
      w.push_back(c - '0');
    }
  }
  return w;
}

std::string format_check(const std::string& fmt, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (fmt == a) return fmt;
  throw UsageError("unsupported --format " + fmt);
}

std::string report_table(const SemisimplicityReport& r) {
  std::ostringstream os;
  os << "n = " << r.n << ", " << r.spec.to_string() << "\n";
  os << "lambda  |M(lambda)|  dim L(lambda)  in Lambda0\n";
  for (auto it = r.cell_dims.rbegin(); it != r.cell_dims.rend(); ++it) {
    const int l = it->first;
    std::string row = std::to_string(l);
    row.resize(8, ' ');
    std::string m = std::to_string(it->second);
    m.resize(13, ' ');
    std::string d = std::to_string(r.simple_dims.at(l));
    d.resize(15, ' ');
    os << row << m << d << (r.lambda0.count(l) ? "yes" : "no") << "\n";
  }
  os << "Lambda0 = {";
  bool first = true;
  for (auto it = r.lambda0.rbegin(); it != r.lambda0.rend(); ++it) {
    os << (first ? "" : ",") << *it;
    first = false;
  }
  os << "}\n";
  os << "semisimple = " << (r.is_semisimple ? "true" : "false");
  if (r.closed_form) os << " (closed form: " << (*r.closed_form ? "true" : "false") << ")";
  else os << " (closed form: undecided)";
  os << "\n";
  return os.str();
}

Diagram diagram_input(const std::string& json, int n, const std::vector<int>& word) {
  if (!json.empty()) return diagram_from_json(read_json(json));
  if (n < 1) throw UsageError("need --diagram or --n with --word");
  return eval(Word::make(n, word)).diagram;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact computations in Temperley-Lieb algebras", "tl"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format: json, table or ascii")->capture_default_str();

  int n = 0, lambda = -1;
  std::vector<int> word;
  std::string diagram_json, half_json, a_json, b_json, element_json, value, perm;
  bool dual = false, count = false, audit = false, maxvec = false, check = false, commutation = false;
  std::string from, to;
  SpecOpts spec;

  auto* nf = app.add_subcommand("nf", "Jones normal form of a word or diagram");
  nf->add_option("--n", n, "Number of strands");
  nf->add_option("--word", word, "Generator indices, e.g. 3,2,1")->delimiter(',');
  nf->add_option("--diagram", diagram_json, "Diagram JSON (@file, - for stdin)");
  nf->add_flag("--dual", dual, "Dual normal form");

  auto* ev = app.add_subcommand("eval", "Evaluate a word to a scaled diagram");
  ev->add_option("--n", n, "Number of strands")->required();
  ev->add_option("--word", word, "Generator indices, e.g. 3,2,1")->delimiter(',');

  auto* mul = app.add_subcommand("mul", "Product of two elements or diagrams");
  mul->add_option("--a", a_json, "Left factor (diagram or element JSON)")->required();
  mul->add_option("--b", b_json, "Right factor (diagram or element JSON)")->required();

  auto* diagrams = app.add_subcommand("diagrams", "Enumerate n-diagrams in canonical order");
  diagrams->add_option("--n", n, "Number of strands")->required();
  diagrams->add_flag("--count", count, "Print only the number of diagrams");

  auto* render = app.add_subcommand("render", "ASCII picture of a diagram or half-diagram");
  render->add_option("--diagram", diagram_json, "Diagram JSON (@file, - for stdin)");
  render->add_option("--half", half_json, "Half-diagram JSON (@file, - for stdin)");
  render->add_option("--n", n, "Number of strands");
  render->add_option("--word", word, "Generator indices, e.g. 3,2,1")->delimiter(',');

  auto* bij = app.add_subcommand("bij", "Convert between half, walk, bratteli, tableau, onefactor");
  bij->add_option("--from", from, "Source representation")->required();
  bij->add_option("--to", to, "Target representation")->required();
  bij->add_option("--value", value, "Source object JSON")->required();

  auto* skew = app.add_subcommand("skew", "Skew shape of a diagram");
  skew->add_option("--diagram", diagram_json, "Diagram JSON (@file, - for stdin)");
  skew->add_option("--n", n, "Number of strands");
  skew->add_option("--word", word, "Generator indices, e.g. 3,2,1")->delimiter(',');
  skew->add_option("--perm", perm, "321-avoiding permutation, e.g. 351246798");

  auto* permc = app.add_subcommand("perm", "Diagram <-> 321-avoiding permutation");
  permc->add_option("--diagram", diagram_json, "Diagram JSON (@file, - for stdin)");
  permc->add_option("--n", n, "Number of strands");
  permc->add_option("--word", word, "Generator indices, e.g. 3,2,1")->delimiter(',');
  permc->add_option("--perm", perm, "321-avoiding permutation, e.g. 351246798");

  auto* gram = app.add_subcommand("gram", "Gram matrix of the cell module H(lambda)");
  gram->add_option("--n", n, "Number of strands")->required();
  gram->add_option("--lambda", lambda, "Number of through strands (cell index)")->required();
  spec.add(gram);

  auto* report = app.add_subcommand("report", "Simple-module dimensions and semisimplicity");
  report->add_option("--n", n, "Number of strands")->required();
  spec.add(report);

  auto* trace = app.add_subcommand("trace", "Normalized Markov trace of an element");
  trace->add_option("--element", element_json, "Element or diagram JSON (@file, - for stdin)")->required();

  auto* expect = app.add_subcommand("expect", "Conditional expectation onto TL_{n-1}");
  expect->add_option("--element", element_json, "Element or diagram JSON (@file, - for stdin)")->required();

  auto* hecke = app.add_subcommand("hecke-check", "Hecke relations and kernel on the image in TL_n");
  hecke->add_option("--n", n, "Number of strands")->required();

  auto* sw = app.add_subcommand("schurweyl", "Quantum sl2 / TL_n duality on V^{(x)n}");
  sw->add_option("--n", n, "Number of strands")->required();
  sw->add_flag("--audit", audit, "Dimension audit (default)");
  sw->add_flag("--max-vectors", maxvec, "Maximal vectors of weight --lambda");
  sw->add_flag("--check", check, "Compare Max(lambda) with H(lambda)");
  sw->add_flag("--commutation", commutation, "Check the commuting actions");
  sw->add_option("--lambda", lambda, "Number of through strands (cell index)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (nf->parsed()) {
    format_check(format, {"json"});
    if (!diagram_json.empty()) {
      Diagram d = diagram_from_json(read_json(diagram_json));
      if (dual) emit(to_json(DualNormalFormResult{0, dual_normal_form(d)}));
      else emit(to_json(NormalFormResult{0, normal_form(d)}));
    } else {
      if (n < 1) throw UsageError("need --n with --word");
      Word w = Word::make(n, word);
      if (dual) emit(to_json(dual_normal_form(w)));
      else emit(to_json(normal_form(w)));
    }
  } else if (ev->parsed()) {
    ScaledDiagram s = eval(Word::make(n, word));
    if (format_check(format, {"json", "ascii"}) == "ascii") std::cout << "loops: " << s.loops << "\n" << render_ascii(s.diagram);
    else emit({{"loops", s.loops}, {"diagram", to_json(s.diagram)}});
  } else if (mul->parsed()) {
    format_check(format, {"json"});
    emit(to_json(element_from_json(read_json(a_json)) * element_from_json(read_json(b_json))));
  } else if (diagrams->parsed()) {
    if (n > enumeration_bound()) throw Error("n = " + std::to_string(n) + " exceeds the enumeration bound (set TL_MAX_N)");
    if (count) {
      std::cout << cat(2 * n, n).get_str() << "\n";
    } else if (format_check(format, {"json", "ascii"}) == "ascii") {
      bool first = true;
      for (const auto& d : enumerate_diagrams(n)) {
        std::cout << (first ? "" : "\n") << render_ascii(d);
        first = false;
      }
    } else {
      Json all = Json::array();
      for (const auto& d : enumerate_diagrams(n)) all.push_back(to_json(d));
      emit(all);
    }
  } else if (render->parsed()) {
    if (format != "json") format_check(format, {"ascii"});
    if (!half_json.empty()) std::cout << render_ascii(half_from_json(read_json(half_json)));
    else std::cout << render_ascii(diagram_input(diagram_json, n, word));
  } else if (bij->parsed()) {
    format_check(format, {"json"});
    CombObject x = comb_from_json(read_json(value), rep_from_name(from));
    emit(to_json(convert(x, rep_from_name(to))));
  } else if (skew->parsed()) {
    Diagram d = perm.empty() ? diagram_input(diagram_json, n, word) : from_permutation(parse_permutation(perm));
    LabeledSkewShape s = theta(d);
    if (format_check(format, {"json", "ascii"}) == "ascii") {
      std::cout << render_skew(s);
    } else {
      CompassSeq c = compass(d);
      emit({{"n", d.n()},
            {"compass", to_json(c)},
            {"cells", to_json(s)["cells"]},
            {"outline", to_json(outline_from_compass(c))},
            {"nf", to_json(row_reading_word(s, d.n()))["blocks"]},
            {"dual_nf", to_json(col_reading_word(s, d.n()))["blocks"]},
            {"permutation", permutation_string(to_permutation(d))}});
    }
  } else if (permc->parsed()) {
    format_check(format, {"json"});
    if (!perm.empty()) {
      Diagram d = from_permutation(parse_permutation(perm));
      emit({{"diagram", to_json(d)}, {"nf", to_json(normal_form(d))["blocks"]}});
    } else {
      Permutation w = to_permutation(diagram_input(diagram_json, n, word));
      emit({{"permutation", permutation_string(w)}, {"avoids_321", is_321_avoiding(w)}});
    }
  } else if (gram->parsed()) {
    format_check(format, {"json"});
    FieldSpec fs = spec.spec();
    Matrix<LaurentPoly> g = tl::gram(n, lambda);
    Json out = gram_to_json(n, lambda, g);
    out["spec"] = fs.to_string();
    out["rank"] = gram_rank(n, lambda, fs);
    out["det"] = to_json(gram_det(n, lambda));
    emit(out);
  } else if (report->parsed()) {
    SemisimplicityReport r = simple_dims(n, spec.spec());
    // Tables are the default here; --format json switches to JSON.
    if (app.get_option("--format")->count() && format_check(format, {"json", "table"}) == "json") emit(to_json(r));
    else std::cout << report_table(r);
  } else if (trace->parsed()) {
    format_check(format, {"json"});
    emit(to_json(markov_trace(element_from_json(read_json(element_json)))));
  } else if (expect->parsed()) {
    format_check(format, {"json"});
    emit(to_json(conditional_expectation(element_from_json(read_json(element_json)))));
  } else if (hecke->parsed()) {
    format_check(format, {"json"});
    Json out = to_json(hecke_check(n));
    if (n >= 3) out["x1_image"] = to_json(kernel_generator_image(n, 1));
    emit(out);
  } else if (sw->parsed()) {
    format_check(format, {"json"});
    Json out = {{"n", n}};
    if (maxvec || check) {
      if (lambda < 0) throw UsageError("--max-vectors and --check need --lambda");
      if (maxvec) out["max_vectors"] = to_json(maximal_vectors(n, lambda));
      if (check) {
        MaxModuleReport r = max_module_check(n, lambda);
        out["max_module"] = {{"preserved", r.preserved}, {"relations", r.relations}, {"traces", r.traces}, {"ok", r.ok()}};
      }
    }
    if (commutation) {
      out["commutation"] = n >= 2 ? verify_commutation(n) : true;
      out["uu_relations"] = verify_uu_relations(n);
    }
    if (audit || !(maxvec || check || commutation)) out["audit"] = to_json(dimension_audit(n));
    emit(out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "tl: " << e.what() << "\n";
    return 2;
  } catch (const tl::Error& e) {
    std::cerr << "tl: " << e.what() << "\n";
    return 1;
  }
}
