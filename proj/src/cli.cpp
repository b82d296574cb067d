#include "mixq/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "mixq/clopen.hpp"
#include "mixq/enumerate.hpp"
#include "mixq/json_io.hpp"
#include "mixq/laws.hpp"

namespace mixq::cli {

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") return;
  std::ofstream os(path);
  if (!os) throw DomainError("cannot write '" + path + "'");
  os << text;
}

bool is_builtin_name(const std::string& s) { return s == "bool2" || s == "sugihara3"; }

json quantale_ref(const std::string& name_or_file) {
  if (is_builtin_name(name_or_file)) return name_or_file;
  return read_json_file(name_or_file);
}

std::vector<int> parse_v(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      int c = std::stoi(part, &used);
      if (used != part.size() || c < 0) throw std::invalid_argument(part);
      v.push_back(c);
    } catch (const std::logic_error&) {
      throw ParseError("multiplicity vector must be comma-separated non-negative integers");
    }
  }
  return v;
}

Word word_arg(const std::string& text, const std::string& v) {
  return v.empty() ? Word::parse(text) : Word::parse(text, parse_v(v));
}

// --- quantale --------------------------------------------------------------

int quantale_check(const std::string& target, std::uint64_t seed, std::size_t samples, std::ostream& out) {
  if (target == "interval") {
    IntervalQuantale q;
    auto rep = verify_laws(q, {SamplingMode::sampled, seed, samples});
    out << to_json(rep).dump() << '\n';
    return rep.all_passed() ? kOk : kDomainFailure;
  }
  json doc = is_builtin_name(target) ? builtin_document(target) : read_json_file(target);
  auto q = FiniteQuantale::build_unchecked(parse_quantale_table(doc));
  auto rep = verify_laws(q, {SamplingMode::exhaustive, seed, samples});
  json j = to_json(rep);
  bool ok = rep.all_passed();
  try {
    validate_finite_quantale(q);
    j["load"] = {{"ok", true}};
  } catch (const QuantaleLoadError& e) {
    ok = false;
    j["load"] = {{"ok", false}, {"law", e.law()}, {"witness", e.witness()}};
  }
  out << j.dump() << '\n';
  return ok ? kOk : kDomainFailure;
}

// --- lattice ---------------------------------------------------------------

struct EnumOptions {
  std::string quantale;
  int d = 0;
  std::string hasse;
  bool verify_ops = false;
  std::uint64_t max_candidates = kDefaultEnumerationBudget;
  bool elements = false;
  bool covers = false;
  bool ranks = false;
};

int lattice_enum(const EnumOptions& o, std::ostream& out) {
  json ref = quantale_ref(o.quantale);
  auto q = resolve_finite_quantale(ref);
  auto e = enumerate_clopen(*q, o.d, o.max_candidates);
  json j = {{"count", e.tuples.size()}};
  int code = kOk;
  if (o.elements) {
    json arr = json::array();
    for (const auto& f : e.tuples) arr.push_back(to_json(*q, ref, f)["entries"]);
    j["elements"] = std::move(arr);
  }
  if (o.covers) j["covers"] = e.covers;
  if (o.ranks) {
    auto r = hasse_ranks(e);
    std::size_t height = r.empty() ? 0 : *std::max_element(r.begin(), r.end());
    std::vector<std::size_t> profile(height + 1, 0);
    for (auto k : r) ++profile[k];
    j["rank_profile"] = profile;
  }
  if (o.verify_ops) {
    auto chk = verify_lattice_ops(*q, e);
    j["verify_ops"] = {{"ok", chk.ok}, {"pairs", chk.pairs}};
    if (!chk.ok) {
      j["verify_ops"]["failure"] = chk.failure;
      code = kDomainFailure;
    }
  }
  if (!o.hasse.empty()) {
    auto dot = hasse_dot(*q, e);
    if (o.hasse == "-") out << dot;
    else write_file(o.hasse, dot);
  } else {
    out << j.dump() << '\n';
  }
  return code;
}

// --- tuple -----------------------------------------------------------------

template <class Q>
json classification_json(const Q& q, const Tuple<element_t<Q>>& f) {
  auto c = classify(q, f);
  return {{"closed", c.closed}, {"open", c.open}, {"compatible", c.compatible}, {"clopen", c.clopen()}};
}

template <class Q, class Emit>
json unary_tuple_op(const std::string& op, const Q& q, const Tuple<element_t<Q>>& f, Emit emit) {
  if (op == "closure") return emit(closure(q, f));
  if (op == "interior") return emit(interior(q, f));
  if (op == "dual") return emit(dual(q, f));
  return classification_json(q, f);
}

int tuple_unary(const std::string& op, const std::string& in, std::ostream& out) {
  auto doc = parse_tuple(read_json_file(in));
  json j;
  if (auto* fd = std::get_if<FiniteTupleDoc>(&doc)) {
    j = unary_tuple_op(op, *fd->q, fd->tuple, [&](const auto& g) { return to_json(*fd->q, fd->carrier, g); });
  } else {
    IntervalQuantale q;
    j = unary_tuple_op(op, q, std::get<IntervalTupleDoc>(doc).tuple, [](const auto& g) { return to_json(g); });
  }
  out << j.dump() << '\n';
  return kOk;
}

int tuple_binary(const std::string& op, const std::vector<std::string>& in, std::ostream& out) {
  if (in.size() != 2) throw ParseError("tuple " + op + " needs exactly two --in files");
  auto a = parse_tuple(read_json_file(in[0]));
  auto b = parse_tuple(read_json_file(in[1]));
  if (a.index() != b.index()) throw DomainError("tuples live over different carriers");
  const auto kind = op == "join" ? LatticeOp::join : LatticeOp::meet;
  json j;
  if (auto* fa = std::get_if<FiniteTupleDoc>(&a)) {
    const auto& fb = std::get<FiniteTupleDoc>(b);
    if (to_json(fa->q->table()) != to_json(fb.q->table())) throw DomainError("tuples live over different carriers");
    ClopenLattice<FiniteQuantale> lat(*fa->q);
    j = to_json(*fa->q, fa->carrier, lat.op(kind, fa->tuple, fb.tuple));
  } else {
    IntervalQuantale q;
    ClopenLattice<IntervalQuantale> lat(q);
    j = to_json(lat.op(kind, std::get<IntervalTupleDoc>(a).tuple, std::get<IntervalTupleDoc>(b).tuple));
  }
  out << j.dump() << '\n';
  return kOk;
}

// --- path ------------------------------------------------------------------

IntervalTuple interval_tuple_file(const std::string& in) {
  auto doc = parse_tuple(read_json_file(in));
  auto* f = std::get_if<IntervalTupleDoc>(&doc);
  if (!f) throw ParseError("expected a tuple over the interval quantale");
  return f->tuple;
}

int path_validate(const std::string& in, std::ostream& out) {
  auto rep = validate_path(parse_path(read_json_file(in)));
  json v = json::array();
  for (const auto& x : rep.violations) {
    json e = {{"kind", x.kind}, {"index", x.index}};
    if (!x.detail.empty()) e["detail"] = x.detail;
    v.push_back(std::move(e));
  }
  out << json{{"valid", rep.valid}, {"canonical", rep.canonical}, {"violations", v}}.dump() << '\n';
  return rep.valid ? kOk : kDomainFailure;
}

std::pair<int, int> parse_proj(const std::string& s) {
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw ParseError("--proj expects i,j");
  }
}

// --- dispatch --------------------------------------------------------------

int dispatch(CLI::App& app, std::ostream& out, const std::vector<std::string>& argv) {
  // quantale
  auto* quantale = app.add_subcommand("quantale", "Check or print quantale tables");
  quantale->require_subcommand(1);
  std::string check_target;
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  auto* qcheck = quantale->add_subcommand("check", "Run the law suite (exhaustive for tables, sampled for 'interval')");
  qcheck->add_option("target", check_target, "Table file, builtin name, or 'interval'")->required();
  qcheck->add_option("--seed", seed, "Seed for sampled checks");
  qcheck->add_option("--samples", samples, "Samples per law for sampled checks");
  std::string builtin_name;
  auto* qbuiltin = quantale->add_subcommand("builtin", "Print a builtin table document");
  qbuiltin->add_option("name", builtin_name, "bool2 or sugihara3")->required();

  // lattice
  auto* lattice = app.add_subcommand("lattice", "Clopen tuples over finite quantales");
  lattice->require_subcommand(1);
  EnumOptions eo;
  auto* lenum = lattice->add_subcommand("enum", "Enumerate L^d(Q)");
  lenum->add_option("--quantale", eo.quantale, "Builtin name or table file")->required();
  lenum->add_option("--d", eo.d, "Dimension")->required()->check(CLI::Range(2, 64));
  lenum->add_option("--hasse", eo.hasse, "Write the Hasse diagram as DOT ('-' for stdout)");
  lenum->add_flag("--verify-ops", eo.verify_ops, "Check join/meet against a brute-force bound scan");
  lenum->add_option("--max-candidates", eo.max_candidates, "Candidate budget");
  lenum->add_flag("--elements", eo.elements, "List the tuples");
  lenum->add_flag("--covers", eo.covers, "List cover edges (lower, upper)");
  lenum->add_flag("--ranks", eo.ranks, "Report the rank profile");

  // tuple
  auto* tuple = app.add_subcommand("tuple", "Operations on tuples");
  tuple->require_subcommand(1);
  std::vector<std::string> tuple_in;
  for (const char* op : {"closure", "interior", "classify", "dual"})
    tuple->add_subcommand(op, std::string(op) + " of a tuple")->add_option("--in", tuple_in, "Tuple file")->required()->expected(1);
  for (const char* op : {"join", "meet"})
    tuple->add_subcommand(op, std::string("Lattice ") + op + " of two clopen tuples")
        ->add_option("--in", tuple_in, "Two tuple files")
        ->required()
        ->expected(2);

  // path
  auto* path = app.add_subcommand("path", "Paths in I^d and their tuples");
  path->require_subcommand(1);
  std::string path_in, proj = "1,2", svg;
  path->add_subcommand("to-tuple", "Path to clopen tuple")->add_option("--in", path_in)->required();
  path->add_subcommand("from-tuple", "Clopen tuple to path")->add_option("--in", path_in)->required();
  path->add_subcommand("validate", "Check a path document")->add_option("--in", path_in)->required();
  auto* render = path->add_subcommand("render", "Render a projection as SVG");
  render->add_option("--in", path_in)->required();
  render->add_option("--proj", proj, "Axes i,j");
  render->add_option("--svg", svg, "Output file (default stdout)");

  // word
  auto* word = app.add_subcommand("word", "Multinomial lattices");
  word->require_subcommand(1);
  std::string v_text, u_text, w_text, side, word_in;
  bool identity = false;
  int n = 0, m = 0;
  auto* wleq = word->add_subcommand("leq", "Compare two words");
  wleq->add_option("u", u_text)->required();
  wleq->add_option("w", w_text)->required();
  wleq->add_option("--v", v_text, "Multiplicities, e.g. 2,1");
  auto* wembed = word->add_subcommand("embed", "The tuple of a word's staircase");
  wembed->add_option("w", w_text)->required();
  wembed->add_option("--v", v_text);
  auto* wadj = word->add_subcommand("adjoint", "Least/greatest word bounding a tuple");
  wadj->add_option("side", side, "left or right")->required()->check(CLI::IsMember({"left", "right"}));
  wadj->add_option("--v", v_text)->required();
  auto* wadj_in = wadj->add_option("--in", word_in, "Tuple file");
  wadj->add_flag("--identity", identity, "Use the diagonal tuple")->excludes(wadj_in);
  auto* wchr = word->add_subcommand("christoffel", "Lower and upper Christoffel words");
  wchr->add_option("n", n)->required()->check(CLI::PositiveNumber);
  wchr->add_option("m", m)->required()->check(CLI::PositiveNumber);

  app.require_subcommand(1);
  std::vector<std::string> rev(argv.rbegin(), argv.rend());
  app.parse(rev);

  if (*qcheck) return quantale_check(check_target, seed, samples, out);
  if (*qbuiltin) {
    out << builtin_document(builtin_name).dump() << '\n';
    return kOk;
  }
  if (*lenum) return lattice_enum(eo, out);
  for (auto* sub : tuple->get_subcommands()) {
    const auto& op = sub->get_name();
    return (op == "join" || op == "meet") ? tuple_binary(op, tuple_in, out) : tuple_unary(op, tuple_in.at(0), out);
  }
  for (auto* sub : path->get_subcommands()) {
    const auto& op = sub->get_name();
    if (op == "validate") return path_validate(path_in, out);
    if (op == "to-tuple") {
      out << to_json(path_to_tuple(parse_path(read_json_file(path_in)))).dump() << '\n';
    } else if (op == "from-tuple") {
      out << to_json(tuple_to_path(interval_tuple_file(path_in))).dump() << '\n';
    } else {
      auto [i, j] = parse_proj(proj);
      auto text = render_svg(canonical_path(parse_path(read_json_file(path_in))), i, j);
      if (svg.empty() || svg == "-") out << text;
      else write_file(svg, text);
    }
    return kOk;
  }
  if (*wleq) {
    auto u = word_arg(u_text, v_text);
    auto w = word_arg(w_text, v_text);
    bool bfs = word_leq(u, w);
    bool inv = word_leq_inversions(u, w);
    json j = {{"leq", bfs}};
    if (bfs != inv) j["inversion_check_disagrees"] = true;
    out << j.dump() << '\n';
    return kOk;
  }
  if (*wembed) {
    auto w = word_arg(w_text, v_text);
    out << json{{"word", to_json(w)}, {"path", to_json(staircase(w))}, {"tuple", to_json(iota(w))}}.dump() << '\n';
    return kOk;
  }
  if (*wadj) {
    auto v = parse_v(v_text);
    if (!identity && word_in.empty()) throw ParseError("word adjoint needs --in or --identity");
    IntervalTuple f = identity ? IntervalTuple(static_cast<int>(v.size()), PLFun::identity()) : interval_tuple_file(word_in);
    auto w = adjoint_approx(side == "left" ? AdjointSide::left : AdjointSide::right, v, f);
    out << to_json(w).dump() << '\n';
    return kOk;
  }
  if (*wchr) {
    auto c = christoffel(n, m);
    out << json{{"lower", c.lower.str()}, {"upper", c.upper.str()}}.dump() << '\n';
    return kOk;
  }
  return kUsageError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mix star-autonomous quantales and lattices of clopen tuples", "mixq"};
  try {
    return dispatch(app, out, args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const QuantaleLoadError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kDomainFailure;
  }
}

}  // namespace mixq::cli
