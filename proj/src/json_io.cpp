#include "mixq/json_io.hpp"

#include <set>

namespace mixq {

namespace {

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

int parse_dim(const json& j) {
  if (!j.is_number_integer()) throw ParseError("\"d\" must be an integer");
  int d = j.get<int>();
  if (d < 2) throw ParseError("\"d\" must be at least 2");
  return d;
}

std::vector<Segment> parse_segments(const json& j, const char* type) {
  if (field(j, "type", "function").get_ref<const std::string&>() != type)
    throw ParseError(std::string("function \"type\" must be \"") + type + "\"");
  const auto& segs = field(j, "segments", "function");
  if (!segs.is_array()) throw ParseError("\"segments\" must be an array");
  std::vector<Segment> out;
  for (const auto& s : segs)
    out.push_back(Segment{parse_rational(field(s, "x0", "segment")), parse_rational(field(s, "x1", "segment")),
                          parse_rational(field(s, "a", "segment")), parse_rational(field(s, "b", "segment"))});
  return out;
}

json segments_json(const std::vector<Segment>& segs, const char* type) {
  json arr = json::array();
  for (const auto& s : segs)
    arr.push_back({{"x0", s.x0.str()}, {"x1", s.x1.str()}, {"a", s.a.str()}, {"b", s.b.str()}});
  return {{"type", type}, {"segments", std::move(arr)}};
}

std::string couple_key(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational parse_rational(const json& j) {
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
  return Rational::parse(j.get_ref<const std::string&>());
}

json to_json(const PLFun& f) { return segments_json(f.segments(), "plfun"); }
json to_json(const PLFunUpper& g) { return segments_json(g.segments(), "plfun_upper"); }

PLFun parse_plfun(const json& j) {
  try {
    return PLFun::from_segments(parse_segments(j, "plfun"));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid plfun: ") + e.what());
  }
}

PLFunUpper parse_plfun_upper(const json& j) {
  try {
    return PLFunUpper::from_segments(parse_segments(j, "plfun_upper"));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid plfun_upper: ") + e.what());
  }
}

std::shared_ptr<const FiniteQuantale> resolve_finite_quantale(const json& ref) {
  if (ref.is_string()) return std::make_shared<const FiniteQuantale>(builtin(ref.get_ref<const std::string&>()));
  if (ref.is_object()) return std::make_shared<const FiniteQuantale>(load_finite_quantale(ref));
  throw ParseError("\"quantale\" must be a builtin name or a table document");
}

TupleDoc parse_tuple(const json& j) {
  const int d = parse_dim(field(j, "d", "tuple"));
  const auto& carrier = field(j, "quantale", "tuple");
  const auto& entries = field(j, "entries", "tuple");
  if (!entries.is_object()) throw ParseError("\"entries\" must be an object keyed by \"i,j\"");
  std::set<std::string> expected;
  for (const auto& [i, k] : couples(d)) expected.insert(couple_key(i, k));
  for (const auto& [key, _] : entries.items())
    if (!expected.count(key)) throw ParseError("unexpected couple \"" + key + "\" for d=" + std::to_string(d));
  for (const auto& key : expected)
    if (!entries.contains(key)) throw ParseError("missing couple \"" + key + "\"");

  if (carrier == "interval") {
    IntervalTuple f(d, PLFun::bottom());
    for (const auto& [i, k] : couples(d)) {
      const auto& e = entries.at(couple_key(i, k));
      if (!e.is_object()) throw ParseError("mixed carriers: interval tuple entry \"" + couple_key(i, k) + "\" is not a plfun");
      f(i, k) = parse_plfun(e);
    }
    return IntervalTupleDoc{std::move(f)};
  }
  auto q = resolve_finite_quantale(carrier);
  Tuple<FiniteQuantale::Element> f(d, q->bottom());
  for (const auto& [i, k] : couples(d)) {
    const auto& e = entries.at(couple_key(i, k));
    if (!e.is_string())
      throw ParseError("mixed carriers: finite tuple entry \"" + couple_key(i, k) + "\" is not an element name");
    f(i, k) = q->element(e.get_ref<const std::string&>());
  }
  return FiniteTupleDoc{std::move(q), carrier, std::move(f)};
}

json to_json(const IntervalTuple& f) {
  json entries = json::object();
  for (const auto& [i, k] : couples(f.d())) entries[couple_key(i, k)] = to_json(f(i, k));
  return {{"d", f.d()}, {"quantale", "interval"}, {"entries", std::move(entries)}};
}

json to_json(const FiniteQuantale& q, const json& carrier, const Tuple<FiniteQuantale::Element>& f) {
  json entries = json::object();
  for (const auto& [i, k] : couples(f.d())) entries[couple_key(i, k)] = q.name(f(i, k));
  return {{"d", f.d()}, {"quantale", carrier}, {"entries", std::move(entries)}};
}

json to_json(const TupleDoc& t) {
  return std::visit(
      [](const auto& doc) -> json {
        if constexpr (std::is_same_v<std::decay_t<decltype(doc)>, FiniteTupleDoc>)
          return to_json(*doc.q, doc.carrier, doc.tuple);
        else
          return to_json(doc.tuple);
      },
      t);
}

PathD parse_path(const json& j) {
  PathD p;
  p.d = parse_dim(field(j, "d", "path"));
  const auto& vs = field(j, "vertices", "path");
  if (!vs.is_array()) throw ParseError("\"vertices\" must be an array");
  for (const auto& v : vs) {
    if (!v.is_array()) throw ParseError("each vertex must be an array of rationals");
    Point x;
    for (const auto& c : v) x.push_back(parse_rational(c));
    if (static_cast<int>(x.size()) != p.d) throw ParseError("vertex dimension does not match \"d\"");
    p.vertices.push_back(std::move(x));
  }
  return p;
}

json to_json(const PathD& p) {
  json vs = json::array();
  for (const auto& v : p.vertices) {
    json x = json::array();
    for (const auto& c : v) x.push_back(c.str());
    vs.push_back(std::move(x));
  }
  return {{"d", p.d}, {"vertices", std::move(vs)}};
}

Word parse_word(const json& j) {
  const auto& v = field(j, "v", "word");
  const auto& w = field(j, "word", "word");
  if (!v.is_array() || !w.is_string()) throw ParseError("word document needs \"v\" (array) and \"word\" (string)");
  std::vector<int> mult;
  for (const auto& c : v) {
    if (!c.is_number_integer() || c.get<int>() < 0) throw ParseError("\"v\" entries must be non-negative integers");
    mult.push_back(c.get<int>());
  }
  return Word::parse(w.get_ref<const std::string&>(), mult);
}

json to_json(const Word& w) { return {{"v", w.v}, {"word", w.str()}}; }

}  // namespace mixq
