#include "mixq/finite_quantale.hpp"

#include <fstream>
#include <map>

#include "mixq/laws.hpp"
#include "mixq/quantale.hpp"

namespace mixq {

namespace {

using json = nlohmann::json;

std::string join_witness(const std::vector<std::string>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + w[i];
  return s + ")";
}

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("quantale table: missing field '") + key + "'");
  return doc.at(key);
}

std::vector<std::vector<std::size_t>> parse_op_matrix(const json& m, const char* what,
                                                      const std::map<std::string, std::size_t>& index) {
  const std::size_t n = index.size();
  if (!m.is_array() || m.size() != n)
    throw ParseError(std::string("quantale table: '") + what + "' must be an " + std::to_string(n) + "x" +
                     std::to_string(n) + " matrix");
  std::vector<std::vector<std::size_t>> out(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i].is_array() || m[i].size() != n)
      throw ParseError(std::string("quantale table: row ") + std::to_string(i) + " of '" + what + "' has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (!m[i][j].is_string()) throw ParseError(std::string("quantale table: '") + what + "' entries must be names");
      auto it = index.find(m[i][j].get<std::string>());
      if (it == index.end())
        throw ParseError(std::string("quantale table: unknown element '") + m[i][j].get<std::string>() + "' in '" +
                         what + "'");
      out[i][j] = it->second;
    }
  }
  return out;
}

json op_matrix_to_json(const std::vector<std::vector<std::size_t>>& m, const std::vector<std::string>& names) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (auto k : row) r.push_back(names[k]);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

QuantaleLoadError::QuantaleLoadError(std::string law, std::vector<std::string> witness)
    : DomainError(law + ": witness " + join_witness(witness)), law_(std::move(law)), witness_(std::move(witness)) {}

QuantaleTable parse_quantale_table(const json& doc) {
  if (!doc.is_object()) throw ParseError("quantale table: document must be a JSON object");
  QuantaleTable t;
  const auto& el = require(doc, "elements");
  if (!el.is_array() || el.empty()) throw ParseError("quantale table: 'elements' must be a non-empty array");
  std::map<std::string, std::size_t> index;
  for (const auto& e : el) {
    if (!e.is_string()) throw ParseError("quantale table: element names must be strings");
    auto name = e.get<std::string>();
    if (!index.emplace(name, t.elements.size()).second)
      throw ParseError("quantale table: duplicate element name '" + name + "'");
    t.elements.push_back(std::move(name));
  }
  const std::size_t n = t.elements.size();

  const auto& leq = require(doc, "leq");
  if (!leq.is_array() || leq.size() != n) throw ParseError("quantale table: 'leq' must be an nxn boolean matrix");
  t.leq.assign(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i].is_array() || leq[i].size() != n) throw ParseError("quantale table: 'leq' row has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (!leq[i][j].is_boolean()) throw ParseError("quantale table: 'leq' entries must be booleans");
      t.leq[i][j] = leq[i][j].get<bool>();
    }
  }
  t.tensor = parse_op_matrix(require(doc, "tensor"), "tensor", index);
  auto lookup = [&](const char* key) {
    const auto& v = require(doc, key);
    if (!v.is_string()) throw ParseError(std::string("quantale table: '") + key + "' must be an element name");
    auto it = index.find(v.get<std::string>());
    if (it == index.end()) throw ParseError(std::string("quantale table: unknown element for '") + key + "'");
    return it->second;
  };
  t.unit = lookup("unit");
  t.dualizing = lookup("dualizing");
  if (doc.contains("oplus")) t.oplus = parse_op_matrix(doc.at("oplus"), "oplus", index);
  return t;
}

json to_json(const QuantaleTable& t) {
  json doc;
  doc["elements"] = t.elements;
  json leq = json::array();
  for (const auto& row : t.leq) {
    json r = json::array();
    for (bool b : row) r.push_back(b);
    leq.push_back(std::move(r));
  }
  doc["leq"] = std::move(leq);
  doc["tensor"] = op_matrix_to_json(t.tensor, t.elements);
  doc["unit"] = t.elements[t.unit];
  doc["dualizing"] = t.elements[t.dualizing];
  if (t.oplus) doc["oplus"] = op_matrix_to_json(*t.oplus, t.elements);
  return doc;
}

FiniteQuantale FiniteQuantale::build_unchecked(QuantaleTable table) {
  FiniteQuantale q;
  const std::size_t n = table.elements.size();
  q.table_ = std::move(table);
  const auto& L = q.table_.leq;
  const auto& names = q.table_.elements;
  auto E = [](std::size_t i) { return Element{static_cast<std::uint32_t>(i)}; };
  for (std::size_t i = 0; i < n; ++i) q.elems_.push_back(E(i));

  for (std::size_t a = 0; a < n; ++a)
    if (!L[a][a]) throw QuantaleLoadError("order not reflexive", {names[a]});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && L[a][b] && L[b][a]) throw QuantaleLoadError("order not antisymmetric", {names[a], names[b]});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (L[a][b] && L[b][c] && !L[a][c])
          throw QuantaleLoadError("order not transitive", {names[a], names[b], names[c]});

  // Least element of `cands` in the order, if any.
  auto least = [&](const std::vector<std::size_t>& cands, bool dual) -> std::optional<std::size_t> {
    for (auto u : cands) {
      bool all = true;
      for (auto v : cands)
        if (!(dual ? L[v][u] : L[u][v])) { all = false; break; }
      if (all) return u;
    }
    return std::nullopt;
  };
  std::vector<std::size_t> everything(n);
  for (std::size_t i = 0; i < n; ++i) everything[i] = i;
  auto bot = least(everything, false);
  auto top = least(everything, true);
  if (!bot) throw QuantaleLoadError("missing bottom", {});
  if (!top) throw QuantaleLoadError("missing top", {});
  q.bottom_ = E(*bot);
  q.top_ = E(*top);

  q.join_.assign(n, std::vector<Element>(n));
  q.meet_.assign(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> ub, lb;
      for (std::size_t c = 0; c < n; ++c) {
        if (L[a][c] && L[b][c]) ub.push_back(c);
        if (L[c][a] && L[c][b]) lb.push_back(c);
      }
      auto j = least(ub, false);
      auto m = least(lb, true);
      if (!j) throw QuantaleLoadError("missing join", {names[a], names[b]});
      if (!m) throw QuantaleLoadError("missing meet", {names[a], names[b]});
      q.join_[a][b] = E(*j);
      q.meet_[a][b] = E(*m);
    }

  const auto& T = q.table_.tensor;
  q.lres_.assign(n, std::vector<Element>(n));
  q.rres_.assign(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Element l = q.bottom_, r = q.bottom_;
      for (std::size_t x = 0; x < n; ++x) {
        if (L[T[a][x]][b]) l = q.join(l, E(x));
        if (L[T[x][a]][b]) r = q.join(r, E(x));
      }
      q.lres_[a][b] = l;
      q.rres_[a][b] = r;
    }
  q.star_.resize(n);
  for (std::size_t a = 0; a < n; ++a) q.star_[a] = q.lres_table(E(a), q.dualizing());
  return q;
}

FiniteQuantale::Element FiniteQuantale::element(std::string_view name) const {
  for (std::size_t i = 0; i < table_.elements.size(); ++i)
    if (table_.elements[i] == name) return Element{static_cast<std::uint32_t>(i)};
  throw ParseError("unknown element '" + std::string(name) + "'");
}

void validate_finite_quantale(const FiniteQuantale& q) {
  using El = FiniteQuantale::Element;
  const auto& els = q.elements();
  auto nm = [&](El e) { return q.name(e); };
  for (El a : els)
    for (El b : els)
      for (El c : els)
        if (q.tensor(q.tensor(a, b), c) != q.tensor(a, q.tensor(b, c)))
          throw QuantaleLoadError("tensor not associative", {nm(a), nm(b), nm(c)});
  for (El a : els) {
    if (q.tensor(q.unit(), a) != a) throw QuantaleLoadError("tensor unit law fails", {nm(q.unit()), nm(a)});
    if (q.tensor(a, q.unit()) != a) throw QuantaleLoadError("tensor unit law fails", {nm(a), nm(q.unit())});
    if (q.tensor(a, q.bottom()) != q.bottom() || q.tensor(q.bottom(), a) != q.bottom())
      throw QuantaleLoadError("tensor does not preserve the empty join", {nm(a)});
  }
  for (El a : els)
    for (El b : els)
      for (El c : els) {
        if (q.tensor(a, q.join(b, c)) != q.join(q.tensor(a, b), q.tensor(a, c)) ||
            q.tensor(q.join(b, c), a) != q.join(q.tensor(b, a), q.tensor(c, a)))
          throw QuantaleLoadError("tensor does not distribute over joins", {nm(a), nm(b), nm(c)});
      }
  for (El a : els) {
    if (q.star(q.star(a)) != a) throw QuantaleLoadError("star not involutive", {nm(a)});
    if (q.lres_table(a, q.dualizing()) != q.rres_table(a, q.dualizing()))
      throw QuantaleLoadError("dualizing element not cyclic", {nm(a)});
  }
  if (const auto& declared = q.table().oplus) {
    for (El a : els)
      for (El b : els) {
        El derived = oplus(q, a, b);
        if ((*declared)[a.index][b.index] != derived.index)
          throw QuantaleLoadError("declared oplus disagrees with derived oplus", {nm(a), nm(b)});
      }
  }
  auto report = verify_laws(q, LawOptions{SamplingMode::exhaustive});
  for (const auto& law : report.laws)
    if (!law.passed) throw QuantaleLoadError("law " + law.name + " fails", law.counterexample);
}

FiniteQuantale load_finite_quantale(const json& doc) {
  auto q = FiniteQuantale::build_unchecked(parse_quantale_table(doc));
  validate_finite_quantale(q);
  return q;
}

FiniteQuantale load_finite_quantale_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open quantale table '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("quantale table '" + path.string() + "': " + e.what());
  }
  return load_finite_quantale(doc);
}

json builtin_document(std::string_view name) {
  if (name == "bool2") {
    return json{{"elements", {"0", "1"}},
                {"leq", {{true, true}, {false, true}}},
                {"tensor", json::array({json::array({"0", "0"}), json::array({"0", "1"})})},
                {"unit", "1"},
                {"dualizing", "0"}};
  }
  if (name == "sugihara3") {
    return json{{"elements", {"-1", "0", "1"}},
                {"leq", {{true, true, true}, {false, true, true}, {false, false, true}}},
                {"tensor", {{"-1", "-1", "-1"}, {"-1", "0", "1"}, {"-1", "1", "1"}}},
                {"oplus", {{"-1", "-1", "1"}, {"-1", "0", "1"}, {"1", "1", "1"}}},
                {"unit", "0"},
                {"dualizing", "0"}};
  }
  throw ParseError("unknown builtin quantale '" + std::string(name) + "'");
}

FiniteQuantale builtin(std::string_view name) { return load_finite_quantale(builtin_document(name)); }

}  // namespace mixq
