#pragma once

// JSON documents for rationals, interval functions, tuples, paths and words.
// Rationals travel as "p/q" strings in lowest terms.

#include <memory>
#include <string>
#include <variant>

#include <json.hpp>

#include "mixq/finite_quantale.hpp"
#include "mixq/multinomial.hpp"
#include "mixq/path.hpp"

namespace mixq {

using json = nlohmann::json;

json to_json(const Rational& r);
Rational parse_rational(const json& j);

json to_json(const PLFun& f);
json to_json(const PLFunUpper& g);
PLFun parse_plfun(const json& j);
PLFunUpper parse_plfun_upper(const json& j);

/// A tuple over a named or inline finite carrier. `carrier` is the
/// document's "quantale" value, echoed on output.
struct FiniteTupleDoc {
  std::shared_ptr<const FiniteQuantale> q;
  json carrier;
  Tuple<FiniteQuantale::Element> tuple;
};

struct IntervalTupleDoc {
  IntervalTuple tuple;
};

using TupleDoc = std::variant<FiniteTupleDoc, IntervalTupleDoc>;

/// "bool2", "sugihara3", or an inline table document.
std::shared_ptr<const FiniteQuantale> resolve_finite_quantale(const json& ref);

TupleDoc parse_tuple(const json& j);
json to_json(const TupleDoc& t);
json to_json(const IntervalTuple& f);
json to_json(const FiniteQuantale& q, const json& carrier, const Tuple<FiniteQuantale::Element>& f);

PathD parse_path(const json& j);
json to_json(const PathD& p);

Word parse_word(const json& j);
json to_json(const Word& w);

}  // namespace mixq
