#pragma once

// Monotone rational polylines in I^d and their correspondence with clopen
// tuples over the interval quantale.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "mixq/clopen.hpp"
#include "mixq/interval_quantale.hpp"
#include "mixq/plfun.hpp"
#include "mixq/tuple.hpp"

namespace mixq {

using Point = std::vector<Rational>;
using IntervalTuple = Tuple<PLFun>;

struct PathD {
  int d = 2;
  std::vector<Point> vertices;
  friend bool operator==(const PathD&, const PathD&) = default;
};

struct PathViolation {
  std::string kind;   // dimension, out_of_range, start, end, non_monotone
  std::size_t index;  // offending vertex
  std::string detail;
};

struct PathReport {
  bool valid = true;
  bool canonical = true;  // no repeated or collinear interior vertices
  std::vector<PathViolation> violations;
};

PathReport validate_path(const PathD& p);

/// Merges repeated vertices and interior vertices on a straight run.
/// Throws DomainError on an invalid path.
PathD canonical_path(const PathD& p);

/// Canonical planar polyline (x_i, x_j) of the path; 1-based axes.
Polyline2 project(const PathD& p, int i, int j);

/// v(C): entry (i,j) is the lower envelope of the (i,j)-projection. The
/// result is checked to be clopen.
IntervalTuple path_to_tuple(const PathD& p);

/// f_{i,j} extended to all of [d]²: star of the transposed entry below the
/// diagonal, the identity on it.
std::vector<std::vector<PLFun>> extended_entries(const IntervalTuple& f);

/// x ∈ C_f, i.e. f_{i,j}(x_i) <= x_j for every ordered pair i != j.
bool contains(const IntervalTuple& f, const Point& x);

/// The polyline whose point set is C_f. Every vertex of C_f is an end of
/// some slice {x_k = c} with c a vertex coordinate of a projected entry;
/// the path is the chain through those slice ends. Throws DomainError when
/// f is not clopen.
PathD tuple_to_path(const IntervalTuple& f);

bool roundtrip_check(const IntervalTuple& f);
bool roundtrip_check(const PathD& p);

/// ji(p)_{i,j} = one_step(p_i, p_j).
IntervalTuple make_ji(const Point& p);

/// Join of every ji(p) below f with p a vertex of tuple_to_path(f).
/// Only step-function entries are accepted.
IntervalTuple generation_join(const IntervalTuple& f);

/// SVG of the (i,j)-projection: 512x512 viewport, the path as a polyline,
/// axis ticks at breakpoints and 2px vertex markers.
std::string render_svg(const PathD& p, int i, int j);

/// Axis-parallel staircase with `steps` moves (at least one per axis),
/// rational cut points with denominators up to `max_den`.
template <class Rng>
PathD random_staircase(Rng& rng, int d, int steps, long max_den = 8) {
  if (steps < d) throw DomainError("a staircase needs at least one move per axis");
  std::vector<int> axes;
  for (int k = 0; k < d; ++k) axes.push_back(k);
  std::uniform_int_distribution<int> pick(0, d - 1);
  while (static_cast<int>(axes.size()) < steps) axes.push_back(pick(rng));
  std::shuffle(axes.begin(), axes.end(), rng);

  // Cut points per axis; the last move on each axis lands on 1.
  std::vector<int> moves(d, 0);
  for (int k : axes) ++moves[k];
  std::vector<std::vector<Rational>> cuts(d);
  for (int k = 0; k < d; ++k) {
    std::vector<Rational> c;
    while (static_cast<int>(c.size()) < moves[k] - 1) {
      Rational r = random_unit_rational(rng, max_den);
      if (r.sign() > 0 && r < Rational(1) && std::find(c.begin(), c.end(), r) == c.end()) c.push_back(r);
    }
    std::sort(c.begin(), c.end());
    c.push_back(Rational(1));
    cuts[k] = std::move(c);
  }
  PathD p;
  p.d = d;
  Point x(d, Rational(0));
  p.vertices.push_back(x);
  std::vector<std::size_t> used(d, 0);
  for (int k : axes) {
    x[k] = cuts[k][used[k]++];
    p.vertices.push_back(x);
  }
  return canonical_path(p);
}

}  // namespace mixq
