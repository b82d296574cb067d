#pragma once

// Exact rational piecewise-linear monotone self-maps of [0,1].
//
// Both function kinds store the same data: a partition of [0,1] into pieces
// with an affine law a + b*t on each. They differ only in which endpoint a
// piece owns:
//   PLFun       piece k lives on (x0, x1], f(0) = 0   (left-continuous, join-continuous)
//   PLFunUpper  piece k lives on [x0, x1), g(1) = 1   (right-continuous, meet-continuous)
// The same segment list therefore names a join-continuous function and its
// meet-continuous counterpart, and both are the lower/upper envelopes of one
// monotone polyline from (0,0) to (1,1).

#include <compare>
#include <string>
#include <vector>

#include "mixq/rational.hpp"

namespace mixq {

struct Segment {
  Rational x0, x1;  // x0 < x1
  Rational a, b;    // law a + b*t, b >= 0

  Rational at(const Rational& t) const { return a + b * t; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

namespace detail {

/// Shared storage: validated, canonical segment list.
class SegmentList {
 public:
  const std::vector<Segment>& segments() const { return segs_; }
  /// 0, every interior breakpoint, 1.
  std::vector<Rational> breakpoints() const;
  /// True when every piece is flat.
  bool is_step() const;
  friend bool operator==(const SegmentList&, const SegmentList&) = default;

 protected:
  SegmentList();  // the constant-0 law on (0,1]
  explicit SegmentList(std::vector<Segment> segs);  // validates, canonicalizes
  std::vector<Segment> segs_;
};

}  // namespace detail

class PLFunUpper;

/// Element of the join-continuous quantale on [0,1].
class PLFun : public detail::SegmentList {
 public:
  PLFun() = default;  // bottom
  /// Accepts loose input (unmerged or zero-length pieces) and canonicalizes.
  /// Throws DomainError if the pieces do not describe a monotone
  /// left-continuous map of [0,1] into itself.
  static PLFun from_segments(std::vector<Segment> segs);

  static PLFun bottom() { return PLFun(); }
  static PLFun top();
  static PLFun identity();

  Rational operator()(const Rational& t) const;
  friend bool operator==(const PLFun&, const PLFun&) = default;

 private:
  explicit PLFun(std::vector<Segment> segs) : SegmentList(std::move(segs)) {}
  friend class PLFunUpper;
};

/// Element of the meet-continuous counterpart.
class PLFunUpper : public detail::SegmentList {
 public:
  PLFunUpper() = default;  // 0 on [0,1), 1 at 1
  static PLFunUpper from_segments(std::vector<Segment> segs);
  static PLFunUpper identity();

  Rational operator()(const Rational& t) const;
  friend bool operator==(const PLFunUpper&, const PLFunUpper&) = default;

 private:
  explicit PLFunUpper(std::vector<Segment> segs) : SegmentList(std::move(segs)) {}
  friend class PLFun;
};

// ---------------------------------------------------------------------------
// Planar monotone polylines.

struct Point2 {
  Rational x, y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Vertex list of a monotone polyline from (0,0) to (1,1).
using Polyline2 = std::vector<Point2>;

/// Drops repeated vertices and interior vertices on a straight run.
Polyline2 canonical_polyline(Polyline2 pts);
/// The completed graph: the function's pieces joined by vertical jumps.
Polyline2 graph_path(const PLFun& f);
Polyline2 graph_path(const PLFunUpper& g);
/// Reflection across the diagonal.
Polyline2 transpose(const Polyline2& p);
/// x ↦ min{y | (x,y) on the path}. Throws DomainError on a non-monotone path.
PLFun lower_envelope(const Polyline2& p);
/// x ↦ max{y | (x,y) on the path}.
PLFunUpper upper_envelope(const Polyline2& p);

// ---------------------------------------------------------------------------
// Operations.

/// 0 on [0,x], y on (x,1]; bottom when x = 1 or y = 0.
PLFun one_step(const Rational& x, const Rational& y);
/// 0 on [0,x), y on [x,1), 1 at 1.
PLFunUpper one_step_upper(const Rational& x, const Rational& y);

/// Throws DomainError unless 0 <= t <= 1.
Rational eval(const PLFun& f, const Rational& t);
Rational eval(const PLFunUpper& g, const Rational& t);

PLFun join(const PLFun& f, const PLFun& g);
PLFun meet(const PLFun& f, const PLFun& g);
PLFunUpper join(const PLFunUpper& f, const PLFunUpper& g);
PLFunUpper meet(const PLFunUpper& f, const PLFunUpper& g);

/// outer ∘ inner.
PLFun compose(const PLFun& outer, const PLFun& inner);
PLFunUpper compose(const PLFunUpper& outer, const PLFunUpper& inner);

/// f ⊗ g := g ∘ f.
PLFun tensor(const PLFun& f, const PLFun& g);

/// Right adjoint: y ↦ max{x | f(x) <= y}.
PLFunUpper radj(const PLFun& f);
/// Left adjoint: x ↦ min{y | x <= g(y)}.
PLFun ladj(const PLFunUpper& g);

/// x ↦ inf_{x < x'} f(x'), forced to 1 at 1.
PLFunUpper meetof(const PLFun& f);
/// x ↦ sup_{x' < x} g(x'), forced to 0 at 0.
PLFun joinof(const PLFunUpper& g);

/// f★ = joinof(radj f).
PLFun star(const PLFun& f);
/// f★ = ladj(meetof f), kept as an independent route for cross-checks.
PLFun star_via_left_adjoint(const PLFun& f);

/// f ⊕ g := joinof(meetof g ∘ meetof f). Authoritative route.
PLFun oplus(const PLFun& f, const PLFun& g);
/// f ⊕ g = (g★ ⊗ f★)★, the duality route.
PLFun oplus_by_star(const PLFun& f, const PLFun& g);

enum class Ordering { lt, eq, gt, incomparable };

/// Exact pointwise comparison by a merged breakpoint sweep.
bool leq(const PLFun& f, const PLFun& g);
bool leq(const PLFunUpper& f, const PLFunUpper& g);
Ordering compare(const PLFun& f, const PLFun& g);

std::string to_string(Ordering o);

}  // namespace mixq
