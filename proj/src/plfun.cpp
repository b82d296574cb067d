#include "mixq/plfun.hpp"

#include <algorithm>

#include "mixq/error.hpp"

namespace mixq {

namespace {

const Rational kZero{0};
const Rational kOne{1};

std::vector<Segment> canonical_segments(std::vector<Segment> in) {
  std::vector<Segment> out;
  out.reserve(in.size());
  for (auto& s : in) {
    if (s.x0 == s.x1) continue;
    if (!out.empty() && out.back().a == s.a && out.back().b == s.b && out.back().x1 == s.x0) {
      out.back().x1 = s.x1;
      continue;
    }
    out.push_back(std::move(s));
  }
  return out;
}

void validate_segments(const std::vector<Segment>& segs) {
  if (segs.empty()) throw DomainError("piecewise-linear function needs at least one non-empty piece");
  if (segs.front().x0 != kZero) throw DomainError("first piece must start at 0");
  if (segs.back().x1 != kOne) throw DomainError("last piece must end at 1");
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const auto& s = segs[k];
    const auto idx = " (piece " + std::to_string(k) + ")";
    if (!(s.x0 < s.x1)) throw DomainError("piece endpoints must increase" + idx);
    if (s.b.sign() < 0) throw DomainError("negative slope" + idx);
    if (s.at(s.x0).sign() < 0 || s.at(s.x1) > kOne) throw DomainError("values leave [0,1]" + idx);
    if (k + 1 < segs.size()) {
      const auto& n = segs[k + 1];
      if (n.x0 != s.x1) throw DomainError("pieces must be contiguous" + idx);
      if (n.at(n.x0) < s.at(s.x1)) throw DomainError("downward jump after" + idx);
    }
  }
}

std::vector<Segment> checked(std::vector<Segment> segs) {
  // Zero-length pieces are dropped before structural checks so loose input
  // such as a degenerate [x,x] piece is accepted.
  std::vector<Segment> nonempty;
  for (auto& s : segs) {
    if (s.x1 < s.x0) throw DomainError("piece endpoints must increase");
    if (s.x0 != s.x1) nonempty.push_back(std::move(s));
  }
  validate_segments(nonempty);
  return canonical_segments(std::move(nonempty));
}

Segment flat(Rational x0, Rational x1, Rational c) { return Segment{std::move(x0), std::move(x1), std::move(c), kZero}; }

// Piece index owning t: (x0,x1] for lower, [x0,x1) for upper.
std::size_t piece_lower(const std::vector<Segment>& s, const Rational& t) {
  auto it = std::lower_bound(s.begin(), s.end(), t, [](const Segment& seg, const Rational& v) { return seg.x1 < v; });
  return static_cast<std::size_t>(it - s.begin());
}
std::size_t piece_upper(const std::vector<Segment>& s, const Rational& t) {
  auto it = std::upper_bound(s.begin(), s.end(), t, [](const Rational& v, const Segment& seg) { return v < seg.x1; });
  return static_cast<std::size_t>(it - s.begin());
}

void check_unit(const Rational& t) {
  if (t.sign() < 0 || t > kOne) throw DomainError("argument " + t.str() + " outside [0,1]");
}

// Union of breakpoints of two partitions.
std::vector<Rational> merged_breaks(const std::vector<Segment>& f, const std::vector<Segment>& g) {
  std::vector<Rational> pts;
  for (const auto& s : f) pts.push_back(s.x0);
  for (const auto& s : g) pts.push_back(s.x0);
  pts.push_back(kOne);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Pointwise max (take_max) or min of two segment lists. Endpoint
// conventions do not matter: the result is decided per open interval.
std::vector<Segment> lattice_merge(const std::vector<Segment>& f, const std::vector<Segment>& g, bool take_max) {
  auto pts = merged_breaks(f, g);
  std::vector<Segment> out;
  std::size_t i = 0, j = 0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const Rational& p = pts[k];
    const Rational& q = pts[k + 1];
    while (f[i].x1 <= p) ++i;
    while (g[j].x1 <= p) ++j;
    const Segment& u = f[i];
    const Segment& v = g[j];
    // d(t) = u(t) - v(t) is affine on [p,q].
    Rational dp = u.at(p) - v.at(p);
    Rational dq = u.at(q) - v.at(q);
    auto pick = [&](const Rational& lo, const Rational& hi) {
      Rational mid = (lo + hi) / Rational(2);
      bool u_wins = take_max ? (u.at(mid) >= v.at(mid)) : (u.at(mid) <= v.at(mid));
      const Segment& w = u_wins ? u : v;
      out.push_back(Segment{lo, hi, w.a, w.b});
    };
    if (dp.sign() * dq.sign() < 0) {
      Rational cross = (v.a - u.a) / (u.b - v.b);
      pick(p, cross);
      pick(cross, q);
    } else {
      pick(p, q);
    }
  }
  return out;
}

bool segments_leq(const std::vector<Segment>& f, const std::vector<Segment>& g) {
  auto pts = merged_breaks(f, g);
  std::size_t i = 0, j = 0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const Rational& p = pts[k];
    const Rational& q = pts[k + 1];
    while (f[i].x1 <= p) ++i;
    while (g[j].x1 <= p) ++j;
    if (f[i].at(p) > g[j].at(p) || f[i].at(q) > g[j].at(q)) return false;
  }
  return true;
}

// outer ∘ inner on segment lists. `upper` selects the [x0,x1) convention;
// otherwise (x0,x1].
std::vector<Segment> compose_segments(const std::vector<Segment>& outer, const std::vector<Segment>& inner,
                                      bool upper) {
  std::vector<Segment> out;
  auto outer_value = [&](const Rational& c) -> Rational {
    if (upper) {
      if (c == kOne) return kOne;
      return outer[piece_upper(outer, c)].at(c);
    }
    if (c.is_zero()) return kZero;
    return outer[piece_lower(outer, c)].at(c);
  };
  for (const auto& s : inner) {
    if (s.b.is_zero()) {
      out.push_back(flat(s.x0, s.x1, outer_value(s.a)));
      continue;
    }
    const Rational lo = s.at(s.x0);
    const Rational hi = s.at(s.x1);
    for (const auto& o : outer) {
      Rational from = max(lo, o.x0);
      Rational to = min(hi, o.x1);
      if (!(from < to)) continue;
      Rational t0 = (from - s.a) / s.b;
      Rational t1 = (to - s.a) / s.b;
      out.push_back(Segment{t0, t1, o.a + o.b * s.a, o.b * s.b});
    }
  }
  return out;
}

// Segments read off a monotone polyline: one per non-vertical edge.
std::vector<Segment> envelope_segments(const Polyline2& p) {
  if (p.empty() || p.front() != Point2{kZero, kZero} || p.back() != Point2{kOne, kOne})
    throw DomainError("planar path must run from (0,0) to (1,1)");
  std::vector<Segment> segs;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    const auto& u = p[k];
    const auto& v = p[k + 1];
    if (v.x < u.x || v.y < u.y) throw DomainError("planar path is not monotone at vertex " + std::to_string(k + 1));
    if (u.x == v.x) continue;
    Rational b = (v.y - u.y) / (v.x - u.x);
    segs.push_back(Segment{u.x, v.x, u.y - b * u.x, b});
  }
  return segs;
}

Polyline2 graph_of(const std::vector<Segment>& segs) {
  Polyline2 pts{{kZero, kZero}};
  for (const auto& s : segs) {
    pts.push_back({s.x0, s.at(s.x0)});
    pts.push_back({s.x1, s.at(s.x1)});
  }
  pts.push_back({kOne, kOne});
  return canonical_polyline(std::move(pts));
}

}  // namespace

namespace detail {

SegmentList::SegmentList() : segs_{flat(kZero, kOne, kZero)} {}
SegmentList::SegmentList(std::vector<Segment> segs) : segs_(checked(std::move(segs))) {}

std::vector<Rational> SegmentList::breakpoints() const {
  std::vector<Rational> out;
  for (const auto& s : segs_) out.push_back(s.x0);
  out.push_back(kOne);
  return out;
}

bool SegmentList::is_step() const {
  return std::all_of(segs_.begin(), segs_.end(), [](const Segment& s) { return s.b.is_zero(); });
}

}  // namespace detail

PLFun PLFun::from_segments(std::vector<Segment> segs) { return PLFun(std::move(segs)); }
PLFun PLFun::top() { return PLFun({flat(kZero, kOne, kOne)}); }
PLFun PLFun::identity() { return PLFun({Segment{kZero, kOne, kZero, kOne}}); }
Rational PLFun::operator()(const Rational& t) const { return eval(*this, t); }

PLFunUpper PLFunUpper::from_segments(std::vector<Segment> segs) { return PLFunUpper(std::move(segs)); }
PLFunUpper PLFunUpper::identity() { return PLFunUpper({Segment{kZero, kOne, kZero, kOne}}); }
Rational PLFunUpper::operator()(const Rational& t) const { return eval(*this, t); }

Polyline2 canonical_polyline(Polyline2 pts) {
  Polyline2 out;
  for (auto& p : pts) {
    if (!out.empty() && out.back() == p) continue;
    if (out.size() >= 2) {
      const auto& a = out[out.size() - 2];
      const auto& b = out.back();
      // b lies on the straight run a -> p iff the two edges are parallel.
      if ((b.x - a.x) * (p.y - b.y) == (b.y - a.y) * (p.x - b.x)) {
        out.back() = std::move(p);
        continue;
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

Polyline2 graph_path(const PLFun& f) { return graph_of(f.segments()); }
Polyline2 graph_path(const PLFunUpper& g) { return graph_of(g.segments()); }

Polyline2 transpose(const Polyline2& p) {
  Polyline2 out;
  out.reserve(p.size());
  for (const auto& v : p) out.push_back({v.y, v.x});
  return out;
}

PLFun lower_envelope(const Polyline2& p) { return PLFun::from_segments(envelope_segments(p)); }
PLFunUpper upper_envelope(const Polyline2& p) { return PLFunUpper::from_segments(envelope_segments(p)); }

PLFun one_step(const Rational& x, const Rational& y) {
  check_unit(x);
  check_unit(y);
  if (x == kOne || y.is_zero()) return PLFun::bottom();
  if (x.is_zero()) return PLFun::from_segments({flat(kZero, kOne, y)});
  return PLFun::from_segments({flat(kZero, x, kZero), flat(x, kOne, y)});
}

PLFunUpper one_step_upper(const Rational& x, const Rational& y) {
  check_unit(x);
  check_unit(y);
  if (x == kOne || y.is_zero()) return PLFunUpper();
  if (x.is_zero()) return PLFunUpper::from_segments({flat(kZero, kOne, y)});
  return PLFunUpper::from_segments({flat(kZero, x, kZero), flat(x, kOne, y)});
}

Rational eval(const PLFun& f, const Rational& t) {
  check_unit(t);
  if (t.is_zero()) return kZero;
  const auto& s = f.segments();
  return s[piece_lower(s, t)].at(t);
}

Rational eval(const PLFunUpper& g, const Rational& t) {
  check_unit(t);
  if (t == kOne) return kOne;
  const auto& s = g.segments();
  return s[piece_upper(s, t)].at(t);
}

PLFun join(const PLFun& f, const PLFun& g) {
  return PLFun::from_segments(lattice_merge(f.segments(), g.segments(), true));
}
PLFun meet(const PLFun& f, const PLFun& g) {
  return PLFun::from_segments(lattice_merge(f.segments(), g.segments(), false));
}
PLFunUpper join(const PLFunUpper& f, const PLFunUpper& g) {
  return PLFunUpper::from_segments(lattice_merge(f.segments(), g.segments(), true));
}
PLFunUpper meet(const PLFunUpper& f, const PLFunUpper& g) {
  return PLFunUpper::from_segments(lattice_merge(f.segments(), g.segments(), false));
}

PLFun compose(const PLFun& outer, const PLFun& inner) {
  return PLFun::from_segments(compose_segments(outer.segments(), inner.segments(), false));
}
PLFunUpper compose(const PLFunUpper& outer, const PLFunUpper& inner) {
  return PLFunUpper::from_segments(compose_segments(outer.segments(), inner.segments(), true));
}

PLFun tensor(const PLFun& f, const PLFun& g) { return compose(g, f); }

// The graph of f reflected across the diagonal is the graph of its
// adjoints: jumps become flats and flats become jumps.
PLFunUpper radj(const PLFun& f) { return upper_envelope(transpose(graph_path(f))); }
PLFun ladj(const PLFunUpper& g) { return lower_envelope(transpose(graph_path(g))); }

// Left- and right-continuization only move the owned endpoint of each piece.
PLFunUpper meetof(const PLFun& f) { return PLFunUpper::from_segments(f.segments()); }
PLFun joinof(const PLFunUpper& g) { return PLFun::from_segments(g.segments()); }

PLFun star(const PLFun& f) { return joinof(radj(f)); }
PLFun star_via_left_adjoint(const PLFun& f) { return ladj(meetof(f)); }

PLFun oplus(const PLFun& f, const PLFun& g) { return joinof(compose(meetof(g), meetof(f))); }
PLFun oplus_by_star(const PLFun& f, const PLFun& g) { return star(tensor(star(g), star(f))); }

bool leq(const PLFun& f, const PLFun& g) { return segments_leq(f.segments(), g.segments()); }
bool leq(const PLFunUpper& f, const PLFunUpper& g) { return segments_leq(f.segments(), g.segments()); }

Ordering compare(const PLFun& f, const PLFun& g) {
  if (f == g) return Ordering::eq;
  if (leq(f, g)) return Ordering::lt;
  if (leq(g, f)) return Ordering::gt;
  return Ordering::incomparable;
}

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::lt: return "lt";
    case Ordering::eq: return "eq";
    case Ordering::gt: return "gt";
    case Ordering::incomparable: return "incomparable";
  }
  return "incomparable";
}

}  // namespace mixq
