#include "mixq/path.hpp"

#include <set>
#include <sstream>

namespace mixq {

namespace {

const Rational kZero(0);
const Rational kOne(1);

bool point_leq(const Point& a, const Point& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (b[k] < a[k]) return false;
  return true;
}

// b lies on the segment a..c of a monotone path: equal direction ratios.
bool collinear(const Point& a, const Point& b, const Point& c) {
  std::size_t pivot = a.size();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (c[k] != a[k]) { pivot = k; break; }
  if (pivot == a.size()) return true;
  Rational t = (b[pivot] - a[pivot]) / (c[pivot] - a[pivot]);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (b[k] - a[k] != t * (c[k] - a[k])) return false;
  return true;
}

std::vector<Point> canonical_vertices(const std::vector<Point>& in) {
  std::vector<Point> out;
  for (const auto& v : in) {
    if (!out.empty() && out.back() == v) continue;
    while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), v)) out.pop_back();
    out.push_back(v);
  }
  return out;
}

void require_valid(const PathD& p) {
  auto rep = validate_path(p);
  if (!rep.valid) {
    const auto& v = rep.violations.front();
    throw DomainError("invalid path: " + v.kind + " at index " + std::to_string(v.index) +
                      (v.detail.empty() ? "" : " (" + v.detail + ")"));
  }
}

IntervalQuantale& interval() {
  static IntervalQuantale q;
  return q;
}

}  // namespace

PathReport validate_path(const PathD& p) {
  PathReport rep;
  auto fail = [&](std::string kind, std::size_t i, std::string detail = {}) {
    rep.valid = false;
    rep.violations.push_back({std::move(kind), i, std::move(detail)});
  };
  if (p.d < 2) {
    fail("dimension", 0, "d must be at least 2");
    return rep;
  }
  if (p.vertices.size() < 2) {
    fail("dimension", 0, "a path needs at least two vertices");
    return rep;
  }
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const auto& v = p.vertices[i];
    if (static_cast<int>(v.size()) != p.d) {
      fail("dimension", i, "vertex has " + std::to_string(v.size()) + " coordinates");
      return rep;
    }
    for (const auto& c : v)
      if (c < kZero || c > kOne) {
        fail("out_of_range", i, c.str());
        break;
      }
  }
  if (std::any_of(p.vertices.front().begin(), p.vertices.front().end(), [](const Rational& c) { return !c.is_zero(); }))
    fail("start", 0, "first vertex must be the origin");
  if (std::any_of(p.vertices.back().begin(), p.vertices.back().end(), [](const Rational& c) { return c != kOne; }))
    fail("end", p.vertices.size() - 1, "last vertex must be the all-1 point");
  for (std::size_t i = 1; i < p.vertices.size(); ++i)
    if (!point_leq(p.vertices[i - 1], p.vertices[i])) fail("non_monotone", i);
  if (rep.valid) rep.canonical = canonical_vertices(p.vertices) == p.vertices;
  else rep.canonical = false;
  return rep;
}

PathD canonical_path(const PathD& p) {
  require_valid(p);
  return PathD{p.d, canonical_vertices(p.vertices)};
}

Polyline2 project(const PathD& p, int i, int j) {
  if (i < 1 || j < 1 || i > p.d || j > p.d || i == j) throw DomainError("projection axes out of range");
  Polyline2 out;
  for (const auto& v : p.vertices) out.push_back({v[i - 1], v[j - 1]});
  return canonical_polyline(std::move(out));
}

IntervalTuple path_to_tuple(const PathD& p) {
  require_valid(p);
  IntervalTuple f(p.d, PLFun::bottom());
  for (const auto& [i, j] : couples(p.d)) f(i, j) = lower_envelope(project(p, i, j));
  if (!is_closed(interval(), f) || !is_open(interval(), f))
    throw InvariantError("tuple of a path is not clopen");
  return f;
}

std::vector<std::vector<PLFun>> extended_entries(const IntervalTuple& f) {
  const int d = f.d();
  std::vector<std::vector<PLFun>> F(d, std::vector<PLFun>(d));
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) F[i - 1][j - 1] = extended_entry(interval(), f, i, j);
  return F;
}

bool contains(const IntervalTuple& f, const Point& x) {
  if (static_cast<int>(x.size()) != f.d()) throw DomainError("point dimension does not match tuple");
  auto F = extended_entries(f);
  for (int i = 0; i < f.d(); ++i)
    for (int j = 0; j < f.d(); ++j)
      if (i != j && x[j] < eval(F[i][j], x[i])) return false;
  return true;
}

PathD tuple_to_path(const IntervalTuple& f) {
  auto& q = interval();
  if (!is_closed(q, f) || !is_open(q, f)) throw DomainError("tuple is not clopen");
  const int d = f.d();
  auto F = extended_entries(f);
  std::vector<std::vector<PLFunUpper>> M(d, std::vector<PLFunUpper>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) M[i][j] = meetof(F[i][j]);

  // Vertex coordinates of every projected entry, per axis.
  std::vector<std::set<Rational>> coords(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      for (const auto& v : graph_path(F[i][j])) {
        coords[i].insert(v.x);
        coords[j].insert(v.y);
      }
    }

  // Both ends of each slice {x_k = c}: the least point has x_j = f_{k,j}(c),
  // the greatest has x_j = meetof(f_{k,j})(c).
  std::vector<Point> pts;
  for (int k = 0; k < d; ++k)
    for (const auto& c : coords[k]) {
      Point lo(d), hi(d);
      for (int j = 0; j < d; ++j) {
        lo[j] = j == k ? c : eval(F[k][j], c);
        hi[j] = j == k ? c : eval(M[k][j], c);
      }
      pts.push_back(std::move(lo));
      pts.push_back(std::move(hi));
    }
  for (const auto& x : pts)
    if (!contains(f, x)) throw InvariantError("slice end outside C_f");
  std::sort(pts.begin(), pts.end());  // C_f is a chain, so lexicographic order is the path order
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (!point_leq(pts[i - 1], pts[i])) throw InvariantError("C_f is not a chain");
  return canonical_path(PathD{d, std::move(pts)});
}

bool roundtrip_check(const IntervalTuple& f) { return path_to_tuple(tuple_to_path(f)) == f; }

bool roundtrip_check(const PathD& p) { return tuple_to_path(path_to_tuple(p)) == canonical_path(p); }

IntervalTuple make_ji(const Point& p) {
  const int d = static_cast<int>(p.size());
  IntervalTuple f(d, PLFun::bottom());
  for (const auto& [i, j] : couples(d)) f(i, j) = one_step(p[i - 1], p[j - 1]);
  return f;
}

IntervalTuple generation_join(const IntervalTuple& f) {
  for (const auto& e : f.entries())
    if (!e.is_step()) throw DomainError("generation needs step-function entries; sloped pieces need infinitely many generators");
  ClopenLattice<IntervalQuantale> lat(interval());
  IntervalTuple acc = lat.bottom(f.d());
  for (const auto& p : tuple_to_path(f).vertices) {
    auto g = make_ji(p);
    if (lat.leq(g, f)) acc = lat.join(acc, g);
  }
  return acc;
}

std::string render_svg(const PathD& p, int i, int j) {
  auto poly = project(p, i, j);
  constexpr int kSize = 512;
  constexpr int kMargin = 32;
  constexpr double kSpan = kSize - 2 * kMargin;
  auto X = [&](const Rational& r) { return kMargin + r.to_double() * kSpan; };
  auto Y = [&](const Rational& r) { return kSize - kMargin - r.to_double() * kSpan; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" viewBox=\"0 0 512 512\">\n";
  os << "  <rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kSpan << "\" height=\"" << kSpan
     << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  std::set<Rational> xs, ys;
  for (const auto& v : poly) {
    xs.insert(v.x);
    ys.insert(v.y);
  }
  for (const auto& x : xs)
    os << "  <line class=\"tick\" x1=\"" << X(x) << "\" y1=\"" << kSize - kMargin << "\" x2=\"" << X(x) << "\" y2=\""
       << kSize - kMargin + 6 << "\" stroke=\"#333\"><title>x" << i << "=" << x << "</title></line>\n";
  for (const auto& y : ys)
    os << "  <line class=\"tick\" x1=\"" << kMargin - 6 << "\" y1=\"" << Y(y) << "\" x2=\"" << kMargin << "\" y2=\""
       << Y(y) << "\" stroke=\"#333\"><title>x" << j << "=" << y << "</title></line>\n";
  os << "  <polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < poly.size(); ++k) os << (k ? " " : "") << X(poly[k].x) << "," << Y(poly[k].y);
  os << "\"/>\n";
  for (const auto& v : poly)
    os << "  <circle cx=\"" << X(v.x) << "\" cy=\"" << Y(v.y) << "\" r=\"2\" fill=\"#c0392b\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace mixq
