#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "mixq/plfun.hpp"

namespace mixq {

/// Random rational in [0,1] with denominator at most `max_den`.
template <class Rng>
Rational random_unit_rational(Rng& rng, long max_den = 16) {
  std::uniform_int_distribution<long> den_dist(1, max_den);
  long den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(0, den);
  return Rational(num_dist(rng), den);
}

/// Random element with at most `max_breaks` interior breakpoints. Mixes
/// jumps, flats and sloped pieces; about one draw in eight is a special
/// element (bottom, top, identity or a one-step function).
template <class Rng>
PLFun random_plfun(Rng& rng, std::size_t max_breaks = 8) {
  std::uniform_int_distribution<int> special(0, 15);
  switch (special(rng)) {
    case 0: return PLFun::bottom();
    case 1: return PLFun::identity();
    case 2: return one_step(random_unit_rational(rng), random_unit_rational(rng));
    default: break;
  }
  std::uniform_int_distribution<std::size_t> nb(0, max_breaks);
  std::vector<Rational> xs;
  for (std::size_t k = nb(rng); k > 0; --k) {
    Rational x = random_unit_rational(rng);
    if (x.sign() > 0 && x < Rational(1)) xs.push_back(x);
  }
  xs.push_back(Rational(0));
  xs.push_back(Rational(1));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const std::size_t pieces = xs.size() - 1;

  std::vector<Rational> vals;
  for (std::size_t k = 0; k < 2 * pieces; ++k) vals.push_back(random_unit_rational(rng));
  std::sort(vals.begin(), vals.end());
  std::uniform_int_distribution<int> coin(0, 2);
  for (std::size_t k = 0; k < pieces; ++k) {
    if (coin(rng) == 0) vals[2 * k + 1] = vals[2 * k];                   // flat piece
    if (k + 1 < pieces && coin(rng) == 0) vals[2 * k + 2] = vals[2 * k + 1];  // no jump
  }
  std::vector<Segment> segs;
  for (std::size_t k = 0; k < pieces; ++k) {
    const Rational& x0 = xs[k];
    const Rational& x1 = xs[k + 1];
    Rational b = (vals[2 * k + 1] - vals[2 * k]) / (x1 - x0);
    segs.push_back(Segment{x0, x1, vals[2 * k] - b * x0, b});
  }
  return PLFun::from_segments(std::move(segs));
}

/// The quantale of join-continuous self-maps of [0,1], restricted to exact
/// rational piecewise-linear maps. ⊗ is reversed composition; the unit and
/// the dualizing element are both the identity, so mix holds.
class IntervalQuantale {
 public:
  using element_type = PLFun;

  explicit IntervalQuantale(std::size_t max_breaks = 8) : max_breaks_(max_breaks) {}

  bool leq(const PLFun& a, const PLFun& b) const { return mixq::leq(a, b); }
  bool equal(const PLFun& a, const PLFun& b) const { return a == b; }
  PLFun join(const PLFun& a, const PLFun& b) const { return mixq::join(a, b); }
  PLFun meet(const PLFun& a, const PLFun& b) const { return mixq::meet(a, b); }
  PLFun bottom() const { return PLFun::bottom(); }
  PLFun top() const { return PLFun::top(); }
  PLFun tensor(const PLFun& a, const PLFun& b) const { return mixq::tensor(a, b); }
  PLFun unit() const { return PLFun::identity(); }
  PLFun star(const PLFun& a) const { return mixq::star(a); }
  PLFun dualizing() const { return PLFun::identity(); }
  PLFun oplus(const PLFun& a, const PLFun& b) const { return mixq::oplus(a, b); }
  std::string to_string(const PLFun& a) const;

  template <class Rng>
  PLFun sample(Rng& rng) const {
    return random_plfun(rng, max_breaks_);
  }

 private:
  std::size_t max_breaks_;
};

}  // namespace mixq
