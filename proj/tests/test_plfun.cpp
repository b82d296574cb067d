#include <doctest.h>

#include "mixq/interval_quantale.hpp"
#include "mixq/laws.hpp"
#include "oracles.hpp"

using namespace mixq;
using oracle::grid;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

PLFun step3() {  // 0 | 1/2 | 3/4 with breaks at 1/4, 1/2
  return PLFun::from_segments({{R(0), R(1, 4), R(0), R(0)}, {R(1, 4), R(1, 2), R(1, 2), R(0)}, {R(1, 2), R(1), R(3, 4), R(0)}});
}

}  // namespace

TEST_CASE("one_step") {
  CHECK(one_step(R(1), R(1, 2)) == PLFun::bottom());
  CHECK(one_step(R(1, 2), R(0)) == PLFun::bottom());
  auto f = one_step(R(1, 4), R(1, 2));
  CHECK(eval(f, R(1, 4)) == R(0));
  CHECK(eval(f, R(1, 3)) == R(1, 2));
  CHECK(eval(f, R(0)) == R(0));
  CHECK(one_step(R(0), R(1)) == PLFun::top());
  CHECK_THROWS_AS(one_step(R(2), R(1)), DomainError);
  CHECK_THROWS_AS(eval(f, R(-1, 2)), DomainError);
}

TEST_CASE("eval") {
  CHECK(eval(PLFun::identity(), R(3, 7)) == R(3, 7));
  CHECK(eval(join(one_step(R(1, 4), R(1, 2)), one_step(R(1, 2), R(3, 4))), R(2, 3)) == R(3, 4));
}

TEST_CASE("join and meet") {
  auto a = one_step(R(1, 4), R(1, 2));
  auto b = one_step(R(1, 2), R(3, 4));
  CHECK(join(a, b) == step3());
  CHECK(meet(a, b) == one_step(R(1, 2), R(1, 2)));
  CHECK(oracle::matches_on_grid(meet(a, b), [](const Rational& t) {
    return mixq::min(oracle::ji(R(1, 4), R(1, 2), t), oracle::ji(R(1, 2), R(3, 4), t));
  }));
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    auto f = random_plfun(rng), g = random_plfun(rng);
    CHECK(join(f, PLFun::bottom()) == f);
    auto j = join(f, g), m = meet(f, g);
    for (const auto& t : grid(64)) {
      CHECK(j(t) == mixq::max(f(t), g(t)));
      CHECK(m(t) == mixq::min(f(t), g(t)));
    }
  }
}

TEST_CASE("tensor is reversed composition") {
  CHECK(tensor(one_step(R(1, 4), R(1, 2)), one_step(R(1, 3), R(3, 4))) == one_step(R(1, 4), R(3, 4)));
  CHECK(tensor(one_step(R(1, 4), R(1, 2)), one_step(R(1, 2), R(3, 4))) == PLFun::bottom());
  std::mt19937_64 rng(2);
  for (int k = 0; k < 100; ++k) {
    auto f = random_plfun(rng), g = random_plfun(rng);
    CHECK(tensor(f, PLFun::identity()) == f);
    CHECK(tensor(PLFun::identity(), f) == f);
    auto h = tensor(f, g);
    for (const auto& t : grid(64)) CHECK(h(t) == g(f(t)));
  }
}

TEST_CASE("adjoints") {
  CHECK(radj(PLFun::identity()) == PLFunUpper::identity());
  auto f = one_step(R(1, 4), R(1, 2));
  auto r = radj(f);
  auto expected = PLFunUpper::from_segments({{R(0), R(1, 2), R(1, 4), R(0)}, {R(1, 2), R(1), R(1), R(0)}});
  CHECK(r == expected);
  CHECK(ladj(r) == f);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 60; ++k) {
    auto g = random_plfun(rng);
    auto rg = radj(g);
    CHECK(ladj(rg) == g);
    for (const auto& x : grid(32))
      for (const auto& y : grid(32)) CHECK((g(x) <= y) == (x <= rg(y)));
  }
}

TEST_CASE("meetof and joinof") {
  auto f = one_step(R(1, 4), R(1, 2));
  CHECK(meetof(f) == one_step_upper(R(1, 4), R(1, 2)));
  auto up = meetof(f);
  CHECK(up(R(0)) == R(0));
  CHECK(up(R(1, 4)) == R(1, 2));
  CHECK(up(R(1)) == R(1));
  CHECK(meetof(PLFun::identity()) == PLFunUpper::identity());
  std::mt19937_64 rng(0);
  for (int k = 0; k < 200; ++k) {
    auto g = random_plfun(rng);
    CHECK(joinof(meetof(g)) == g);
  }
}

TEST_CASE("star") {
  CHECK(star(PLFun::identity()) == PLFun::identity());
  CHECK(star(one_step(R(1, 4), R(1, 2))) == join(one_step(R(0), R(1, 4)), one_step(R(1, 2), R(1))));
  std::mt19937_64 rng(0);
  for (int k = 0; k < 200; ++k) {
    auto f = random_plfun(rng), g = random_plfun(rng);
    CHECK(star(star(f)) == f);
    CHECK(star(f) == star_via_left_adjoint(f));
    if (leq(f, g)) CHECK(leq(star(g), star(f)));
  }
}

TEST_CASE("oplus two routes and mix") {
  CHECK(oplus(one_step(R(1, 4), R(1, 2)), one_step(R(1, 3), R(3, 4))) == one_step(R(1, 4), R(3, 4)));
  CHECK(oplus_by_star(one_step(R(1, 4), R(1, 2)), one_step(R(1, 3), R(3, 4))) == one_step(R(1, 4), R(3, 4)));
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    auto f = random_plfun(rng), g = random_plfun(rng);
    CHECK(oplus(f, g) == oplus_by_star(f, g));
    CHECK(oplus(f, PLFun::identity()) == f);
    CHECK(leq(tensor(f, g), oplus(f, g)));
  }
}

TEST_CASE("compare") {
  auto a = one_step(R(1, 4), R(1, 2));
  auto b = one_step(R(1, 3), R(3, 4));
  CHECK(compare(a, b) == Ordering::incomparable);
  CHECK(compare(a, a) == Ordering::eq);
  CHECK(compare(PLFun::bottom(), a) == Ordering::lt);
  CHECK(compare(PLFun::top(), a) == Ordering::gt);
  std::mt19937_64 rng(6);
  for (int k = 0; k < 100; ++k) {
    auto f = random_plfun(rng), g = random_plfun(rng);
    auto o = compare(f, join(f, g));
    CHECK((o == Ordering::lt || o == Ordering::eq));
    // Grid evidence never contradicts the exact verdict.
    bool le = true, ge = true;
    for (const auto& t : grid(128)) {
      le = le && f(t) <= g(t);
      ge = ge && g(t) <= f(t);
    }
    if (leq(f, g)) CHECK(le);
    if (leq(g, f)) CHECK(ge);
  }
}

TEST_CASE("loose input is canonicalized, invalid input rejected") {
  auto f = PLFun::from_segments({{R(0), R(1, 2), R(0), R(1)}, {R(1, 2), R(1, 2), R(1, 2), R(0)}, {R(1, 2), R(1), R(0), R(1)}});
  CHECK(f == PLFun::identity());
  CHECK(f.segments().size() == 1);
  CHECK_THROWS_AS(PLFun::from_segments({}), DomainError);
  CHECK_THROWS_AS(PLFun::from_segments({{R(0), R(1, 2), R(0), R(0)}}), DomainError);                       // stops short of 1
  CHECK_THROWS_AS(PLFun::from_segments({{R(0), R(1), R(1), R(-1)}}), DomainError);                         // decreasing
  CHECK_THROWS_AS(PLFun::from_segments({{R(0), R(1), R(0), R(2)}}), DomainError);                          // leaves [0,1]
  CHECK_THROWS_AS(PLFun::from_segments({{R(0), R(1, 2), R(1, 2), R(0)}, {R(1, 2), R(1), R(0), R(0)}}), DomainError);  // drops
}

TEST_CASE("one-step closed forms on a coarse grid") {
  auto g = grid(8);
  for (const auto& x : g)
    for (const auto& y : g) {
      CHECK(star(one_step(x, y)) == join(one_step(R(0), x), one_step(y, R(1))));
      for (const auto& u : g)
        for (const auto& v : g) {
          CHECK(tensor(one_step(x, y), one_step(u, v)) == (u < y ? one_step(x, v) : PLFun::bottom()));
          auto o = oplus(one_step(x, y), one_step(u, v));
          if (!u.is_zero() && y < R(1)) CHECK(o == (u <= y ? one_step(x, v) : PLFun::bottom()));
          // Edges: JI(0,v) is already v at 0; JI(x,1) is 1 from x on.
          CHECK(o == join(one_step(R(0), u.is_zero() ? v : R(0)),
                          one_step(x, y == R(1) ? R(1) : (u <= y ? v : R(0)))));
        }
    }
}

TEST_CASE("one-steps are join-prime against finite families") {
  std::mt19937_64 rng(8);
  int tested = 0;
  for (int k = 0; k < 300; ++k) {
    auto x = random_unit_rational(rng), y = random_unit_rational(rng);
    auto p = one_step(x, y);
    if (p == PLFun::bottom()) continue;
    std::vector<PLFun> fam;
    for (int m = 0; m < 3; ++m) fam.push_back(random_plfun(rng));
    auto top = join(join(fam[0], fam[1]), fam[2]);
    if (!leq(p, top)) continue;
    ++tested;
    CHECK(std::any_of(fam.begin(), fam.end(), [&](const PLFun& g) { return leq(p, g); }));
  }
  CHECK(tested > 20);
}

TEST_CASE("interval quantale sampled law suite") {
  auto rep = verify_laws(IntervalQuantale{}, {SamplingMode::sampled, 0, 200});
  for (const auto& l : rep.laws) CHECK_MESSAGE(l.passed, l.name);
}
