#include <doctest.h>

#include "mixq/multinomial.hpp"
#include "oracles.hpp"

using namespace mixq;

namespace {

Word W(const char* s, std::vector<int> v) { return Word::parse(s, v); }

}  // namespace

TEST_CASE("word syntax") {
  auto w = Word::parse("xyzx");
  CHECK(w.v == std::vector<int>{2, 1, 1});
  CHECK(w.str() == "xyzx");
  CHECK(Word::parse("xx").v == std::vector<int>{2, 0});
  CHECK_THROWS_AS(Word::parse("x?"), ParseError);
  CHECK_THROWS_AS(Word::parse("xy", {2, 1}), ParseError);
}

TEST_CASE("word order examples") {
  CHECK(word_leq(W("xy", {1, 1}), W("yx", {1, 1})));
  CHECK_FALSE(word_leq(W("yx", {1, 1}), W("xy", {1, 1})));
  for (auto s : {"xxy", "xyx", "yxx"}) CHECK(word_leq(W(s, {2, 1}), W(s, {2, 1})));
  CHECK(word_leq(W("xxy", {2, 1}), W("xyx", {2, 1})));
  CHECK(word_leq(W("xyx", {2, 1}), W("yxx", {2, 1})));
  CHECK_FALSE(word_leq(W("yxx", {2, 1}), W("xxy", {2, 1})));
  CHECK_THROWS_AS(word_leq(W("xy", {1, 1}), W("xxy", {2, 1})), DomainError);
}

TEST_CASE("inversion criterion agrees with the rewriting closure") {
  for (auto v : {std::vector<int>{2, 2}, {1, 1, 1, 1}, {2, 1, 1}, {3, 2}, {2, 2, 1}}) {
    auto ws = all_words(v);
    CHECK(ws.size() == multinomial_count(v));
    for (const auto& u : ws)
      for (const auto& w : ws) CHECK(word_leq(u, w) == word_leq_inversions(u, w));
  }
}

TEST_CASE("two-letter order agrees with the positional oracle") {
  auto ws = oracle::binary_words(3, 3);
  for (const auto& u : ws)
    for (const auto& w : ws) CHECK(word_leq(W(u.c_str(), {3, 3}), W(w.c_str(), {3, 3})) == oracle::binary_leq(u, w));
}

TEST_CASE("multinomial counts") {
  CHECK(multinomial_count({2, 1}) == 3);
  CHECK(multinomial_count({3, 2}) == 10);
  CHECK(multinomial_count({1, 1, 1}) == 6);
  CHECK(multinomial_count({2, 2, 2}) == 90);
  CHECK_THROWS_AS(all_words({10, 10, 10}), DomainError);
}

TEST_CASE("iota examples") {
  CHECK(iota(W("xy", {1, 1})) == IntervalTuple(2, PLFun::bottom()));
  CHECK(iota(W("yx", {1, 1})) == IntervalTuple(2, PLFun::top()));
  CHECK(iota(W("xyz", {1, 1, 1})) == IntervalTuple(3, PLFun::bottom()));
  CHECK(staircase(W("xyz", {1, 1, 1})).vertices.size() == 4);
}

TEST_CASE("iota is an order embedding") {
  IntervalQuantale q;
  for (auto v : {std::vector<int>{2, 1}, {2, 2}, {1, 1, 1}, {2, 1, 1}, {3, 2}, {2, 2, 1}}) {
    auto ws = all_words(v);
    std::vector<IntervalTuple> img;
    for (const auto& w : ws) img.push_back(iota(w));
    for (std::size_t a = 0; a < ws.size(); ++a)
      for (std::size_t b = 0; b < ws.size(); ++b) {
        CHECK(word_leq(ws[a], ws[b]) == tuple_leq(q, img[a], img[b]));
        if (a != b) CHECK_FALSE(img[a] == img[b]);
      }
  }
}

TEST_CASE("adjoints of the diagonal") {
  IntervalTuple id(2, PLFun::identity());
  CHECK(adjoint_approx(AdjointSide::left, {1, 1}, id).str() == "yx");
  CHECK(adjoint_approx(AdjointSide::right, {1, 1}, id).str() == "xy");
  CHECK(adjoint_approx(AdjointSide::right, {2, 1}, id).str() == "xxy");
  CHECK(adjoint_approx(AdjointSide::left, {2, 1}, id).str() == "yxx");
}

TEST_CASE("adjoints undo the embedding and satisfy the Galois laws") {
  IntervalQuantale q;
  for (auto v : {std::vector<int>{2, 2}, {1, 1, 1}, {2, 1, 1}}) {
    auto ws = all_words(v);
    for (const auto& w : ws) {
      CHECK(adjoint_approx(AdjointSide::left, v, iota(w)) == w);
      CHECK(adjoint_approx(AdjointSide::right, v, iota(w)) == w);
    }
  }
  std::mt19937_64 rng(0);
  std::vector<int> v{2, 2};
  auto ws = all_words(v);
  for (int k = 0; k < 25; ++k) {
    IntervalTuple f(2, random_plfun(rng));
    auto l = adjoint_approx(AdjointSide::left, v, f);
    auto r = adjoint_approx(AdjointSide::right, v, f);
    for (const auto& w : ws) {
      CHECK(word_leq(l, w) == tuple_leq(q, f, iota(w)));
      CHECK(word_leq(w, r) == tuple_leq(q, iota(w), f));
    }
  }
  // d = 3 tuples from random staircases.
  std::vector<int> v3{1, 2, 1};
  auto ws3 = all_words(v3);
  for (int k = 0; k < 10; ++k) {
    auto f = path_to_tuple(random_staircase(rng, 3, 5));
    auto l = adjoint_approx(AdjointSide::left, v3, f);
    auto r = adjoint_approx(AdjointSide::right, v3, f);
    for (const auto& w : ws3) {
      CHECK(word_leq(l, w) == tuple_leq(q, f, iota(w)));
      CHECK(word_leq(w, r) == tuple_leq(q, iota(w), f));
    }
  }
}

TEST_CASE("christoffel") {
  auto c11 = christoffel(1, 1);
  CHECK(c11.lower.str() == "xy");
  CHECK(c11.upper.str() == "yx");
  auto c21 = christoffel(2, 1);
  CHECK(c21.lower.str() == "xxy");
  CHECK(c21.upper.str() == "yxx");
  for (auto [n, m] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{3, 1}, std::pair{4, 3}, std::pair{5, 2}}) {
    auto c = christoffel(n, m);
    auto ref = oracle::christoffel(n, m);
    CHECK(c.lower.str() == ref.first);
    CHECK(c.upper.str() == ref.second);
    CHECK(word_leq(c.lower, c.upper));
  }
  CHECK_THROWS_AS(christoffel(0, 1), DomainError);
}
