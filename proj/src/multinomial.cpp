#include "mixq/multinomial.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <set>

namespace mixq {

namespace {

Word from_text(std::string_view text, std::vector<int> v, bool infer) {
  Word w;
  int top = 0;
  for (char c : text) {
    auto pos = kAlphabet.find(c);
    if (pos == std::string_view::npos) throw ParseError(std::string("unknown letter '") + c + "' in word");
    w.letters.push_back(static_cast<int>(pos) + 1);
    top = std::max(top, static_cast<int>(pos) + 1);
  }
  if (infer) {
    v.assign(std::max(top, 2), 0);
    for (int k : w.letters) ++v[k - 1];
  } else {
    if (v.size() < 2 || v.size() > kAlphabet.size()) throw ParseError("multiplicity vector needs 2 to 26 entries");
    std::vector<int> counts(v.size(), 0);
    for (int k : w.letters) {
      if (k > static_cast<int>(v.size())) throw ParseError("word uses a letter beyond the multiplicity vector");
      ++counts[k - 1];
    }
    if (counts != v) throw ParseError("letter counts of '" + std::string(text) + "' do not match v");
  }
  w.v = std::move(v);
  return w;
}

void require_same_v(const Word& u, const Word& w) {
  if (u.v != w.v) throw DomainError("words have different multiplicity vectors");
}

}  // namespace

Word Word::parse(std::string_view text) { return from_text(text, {}, true); }
Word Word::parse(std::string_view text, const std::vector<int>& v) { return from_text(text, v, false); }

std::string Word::str() const {
  std::string s;
  for (int k : letters) s += kAlphabet[k - 1];
  return s;
}

std::uint64_t multinomial_count(const std::vector<int>& v) {
  // Product of binomials C(n_1 + ... + n_k, n_k); exact in 128 bits at each step.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 acc = 1;
  std::uint64_t n = 0;
  for (int c : v) {
    if (c < 0) throw DomainError("negative multiplicity");
    for (int i = 1; i <= c; ++i) {
      ++n;
      acc = acc * n / static_cast<unsigned>(i);
      if (acc > kMax) return kMax;
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<Word> all_words(const std::vector<int>& v, std::uint64_t budget) {
  const auto n = multinomial_count(v);
  if (n > budget) throw DomainError("L(v) has " + std::to_string(n) + " words, budget is " + std::to_string(budget));
  std::vector<int> letters;
  for (std::size_t k = 0; k < v.size(); ++k) letters.insert(letters.end(), v[k], static_cast<int>(k) + 1);
  std::vector<Word> out;
  do out.push_back(Word{v, letters});
  while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

bool word_leq(const Word& u, const Word& w, std::uint64_t budget) {
  require_same_v(u, w);
  std::set<std::vector<int>> seen{u.letters};
  std::deque<std::vector<int>> queue{u.letters};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    if (cur == w.letters) return true;
    for (std::size_t t = 0; t + 1 < cur.size(); ++t) {
      if (cur[t] >= cur[t + 1]) continue;
      auto next = cur;
      std::swap(next[t], next[t + 1]);
      if (seen.insert(next).second) {
        if (seen.size() > budget) throw DomainError("word order search exceeded budget");
        queue.push_back(std::move(next));
      }
    }
  }
  return false;
}

bool word_leq_inversions(const Word& u, const Word& w) {
  require_same_v(u, w);
  auto inversions = [](const Word& x) {
    std::set<std::array<int, 4>> inv;
    std::vector<int> seen(x.v.size(), 0);
    std::vector<std::pair<int, int>> occ;  // (letter, occurrence)
    for (int k : x.letters) occ.emplace_back(k, seen[k - 1]++);
    for (std::size_t s = 0; s < occ.size(); ++s)
      for (std::size_t t = s + 1; t < occ.size(); ++t)
        if (occ[s].first > occ[t].first)
          inv.insert({occ[t].first, occ[t].second, occ[s].first, occ[s].second});
    return inv;
  };
  auto iu = inversions(u);
  auto iw = inversions(w);
  return std::includes(iw.begin(), iw.end(), iu.begin(), iu.end());
}

PathD staircase(const Word& w) {
  PathD p;
  p.d = w.d();
  Point x(p.d, Rational(0));
  p.vertices.push_back(x);
  for (int k : w.letters) {
    x[k - 1] += Rational(1, w.v[k - 1]);
    p.vertices.push_back(x);
  }
  return canonical_path(p);
}

IntervalTuple iota(const Word& w) { return path_to_tuple(staircase(w)); }

Word adjoint_approx(AdjointSide side, const std::vector<int>& v, const IntervalTuple& f, std::uint64_t budget) {
  static const IntervalQuantale q;
  if (f.d() != static_cast<int>(v.size())) throw DomainError("tuple dimension does not match v");
  if (!is_closed(q, f) || !is_open(q, f)) throw DomainError("tuple is not clopen");
  const bool left = side == AdjointSide::left;
  std::vector<Word> cands;
  for (auto& w : all_words(v, budget)) {
    auto g = iota(w);
    if (left ? tuple_leq(q, f, g) : tuple_leq(q, g, f)) cands.push_back(std::move(w));
  }
  for (const auto& c : cands) {
    bool extremal = true;
    for (const auto& o : cands)
      if (!(left ? word_leq_inversions(c, o) : word_leq_inversions(o, c))) {
        extremal = false;
        break;
      }
    if (extremal) return c;
  }
  throw DomainError(std::string("no ") + (left ? "least" : "greatest") + " word bounds the tuple");
}

Christoffel christoffel(int n, int m, std::uint64_t budget) {
  if (n < 1 || m < 1) throw DomainError("christoffel needs positive n and m");
  std::vector<int> v{n, m};
  IntervalTuple id(2, PLFun::identity());
  return {adjoint_approx(AdjointSide::right, v, id, budget), adjoint_approx(AdjointSide::left, v, id, budget)};
}

}  // namespace mixq
