#include "mixq/enumerate.hpp"

#include <cstdio>
#include <sstream>

#include "mixq/util.hpp"

namespace mixq {

Enumeration enumerate_clopen(const FiniteQuantale& q, int d, std::uint64_t budget) {
  if (d < 2) throw DomainError("dimension must be at least 2");
  const std::size_t m = FiniteTuple::count(d);
  const std::uint64_t n = q.size();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (total > budget / n + 1) throw DomainError("enumeration exceeds candidate budget " + std::to_string(budget));
    total *= n;
  }
  if (total > budget)
    throw DomainError("enumeration needs " + std::to_string(total) + " candidates, budget is " + std::to_string(budget));

  ClopenLattice<FiniteQuantale> lat(q);
  Enumeration out;
  out.d = d;
  std::vector<std::uint32_t> idx(m, 0);
  FiniteTuple f(d, FiniteQuantale::Element{0});
  while (true) {
    for (std::size_t k = 0; k < m; ++k) {
      // const_cast-free write through the couple-ordered entry vector
      auto [i, j] = couples(d)[k];
      f(i, j) = FiniteQuantale::Element{idx[k]};
    }
    if (lat.is_clopen(f)) out.tuples.push_back(f);
    std::size_t k = m;
    while (k > 0 && ++idx[k - 1] == n) idx[--k] = 0;
    if (k == 0) break;
  }

  // Covers: x < y with nothing strictly between.
  const std::size_t N = out.tuples.size();
  std::vector<std::vector<char>> lt(N, std::vector<char>(N, 0));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      lt[a][b] = a != b && lat.leq(out.tuples[a], out.tuples[b]);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      if (!lt[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < N && cover; ++c)
        if (lt[a][c] && lt[c][b]) cover = false;
      if (cover) out.covers.emplace_back(a, b);
    }
  return out;
}

std::vector<std::size_t> hasse_ranks(const Enumeration& e) {
  const std::size_t N = e.tuples.size();
  std::vector<std::vector<std::size_t>> up(N);
  std::vector<std::size_t> indeg(N, 0), rank(N, 0);
  for (auto [a, b] : e.covers) {
    up[a].push_back(b);
    ++indeg[b];
  }
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < N; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  for (std::size_t h = 0; h < queue.size(); ++h) {
    auto v = queue[h];
    for (auto w : up[v]) {
      rank[w] = std::max(rank[w], rank[v] + 1);
      if (--indeg[w] == 0) queue.push_back(w);
    }
  }
  return rank;
}

OpsCheck verify_lattice_ops(const FiniteQuantale& q, const Enumeration& e) {
  ClopenLattice<FiniteQuantale> lat(q);
  OpsCheck res;
  const auto& T = e.tuples;
  auto bound = [&](const FiniteTuple& f, const FiniteTuple& g, bool upper) -> const FiniteTuple* {
    std::vector<const FiniteTuple*> cands;
    for (const auto& h : T) {
      bool ok = upper ? (lat.leq(f, h) && lat.leq(g, h)) : (lat.leq(h, f) && lat.leq(h, g));
      if (ok) cands.push_back(&h);
    }
    for (const auto* c : cands) {
      bool extremal = true;
      for (const auto* o : cands)
        if (!(upper ? lat.leq(*c, *o) : lat.leq(*o, *c))) { extremal = false; break; }
      if (extremal) return c;
    }
    return nullptr;
  };
  for (std::size_t a = 0; a < T.size() && res.ok; ++a)
    for (std::size_t b = 0; b < T.size() && res.ok; ++b) {
      ++res.pairs;
      for (bool upper : {true, false}) {
        const FiniteTuple* expect = bound(T[a], T[b], upper);
        FiniteTuple got = lat.op(upper ? LatticeOp::join : LatticeOp::meet, T[a], T[b]);
        if (!expect || !(got == *expect)) {
          res.ok = false;
          res.failure = std::string(upper ? "join" : "meet") + " of [" + tuple_key(q, T[a]) + "] and [" +
                        tuple_key(q, T[b]) + "] is [" + tuple_key(q, got) + "], scan gives " +
                        (expect ? "[" + tuple_key(q, *expect) + "]" : std::string("no bound"));
          break;
        }
      }
    }
  return res;
}

std::string tuple_key(const FiniteQuantale& q, const FiniteTuple& f) {
  std::string s;
  for (std::size_t k = 0; k < f.entries().size(); ++k) s += (k ? "," : "") + q.name(f.entries()[k]);
  return s;
}

std::string hasse_dot(const FiniteQuantale& q, const Enumeration& e) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t v = 0; v < e.tuples.size(); ++v) {
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a64(tuple_key(q, e.tuples[v]))));
    os << "  n" << v << " [label=\"" << v << ":" << std::string(hash, 8) << "\", tooltip=\""
       << tuple_key(q, e.tuples[v]) << "\"];\n";
  }
  for (auto [a, b] : e.covers) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace mixq
