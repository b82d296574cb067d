#pragma once

// Closed, open and clopen tuples over a star-autonomous quantale, their
// closure/interior, the duality f ↦ f★, and the lattice of clopen tuples.

#include <optional>
#include <ranges>
#include <string>
#include <vector>

#include "mixq/error.hpp"
#include "mixq/quantale.hpp"
#include "mixq/tuple.hpp"

namespace mixq {

struct Classification {
  bool closed = false;
  bool open = false;
  bool compatible = false;
  bool clopen() const { return closed && open; }
};

/// f_{i,j} for i < j, (f_{j,i})★ for i > j, and the unit on the diagonal.
template <Quantale Q>
element_t<Q> extended_entry(const Q& q, const Tuple<element_t<Q>>& f, int i, int j) {
  if (i < j) return f(i, j);
  if (i > j) return q.star(f(j, i));
  return q.unit();
}

/// f_{i,j} ⊗ f_{j,k} ≤ f_{i,k} for all i < j < k.
template <Quantale Q>
bool is_closed(const Q& q, const Tuple<element_t<Q>>& f) {
  const int d = f.d();
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int k = j + 1; k <= d; ++k)
        if (!q.leq(q.tensor(f(i, j), f(j, k)), f(i, k))) return false;
  return true;
}

/// f_{i,k} ≤ f_{i,j} ⊕ f_{j,k} for all i < j < k.
template <Quantale Q>
bool is_open(const Q& q, const Tuple<element_t<Q>>& f) {
  const int d = f.d();
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int k = j + 1; k <= d; ++k)
        if (!q.leq(f(i, k), oplus(q, f(i, j), f(j, k)))) return false;
  return true;
}

/// f_{i,j} ⊗ f_{j,k} ≤ f_{i,k} over all triples of [d], derived entries included.
template <Quantale Q>
bool is_compatible(const Q& q, const Tuple<element_t<Q>>& f) {
  const int d = f.d();
  std::vector<element_t<Q>> ext;
  ext.reserve(static_cast<std::size_t>(d) * d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) ext.push_back(extended_entry(q, f, i, j));
  auto e = [&](int i, int j) -> const element_t<Q>& { return ext[(i - 1) * d + (j - 1)]; };
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        if (!q.leq(q.tensor(e(i, j), e(j, k)), e(i, k))) return false;
  return true;
}

/// Over a mix carrier compatibility and clopenness coincide; a disagreement
/// there is reported as an InvariantError.
template <Quantale Q>
Classification classify(const Q& q, const Tuple<element_t<Q>>& f) {
  Classification c{is_closed(q, f), is_open(q, f), is_compatible(q, f)};
  if (check_mix(q) && c.compatible != c.clopen())
    throw InvariantError("compatibility and clopenness disagree on a mix carrier");
  return c;
}

/// Least closed tuple above f, by dynamic programming over couples of
/// increasing span: cl_{i,j} = f_{i,j} ∨ ⋁_{i<k<j} cl_{i,k} ⊗ cl_{k,j}.
template <Quantale Q>
Tuple<element_t<Q>> closure(const Q& q, const Tuple<element_t<Q>>& f) {
  Tuple<element_t<Q>> c = f;
  const int d = f.d();
  for (int len = 2; len < d; ++len)
    for (int i = 1; i + len <= d; ++i) {
      const int j = i + len;
      auto acc = f(i, j);
      for (int k = i + 1; k < j; ++k) acc = q.join(acc, q.tensor(c(i, k), c(k, j)));
      c(i, j) = std::move(acc);
    }
  return c;
}

/// Greatest open tuple below f; the dual recursion with ⊕ and meets.
template <Quantale Q>
Tuple<element_t<Q>> interior(const Q& q, const Tuple<element_t<Q>>& f) {
  Tuple<element_t<Q>> c = f;
  const int d = f.d();
  for (int len = 2; len < d; ++len)
    for (int i = 1; i + len <= d; ++i) {
      const int j = i + len;
      auto acc = f(i, j);
      for (int k = i + 1; k < j; ++k) acc = q.meet(acc, oplus(q, c(i, k), c(k, j)));
      c(i, j) = std::move(acc);
    }
  return c;
}

inline constexpr int kOracleMaxDim = 7;

namespace detail {

// Aggregates `combine` along every subdivision i = l0 < l1 < ... < lk = j.
template <Quantale Q, class Combine, class Aggregate>
Tuple<element_t<Q>> over_subdivisions(const Q& q, const Tuple<element_t<Q>>& f, Combine combine,
                                      Aggregate aggregate, element_t<Q> neutral) {
  const int d = f.d();
  if (d > kOracleMaxDim) throw DomainError("subdivision oracle limited to d <= " + std::to_string(kOracleMaxDim));
  Tuple<element_t<Q>> out = f;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      const int inner = j - i - 1;
      auto acc = neutral;
      for (unsigned mask = 0; mask < (1u << inner); ++mask) {
        int prev = i;
        std::optional<element_t<Q>> chain;
        for (int b = 0; b <= inner; ++b) {
          int next = (b == inner) ? j : i + 1 + b;
          if (b < inner && !(mask & (1u << b))) continue;
          const auto& step = f(prev, next);
          chain = chain ? combine(*chain, step) : step;
          prev = next;
        }
        acc = aggregate(acc, *chain);
      }
      out(i, j) = std::move(acc);
    }
  (void)q;
  return out;
}

}  // namespace detail

/// Closure by the defining join over all subdivisions. Test oracle only.
template <Quantale Q>
Tuple<element_t<Q>> closure_oracle(const Q& q, const Tuple<element_t<Q>>& f) {
  return detail::over_subdivisions(
      q, f, [&](const auto& a, const auto& b) { return q.tensor(a, b); },
      [&](const auto& a, const auto& b) { return q.join(a, b); }, q.bottom());
}

/// Interior by the defining meet over all subdivisions. Test oracle only.
template <Quantale Q>
Tuple<element_t<Q>> interior_oracle(const Q& q, const Tuple<element_t<Q>>& f) {
  return detail::over_subdivisions(
      q, f, [&](const auto& a, const auto& b) { return oplus(q, a, b); },
      [&](const auto& a, const auto& b) { return q.meet(a, b); }, q.top());
}

/// dual(f)_{i,j} = (f_{σ(j),σ(i)})★ with σ(i) = d - i + 1.
template <Quantale Q>
Tuple<element_t<Q>> dual(const Q& q, const Tuple<element_t<Q>>& f) {
  Tuple<element_t<Q>> out = f;
  const int d = f.d();
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) out(i, j) = q.star(f(d - j + 1, d - i + 1));
  return out;
}

template <Quantale Q>
bool tuple_leq(const Q& q, const Tuple<element_t<Q>>& f, const Tuple<element_t<Q>>& g) {
  if (f.d() != g.d()) throw DomainError("tuples of different dimension");
  for (std::size_t k = 0; k < f.entries().size(); ++k)
    if (!q.leq(f.entries()[k], g.entries()[k])) return false;
  return true;
}

template <Quantale Q>
bool tuple_equal(const Q& q, const Tuple<element_t<Q>>& f, const Tuple<element_t<Q>>& g) {
  if (f.d() != g.d()) return false;
  for (std::size_t k = 0; k < f.entries().size(); ++k)
    if (!q.equal(f.entries()[k], g.entries()[k])) return false;
  return true;
}

template <Quantale Q>
Tuple<element_t<Q>> pointwise_join(const Q& q, const Tuple<element_t<Q>>& f, const Tuple<element_t<Q>>& g) {
  if (f.d() != g.d()) throw DomainError("tuples of different dimension");
  Tuple<element_t<Q>> out = f;
  for (const auto& [i, j] : couples(f.d())) out(i, j) = q.join(f(i, j), g(i, j));
  return out;
}

template <Quantale Q>
Tuple<element_t<Q>> pointwise_meet(const Q& q, const Tuple<element_t<Q>>& f, const Tuple<element_t<Q>>& g) {
  if (f.d() != g.d()) throw DomainError("tuples of different dimension");
  Tuple<element_t<Q>> out = f;
  for (const auto& [i, j] : couples(f.d())) out(i, j) = q.meet(f(i, j), g(i, j));
  return out;
}

enum class LatticeOp { join, meet };

/// The lattice of clopen tuples over a mix carrier. Construction fails on a
/// carrier where 0 ≰ 1.
template <Quantale Q>
class ClopenLattice {
 public:
  using E = element_t<Q>;
  using T = Tuple<E>;

  explicit ClopenLattice(const Q& q) : q_(q) {
    if (!check_mix(q)) throw DomainError("clopen lattice needs a carrier satisfying the mix rule (0 <= 1)");
  }

  const Q& quantale() const { return q_; }

  T bottom(int d) const { return T(d, q_.bottom()); }
  T top(int d) const { return T(d, q_.top()); }

  bool is_clopen(const T& f) const { return is_closed(q_, f) && is_open(q_, f); }

  /// join = closure of the pointwise join; meet = interior of the pointwise meet.
  T op(LatticeOp kind, const T& f, const T& g) const {
    require_clopen(f);
    require_clopen(g);
    T r = kind == LatticeOp::join ? closure(q_, pointwise_join(q_, f, g)) : interior(q_, pointwise_meet(q_, f, g));
    if (!is_clopen(r)) throw InvariantError("lattice operation left the clopen tuples");
    return r;
  }
  T join(const T& f, const T& g) const { return op(LatticeOp::join, f, g); }
  T meet(const T& f, const T& g) const { return op(LatticeOp::meet, f, g); }

  template <std::ranges::input_range R>
  T join_all(int d, R&& fs) const {
    T acc = bottom(d);
    for (const auto& f : fs) acc = join(acc, f);
    return acc;
  }

  bool leq(const T& f, const T& g) const { return tuple_leq(q_, f, g); }

 private:
  void require_clopen(const T& f) const {
    if (!is_clopen(f)) throw DomainError("lattice operation on a tuple that is not clopen");
  }
  const Q& q_;
};

}  // namespace mixq
