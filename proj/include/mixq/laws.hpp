#pragma once

// Law-verification harness for the `Quantale` contract. Exhaustive mode
// quantifies over every tuple of a finite carrier; sampled mode draws random
// tuples from a seeded generator so that any failure can be replayed.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mixq/error.hpp"
#include "mixq/quantale.hpp"

namespace mixq {

enum class SamplingMode { exhaustive, sampled };

struct LawOptions {
  SamplingMode mode = SamplingMode::exhaustive;
  std::uint64_t seed = 0;
  std::size_t samples = 200;
};

struct LawResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> counterexample;  // serialized elements, empty when passed
  std::uint64_t cases = 0;
};

struct LawReport {
  LawOptions options;
  std::vector<LawResult> laws;

  bool all_passed() const;
  const LawResult* find(std::string_view name) const;
};

nlohmann::json to_json(const LawReport& report);

namespace detail {

template <class E>
using Witness = std::optional<std::vector<E>>;

template <Quantale Q>
class LawRunner {
 public:
  using E = element_t<Q>;

  LawRunner(const Q& q, LawOptions opt) : q_(q), opt_(opt) {
    if constexpr (FiniteCarrier<Q>) {
      for (const auto& e : q.elements()) pool_.push_back(e);
    }
    if (opt_.mode == SamplingMode::exhaustive && !FiniteCarrier<Q>)
      throw DomainError("exhaustive law verification needs a finite carrier");
    if (opt_.mode == SamplingMode::sampled && !SampleableCarrier<Q, std::mt19937_64>)
      throw DomainError("sampled law verification needs a carrier with sample()");
  }

  /// `check` returns a witness on failure, nullopt on success.
  template <std::size_t K, class Check>
  LawResult run(std::string name, Check check) {
    LawResult res;
    res.name = std::move(name);
    std::array<E, K> args{};
    auto record = [&](const Witness<E>& w) {
      res.passed = false;
      for (const auto& e : *w) res.counterexample.push_back(q_.to_string(e));
    };
    if constexpr (K == 0) {
      res.cases = 1;
      if (auto w = check(args)) record(w);
    } else if (opt_.mode == SamplingMode::exhaustive) {
      std::array<std::size_t, K> idx{};
      const std::size_t n = pool_.size();
      if (n == 0) return res;
      while (true) {
        for (std::size_t k = 0; k < K; ++k) args[k] = pool_[idx[k]];
        ++res.cases;
        if (auto w = check(args)) {
          record(w);
          break;
        }
        std::size_t k = K;
        while (k > 0 && ++idx[k - 1] == n) idx[--k] = 0;
        if (k == 0) break;
      }
    } else {
      if constexpr (SampleableCarrier<Q, std::mt19937_64>) {
        std::mt19937_64 rng(opt_.seed + 0x9E3779B97F4A7C15ULL * (++law_counter_));
        for (std::size_t c = 0; c < opt_.samples; ++c) {
          for (std::size_t k = 0; k < K; ++k) args[k] = q_.sample(rng);
          ++res.cases;
          if (auto w = check(args)) {
            record(w);
            break;
          }
        }
      }
    }
    return res;
  }

 private:
  const Q& q_;
  LawOptions opt_;
  std::vector<E> pool_;
  std::uint64_t law_counter_ = 0;
};

}  // namespace detail

/// Runs the full law suite. Never throws on a failing law: every law gets a
/// verdict, and failures carry the offending tuple.
template <Quantale Q>
LawReport verify_laws(const Q& q, LawOptions opt = {}) {
  using E = element_t<Q>;
  using W = detail::Witness<E>;
  detail::LawRunner<Q> r(q, opt);
  LawReport rep;
  rep.options = opt;
  auto& out = rep.laws;
  auto ok = [] { return W{}; };
  auto bad = [](std::vector<E> w) { return W{std::move(w)}; };

  // Lattice.
  out.push_back(r.template run<1>("order_reflexive", [&](const auto& a) {
    return q.leq(a[0], a[0]) ? ok() : bad({a[0]});
  }));
  out.push_back(r.template run<2>("order_antisymmetric", [&](const auto& a) {
    return (q.leq(a[0], a[1]) && q.leq(a[1], a[0]) && !q.equal(a[0], a[1])) ? bad({a[0], a[1]}) : ok();
  }));
  out.push_back(r.template run<3>("order_transitive", [&](const auto& a) {
    return (q.leq(a[0], a[1]) && q.leq(a[1], a[2]) && !q.leq(a[0], a[2])) ? bad({a[0], a[1], a[2]}) : ok();
  }));
  out.push_back(r.template run<2>("join_upper_bound", [&](const auto& a) {
    auto j = q.join(a[0], a[1]);
    return (q.leq(a[0], j) && q.leq(a[1], j)) ? ok() : bad({a[0], a[1]});
  }));
  out.push_back(r.template run<3>("join_least", [&](const auto& a) {
    bool premise = q.leq(a[0], a[2]) && q.leq(a[1], a[2]);
    return (premise && !q.leq(q.join(a[0], a[1]), a[2])) ? bad({a[0], a[1], a[2]}) : ok();
  }));
  out.push_back(r.template run<2>("meet_lower_bound", [&](const auto& a) {
    auto m = q.meet(a[0], a[1]);
    return (q.leq(m, a[0]) && q.leq(m, a[1])) ? ok() : bad({a[0], a[1]});
  }));
  out.push_back(r.template run<3>("meet_greatest", [&](const auto& a) {
    bool premise = q.leq(a[2], a[0]) && q.leq(a[2], a[1]);
    return (premise && !q.leq(a[2], q.meet(a[0], a[1]))) ? bad({a[0], a[1], a[2]}) : ok();
  }));
  out.push_back(r.template run<1>("bottom_top_bounds", [&](const auto& a) {
    return (q.leq(q.bottom(), a[0]) && q.leq(a[0], q.top())) ? ok() : bad({a[0]});
  }));

  // Monoid (1, ⊗).
  out.push_back(r.template run<3>("tensor_associative", [&](const auto& a) {
    auto lhs = q.tensor(q.tensor(a[0], a[1]), a[2]);
    auto rhs = q.tensor(a[0], q.tensor(a[1], a[2]));
    return q.equal(lhs, rhs) ? ok() : bad({a[0], a[1], a[2]});
  }));
  out.push_back(r.template run<1>("tensor_unit", [&](const auto& a) {
    if (!q.equal(q.tensor(q.unit(), a[0]), a[0])) return bad({q.unit(), a[0]});
    if (!q.equal(q.tensor(a[0], q.unit()), a[0])) return bad({a[0], q.unit()});
    return ok();
  }));
  out.push_back(r.template run<3>("tensor_distributes_join", [&](const auto& a) {
    if (!q.equal(q.tensor(a[0], q.join(a[1], a[2])), q.join(q.tensor(a[0], a[1]), q.tensor(a[0], a[2]))))
      return bad({a[0], a[1], a[2]});
    if (!q.equal(q.tensor(q.join(a[1], a[2]), a[0]), q.join(q.tensor(a[1], a[0]), q.tensor(a[2], a[0]))))
      return bad({a[1], a[2], a[0]});
    return ok();
  }));
  out.push_back(r.template run<1>("tensor_preserves_bottom", [&](const auto& a) {
    return (q.equal(q.tensor(a[0], q.bottom()), q.bottom()) && q.equal(q.tensor(q.bottom(), a[0]), q.bottom()))
               ? ok()
               : bad({a[0]});
  }));

  // Involution and duality.
  out.push_back(r.template run<0>("dualizing_is_star_unit", [&](const auto&) {
    return q.equal(q.dualizing(), q.star(q.unit())) ? ok() : bad({q.dualizing(), q.unit()});
  }));
  out.push_back(r.template run<1>("star_involutive", [&](const auto& a) {
    return q.equal(q.star(q.star(a[0])), a[0]) ? ok() : bad({a[0]});
  }));
  out.push_back(r.template run<2>("star_order_reversing", [&](const auto& a) {
    return (q.leq(a[0], a[1]) && !q.leq(q.star(a[1]), q.star(a[0]))) ? bad({a[0], a[1]}) : ok();
  }));
  out.push_back(r.template run<2>("de_morgan", [&](const auto& a) {
    bool j = q.equal(q.star(q.join(a[0], a[1])), q.meet(q.star(a[0]), q.star(a[1])));
    bool m = q.equal(q.star(q.meet(a[0], a[1])), q.join(q.star(a[0]), q.star(a[1])));
    return (j && m) ? ok() : bad({a[0], a[1]});
  }));
  out.push_back(r.template run<2>("oplus_duality", [&](const auto& a) {
    return q.equal(oplus(q, a[0], a[1]), oplus_by_duality(q, a[0], a[1])) ? ok() : bad({a[0], a[1]});
  }));
  out.push_back(r.template run<1>("oplus_unit", [&](const auto& a) {
    auto z = q.dualizing();
    return (q.equal(oplus(q, z, a[0]), a[0]) && q.equal(oplus(q, a[0], z), a[0])) ? ok() : bad({a[0]});
  }));
  // x ⊸ 0 = 0 ⟜ x = x★, stated through the residuation property so that it
  // does not depend on how the carrier derives star.
  out.push_back(r.template run<2>("cyclicity", [&](const auto& a) {
    const auto& x = a[0];
    const auto& y = a[1];
    bool below_star = q.leq(y, q.star(x));
    bool right = q.leq(q.tensor(x, y), q.dualizing());
    bool left = q.leq(q.tensor(y, x), q.dualizing());
    return (right == below_star && left == below_star) ? ok() : bad({x, y});
  }));
  out.push_back(r.template run<3>("adjunction_three_way", [&](const auto& a) {
    const auto& f = a[0];
    const auto& g = a[1];
    const auto& h = a[2];
    bool p = q.leq(q.tensor(f, g), h);
    bool s = q.leq(f, oplus(q, h, q.star(g)));
    bool t = q.leq(g, oplus(q, q.star(f), h));
    return (p == s && s == t) ? ok() : bad({f, g, h});
  }));
  // (α ⊕ β) ⊗ (γ ⊕ δ) ≤ α ⊕ (β ⊗ γ) ⊕ δ
  out.push_back(r.template run<4>("linear_distributivity", [&](const auto& a) {
    auto lhs = q.tensor(oplus(q, a[0], a[1]), oplus(q, a[2], a[3]));
    auto rhs = oplus(q, oplus(q, a[0], q.tensor(a[1], a[2])), a[3]);
    return q.leq(lhs, rhs) ? ok() : bad({a[0], a[1], a[2], a[3]});
  }));

  // Mix rule agrees with 0 ≤ 1. When 0 ≰ 1 the pair (0, 1) itself breaks mix.
  const bool mix = check_mix(q);
  if (mix) {
    out.push_back(r.template run<2>("mix_iff_0_le_1", [&](const auto& a) {
      return q.leq(q.tensor(a[0], a[1]), oplus(q, a[0], a[1])) ? ok() : bad({a[0], a[1]});
    }));
  } else {
    out.push_back(r.template run<0>("mix_iff_0_le_1", [&](const auto&) {
      auto z = q.dualizing();
      auto u = q.unit();
      return q.leq(q.tensor(z, u), oplus(q, z, u)) ? bad({z, u}) : ok();
    }));
  }
  return rep;
}

/// Searches a finite carrier for a pair violating x ⊗ y ≤ x ⊕ y.
template <FiniteCarrier Q>
std::optional<std::pair<element_t<Q>, element_t<Q>>> find_mix_violation(const Q& q) {
  for (const auto& x : q.elements())
    for (const auto& y : q.elements())
      if (!q.leq(q.tensor(x, y), oplus(q, x, y))) return std::pair{x, y};
  return std::nullopt;
}

}  // namespace mixq
