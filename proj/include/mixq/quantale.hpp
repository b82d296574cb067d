#pragma once

// Contract for a (mix) star-autonomous quantale and the operations derived
// from it. A carrier is any type satisfying `Quantale`; joins and meets are
// finitary only.

#include <concepts>
#include <ranges>
#include <string>
#include <utility>

namespace mixq {

template <class Q>
concept Quantale = requires(const Q& q, const typename Q::element_type& a,
                            const typename Q::element_type& b) {
  typename Q::element_type;
  { q.leq(a, b) } -> std::convertible_to<bool>;
  { q.equal(a, b) } -> std::convertible_to<bool>;
  { q.join(a, b) } -> std::same_as<typename Q::element_type>;
  { q.meet(a, b) } -> std::same_as<typename Q::element_type>;
  { q.bottom() } -> std::same_as<typename Q::element_type>;
  { q.top() } -> std::same_as<typename Q::element_type>;
  { q.tensor(a, b) } -> std::same_as<typename Q::element_type>;
  { q.unit() } -> std::same_as<typename Q::element_type>;
  { q.star(a) } -> std::same_as<typename Q::element_type>;
  { q.dualizing() } -> std::same_as<typename Q::element_type>;
  { q.to_string(a) } -> std::convertible_to<std::string>;
};

/// Carriers that can list every element, enabling exhaustive checks.
template <class Q>
concept FiniteCarrier = Quantale<Q> && requires(const Q& q) {
  { q.elements() } -> std::ranges::range;
};

/// Carriers that can draw random elements from a seeded generator.
template <class Q, class Rng>
concept SampleableCarrier = Quantale<Q> && requires(const Q& q, Rng& rng) {
  { q.sample(rng) } -> std::same_as<typename Q::element_type>;
};

/// Carriers that compute `oplus` by their own route rather than through
/// the star duality.
template <class Q>
concept NativeOplus = Quantale<Q> && requires(const Q& q, const typename Q::element_type& a) {
  { q.oplus(a, a) } -> std::same_as<typename Q::element_type>;
};

template <Quantale Q>
using element_t = typename Q::element_type;

/// a ⊕ b = (b★ ⊗ a★)★, the monoid dual to ⊗ with unit `dualizing()`.
template <Quantale Q>
element_t<Q> oplus_by_duality(const Q& q, const element_t<Q>& a, const element_t<Q>& b) {
  return q.star(q.tensor(q.star(b), q.star(a)));
}

template <Quantale Q>
element_t<Q> oplus(const Q& q, const element_t<Q>& a, const element_t<Q>& b) {
  if constexpr (NativeOplus<Q>)
    return q.oplus(a, b);
  else
    return oplus_by_duality(q, a, b);
}

template <class E>
struct Residuals {
  E lres;  // a ⊸ b
  E rres;  // b ⟜ a
};

/// a ⊸ b = a★ ⊕ b and b ⟜ a = b ⊕ a★.
template <Quantale Q>
Residuals<element_t<Q>> residuals(const Q& q, const element_t<Q>& a, const element_t<Q>& b) {
  auto sa = q.star(a);
  return {oplus(q, sa, b), oplus(q, b, sa)};
}

/// The mix rule x ⊗ y ≤ x ⊕ y holds iff 0 ≤ 1.
template <Quantale Q>
bool check_mix(const Q& q) {
  return q.leq(q.dualizing(), q.unit());
}

template <Quantale Q, std::ranges::input_range R>
element_t<Q> join_all(const Q& q, R&& xs) {
  auto acc = q.bottom();
  for (const auto& x : xs) acc = q.join(acc, x);
  return acc;
}

template <Quantale Q, std::ranges::input_range R>
element_t<Q> meet_all(const Q& q, R&& xs) {
  auto acc = q.top();
  for (const auto& x : xs) acc = q.meet(acc, x);
  return acc;
}

}  // namespace mixq
