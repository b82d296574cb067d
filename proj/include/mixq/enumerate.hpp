#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mixq/clopen.hpp"
#include "mixq/finite_quantale.hpp"

namespace mixq {

using FiniteTuple = Tuple<FiniteQuantale::Element>;

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

struct Enumeration {
  int d = 0;
  std::vector<FiniteTuple> tuples;                       // lexicographic, couples row-major
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper) indices into `tuples`
};

/// All clopen tuples of dimension d, in lexicographic order over couples
/// (row-major) with the carrier's element order, plus the Hasse covers of the
/// pointwise order. Throws DomainError when |Q|^(d(d-1)/2) exceeds `budget`.
Enumeration enumerate_clopen(const FiniteQuantale& q, int d, std::uint64_t budget = kDefaultEnumerationBudget);

/// Length of the longest chain from a minimal element, per tuple.
std::vector<std::size_t> hasse_ranks(const Enumeration& e);

struct OpsCheck {
  bool ok = true;
  std::uint64_t pairs = 0;
  std::string failure;  // first disagreement, empty when ok
};

/// Compares the lattice join/meet against the least upper / greatest lower
/// bound found by scanning the enumeration, on every pair.
OpsCheck verify_lattice_ops(const FiniteQuantale& q, const Enumeration& e);

/// Canonical "a,b,c" listing of entry names in couple order.
std::string tuple_key(const FiniteQuantale& q, const FiniteTuple& f);

/// DOT digraph of the cover relation; edges point from lower to upper.
std::string hasse_dot(const FiniteQuantale& q, const Enumeration& e);

}  // namespace mixq
