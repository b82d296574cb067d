#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mixq/error.hpp"

namespace mixq {

/// Couples (i,j), 1 <= i < j <= d, in row-major order (1,2),(1,3),...,(d-1,d).
std::vector<std::pair<int, int>> couples(int d);

/// A family of quantale elements indexed by couples. Only the upper
/// triangle is stored; the reversed and diagonal entries are derived views
/// (see `extended_entry` in clopen.hpp).
template <class E>
class Tuple {
 public:
  Tuple(int d, E fill) : d_(check_d(d)), entries_(count(d), std::move(fill)) {}
  Tuple(int d, std::vector<E> entries) : d_(check_d(d)), entries_(std::move(entries)) {
    if (entries_.size() != count(d)) throw DomainError("tuple needs exactly d(d-1)/2 entries");
  }

  int d() const { return d_; }
  const std::vector<E>& entries() const { return entries_; }

  const E& operator()(int i, int j) const { return entries_[index(i, j)]; }
  E& operator()(int i, int j) { return entries_[index(i, j)]; }

  static std::size_t count(int d) { return static_cast<std::size_t>(d) * (d - 1) / 2; }

  std::size_t index(int i, int j) const {
    if (i < 1 || j > d_ || i >= j)
      throw DomainError("couple (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    // Couples before row i: sum_{r<i} (d - r).
    std::size_t before = static_cast<std::size_t>(i - 1) * d_ - static_cast<std::size_t>(i - 1) * i / 2;
    return before + static_cast<std::size_t>(j - i - 1);
  }

  friend bool operator==(const Tuple&, const Tuple&) = default;

 private:
  static int check_d(int d) {
    if (d < 2) throw DomainError("tuple dimension must be at least 2");
    return d;
  }
  int d_;
  std::vector<E> entries_;
};

}  // namespace mixq
