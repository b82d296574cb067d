#pragma once

// Words with a fixed letter multiplicity vector v, ordered by the closure of
// ab -> ba (a < b), and their embedding into clopen interval tuples.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mixq/path.hpp"

namespace mixq {

/// Letters for axes 1, 2, 3, ...
inline constexpr std::string_view kAlphabet = "xyzabcdefghijklmnopqrstuvw";

struct Word {
  std::vector<int> v;        // multiplicity of each letter
  std::vector<int> letters;  // 1-based axis indices

  /// Parses a word; v defaults to the letter counts with d = highest letter
  /// used (at least 2).
  static Word parse(std::string_view text);
  /// Parses and checks the counts against v.
  static Word parse(std::string_view text, const std::vector<int>& v);

  int d() const { return static_cast<int>(v.size()); }
  std::string str() const;
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters <=> b.letters; }
};

inline constexpr std::uint64_t kDefaultWordBudget = 100'000;

/// Number of words with multiplicities v; saturates at UINT64_MAX.
std::uint64_t multinomial_count(const std::vector<int>& v);

/// All words of L(v) in lexicographic order. Throws DomainError above budget.
std::vector<Word> all_words(const std::vector<int>& v, std::uint64_t budget = kDefaultWordBudget);

/// u <= w iff w is reachable from u by rewriting ab -> ba with a < b.
/// Breadth-first search; throws DomainError when more than `budget` words
/// are visited or when the multiplicities differ.
bool word_leq(const Word& u, const Word& w, std::uint64_t budget = kDefaultWordBudget);

/// Same order by inclusion of inversion sets: for letters a < b, the pairs
/// (p-th a, q-th b) where that b precedes that a.
bool word_leq_inversions(const Word& u, const Word& w);

/// Letter k moves axis k by 1/v_k.
PathD staircase(const Word& w);

/// ι_v(w) = path_to_tuple(staircase(w)).
IntervalTuple iota(const Word& w);

enum class AdjointSide { left, right };

/// left: least w with f <= ι_v(w); right: greatest w with ι_v(w) <= f.
/// Exhaustive scan over L(v), then the extremal candidate is verified.
Word adjoint_approx(AdjointSide side, const std::vector<int>& v, const IntervalTuple& f,
                    std::uint64_t budget = kDefaultWordBudget);

struct Christoffel {
  Word lower, upper;
};

/// Images of the diagonal in L(n,m): lower by the right adjoint, upper by
/// the left adjoint.
Christoffel christoffel(int n, int m, std::uint64_t budget = kDefaultWordBudget);

}  // namespace mixq
