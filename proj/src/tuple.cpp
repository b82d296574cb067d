#include "mixq/tuple.hpp"

namespace mixq {

std::vector<std::pair<int, int>> couples(int d) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) out.emplace_back(i, j);
  return out;
}

}  // namespace mixq
