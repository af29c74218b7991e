#include "nowicki/grading.hpp"

#include <functional>

namespace nowicki {

std::vector<ComponentKey> keys_of_degree(int npairs, int degree) {
  std::vector<ComponentKey> out;
  std::vector<int> pairs(npairs, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == npairs - 1) {
      pairs[i] = left;
      for (int e = 0; e <= degree; ++e) out.push_back({pairs, e});
      return;
    }
    for (int v = left; v >= 0; --v) {
      pairs[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (npairs > 0) rec(0, degree);
  return out;
}

std::vector<std::vector<int>> exponent_splits(const ComponentKey& key) {
  std::vector<std::vector<int>> out;
  if (!key.valid()) return out;
  const int n = static_cast<int>(key.pairs.size());
  std::vector<int> exps(2 * n, 0);
  std::function<void(int, int)> rec = [&](int i, int even_left) {
    if (i == n) {
      if (even_left == 0) out.push_back(exps);
      return;
    }
    for (int e = 0; e <= key.pairs[i] && e <= even_left; ++e) {
      exps[2 * i] = key.pairs[i] - e;
      exps[2 * i + 1] = e;
      rec(i + 1, even_left - e);
    }
  };
  rec(0, key.even);
  return out;
}

}  // namespace nowicki
