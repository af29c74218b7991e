#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

namespace nowicki {

/// Homogeneous component preserved by the derivation: joint degree in each
/// variable pair {odd, even} together with the total degree in the even-indexed
/// variables. The derivation maps (pairs, even) into (pairs, even - 1).
struct ComponentKey {
  std::vector<int> pairs;
  int even = 0;

  int total_degree() const { return std::accumulate(pairs.begin(), pairs.end(), 0); }
  ComponentKey lowered() const { return {pairs, even - 1}; }
  bool valid() const {
    if (even < 0 || even > total_degree()) return false;
    for (int p : pairs)
      if (p < 0) return false;
    return true;
  }

  friend auto operator<=>(const ComponentKey&, const ComponentKey&) = default;
  friend bool operator==(const ComponentKey&, const ComponentKey&) = default;
};

inline ComponentKey operator+(const ComponentKey& a, const ComponentKey& b) {
  ComponentKey out{a.pairs, a.even + b.even};
  for (std::size_t i = 0; i < out.pairs.size() && i < b.pairs.size(); ++i) out.pairs[i] += b.pairs[i];
  return out;
}

/// "p1,p2,...;e"
inline std::string to_string(const ComponentKey& k) {
  std::string s;
  for (std::size_t i = 0; i < k.pairs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(k.pairs[i]);
  }
  return s + ";" + std::to_string(k.even);
}

/// Every key with `npairs` pair degrees summing to `degree`, all even degrees,
/// in lexicographic order.
std::vector<ComponentKey> keys_of_degree(int npairs, int degree);

/// Splits of pair degrees into per-variable exponents (odd, even interleaved)
/// with total even degree `even`.
std::vector<std::vector<int>> exponent_splits(const ComponentKey& key);

}  // namespace nowicki
