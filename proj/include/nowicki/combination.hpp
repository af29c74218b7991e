#pragma once

#include <map>
#include <utility>

#include "nowicki/rational.hpp"

namespace nowicki {

/// Finite Q-linear combination of basis keys. Zero coefficients are never stored.
template <class Key>
class Combination {
 public:
  using Map = std::map<Key, Rational>;

  Combination() = default;

  void add(const Key& key, const Rational& coeff) {
    if (is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  void add(const Combination& other, const Rational& scale) {
    if (is_zero(scale)) return;
    for (const auto& [key, c] : other.terms_) add(key, c * scale);
  }

  void add(const Combination& other) {
    for (const auto& [key, c] : other.terms_) add(key, c);
  }

  void scale(const Rational& s) {
    if (is_zero(s)) {
      terms_.clear();
      return;
    }
    for (auto& [key, c] : terms_) c *= s;
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const Combination& a, const Combination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Map terms_;
};

}  // namespace nowicki
