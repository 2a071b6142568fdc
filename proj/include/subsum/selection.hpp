#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "subsum/errors.hpp"

namespace subsum {

using Index = std::int64_t;

// All n >= start with n === residue (mod modulus) are selected.
struct TailPattern {
  Index start = 1;
  Index modulus = 1;
  Index residue = 0;

  bool matches(Index n) const {
    if (n < start) return false;
    Index r = n % modulus;
    if (r < 0) r += modulus;
    return r == residue % modulus;
  }
};

// 0/1 choice pattern over indices (1-based): a sorted finite support plus
// optional arithmetic tail patterns. Membership is total and deterministic;
// the finite support and the pattern-covered indices are disjoint.
class Selection {
public:
  enum class Mode { Finite, EventuallyPatterned };

  Selection() = default;

  static Selection empty() { return Selection(); }
  static Selection finite(std::vector<Index> support);
  static Selection patterned(std::vector<Index> support, std::vector<TailPattern> patterns);
  static Selection all_from(Index start) {
    return patterned({}, {TailPattern{start, 1, 0}});
  }
  static Selection all() { return all_from(1); }

  bool contains(Index n) const;
  Mode mode() const { return patterns_.empty() ? Mode::Finite : Mode::EventuallyPatterned; }
  bool is_finite() const { return patterns_.empty(); }

  const std::vector<Index>& support() const { return support_; }
  const std::vector<TailPattern>& patterns() const { return patterns_; }

  // Largest selected index; nullopt for empty or patterned selections.
  std::optional<Index> max_support() const;
  std::size_t support_size() const { return support_.size(); }

  // Indices selected in [1, upto], ascending.
  std::vector<Index> indices_upto(Index upto) const;

  friend bool operator==(const Selection& a, const Selection& b);

private:
  std::vector<Index> support_;       // sorted, unique
  std::vector<TailPattern> patterns_;
};

}  // namespace subsum
