#pragma once

#include <optional>
#include <string>
#include <vector>

#include "barriers/seq.hpp"
#include "barriers/types.hpp"

namespace barriers {

/// Arithmetic progression {start, start + step, ...}.
struct Tail {
  Nat start = 0;
  Nat step = 1;

  friend bool operator==(const Tail&, const Tail&) = default;
};

/// A decidable set of naturals: an explicit finite part plus an optional
/// infinite arithmetic-progression tail. Finite ground sets stand in for
/// infinite subsets of the base; sets with a tail serve as genuinely
/// infinite bases (restrictions, oracle sets).
class GroundSet {
 public:
  GroundSet() = default;
  /// `prefix` is sorted and deduplicated. Throws on a zero step.
  explicit GroundSet(std::vector<Nat> prefix, std::optional<Tail> tail = std::nullopt);

  /// {lo, ..., hi - 1}.
  static GroundSet range(Nat lo, Nat hi);
  static GroundSet from_seq(const Seq& s);

  bool contains(Nat x) const;
  bool is_finite() const { return !tail_.has_value(); }
  bool empty() const { return prefix_.empty() && !tail_; }
  const std::vector<Nat>& prefix() const { return prefix_; }
  const std::optional<Tail>& tail() const { return tail_; }

  /// All elements; throws std::invalid_argument for an infinite set.
  std::vector<Nat> elements() const;
  /// Elements strictly below `bound`, ascending.
  std::vector<Nat> elements_below(Nat bound) const;
  /// Least element strictly greater than x (or >= x when `inclusive`).
  std::optional<Nat> next(Nat x, bool inclusive = false) const;
  /// The first n elements in increasing order (fewer if the set is finite and small).
  std::vector<Nat> first(std::size_t n) const;

  std::string to_string() const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<Nat> prefix_;
  std::optional<Tail> tail_;
};

/// Parses `a..b` (half-open), `a..=b` (inclusive) or a comma separated list
/// `1,3,5`. Throws std::invalid_argument.
GroundSet parse_ground(const std::string& text);

}  // namespace barriers
