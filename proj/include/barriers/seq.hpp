#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "barriers/types.hpp"

namespace barriers {

/// A finite strictly increasing sequence of naturals, identified with the
/// finite set it enumerates. May be empty.
///
/// Comparison is lexicographic by first difference, with a strict prefix
/// ordered first.
class Seq {
 public:
  Seq() = default;
  /// Throws std::invalid_argument unless `elems` is strictly increasing.
  explicit Seq(std::vector<Nat> elems);
  Seq(std::initializer_list<Nat> elems);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  Nat operator[](std::size_t i) const { return elems_[i]; }
  Nat min() const;
  Nat max() const;
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  std::span<const Nat> span() const { return elems_; }
  const std::vector<Nat>& elems() const { return elems_; }

  bool contains(Nat x) const;
  /// Set inclusion (not prefix order).
  bool subset_of(const Seq& other) const;
  bool is_prefix_of(const Seq& other) const;
  Seq prefix(std::size_t length) const;
  /// Appends x; x must exceed max().
  Seq append(Nat x) const;
  /// Insert x keeping the sequence increasing; x must not be present.
  Seq insert(Nat x) const;

  std::string to_string() const;

  friend bool operator==(const Seq&, const Seq&) = default;
  friend std::strong_ordering operator<=>(const Seq& a, const Seq& b) { return a.elems_ <=> b.elems_; }

 private:
  std::vector<Nat> elems_;
};

/// s+ = {x + 1 : x in s}.
Seq seq_plus(const Seq& s);
/// s (-) 1: drop the last coordinate, then decrement the rest.
/// Requires s nonempty with min(s) >= 1.
Seq seq_minus(const Seq& s);
/// First-difference lexicographic order; a strict prefix compares Less.
std::strong_ordering lex_cmp(const Seq& s, const Seq& t);

}  // namespace barriers
