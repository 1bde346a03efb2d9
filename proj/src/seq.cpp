#include "barriers/seq.hpp"

#include <algorithm>
#include <stdexcept>

namespace barriers {

namespace {

void require_increasing(const std::vector<Nat>& elems) {
  for (std::size_t i = 1; i < elems.size(); ++i) {
    if (elems[i - 1] >= elems[i]) {
      throw std::invalid_argument("sequence is not strictly increasing at position " + std::to_string(i));
    }
  }
}

}  // namespace

Seq::Seq(std::vector<Nat> elems) : elems_(std::move(elems)) { require_increasing(elems_); }

Seq::Seq(std::initializer_list<Nat> elems) : elems_(elems) { require_increasing(elems_); }

Nat Seq::min() const {
  if (elems_.empty()) throw std::invalid_argument("min of empty sequence");
  return elems_.front();
}

Nat Seq::max() const {
  if (elems_.empty()) throw std::invalid_argument("max of empty sequence");
  return elems_.back();
}

bool Seq::contains(Nat x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

bool Seq::subset_of(const Seq& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

bool Seq::is_prefix_of(const Seq& other) const {
  return elems_.size() <= other.elems_.size() && std::equal(elems_.begin(), elems_.end(), other.elems_.begin());
}

Seq Seq::prefix(std::size_t length) const {
  Seq out;
  out.elems_.assign(elems_.begin(), elems_.begin() + static_cast<std::ptrdiff_t>(std::min(length, elems_.size())));
  return out;
}

Seq Seq::append(Nat x) const {
  if (!elems_.empty() && x <= elems_.back()) {
    throw std::invalid_argument("append of " + std::to_string(x) + " after " + std::to_string(elems_.back()));
  }
  Seq out = *this;
  out.elems_.push_back(x);
  return out;
}

Seq Seq::insert(Nat x) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it != elems_.end() && *it == x) throw std::invalid_argument(std::to_string(x) + " already in sequence");
  Seq out = *this;
  out.elems_.insert(out.elems_.begin() + (it - elems_.begin()), x);
  return out;
}

std::string Seq::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(elems_[i]);
  }
  return out + ")";
}

Seq seq_plus(const Seq& s) {
  std::vector<Nat> out;
  out.reserve(s.size());
  for (Nat x : s) out.push_back(x + 1);
  return Seq(std::move(out));
}

Seq seq_minus(const Seq& s) {
  if (s.empty()) throw std::invalid_argument("seq_minus of empty sequence");
  if (s.min() == 0) throw std::invalid_argument("seq_minus of a sequence containing 0");
  std::vector<Nat> out;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) out.push_back(s[i] - 1);
  return Seq(std::move(out));
}

std::strong_ordering lex_cmp(const Seq& s, const Seq& t) { return s <=> t; }

}  // namespace barriers
