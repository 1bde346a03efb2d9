#include "barriers/ground_set.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace barriers {

GroundSet::GroundSet(std::vector<Nat> prefix, std::optional<Tail> tail) : prefix_(std::move(prefix)), tail_(tail) {
  std::sort(prefix_.begin(), prefix_.end());
  prefix_.erase(std::unique(prefix_.begin(), prefix_.end()), prefix_.end());
  if (tail_ && tail_->step == 0) throw std::invalid_argument("ground set tail step must be positive");
}

GroundSet GroundSet::range(Nat lo, Nat hi) {
  std::vector<Nat> elems;
  for (Nat x = lo; x < hi; ++x) elems.push_back(x);
  return GroundSet(std::move(elems));
}

GroundSet GroundSet::from_seq(const Seq& s) { return GroundSet(s.elems()); }

bool GroundSet::contains(Nat x) const {
  if (std::binary_search(prefix_.begin(), prefix_.end(), x)) return true;
  return tail_ && x >= tail_->start && (x - tail_->start) % tail_->step == 0;
}

std::vector<Nat> GroundSet::elements() const {
  if (tail_) throw std::invalid_argument("ground set " + to_string() + " is infinite");
  return prefix_;
}

std::optional<Nat> GroundSet::next(Nat x, bool inclusive) const {
  std::optional<Nat> best;
  auto it = inclusive ? std::lower_bound(prefix_.begin(), prefix_.end(), x)
                      : std::upper_bound(prefix_.begin(), prefix_.end(), x);
  if (it != prefix_.end()) best = *it;
  if (tail_) {
    Nat lo = inclusive ? x : x + 1;
    Nat candidate = tail_->start;
    if (lo > tail_->start) {
      Nat k = (lo - tail_->start + tail_->step - 1) / tail_->step;
      candidate = tail_->start + k * tail_->step;
    }
    if (!best || candidate < *best) best = candidate;
  }
  return best;
}

std::vector<Nat> GroundSet::elements_below(Nat bound) const {
  std::vector<Nat> out;
  for (auto x = next(0, true); x && *x < bound; x = next(*x)) out.push_back(*x);
  return out;
}

std::vector<Nat> GroundSet::first(std::size_t n) const {
  std::vector<Nat> out;
  for (auto x = next(0, true); x && out.size() < n; x = next(*x)) out.push_back(*x);
  return out;
}

std::string GroundSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(prefix_[i]);
  }
  if (tail_) {
    if (!prefix_.empty()) out += ",";
    out += std::to_string(tail_->start) + "+" + std::to_string(tail_->step) + "k";
  }
  return out + "}";
}

namespace {

Nat parse_nat(std::string_view text, const std::string& whole) {
  Nat value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("invalid ground set '" + whole + "'");
  }
  return value;
}

}  // namespace

GroundSet parse_ground(const std::string& text) {
  if (auto dots = text.find(".."); dots != std::string::npos) {
    std::string_view sv = text;
    Nat lo = parse_nat(sv.substr(0, dots), text);
    std::string_view rest = sv.substr(dots + 2);
    bool inclusive = !rest.empty() && rest.front() == '=';
    if (inclusive) rest.remove_prefix(1);
    Nat hi = parse_nat(rest, text);
    return GroundSet::range(lo, inclusive ? hi + 1 : hi);
  }
  std::vector<Nat> elems;
  std::string_view sv = text;
  while (!sv.empty()) {
    auto comma = sv.find(',');
    elems.push_back(parse_nat(sv.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    sv.remove_prefix(comma + 1);
  }
  return GroundSet(std::move(elems));
}

}  // namespace barriers
