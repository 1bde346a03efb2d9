#include "barriers/solver.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace barriers {

namespace {

std::vector<Seq> checked_front(const Coloring& f, const GroundSet& h) {
  for (Nat x : h.elements()) {
    if (!in_base(f.barrier(), x)) {
      throw NotInBaseError(std::to_string(x) + " is not in the base of " + f.barrier().to_string());
    }
  }
  return front(f.barrier(), h);
}

}  // namespace

std::string to_string(Property p) {
  switch (p) {
    case Property::Mono: return "mono";
    case Property::Free: return "free";
    case Property::Thin: return "thin";
    case Property::Rainbow: return "rainbow";
  }
  return "?";
}

Property parse_property(const std::string& name) {
  if (name == "mono") return Property::Mono;
  if (name == "free") return Property::Free;
  if (name == "thin") return Property::Thin;
  if (name == "rainbow") return Property::Rainbow;
  throw std::invalid_argument("unknown property '" + name + "'");
}

bool verify_mono(const Coloring& f, const GroundSet& h) {
  std::optional<Color> seen;
  for (const auto& s : checked_front(f, h)) {
    Color c = f(s);
    if (seen && *seen != c) return false;
    seen = c;
  }
  return true;
}

bool verify_free(const Coloring& f, const GroundSet& h) {
  for (const auto& s : checked_front(f, h)) {
    Color c = f(s);
    if (c > std::numeric_limits<Nat>::max()) continue;
    const Nat x = c.convert_to<Nat>();
    if (h.contains(x) && !s.contains(x)) return false;
  }
  return true;
}

bool verify_thin(const Coloring& f, const GroundSet& h, const std::set<Color>& universe) {
  std::set<Color> image;
  for (const auto& s : checked_front(f, h)) image.insert(f(s));
  for (const auto& c : universe) {
    if (!image.count(c)) return true;
  }
  return false;
}

bool verify_rainbow(const Coloring& f, const GroundSet& h) {
  std::set<Color> image;
  for (const auto& s : checked_front(f, h)) {
    if (!image.insert(f(s)).second) return false;
  }
  return true;
}

bool verify(Property p, const Coloring& f, const GroundSet& h, const std::set<Color>& universe) {
  switch (p) {
    case Property::Mono: return verify_mono(f, h);
    case Property::Free: return verify_free(f, h);
    case Property::Thin: return verify_thin(f, h, universe);
    case Property::Rainbow: return verify_rainbow(f, h);
  }
  return false;
}

std::set<Color> thin_universe(const Coloring& f, const GroundSet& ground, const std::set<Color>& extra) {
  std::set<Color> out = extra;
  for (const auto& s : front(f.barrier(), ground)) out.insert(f(s));
  return out;
}

FrontTable::FrontTable(const Coloring& f, const GroundSet& ground, std::set<Color> universe)
    : ground_(ground.elements()) {
  if (ground_.size() > 63) throw std::invalid_argument("front tables are limited to 63 ground elements");
  elements_ = checked_front(f, ground);
  std::map<Color, std::size_t> ids;
  for (const auto& s : elements_) {
    Color c = f(s);
    auto [it, fresh] = ids.emplace(c, ids.size());
    color_ids_.push_back(it->second);
    masks_.push_back(mask_of(s.elems()));
    int in_ground = -1;
    if (c <= std::numeric_limits<Nat>::max()) {
      const Nat x = c.convert_to<Nat>();
      for (std::size_t i = 0; i < ground_.size(); ++i) {
        if (ground_[i] == x) in_ground = static_cast<int>(i);
      }
    }
    color_in_ground_.push_back(in_ground);
    colors_.push_back(std::move(c));
  }
  distinct_colors_ = ids.size();
  for (const auto& c : universe) {
    auto it = ids.find(c);
    if (it == ids.end()) {
      universe_has_unused_ = true;
    } else {
      universe_ids_.push_back(it->second);
    }
  }
}

std::uint64_t FrontTable::mask_of(const std::vector<Nat>& subset) const {
  std::uint64_t mask = 0;
  for (Nat x : subset) {
    std::size_t i = 0;
    while (i < ground_.size() && ground_[i] != x) ++i;
    if (i == ground_.size()) throw std::invalid_argument(std::to_string(x) + " is not in the ground set");
    mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::vector<Nat> FrontTable::subset_of(std::uint64_t mask) const {
  std::vector<Nat> out;
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    if (mask >> i & 1) out.push_back(ground_[i]);
  }
  return out;
}

bool FrontTable::holds(Property p, std::uint64_t mask) const {
  std::vector<char> seen;
  if (p == Property::Thin || p == Property::Rainbow) seen.assign(distinct_colors_, 0);
  std::optional<std::size_t> mono_color;
  for (std::size_t e = 0; e < masks_.size(); ++e) {
    if (masks_[e] & ~mask) continue;
    switch (p) {
      case Property::Mono:
        if (mono_color && *mono_color != color_ids_[e]) return false;
        mono_color = color_ids_[e];
        break;
      case Property::Free: {
        const int at = color_in_ground_[e];
        if (at >= 0 && (mask >> at & 1) && !(masks_[e] >> at & 1)) return false;
        break;
      }
      case Property::Thin:
        seen[color_ids_[e]] = 1;
        break;
      case Property::Rainbow:
        if (seen[color_ids_[e]]) return false;
        seen[color_ids_[e]] = 1;
        break;
    }
  }
  if (p == Property::Thin) {
    if (universe_has_unused_) return true;
    for (std::size_t id : universe_ids_) {
      if (!seen[id]) return true;
    }
    return false;
  }
  return true;
}

std::optional<Witness> find(Property p, const Coloring& f, const GroundSet& ground, std::size_t min_size,
                            const std::set<Color>& universe) {
  std::set<Color> colors;
  if (p == Property::Thin) colors = thin_universe(f, ground, universe);
  const FrontTable table(f, ground, colors);
  const std::size_t n = table.ground().size();
  // Combinations of exactly `size` indices in lex order; a failing partial
  // set prunes its whole subtree.
  std::optional<std::uint64_t> found;
  auto search = [&](auto&& self, std::uint64_t mask, std::size_t next, std::size_t left) -> bool {
    if (!table.holds(p, mask)) return false;
    if (left == 0) {
      found = mask;
      return true;
    }
    for (std::size_t i = next; i + left <= n; ++i) {
      if (self(self, mask | std::uint64_t{1} << i, i + 1, left - 1)) return true;
    }
    return false;
  };
  for (std::size_t size = min_size; size <= n; ++size) {
    if (search(search, 0, 0, size)) return Witness{p, table.subset_of(*found)};
  }
  return std::nullopt;
}

void for_each_solution(const FrontTable& table, Property p, std::size_t min_size,
                       const std::function<void(std::uint64_t mask)>& visit) {
  const std::size_t n = table.ground().size();
  auto search = [&](auto&& self, std::uint64_t mask, std::size_t next) -> void {
    if (!table.holds(p, mask)) return;
    if (static_cast<std::size_t>(std::popcount(mask)) >= min_size) visit(mask);
    for (std::size_t i = next; i < n; ++i) self(self, mask | std::uint64_t{1} << i, i + 1);
  };
  search(search, 0, 0);
}

}  // namespace barriers
