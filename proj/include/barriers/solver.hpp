#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "barriers/coloring.hpp"
#include "barriers/ground_set.hpp"

namespace barriers {

// Finite-front solution notions. A set H "solves" f when the property holds
// on front(B, H). Each of the four properties is inherited by subsets of H,
// which is what makes subset-tree pruning safe: once a partial set fails,
// no superset can succeed.

enum class Property { Mono, Free, Thin, Rainbow };

std::string to_string(Property p);
Property parse_property(const std::string& name);

/// f constant on front(B, H).
bool verify_mono(const Coloring& f, const GroundSet& h);
/// For every s in front(B, H): f(s) in H implies f(s) in s.
bool verify_free(const Coloring& f, const GroundSet& h);
/// The image of f on front(B, H) misses some color of `universe`.
bool verify_thin(const Coloring& f, const GroundSet& h, const std::set<Color>& universe);
/// f injective on front(B, H).
bool verify_rainbow(const Coloring& f, const GroundSet& h);

bool verify(Property p, const Coloring& f, const GroundSet& h, const std::set<Color>& universe = {});

/// Colors used on front(B, G) together with `extra`: the finite stand-in for
/// "the image is not all of N".
std::set<Color> thin_universe(const Coloring& f, const GroundSet& ground, const std::set<Color>& extra = {});

/// front(B, G) with colors precomputed, so that any H contained in G can be
/// tested with bit operations. G is limited to 63 elements.
class FrontTable {
 public:
  FrontTable(const Coloring& f, const GroundSet& ground, std::set<Color> universe = {});

  const std::vector<Nat>& ground() const { return ground_; }
  const std::vector<Seq>& elements() const { return elements_; }
  const std::vector<Color>& colors() const { return colors_; }

  std::uint64_t mask_of(const std::vector<Nat>& subset) const;
  std::vector<Nat> subset_of(std::uint64_t mask) const;

  bool holds(Property p, std::uint64_t mask) const;

 private:
  std::vector<Nat> ground_;
  std::vector<Seq> elements_;
  std::vector<Color> colors_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::size_t> color_ids_;
  std::vector<int> color_in_ground_;  // index of f(s) in ground_, or -1
  std::vector<std::size_t> universe_ids_;
  bool universe_has_unused_ = false;
  std::size_t distinct_colors_ = 0;
};

struct Witness {
  Property property;
  std::vector<Nat> set;
};

/// First H contained in G with |H| >= min_size passing the property, in
/// order of size then lex; nullopt when none exists. Thin uses
/// thin_universe(f, G, universe).
std::optional<Witness> find(Property p, const Coloring& f, const GroundSet& ground, std::size_t min_size,
                            const std::set<Color>& universe = {});

/// Calls `visit` on every H contained in the table's ground set with
/// |H| >= min_size satisfying the property.
void for_each_solution(const FrontTable& table, Property p, std::size_t min_size,
                       const std::function<void(std::uint64_t mask)>& visit);

}  // namespace barriers
