#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "barriers/barrier.hpp"
#include "barriers/seq.hpp"
#include "barriers/types.hpp"

namespace barriers {

/// A coloring f : B -> N of the elements of a barrier.
///
/// The rule is demand driven: it is evaluated only on the elements that are
/// actually queried. Querying a sequence that is not an element of the
/// barrier, or an element missing from a finite table, throws
/// PartialColoringError.
class Coloring {
 public:
  using Rule = std::function<Color(const Seq&)>;

  Coloring(BarrierSpec barrier, Rule rule, std::string name, std::optional<std::size_t> declared_bound = std::nullopt);

  const BarrierSpec& barrier() const { return barrier_; }
  const std::string& name() const { return name_; }
  /// k when the coloring is declared k-bounded.
  std::optional<std::size_t> declared_bound() const { return declared_bound_; }
  Coloring with_bound(std::optional<std::size_t> k) const;

  Color operator()(const Seq& s) const;

 private:
  BarrierSpec barrier_;
  Rule rule_;
  std::string name_;
  std::optional<std::size_t> declared_bound_;
};

Coloring table_coloring(const BarrierSpec& b, std::map<Seq, Color> table,
                        std::optional<std::size_t> declared_bound = std::nullopt);

/// Named rules: constant{c}, min, max, max_plus_one, parity_min, length,
/// sum_mod{m}, code (injective), random{seed, colors}.
Coloring builtin_coloring(const BarrierSpec& b, const std::string& name, const nlohmann::json& params = {});

/// {"table": [[seq, color], ...]} or {"builtin": name, "params": {...}},
/// either with an optional "bound": k.
Coloring coloring_from_json(const BarrierSpec& b, const nlohmann::json& j);
/// Tabulates f over the given elements.
nlohmann::json coloring_table_json(const Coloring& f, const std::vector<Seq>& elements);

/// Throws BoundednessViolation if some color occurs more than k times among
/// f's values on `elements`.
void check_bounded(const Coloring& f, const std::vector<Seq>& elements, std::size_t k);

}  // namespace barriers
