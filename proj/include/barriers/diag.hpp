#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "barriers/barrier.hpp"
#include "barriers/coloring.hpp"
#include "barriers/ground_set.hpp"
#include "barriers/ordinal.hpp"

namespace barriers {

// Stage constructions of colorings on (singletons) * B_alpha that defeat
// thin and rainbow solutions computable from a limit oracle. The oracle is
// mocked by a delay model: each index e names a set X_e, and the
// approximation g(e, x, s) is exact once min(s) exceeds the delay d_e.

struct OracleEntry {
  Nat e = 0;
  GroundSet set;
  Nat delay = 0;
};

class OracleFamily {
 public:
  OracleFamily() = default;
  /// Throws std::invalid_argument on a repeated index.
  explicit OracleFamily(std::vector<OracleEntry> entries);

  const std::vector<OracleEntry>& entries() const { return entries_; }
  const OracleEntry* find(Nat e) const;

  /// [x in X_e] when e is present and min(s) > d_e, otherwise 0.
  bool g(Nat e, Nat x, const Seq& s) const;

  nlohmann::json to_json() const;
  static OracleFamily from_json(const nlohmann::json& j);

 private:
  std::vector<OracleEntry> entries_;
};

/// The first <e,i> + 1 numbers x < min(s) with g(e, x, s) = 1, or nullopt
/// when fewer exist.
std::optional<std::vector<Nat>> f_approx(const OracleFamily& fam, Nat e, Nat i, const Seq& s);

enum class DefeaterKind { Thin, Rainbow };
std::string to_string(DefeaterKind k);
DefeaterKind parse_defeater_kind(const std::string& name);

/// f(m, s) for stages s in Canonical(alpha) and m < min(s). Each stage is
/// replayed substage by substage on first use and cached; the cache is
/// guarded, so concurrent queries see identical values.
class StagedColoring {
 public:
  StagedColoring(DefeaterKind kind, Ordinal alpha, OracleFamily fam);

  DefeaterKind kind() const { return kind_; }
  const Ordinal& alpha() const { return alpha_; }
  const OracleFamily& family() const { return fam_; }
  /// Canonical(alpha).
  const BarrierSpec& stages() const { return stages_; }
  /// Product(ExactSize(1), Canonical(alpha)).
  const BarrierSpec& barrier() const { return barrier_; }

  /// Colors of 0, ..., min(s) - 1 at stage s. Throws unless s is an element
  /// of Canonical(alpha).
  std::vector<Color> stage(const Seq& s) const;
  Color operator()(Nat m, const Seq& s) const;

  /// The same map as a coloring of (m) u s.
  Coloring as_coloring() const;

 private:
  struct Cache;
  DefeaterKind kind_;
  Ordinal alpha_;
  OracleFamily fam_;
  BarrierSpec stages_;
  BarrierSpec barrier_;
  std::shared_ptr<Cache> cache_;
};

/// Throws std::invalid_argument for alpha = 0 (no stage has a first element).
StagedColoring thin_defeater(const Ordinal& alpha, const OracleFamily& fam);
StagedColoring rainbow_defeater(const Ordinal& alpha, const OracleFamily& fam);

enum class DefeatStatus {
  Found,
  /// e is not an index of the family.
  IndexNotInFamily,
  /// No stage inside the bound is late enough for the construction to act.
  BoundTooSmall,
  /// A stage where the construction must act exists but no witness was found.
  Bug,
};
std::string to_string(DefeatStatus s);

struct DefeatResult {
  DefeatStatus status = DefeatStatus::BoundTooSmall;
  /// Thin: f(m, stage) = i. Rainbow: f(m, stage) = f(l, stage) with m < l.
  std::optional<Nat> m;
  std::optional<Nat> l;
  std::optional<Seq> stage;
  std::size_t stages_examined = 0;
  std::string detail;

  bool found() const { return status == DefeatStatus::Found; }
  nlohmann::json to_json() const;
};

/// Stages inspected for index e: for each n in X_e with d_e < n < bound, the
/// lex-least element of Canonical(alpha) starting at n and contained in X_e.
/// `bound` limits the first element of the stage only.
std::vector<Seq> defeat_stages(const StagedColoring& col, Nat e, Nat bound);

/// Looks for m in X_e and a stage s inside X_e with f(m, s) = i.
DefeatResult verify_defeat_thin(const StagedColoring& col, Nat e, Nat i, Nat bound);
/// Looks for m < l in X_e and a stage s inside X_e with f(m, s) = f(l, s).
DefeatResult verify_defeat_rainbow(const StagedColoring& col, Nat e, Nat bound);

}  // namespace barriers
