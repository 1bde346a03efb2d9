#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "barriers/coloring.hpp"
#include "barriers/ground_set.hpp"
#include "barriers/solver.hpp"

namespace barriers {

// Strong Weihrauch reductions between the Ramsey-type principles on
// barriers. Each reduction is a pair of maps: `forward` turns an instance
// coloring into an instance of the target principle, `backward` turns a
// target solution into a source solution. Both only look at their argument.

enum class ReductionName { FsToRt, TsToRt, TsToFs, RrtToRt, Rrt2ToFs };

std::string to_string(ReductionName r);
/// Accepts fs-to-rt, ts-to-rt, ts-to-fs, rrt-to-rt, rrt2-to-fs.
ReductionName parse_reduction(const std::string& name);

/// Solution notion of the instance side and of the target side.
Property source_property(ReductionName r);
Property target_property(ReductionName r);
/// B+ for fs-to-rt, B otherwise.
BarrierSpec target_barrier(ReductionName r, const BarrierSpec& b);

/// Rank used as the computable bijection B -> N: order by max element, then
/// lex. Every element has finitely many predecessors, all inside
/// [0, max(s)].
std::strong_ordering rank_cmp(const Seq& s, const Seq& t);
/// {t in B : rank(t) < rank(s)}, in rank order.
std::vector<Seq> rank_prefix(const BarrierSpec& b, const Seq& s);

struct RecursionStats;

/// The 2-coloring g of B+ defined by recursion on the lex order, with its
/// memo table. Evaluation is thread safe.
struct FsForward {
  Coloring coloring;
  std::shared_ptr<RecursionStats> stats;

  /// Longest chain s > s[k] > s[k][k'] > ... followed so far (1 = no recursion).
  std::size_t max_chain() const;
  std::size_t memo_size() const;
};

/// f : B -> N with b(B) = N.
FsForward fs_forward(const Coloring& f);
/// H- = {x - 1 : x in H}; rejects 0.
std::vector<Nat> fs_backward(const std::vector<Nat>& h);

/// g(s) = 0 if f(s) = 0, else 1.
Coloring ts_rt_forward(const Coloring& f);
/// X minus {min X}; requires |X| >= 2.
std::vector<Nat> ts_fs_backward(const std::vector<Nat>& x);

/// Galvin: g(s) = number of rank-earlier t with f(t) = f(s). Values stay
/// below k when f is k-bounded; a larger count throws BoundednessViolation.
Coloring rrt_rt_forward(const Coloring& f, std::size_t k);
/// g(s) = min(t \ s) for the unique rank-earlier t with f(t) = f(s), else 0.
Coloring rrt2_fs_forward(const Coloring& f);

struct Counterexample {
  std::vector<Nat> target_solution;
  std::vector<Nat> source_set;
  std::string reason;
};

struct ReductionReport {
  ReductionName name;
  std::vector<Counterexample> counterexamples;
  std::size_t checked_witnesses = 0;
  std::size_t max_recursion_chain = 0;
  /// Largest value of the forward coloring (rrt-to-rt range check).
  std::optional<Color> max_forward_color;

  bool ok() const { return counterexamples.empty(); }
  nlohmann::json to_json() const;
};

struct CheckOptions {
  std::size_t min_size = 1;
  /// Bound for rrt-to-rt; defaults to the coloring's declared bound.
  std::optional<std::size_t> k;
};

/// Exhaustive finite check of one instance.
///
/// `ground` is the instance-side ground set G (the target side uses G+ for
/// fs-to-rt). Every H contained in the target ground with |H| >= min_size
/// solving the forward instance is mapped back and checked against the
/// source property. For fs-to-rt the check uses H without its largest
/// element: the infinite-set argument looks at elements above every
/// coordinate of s, which a finite H cannot supply at its top.
ReductionReport check_reduction(ReductionName r, const Coloring& f, const GroundSet& ground,
                                const CheckOptions& options = {});

/// Random instance for `r` tabulated over front(B, [0, max G]). For the
/// rainbow reductions the table is k-bounded (k = 2 for rrt2-to-fs).
Coloring random_instance(ReductionName r, const BarrierSpec& b, const GroundSet& ground, std::mt19937_64& rng,
                         std::size_t k = 2);

/// Hand-built instances aimed at the case splits of each reduction.
std::vector<Coloring> adversarial_instances(ReductionName r, const BarrierSpec& b, const GroundSet& ground,
                                            std::size_t k = 2);

}  // namespace barriers
