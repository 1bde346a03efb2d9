#include "barriers/reduction.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

#include "barriers/spec_json.hpp"

namespace barriers {

struct RecursionStats {
  struct Entry {
    int value;
    std::size_t chain;
  };
  mutable std::mutex mutex;
  std::map<Seq, Entry> memo;
  std::size_t max_chain = 0;
};

namespace {

constexpr std::size_t kChainGuard = 1 << 20;

std::vector<Seq> rank_sorted(std::vector<Seq> elems) {
  std::sort(elems.begin(), elems.end(), [](const Seq& a, const Seq& b) { return rank_cmp(a, b) < 0; });
  return elems;
}

// Rank-earlier elements grouped by max(s), shared by the rainbow forwards.
class RankIndex {
 public:
  explicit RankIndex(BarrierSpec b) : barrier_(std::move(b)) {}

  std::vector<Seq> before(const Seq& s) const {
    if (s.empty()) return {};
    std::shared_ptr<const std::vector<Seq>> all;
    {
      std::lock_guard lock(mutex_);
      auto it = by_max_.find(s.max());
      if (it != by_max_.end()) all = it->second;
    }
    if (!all) {
      auto computed = std::make_shared<const std::vector<Seq>>(
          rank_sorted(front(barrier_, GroundSet::range(0, s.max() + 1))));
      std::lock_guard lock(mutex_);
      all = by_max_.emplace(s.max(), computed).first->second;
    }
    std::vector<Seq> out;
    for (const auto& t : *all) {
      if (rank_cmp(t, s) >= 0) break;
      out.push_back(t);
    }
    return out;
  }

 private:
  BarrierSpec barrier_;
  mutable std::mutex mutex_;
  mutable std::map<Nat, std::shared_ptr<const std::vector<Seq>>> by_max_;
};

// Earlier elements of B with the same f-color as s.
std::vector<Seq> earlier_twins(const Coloring& f, const RankIndex& index, const Seq& s) {
  const Color c = f(s);
  std::vector<Seq> twins;
  for (const auto& t : index.before(s)) {
    if (f(t) == c) twins.push_back(t);
  }
  return twins;
}

Color random_below(std::mt19937_64& rng, std::uint64_t n) { return Color(rng() % n); }

}  // namespace

std::string to_string(ReductionName r) {
  switch (r) {
    case ReductionName::FsToRt: return "fs-to-rt";
    case ReductionName::TsToRt: return "ts-to-rt";
    case ReductionName::TsToFs: return "ts-to-fs";
    case ReductionName::RrtToRt: return "rrt-to-rt";
    case ReductionName::Rrt2ToFs: return "rrt2-to-fs";
  }
  return "?";
}

ReductionName parse_reduction(const std::string& name) {
  for (auto r : {ReductionName::FsToRt, ReductionName::TsToRt, ReductionName::TsToFs, ReductionName::RrtToRt,
                 ReductionName::Rrt2ToFs}) {
    if (to_string(r) == name) return r;
  }
  throw std::invalid_argument("unknown reduction '" + name + "'");
}

Property source_property(ReductionName r) {
  switch (r) {
    case ReductionName::FsToRt: return Property::Free;
    case ReductionName::TsToRt:
    case ReductionName::TsToFs: return Property::Thin;
    case ReductionName::RrtToRt:
    case ReductionName::Rrt2ToFs: return Property::Rainbow;
  }
  return Property::Mono;
}

Property target_property(ReductionName r) {
  switch (r) {
    case ReductionName::FsToRt:
    case ReductionName::TsToRt:
    case ReductionName::RrtToRt: return Property::Mono;
    case ReductionName::TsToFs:
    case ReductionName::Rrt2ToFs: return Property::Free;
  }
  return Property::Mono;
}

BarrierSpec target_barrier(ReductionName r, const BarrierSpec& b) {
  return r == ReductionName::FsToRt ? make_plus(b) : b;
}

std::strong_ordering rank_cmp(const Seq& s, const Seq& t) {
  if (s.empty() || t.empty()) return t.empty() <=> s.empty();
  if (auto c = s.max() <=> t.max(); c != 0) return c;
  return lex_cmp(s, t);
}

std::vector<Seq> rank_prefix(const BarrierSpec& b, const Seq& s) { return RankIndex(b).before(s); }

std::size_t FsForward::max_chain() const {
  std::lock_guard lock(stats->mutex);
  return stats->max_chain;
}

std::size_t FsForward::memo_size() const {
  std::lock_guard lock(stats->mutex);
  return stats->memo.size();
}

FsForward fs_forward(const Coloring& f) {
  auto stats = std::make_shared<RecursionStats>();
  const BarrierSpec plus = make_plus(f.barrier());
  auto rule = [f, plus, stats](const Seq& s) -> Color {
    // Follow the chain s, s[k], s[k][k'], ... until a base case or a memo
    // hit, then fill in the alternating values on the way back.
    std::vector<Seq> path;
    Seq current = s;
    int value = 0;
    std::size_t chain = 0;
    for (;;) {
      {
        std::lock_guard lock(stats->mutex);
        auto it = stats->memo.find(current);
        if (it != stats->memo.end()) {
          value = it->second.value;
          chain = it->second.chain;
          break;
        }
      }
      const std::size_t n = current.size() - 1;
      if (current.size() < 2) throw std::invalid_argument("fs_forward needs a barrier with base N");
      const Color c = f(seq_minus(current));
      auto below = [&](std::size_t i) { return Color(current[i]) - 1; };  // s_i - 1
      bool equal = false;
      for (std::size_t i = 0; i < n && !equal; ++i) equal = c == below(i);
      bool recurse = false;
      if (!equal) {
        recurse = c < below(0);
        for (std::size_t i = 0; i + 1 < n && !recurse; ++i) recurse = below(i) < c && c < below(i + 1);
      }
      if (equal) {
        value = 0;
      } else if (recurse) {
        const Seq next = variant(plus, current, c.convert_to<Nat>() + 1);
        if (lex_cmp(next, current) >= 0) {
          throw InvariantViolation("fs_forward recursion " + next.to_string() + " not lex-below " + current.to_string());
        }
        path.push_back(current);
        if (path.size() > kChainGuard) throw InvariantViolation("fs_forward recursion chain exceeds guard");
        current = next;
        continue;
      } else if (below(n - 1) < c && c < below(n)) {
        value = 0;
      } else {
        value = 1;
      }
      chain = 1;
      std::lock_guard lock(stats->mutex);
      stats->memo.emplace(current, RecursionStats::Entry{value, chain});
      stats->max_chain = std::max(stats->max_chain, chain);
      break;
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      value = 1 - value;
      ++chain;
      std::lock_guard lock(stats->mutex);
      stats->memo.emplace(*it, RecursionStats::Entry{value, chain});
      stats->max_chain = std::max(stats->max_chain, chain);
    }
    return Color(value);
  };
  return FsForward{Coloring(plus, rule, "fs-forward(" + f.name() + ")"), stats};
}

std::vector<Nat> fs_backward(const std::vector<Nat>& h) {
  std::vector<Nat> out;
  out.reserve(h.size());
  for (Nat x : h) {
    if (x == 0) throw std::invalid_argument("fs_backward: 0 is not in N+");
    out.push_back(x - 1);
  }
  return out;
}

Coloring ts_rt_forward(const Coloring& f) {
  auto rule = [f](const Seq& s) { return f(s) == 0 ? Color(0) : Color(1); };
  return Coloring(f.barrier(), rule, "ts-forward(" + f.name() + ")");
}

std::vector<Nat> ts_fs_backward(const std::vector<Nat>& x) {
  if (x.size() < 2) throw std::invalid_argument("ts_fs_backward needs at least two elements");
  std::vector<Nat> out = x;
  out.erase(std::min_element(out.begin(), out.end()));
  return out;
}

Coloring rrt_rt_forward(const Coloring& f, std::size_t k) {
  auto index = std::make_shared<RankIndex>(f.barrier());
  auto rule = [f, index, k](const Seq& s) -> Color {
    const std::size_t count = earlier_twins(f, *index, s).size();
    if (count >= k) {
      throw BoundednessViolation(f.name() + " is not " + std::to_string(k) + "-bounded: " + s.to_string() + " has " +
                                 std::to_string(count) + " earlier twins");
    }
    return Color(count);
  };
  return Coloring(f.barrier(), rule, "galvin-forward(" + f.name() + ")", std::nullopt);
}

Coloring rrt2_fs_forward(const Coloring& f) {
  auto index = std::make_shared<RankIndex>(f.barrier());
  auto rule = [f, index](const Seq& s) -> Color {
    const std::vector<Seq> twins = earlier_twins(f, *index, s);
    if (twins.empty()) return Color(0);
    if (twins.size() > 1) throw BoundednessViolation(f.name() + " is not 2-bounded at " + s.to_string());
    for (Nat x : twins.front()) {
      if (!s.contains(x)) return Color(x);
    }
    throw InvariantViolation("twin " + twins.front().to_string() + " is a subset of " + s.to_string());
  };
  return Coloring(f.barrier(), rule, "rrt2-forward(" + f.name() + ")");
}

nlohmann::json ReductionReport::to_json() const {
  nlohmann::json ces = nlohmann::json::array();
  for (const auto& c : counterexamples) {
    ces.push_back({{"target_solution", c.target_solution}, {"source_set", c.source_set}, {"reason", c.reason}});
  }
  nlohmann::json out = {{"reduction", to_string(name)},
                        {"counterexamples", ces},
                        {"checked_witnesses", checked_witnesses},
                        {"max_recursion_chain", max_recursion_chain}};
  if (max_forward_color) out["max_forward_color"] = color_to_json(*max_forward_color);
  return out;
}

ReductionReport check_reduction(ReductionName r, const Coloring& f, const GroundSet& ground,
                                const CheckOptions& options) {
  ReductionReport report{r, {}, 0, 0, std::nullopt};
  const std::vector<Nat> g_elems = ground.elements();
  const Nat top = g_elems.empty() ? 0 : g_elems.back();
  const GroundSet below_top = GroundSet::range(0, top + 1);

  std::optional<FsForward> fs;
  std::optional<Coloring> forward;
  GroundSet target_ground = ground;
  std::size_t min_size = options.min_size;
  std::size_t k = 0;
  switch (r) {
    case ReductionName::FsToRt: {
      fs = fs_forward(f);
      forward = fs->coloring;
      std::vector<Nat> shifted;
      for (Nat x : g_elems) shifted.push_back(x + 1);
      target_ground = GroundSet(shifted);
      min_size = std::max<std::size_t>(min_size, 1);
      break;
    }
    case ReductionName::TsToRt:
      forward = ts_rt_forward(f);
      break;
    case ReductionName::TsToFs:
      forward = f;
      min_size = std::max<std::size_t>(min_size, 2);
      break;
    case ReductionName::RrtToRt: {
      if (options.k) {
        k = *options.k;
      } else if (f.declared_bound()) {
        k = *f.declared_bound();
      } else {
        throw std::invalid_argument("rrt-to-rt needs a bound k");
      }
      if (k == 0) throw std::invalid_argument("rrt-to-rt needs k >= 1");
      check_bounded(f, front(f.barrier(), below_top), k);
      forward = rrt_rt_forward(f, k);
      break;
    }
    case ReductionName::Rrt2ToFs:
      check_bounded(f, front(f.barrier(), below_top), 2);
      forward = rrt2_fs_forward(f);
      break;
  }

  std::set<Color> universe{Color(0), Color(1)};
  for (Nat x : g_elems) universe.insert(Color(x));
  const FrontTable source(f, ground, thin_universe(f, ground, universe));
  const FrontTable target(*forward, target_ground);

  if (r == ReductionName::RrtToRt) {
    for (std::size_t e = 0; e < target.elements().size(); ++e) {
      const Color& c = target.colors()[e];
      if (!report.max_forward_color || c > *report.max_forward_color) report.max_forward_color = c;
      if (c >= k) {
        report.counterexamples.push_back(
            {target.elements()[e].elems(), {}, "forward color " + c.str() + " is not below k=" + std::to_string(k)});
      }
    }
  }

  for_each_solution(target, target_property(r), min_size, [&](std::uint64_t mask) {
    ++report.checked_witnesses;
    std::vector<Nat> h = target.subset_of(mask);
    std::vector<Nat> back;
    switch (r) {
      case ReductionName::FsToRt: {
        std::vector<Nat> trimmed(h.begin(), h.end() - 1);
        back = fs_backward(trimmed);
        break;
      }
      case ReductionName::TsToFs:
        back = ts_fs_backward(h);
        break;
      default:
        back = h;
        break;
    }
    if (!source.holds(source_property(r), source.mask_of(back))) {
      report.counterexamples.push_back({h, back, "backward set is not " + to_string(source_property(r))});
    }
  });
  if (fs) report.max_recursion_chain = fs->max_chain();
  return report;
}

Coloring random_instance(ReductionName r, const BarrierSpec& b, const GroundSet& ground, std::mt19937_64& rng,
                         std::size_t k) {
  const std::vector<Nat> g_elems = ground.elements();
  const Nat top = g_elems.empty() ? 0 : g_elems.back();
  const std::vector<Seq> domain = front(b, GroundSet::range(0, top + 1));
  std::map<Seq, Color> table;
  if (r == ReductionName::RrtToRt || r == ReductionName::Rrt2ToFs) {
    if (r == ReductionName::Rrt2ToFs) k = 2;
    // Colors drawn from a small palette, skipping any that is already full.
    const std::uint64_t palette = std::max<std::uint64_t>(1, domain.size() / k + 1);
    std::map<Color, std::size_t> used;
    std::uint64_t fresh = palette;
    for (const auto& s : domain) {
      Color c = random_below(rng, palette);
      if (used[c] >= k) c = Color(fresh++);
      ++used[c];
      table[s] = c;
    }
    return table_coloring(b, std::move(table), k);
  }
  for (const auto& s : domain) table[s] = random_below(rng, top + 3);
  return table_coloring(b, std::move(table));
}

std::vector<Coloring> adversarial_instances(ReductionName r, const BarrierSpec& b, const GroundSet& ground,
                                            std::size_t k) {
  std::vector<Coloring> out;
  if (r == ReductionName::RrtToRt || r == ReductionName::Rrt2ToFs) {
    if (r == ReductionName::Rrt2ToFs) k = 2;
    const std::vector<Nat> g_elems = ground.elements();
    const Nat top = g_elems.empty() ? 0 : g_elems.back();
    const std::vector<Seq> ranked = rank_sorted(front(b, GroundSet::range(0, top + 1)));
    const std::size_t n = ranked.size();
    std::map<Seq, Color> consecutive, interleaved, mirrored, injective;
    const std::size_t groups = std::max<std::size_t>(1, (n + k - 1) / k);
    for (std::size_t i = 0; i < n; ++i) {
      consecutive[ranked[i]] = Color(i / k);       // k rank-neighbours share a color
      interleaved[ranked[i]] = Color(i % groups);  // twins spread far apart
      mirrored[ranked[i]] = Color(std::min(i, n - 1 - i));
      injective[ranked[i]] = Color(i);
    }
    out.push_back(table_coloring(b, consecutive, k).with_bound(k));
    out.push_back(table_coloring(b, interleaved, k).with_bound(k));
    out.push_back(table_coloring(b, mirrored, 2).with_bound(k));
    out.push_back(table_coloring(b, injective, 1).with_bound(k));
    return out;
  }
  out.push_back(builtin_coloring(b, "max_plus_one"));
  out.push_back(builtin_coloring(b, "min"));
  out.push_back(builtin_coloring(b, "constant", {{"c", 0}}));
  out.push_back(builtin_coloring(b, "constant", {{"c", 1}}));
  out.push_back(builtin_coloring(b, "parity_min"));
  out.push_back(builtin_coloring(b, "length"));
  out.push_back(builtin_coloring(b, "code"));
  // Colors just below min(s) - 1 drive the fs-to-rt recursion as deep as possible.
  out.push_back(Coloring(
      b, [](const Seq& s) { return s.empty() || s.min() < 2 ? Color(0) : Color(s.min() - 2); }, "min_minus_two"));
  // Colors landing strictly inside the gaps of s.
  out.push_back(Coloring(
      b,
      [](const Seq& s) {
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
          if (s[i + 1] > s[i] + 1) return Color(s[i] + 1);
        }
        return s.empty() ? Color(0) : Color(s.max() + 1);
      },
      "first_gap"));
  return out;
}

}  // namespace barriers
