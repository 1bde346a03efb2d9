#include "barriers/diag.hpp"

#include <mutex>
#include <set>
#include <stdexcept>

#include "barriers/coding.hpp"
#include "barriers/spec_json.hpp"

namespace barriers {

namespace {

constexpr std::size_t kStageLengthCap = 1 << 14;

// <e,i> + 1, or nullopt when it does not fit.
std::optional<std::uint64_t> claim_count(Nat e, Nat i) {
  try {
    const std::uint64_t p = pair(e, i);
    if (p == UINT64_MAX) return std::nullopt;
    return p + 1;
  } catch (const std::overflow_error&) {
    return std::nullopt;
  }
}

std::vector<Color> replay_thin(const OracleFamily& fam, const Seq& s) {
  const Nat s1 = s.min();
  std::vector<std::optional<Color>> f(s1);
  for (Nat j = 0; j < s1; ++j) {
    const auto [e, i] = unpair(j);
    const auto approx = f_approx(fam, e, i, s);
    if (!approx) continue;
    for (Nat m : *approx) {
      if (!f[m]) {
        f[m] = Color(i);
        break;
      }
    }
  }
  std::vector<Color> out;
  out.reserve(s1);
  for (auto& c : f) out.push_back(c ? *c : Color(1));
  return out;
}

std::vector<Color> replay_rainbow(const OracleFamily& fam, const Seq& s) {
  const Nat s1 = s.min();
  const Color code = code_seq(s);
  std::vector<std::optional<Color>> f(s1);
  for (Nat e = 0; e < s1; ++e) {
    std::vector<Nat> free;
    for (Nat x = 0; x < s1 && free.size() < 2; ++x) {
      if (!f[x] && fam.g(e, x, s)) free.push_back(x);
    }
    if (free.size() < 2) continue;
    const Color c = pair(Color(free[0]), code);
    f[free[0]] = c;
    f[free[1]] = c;
  }
  std::vector<Color> out;
  out.reserve(s1);
  for (Nat l = 0; l < s1; ++l) out.push_back(f[l] ? *f[l] : pair(Color(l), code));
  return out;
}

// Lex-least element of B starting at n along the set, or nullopt if the set
// runs out (or the cap is hit) first.
std::optional<Seq> complete_along(const BarrierSpec& b, const GroundSet& set, Nat n) {
  std::vector<Nat> stream{n};
  std::size_t want = 8;
  for (;;) {
    while (stream.size() < want) {
      const auto next = set.next(stream.back());
      if (!next) break;
      stream.push_back(*next);
    }
    if (auto s = step(b, Seq(stream))) return s;
    if (stream.size() < want || want >= kStageLengthCap) return std::nullopt;
    want *= 2;
  }
}

DefeatResult not_in_family(Nat e) {
  DefeatResult r;
  r.status = DefeatStatus::IndexNotInFamily;
  r.detail = "index " + std::to_string(e) + " is not in the family";
  return r;
}

}  // namespace

OracleFamily::OracleFamily(std::vector<OracleEntry> entries) : entries_(std::move(entries)) {
  std::set<Nat> seen;
  for (const auto& entry : entries_) {
    if (!seen.insert(entry.e).second) throw std::invalid_argument("repeated family index " + std::to_string(entry.e));
  }
}

const OracleEntry* OracleFamily::find(Nat e) const {
  for (const auto& entry : entries_) {
    if (entry.e == e) return &entry;
  }
  return nullptr;
}

bool OracleFamily::g(Nat e, Nat x, const Seq& s) const {
  const OracleEntry* entry = find(e);
  if (!entry || s.empty() || s.min() <= entry->delay) return false;
  return entry->set.contains(x);
}

nlohmann::json OracleFamily::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& entry : entries_) {
    out.push_back({{"e", entry.e}, {"set", ground_to_json(entry.set)}, {"delay", entry.delay}});
  }
  return out;
}

OracleFamily OracleFamily::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("family must be an array of {e, set, delay}");
  std::vector<OracleEntry> entries;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("e") || !item.contains("set")) {
      throw std::invalid_argument("family entry needs \"e\" and \"set\"");
    }
    OracleEntry entry;
    entry.e = item.at("e").get<Nat>();
    entry.set = ground_from_json(item.at("set"));
    entry.delay = item.value("delay", Nat{0});
    entries.push_back(std::move(entry));
  }
  return OracleFamily(std::move(entries));
}

std::optional<std::vector<Nat>> f_approx(const OracleFamily& fam, Nat e, Nat i, const Seq& s) {
  const auto count = claim_count(e, i);
  if (!count || s.empty()) return std::nullopt;
  std::vector<Nat> out;
  for (Nat x = 0; x < s.min() && out.size() < *count; ++x) {
    if (fam.g(e, x, s)) out.push_back(x);
  }
  if (out.size() < *count) return std::nullopt;
  return out;
}

std::string to_string(DefeaterKind k) { return k == DefeaterKind::Thin ? "thin" : "rainbow"; }

DefeaterKind parse_defeater_kind(const std::string& name) {
  if (name == "thin") return DefeaterKind::Thin;
  if (name == "rainbow") return DefeaterKind::Rainbow;
  throw std::invalid_argument("unknown defeater kind '" + name + "' (expected thin or rainbow)");
}

struct StagedColoring::Cache {
  std::mutex mutex;
  std::map<Seq, std::shared_ptr<const std::vector<Color>>> stages;
};

StagedColoring::StagedColoring(DefeaterKind kind, Ordinal alpha, OracleFamily fam)
    : kind_(kind),
      alpha_(std::move(alpha)),
      fam_(std::move(fam)),
      stages_(make_canonical(alpha_)),
      barrier_(make_product(BarrierSpec::exact(1), stages_)),
      cache_(std::make_shared<Cache>()) {
  if (alpha_.is_zero()) throw std::invalid_argument("defeaters need alpha > 0");
}

std::vector<Color> StagedColoring::stage(const Seq& s) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->stages.find(s);
    if (it != cache_->stages.end()) return *it->second;
  }
  if (classify(stages_, s) != Classification::Element) {
    throw PartialColoringError(s.to_string() + " is not a stage of " + stages_.to_string());
  }
  auto colors = std::make_shared<const std::vector<Color>>(kind_ == DefeaterKind::Thin ? replay_thin(fam_, s)
                                                                                        : replay_rainbow(fam_, s));
  std::lock_guard lock(cache_->mutex);
  return *cache_->stages.emplace(s, colors).first->second;
}

Color StagedColoring::operator()(Nat m, const Seq& s) const {
  if (s.empty() || m >= s.min()) throw PartialColoringError("f(m, s) needs m < min(s)");
  return stage(s)[m];
}

Coloring StagedColoring::as_coloring() const {
  StagedColoring self = *this;
  auto rule = [self](const Seq& t) {
    const Seq s(std::vector<Nat>(t.begin() + 1, t.end()));
    return self(t[0], s);
  };
  return Coloring(barrier_, rule, to_string(kind_) + "-defeater(" + alpha_.to_string() + ")",
                  kind_ == DefeaterKind::Rainbow ? std::optional<std::size_t>(2) : std::nullopt);
}

StagedColoring thin_defeater(const Ordinal& alpha, const OracleFamily& fam) {
  return StagedColoring(DefeaterKind::Thin, alpha, fam);
}

StagedColoring rainbow_defeater(const Ordinal& alpha, const OracleFamily& fam) {
  return StagedColoring(DefeaterKind::Rainbow, alpha, fam);
}

std::string to_string(DefeatStatus s) {
  switch (s) {
    case DefeatStatus::Found: return "found";
    case DefeatStatus::IndexNotInFamily: return "index-not-in-family";
    case DefeatStatus::BoundTooSmall: return "bound-too-small";
    case DefeatStatus::Bug: return "BUG";
  }
  return "?";
}

nlohmann::json DefeatResult::to_json() const {
  nlohmann::json out = {{"status", to_string(status)}, {"stages_examined", stages_examined}, {"detail", detail}};
  out["m"] = m ? nlohmann::json(*m) : nlohmann::json();
  out["l"] = l ? nlohmann::json(*l) : nlohmann::json();
  out["stage"] = stage ? seq_to_json(*stage) : nlohmann::json();
  return out;
}

std::vector<Seq> defeat_stages(const StagedColoring& col, Nat e, Nat bound) {
  const OracleEntry* entry = col.family().find(e);
  if (!entry) return {};
  std::vector<Seq> out;
  for (auto n = entry->set.next(entry->delay); n && *n < bound; n = entry->set.next(*n)) {
    if (auto s = complete_along(col.stages(), entry->set, *n)) out.push_back(*s);
  }
  return out;
}

DefeatResult verify_defeat_thin(const StagedColoring& col, Nat e, Nat i, Nat bound) {
  if (col.kind() != DefeaterKind::Thin) throw std::invalid_argument("verify_defeat_thin needs a thin defeater");
  const OracleEntry* entry = col.family().find(e);
  if (!entry) return not_in_family(e);
  // Once min(s) exceeds max(F_{e,i}), substage <e,i> must claim an element of F.
  std::optional<Nat> must_act_above;
  if (const auto count = claim_count(e, i)) {
    const auto first = entry->set.first(*count);
    if (first.size() == *count) must_act_above = first.back();
  }
  DefeatResult r;
  for (const Seq& s : defeat_stages(col, e, bound)) {
    ++r.stages_examined;
    const auto colors = col.stage(s);
    for (Nat m = 0; m < s.min(); ++m) {
      if (entry->set.contains(m) && colors[m] == i) {
        r.status = DefeatStatus::Found;
        r.m = m;
        r.stage = s;
        r.detail = "f(" + std::to_string(m) + ", " + s.to_string() + ") = " + std::to_string(i);
        return r;
      }
    }
    if (must_act_above && s.min() > *must_act_above) {
      r.status = DefeatStatus::Bug;
      r.stage = s;
      r.detail = "F_{e,i} is defined at stage " + s.to_string() + " but color " + std::to_string(i) +
                 " does not occur on X_e";
      return r;
    }
  }
  r.status = DefeatStatus::BoundTooSmall;
  r.detail = "no stage with first element below " + std::to_string(bound) + " is late enough";
  return r;
}

DefeatResult verify_defeat_rainbow(const StagedColoring& col, Nat e, Nat bound) {
  if (col.kind() != DefeaterKind::Rainbow) throw std::invalid_argument("verify_defeat_rainbow needs a rainbow defeater");
  const OracleEntry* entry = col.family().find(e);
  if (!entry) return not_in_family(e);
  // Once min(s) exceeds max(D_e), substage e finds two unclaimed elements of D_e.
  std::optional<Nat> must_act_above;
  if (e < (UINT64_MAX - 2) / 2) {
    const auto first = entry->set.first(2 * e + 2);
    if (first.size() == 2 * e + 2) must_act_above = first.back();
  }
  DefeatResult r;
  for (const Seq& s : defeat_stages(col, e, bound)) {
    ++r.stages_examined;
    const auto colors = col.stage(s);
    const auto members = entry->set.elements_below(s.min());
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (colors[members[a]] == colors[members[b]]) {
          r.status = DefeatStatus::Found;
          r.m = members[a];
          r.l = members[b];
          r.stage = s;
          r.detail = "f(" + std::to_string(members[a]) + ", s) = f(" + std::to_string(members[b]) + ", s) at s = " +
                     s.to_string();
          return r;
        }
      }
    }
    if (must_act_above && s.min() > *must_act_above) {
      r.status = DefeatStatus::Bug;
      r.stage = s;
      r.detail = "D_e lies below stage " + s.to_string() + " but no collision on X_e";
      return r;
    }
  }
  r.status = DefeatStatus::BoundTooSmall;
  r.detail = "no stage with first element below " + std::to_string(bound) + " is late enough";
  return r;
}

}  // namespace barriers
