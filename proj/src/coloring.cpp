#include "barriers/coloring.hpp"

#include <stdexcept>

#include "barriers/coding.hpp"
#include "barriers/spec_json.hpp"

namespace barriers {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t param(const nlohmann::json& params, const char* key, std::uint64_t fallback) {
  if (params.is_object() && params.contains(key)) return params.at(key).get<std::uint64_t>();
  return fallback;
}

}  // namespace

Coloring::Coloring(BarrierSpec barrier, Rule rule, std::string name, std::optional<std::size_t> declared_bound)
    : barrier_(std::move(barrier)), rule_(std::move(rule)), name_(std::move(name)), declared_bound_(declared_bound) {}

Coloring Coloring::with_bound(std::optional<std::size_t> k) const {
  Coloring out = *this;
  out.declared_bound_ = k;
  return out;
}

Color Coloring::operator()(const Seq& s) const {
  if (classify(barrier_, s) != Classification::Element) {
    throw PartialColoringError(name_ + ": " + s.to_string() + " is not an element of " + barrier_.to_string());
  }
  return rule_(s);
}

Coloring table_coloring(const BarrierSpec& b, std::map<Seq, Color> table, std::optional<std::size_t> declared_bound) {
  auto shared = std::make_shared<const std::map<Seq, Color>>(std::move(table));
  auto rule = [shared](const Seq& s) -> Color {
    auto it = shared->find(s);
    if (it == shared->end()) throw PartialColoringError("table coloring undefined on " + s.to_string());
    return it->second;
  };
  return Coloring(b, rule, "table", declared_bound);
}

Coloring builtin_coloring(const BarrierSpec& b, const std::string& name, const nlohmann::json& params) {
  Coloring::Rule rule;
  if (name == "constant") {
    const Color c(param(params, "c", 0));
    rule = [c](const Seq&) { return c; };
  } else if (name == "min") {
    rule = [](const Seq& s) -> Color {
      if (s.empty()) throw PartialColoringError("min of ()");
      return Color(s.min());
    };
  } else if (name == "max") {
    rule = [](const Seq& s) -> Color {
      if (s.empty()) throw PartialColoringError("max of ()");
      return Color(s.max());
    };
  } else if (name == "max_plus_one") {
    rule = [](const Seq& s) { return s.empty() ? Color(0) : Color(s.max()) + 1; };
  } else if (name == "parity_min") {
    rule = [](const Seq& s) { return s.empty() ? Color(0) : Color(s.min() % 2); };
  } else if (name == "length") {
    rule = [](const Seq& s) { return Color(s.size()); };
  } else if (name == "sum_mod") {
    const std::uint64_t m = param(params, "m", 2);
    if (m == 0) throw std::invalid_argument("sum_mod needs m >= 1");
    rule = [m](const Seq& s) {
      std::uint64_t total = 0;
      for (Nat x : s) total = (total + x % m) % m;
      return Color(total);
    };
  } else if (name == "code") {
    rule = [](const Seq& s) { return code_seq(s); };
  } else if (name == "random") {
    const std::uint64_t seed = param(params, "seed", 0);
    const std::uint64_t colors = param(params, "colors", 2);
    if (colors == 0) throw std::invalid_argument("random coloring needs colors >= 1");
    rule = [seed, colors](const Seq& s) {
      std::uint64_t h = splitmix(seed ^ (s.size() * 0x2545f4914f6cdd1dULL));
      for (Nat x : s) h = splitmix(h ^ x);
      return Color(h % colors);
    };
  } else {
    throw std::invalid_argument("unknown builtin coloring '" + name + "'");
  }
  return Coloring(b, std::move(rule), name);
}

Coloring coloring_from_json(const BarrierSpec& b, const nlohmann::json& j) {
  std::optional<std::size_t> bound;
  if (j.contains("bound") && !j.at("bound").is_null()) bound = j.at("bound").get<std::size_t>();
  if (j.contains("table")) {
    std::map<Seq, Color> table;
    for (const auto& entry : j.at("table")) {
      if (!entry.is_array() || entry.size() != 2) throw std::invalid_argument("table entries are [seq, color] pairs");
      table[seq_from_json(entry[0])] = color_from_json(entry[1]);
    }
    return table_coloring(b, std::move(table), bound);
  }
  if (j.contains("builtin")) {
    return builtin_coloring(b, j.at("builtin").get<std::string>(), j.value("params", nlohmann::json::object()))
        .with_bound(bound);
  }
  throw std::invalid_argument("coloring needs a \"table\" or \"builtin\" key");
}

nlohmann::json coloring_table_json(const Coloring& f, const std::vector<Seq>& elements) {
  nlohmann::json table = nlohmann::json::array();
  for (const auto& s : elements) table.push_back({seq_to_json(s), color_to_json(f(s))});
  nlohmann::json out = {{"table", table}};
  if (f.declared_bound()) out["bound"] = *f.declared_bound();
  return out;
}

void check_bounded(const Coloring& f, const std::vector<Seq>& elements, std::size_t k) {
  std::map<Color, std::size_t> counts;
  for (const auto& s : elements) {
    if (++counts[f(s)] > k) {
      throw BoundednessViolation(f.name() + ": color " + f(s).str() + " used more than " + std::to_string(k) +
                                 " times (latest on " + s.to_string() + ")");
    }
  }
}

}  // namespace barriers
