#include "barriers/spec_json.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace barriers {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Nat to_nat(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw std::invalid_argument(std::string(what) + " must be a natural number, got " + j.dump());
  }
  return j.get<Nat>();
}

}  // namespace

BarrierSpec parse_barrier_shorthand(const std::string& text) {
  if (text == "unit") return BarrierSpec::unit();
  if (text == "schreier") return BarrierSpec::schreier();
  if (text.rfind("exact:", 0) == 0) return BarrierSpec::exact(std::stoull(text.substr(6)));
  if (text.rfind("canonical:", 0) == 0) return make_canonical(Ordinal::parse(text.substr(10)));
  throw std::invalid_argument("unknown barrier shorthand '" + text + "'");
}

BarrierSpec barrier_from_json(const json& j) {
  if (j.is_string()) return parse_barrier_shorthand(j.get<std::string>());
  if (!j.is_object() || j.size() != 1) {
    throw std::invalid_argument("barrier spec must be a string or a single-key object, got " + j.dump());
  }
  const std::string tag = j.begin().key();
  const json& body = j.begin().value();
  if (tag == "unit") return BarrierSpec::unit();
  if (tag == "schreier") return BarrierSpec::schreier();
  if (tag == "exact") return BarrierSpec::exact(to_nat(body, "exact"));
  if (tag == "canonical") {
    if (body.is_string()) return make_canonical(Ordinal::parse(body.get<std::string>()));
    return make_canonical(Ordinal(to_nat(body, "canonical")));
  }
  if (tag == "product") {
    if (!body.is_array() || body.size() != 2) throw std::invalid_argument("product takes [left, right]");
    return make_product(barrier_from_json(body[0]), barrier_from_json(body[1]));
  }
  if (tag == "plus") return make_plus(barrier_from_json(body));
  if (tag == "derived") return make_derived(barrier_from_json(body.at("inner")), to_nat(body.at("n"), "derived.n"));
  if (tag == "restrict") return make_restrict(barrier_from_json(body.at("inner")), ground_from_json(body.at("set")));
  throw std::invalid_argument("unknown barrier constructor '" + tag + "'");
}

json barrier_to_json(const BarrierSpec& b) {
  return std::visit(overloaded{
                        [](const node::Unit&) -> json { return "unit"; },
                        [](const node::ExactSize& e) -> json { return "exact:" + std::to_string(e.n); },
                        [](const node::Schreier&) -> json { return "schreier"; },
                        [](const node::Canonical& c) -> json { return "canonical:" + c.alpha.to_string(); },
                        [](const node::Product& p) -> json {
                          return {{"product", json::array({barrier_to_json(*p.left), barrier_to_json(*p.right)})}};
                        },
                        [](const node::Plus& p) -> json { return {{"plus", barrier_to_json(*p.inner)}}; },
                        [](const node::Derived& d) -> json {
                          return {{"derived", {{"inner", barrier_to_json(*d.inner)}, {"n", d.n}}}};
                        },
                        [](const node::Restrict& r) -> json {
                          return {{"restrict", {{"inner", barrier_to_json(*r.inner)}, {"set", ground_to_json(r.set)}}}};
                        },
                    },
                    b.node());
}

GroundSet ground_from_json(const json& j) {
  if (j.is_string()) return parse_ground(j.get<std::string>());
  if (j.is_array()) {
    std::vector<Nat> elems;
    for (const auto& x : j) elems.push_back(to_nat(x, "ground set element"));
    return GroundSet(std::move(elems));
  }
  if (!j.is_object()) throw std::invalid_argument("ground set must be an array or object, got " + j.dump());
  std::vector<Nat> prefix;
  if (j.contains("prefix")) {
    for (const auto& x : j.at("prefix")) prefix.push_back(to_nat(x, "ground set element"));
  }
  std::optional<Tail> tail;
  if (j.contains("tail") && !j.at("tail").is_null()) {
    const auto& t = j.at("tail");
    tail = Tail{to_nat(t.at("start"), "tail.start"), to_nat(t.at("step"), "tail.step")};
  }
  return GroundSet(std::move(prefix), tail);
}

json ground_to_json(const GroundSet& g) {
  json out = {{"prefix", g.prefix()}};
  if (g.tail()) out["tail"] = {{"start", g.tail()->start}, {"step", g.tail()->step}};
  return out;
}

Seq seq_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("sequence must be an integer array, got " + j.dump());
  std::vector<Nat> elems;
  for (const auto& x : j) elems.push_back(to_nat(x, "sequence element"));
  return Seq(std::move(elems));
}

json seq_to_json(const Seq& s) { return s.elems(); }

json color_to_json(const Color& c) {
  if (c >= 0 && c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
  return c.str();
}

Color color_from_json(const json& j) {
  if (j.is_string()) {
    Color c(j.get<std::string>());
    if (c < 0) throw std::invalid_argument("colors are natural numbers");
    return c;
  }
  return Color(to_nat(j, "color"));
}

json load_json_argument(const std::string& arg, bool allow_shorthand) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[' || arg.front() == '"')) return json::parse(arg);
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    return json::parse(in);
  }
  if (allow_shorthand) return json(arg);
  throw std::invalid_argument("'" + arg + "' is neither inline JSON nor a readable file");
}

BarrierSpec load_barrier_argument(const std::string& arg) { return barrier_from_json(load_json_argument(arg, true)); }

}  // namespace barriers
