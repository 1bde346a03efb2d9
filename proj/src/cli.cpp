#include "barriers/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "barriers/barrier.hpp"
#include "barriers/coloring.hpp"
#include "barriers/diag.hpp"
#include "barriers/parallel.hpp"
#include "barriers/reduction.hpp"
#include "barriers/solver.hpp"
#include "barriers/spec_json.hpp"

namespace barriers::cli {

namespace {

struct Options {
  bool json = false;
  std::string barrier, ground, coloring, seq, name, property, universe, kind, alpha, family, verify;
  Nat k = 0;
  bool append = false;
  bool check = false;
  bool adversarial = false;
  bool check_bounded = false;
  std::size_t min_size = 1;
  std::size_t random = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> bound_k;
  Nat bound = 16;
};

void emit(std::ostream& out, const Options& o, const json& report, const std::string& text) {
  if (o.json) {
    out << report.dump(2) << "\n";
  } else {
    out << text;
  }
}

json seqs_json(const std::vector<Seq>& seqs) {
  json out = json::array();
  for (const auto& s : seqs) out.push_back(seq_to_json(s));
  return out;
}

Seq parse_seq_argument(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') return seq_from_json(json::parse(text));
  std::vector<Nat> elems;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    const unsigned long long v = std::stoull(item, &used);
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("bad sequence '" + text + "'");
    elems.push_back(v);
  }
  return Seq(elems);
}

Coloring load_coloring(const BarrierSpec& b, const std::string& arg) {
  const json j = load_json_argument(arg, true);
  if (j.is_string()) return builtin_coloring(b, j.get<std::string>());
  return coloring_from_json(b, j);
}

OracleFamily load_family(const std::string& arg) {
  if (arg == "evens") return OracleFamily({{0, GroundSet({}, Tail{0, 2}), 0}});
  return OracleFamily::from_json(load_json_argument(arg, false));
}

std::set<Color> parse_universe(const std::string& text) {
  std::set<Color> out;
  if (text.empty()) return out;
  for (Nat x : parse_seq_argument(text)) out.insert(Color(x));
  return out;
}

int cmd_front(const Options& o, std::ostream& out) {
  const BarrierSpec b = load_barrier_argument(o.barrier);
  const GroundSet g = parse_ground(o.ground);
  const auto elems = front(b, g);
  json report = {{"barrier", barrier_to_json(b)}, {"ground", ground_to_json(g)}, {"count", elems.size()},
                 {"elements", seqs_json(elems)}};
  std::string text;
  for (const auto& s : elems) text += s.to_string() + "\n";
  text += std::to_string(elems.size()) + " elements\n";
  emit(out, o, report, text);
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const BarrierSpec b = load_barrier_argument(o.barrier);
  const GroundSet g = parse_ground(o.ground);
  const auto elems = front(b, g);
  const bool sperner = check_sperner(elems);
  const DensityReport density = density_probe(b, g);
  json violations = json::array();
  std::string text = std::string("sperner=") + (sperner ? "ok" : "FAILED") + "\n";
  text += "front=" + std::to_string(elems.size()) + "\n";
  text += "density hit=" + std::to_string(density.hit) + " inconclusive=" + std::to_string(density.inconclusive) +
          " violations=" + std::to_string(density.violations.size()) + "\n";
  for (const auto& v : density.violations) {
    violations.push_back({{"stream", seq_to_json(v.stream)}, {"reason", v.reason}});
    text += "  violation " + v.stream.to_string() + ": " + v.reason + "\n";
  }
  json report = {{"barrier", barrier_to_json(b)},
                 {"ground", ground_to_json(g)},
                 {"front_size", elems.size()},
                 {"sperner", sperner},
                 {"density", {{"hit", density.hit}, {"inconclusive", density.inconclusive}, {"violations", violations}}}};
  emit(out, o, report, text);
  return sperner && density.violations.empty() ? kOk : kFailed;
}

int cmd_variant(const Options& o, std::ostream& out) {
  const BarrierSpec b = load_barrier_argument(o.barrier);
  const Seq s = parse_seq_argument(o.seq);
  const Seq v = o.append ? append_variant(b, s, o.k) : variant(b, s, o.k);
  json report = {{"barrier", barrier_to_json(b)}, {"seq", seq_to_json(s)}, {"k", o.k}, {"variant", seq_to_json(v)}};
  emit(out, o, report, v.to_string() + "\n");
  return kOk;
}

int cmd_ordertype(const Options& o, std::ostream& out) {
  const BarrierSpec b = load_barrier_argument(o.barrier);
  const OrderType ot = order_type(b);
  json report = {{"barrier", barrier_to_json(b)}, {"order_type", ot.value.to_string()}, {"exact", ot.exact}};
  emit(out, o, report, ot.value.to_string() + (ot.exact ? "" : " (upper bound)") + "\n");
  return kOk;
}

// All instances checked by one `reduce --check` call, in a fixed order.
std::vector<Coloring> reduce_instances(const Options& o, ReductionName r, const BarrierSpec& b, const GroundSet& g,
                                       std::size_t k) {
  std::vector<Coloring> out;
  if (!o.coloring.empty()) out.push_back(load_coloring(b, o.coloring));
  if (o.adversarial) {
    for (auto& f : adversarial_instances(r, b, g, k)) out.push_back(f);
  }
  for (std::size_t i = 0; i < o.random; ++i) {
    std::seed_seq seq{o.seed, static_cast<std::uint64_t>(i)};
    std::mt19937_64 rng(seq);
    out.push_back(random_instance(r, b, g, rng, k));
  }
  return out;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const ReductionName r = parse_reduction(o.name);
  const BarrierSpec b = load_barrier_argument(o.barrier);
  const GroundSet g = parse_ground(o.ground);

  if (!o.check) {
    if (o.coloring.empty()) throw std::invalid_argument("reduce without --check needs --coloring");
    const Coloring f = load_coloring(b, o.coloring);
    Coloring forward = f;
    GroundSet target_ground = g;
    switch (r) {
      case ReductionName::FsToRt: {
        forward = fs_forward(f).coloring;
        std::vector<Nat> shifted;
        for (Nat x : g.elements()) shifted.push_back(x + 1);
        target_ground = GroundSet(shifted);
        break;
      }
      case ReductionName::TsToRt: forward = ts_rt_forward(f); break;
      case ReductionName::TsToFs: break;
      case ReductionName::RrtToRt: {
        const std::size_t k = o.bound_k ? *o.bound_k : f.declared_bound().value_or(2);
        forward = rrt_rt_forward(f, k);
        break;
      }
      case ReductionName::Rrt2ToFs: forward = rrt2_fs_forward(f); break;
    }
    const auto elems = front(forward.barrier(), target_ground);
    json table = json::array();
    std::string text;
    for (const auto& s : elems) {
      const Color c = forward(s);
      table.push_back({seq_to_json(s), color_to_json(c)});
      text += s.to_string() + " -> " + c.str() + "\n";
    }
    json report = {{"reduction", to_string(r)},
                   {"barrier", barrier_to_json(forward.barrier())},
                   {"ground", ground_to_json(target_ground)},
                   {"table", table}};
    emit(out, o, report, text);
    return kOk;
  }

  const std::size_t k = o.bound_k.value_or(2);
  const auto instances = reduce_instances(o, r, b, g, k);
  if (instances.empty()) throw std::invalid_argument("reduce --check needs --coloring, --random or --adversarial");
  std::vector<std::optional<ReductionReport>> reports(instances.size());
  CheckOptions options;
  options.min_size = o.min_size;
  if (r == ReductionName::RrtToRt) options.k = o.bound_k;
  parallel_for(instances.size(), [&](std::size_t i) { reports[i] = check_reduction(r, instances[i], g, options); });

  json counterexamples = json::array();
  std::size_t witnesses = 0, chain = 0;
  std::optional<Color> max_color;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const ReductionReport& rep = *reports[i];
    witnesses += rep.checked_witnesses;
    chain = std::max(chain, rep.max_recursion_chain);
    if (rep.max_forward_color && (!max_color || *rep.max_forward_color > *max_color)) max_color = rep.max_forward_color;
    for (const auto& c : rep.counterexamples) {
      counterexamples.push_back({{"instance", i},
                                 {"coloring", instances[i].name()},
                                 {"target_solution", c.target_solution},
                                 {"source_set", c.source_set},
                                 {"reason", c.reason}});
    }
  }
  json report = {{"reduction", to_string(r)},
                 {"barrier", barrier_to_json(b)},
                 {"ground", ground_to_json(g)},
                 {"min_size", o.min_size},
                 {"instances", instances.size()},
                 {"counterexamples", counterexamples},
                 {"checked_witnesses", witnesses},
                 {"max_recursion_chain", chain}};
  if (max_color) report["max_forward_color"] = color_to_json(*max_color);
  std::string text = "reduction " + to_string(r) + ": " + std::to_string(instances.size()) + " instances, " +
                     std::to_string(witnesses) + " witnesses checked, " + std::to_string(counterexamples.size()) +
                     " counterexamples, max recursion chain " + std::to_string(chain) + "\n";
  for (const auto& c : counterexamples) text += "  counterexample " + c.dump() + "\n";
  emit(out, o, report, text);
  return counterexamples.empty() ? kOk : kFailed;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Property p = parse_property(o.property);
  const BarrierSpec b = load_barrier_argument(o.barrier);
  const GroundSet g = parse_ground(o.ground);
  const Coloring f = load_coloring(b, o.coloring);
  const auto w = find(p, f, g, o.min_size, parse_universe(o.universe));
  json report = {{"property", to_string(p)},
                 {"barrier", barrier_to_json(b)},
                 {"ground", ground_to_json(g)},
                 {"min_size", o.min_size},
                 {"found", w.has_value()},
                 {"set", w ? json(w->set) : json()}};
  std::string text;
  if (w) {
    text = to_string(p) + " set " + GroundSet(w->set).to_string() + "\n";
  } else {
    text = "no " + to_string(p) + " set of size >= " + std::to_string(o.min_size) + "\n";
  }
  emit(out, o, report, text);
  return w ? kOk : kFailed;
}

std::map<std::string, Nat> parse_assignments(const std::string& text) {
  std::map<std::string, Nat> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=value in '" + text + "'");
    out[item.substr(0, eq)] = std::stoull(item.substr(eq + 1));
  }
  return out;
}

int cmd_diag(const Options& o, std::ostream& out) {
  const DefeaterKind kind = parse_defeater_kind(o.kind);
  const Ordinal alpha = Ordinal::parse(o.alpha);
  const OracleFamily fam = load_family(o.family);
  const StagedColoring col = kind == DefeaterKind::Thin ? thin_defeater(alpha, fam) : rainbow_defeater(alpha, fam);

  json report = {{"kind", to_string(kind)}, {"alpha", alpha.to_string()}, {"family", fam.to_json()}, {"bound", o.bound}};
  std::string text;
  int code = kOk;

  if (o.check_bounded) {
    const auto elems = front(col.barrier(), GroundSet::range(0, o.bound));
    std::map<Color, std::size_t> counts;
    std::size_t worst = 0;
    for (const auto& t : elems) worst = std::max(worst, ++counts[col.as_coloring()(t)]);
    const bool ok = kind == DefeaterKind::Thin || worst <= 2;
    report["explored_front"] = elems.size();
    report["max_color_multiplicity"] = worst;
    text += "explored front " + std::to_string(elems.size()) + ", max color multiplicity " + std::to_string(worst) + "\n";
    if (!ok) code = kFailed;
  }

  if (!o.verify.empty()) {
    const auto a = parse_assignments(o.verify);
    if (!a.contains("e")) throw std::invalid_argument("--verify needs e=<index>");
    DefeatResult r;
    if (kind == DefeaterKind::Thin) {
      if (!a.contains("i")) throw std::invalid_argument("thin --verify needs e=<index>,i=<color>");
      r = verify_defeat_thin(col, a.at("e"), a.at("i"), o.bound);
      report["verify"] = {{"e", a.at("e")}, {"i", a.at("i")}};
    } else {
      r = verify_defeat_rainbow(col, a.at("e"), o.bound);
      report["verify"] = {{"e", a.at("e")}};
    }
    report["result"] = r.to_json();
    text += to_string(r.status) + ": " + r.detail + "\n";
    if (r.status == DefeatStatus::Bug) throw InvariantViolation("defeat verification: " + r.detail);
    if (!r.found()) code = kFailed;
  }

  if (!o.check_bounded && o.verify.empty()) {
    json stages = json::array();
    for (const auto& s : front(col.stages(), GroundSet::range(0, o.bound))) {
      json colors = json::array();
      text += s.to_string() + ":";
      for (const auto& c : col.stage(s)) {
        colors.push_back(color_to_json(c));
        text += " " + c.str();
      }
      text += "\n";
      stages.push_back({{"stage", seq_to_json(s)}, {"colors", colors}});
    }
    report["stages"] = stages;
  }
  emit(out, o, report, text);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Barrier combinatorics: fronts, variants, order types, reductions and diagonalization"};
  app.require_subcommand(1);
  Options o;
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Machine-readable report"); };

  auto* front_cmd = app.add_subcommand("front", "List front(B, G)");
  front_cmd->add_option("--barrier", o.barrier, "Barrier spec")->required();
  front_cmd->add_option("--ground", o.ground, "Ground set a..b, a..=b or a,b,c")->required();
  json_flag(front_cmd);

  auto* check_cmd = app.add_subcommand("check", "Sperner and density checks on a front");
  check_cmd->add_option("--barrier", o.barrier, "Barrier spec")->required();
  check_cmd->add_option("--ground", o.ground, "Ground set")->required();
  json_flag(check_cmd);

  auto* variant_cmd = app.add_subcommand("variant", "k-variant of an element");
  variant_cmd->add_option("--barrier", o.barrier, "Barrier spec")->required();
  variant_cmd->add_option("--seq", o.seq, "Element, e.g. 2,4,5 or [2,4,5]")->required();
  variant_cmd->add_option("--k", o.k, "Inserted number")->required();
  variant_cmd->add_flag("--append", o.append, "Replace the last coordinate instead");
  json_flag(variant_cmd);

  auto* ot_cmd = app.add_subcommand("ordertype", "Order type of the lexicographic order");
  ot_cmd->add_option("--barrier", o.barrier, "Barrier spec")->required();
  json_flag(ot_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "Apply or check a reduction");
  reduce_cmd->add_option("--name", o.name, "fs-to-rt | ts-to-rt | ts-to-fs | rrt-to-rt | rrt2-to-fs")->required();
  reduce_cmd->add_option("--barrier", o.barrier, "Barrier spec")->required();
  reduce_cmd->add_option("--coloring", o.coloring, "Instance coloring");
  reduce_cmd->add_option("--ground", o.ground, "Instance ground set")->required();
  reduce_cmd->add_flag("--check", o.check, "Exhaustively check backward solutions");
  reduce_cmd->add_option("--min-size", o.min_size, "Smallest target solution checked");
  reduce_cmd->add_option("--random", o.random, "Number of seeded random instances");
  reduce_cmd->add_option("--seed", o.seed, "Seed for random instances");
  reduce_cmd->add_flag("--adversarial", o.adversarial, "Include hand-built instances");
  reduce_cmd->add_option("--k", o.bound_k, "Bound for rrt-to-rt");
  json_flag(reduce_cmd);

  auto* solve_cmd = app.add_subcommand("solve", "Find a mono/free/thin/rainbow set");
  solve_cmd->add_option("--property", o.property, "mono | free | thin | rainbow")->required();
  solve_cmd->add_option("--barrier", o.barrier, "Barrier spec")->required();
  solve_cmd->add_option("--coloring", o.coloring, "Coloring")->required();
  solve_cmd->add_option("--ground", o.ground, "Ground set")->required();
  solve_cmd->add_option("--min-size", o.min_size, "Smallest accepted set");
  solve_cmd->add_option("--universe", o.universe, "Extra colors for thin, e.g. 0,1,2");
  json_flag(solve_cmd);

  auto* diag_cmd = app.add_subcommand("diag", "Stage colorings against a mock oracle family");
  diag_cmd->add_option("--kind", o.kind, "thin | rainbow")->required();
  diag_cmd->add_option("--alpha", o.alpha, "Ordinal index of the stage barrier")->required();
  diag_cmd->add_option("--family", o.family, "Family JSON, file, or 'evens'")->required();
  diag_cmd->add_option("--verify", o.verify, "e=<index>[,i=<color>]");
  diag_cmd->add_option("--bound", o.bound, "Bound on the first element of a stage");
  diag_cmd->add_flag("--check-bounded", o.check_bounded, "Color multiplicities over the explored front");
  json_flag(diag_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*front_cmd) return cmd_front(o, out);
    if (*check_cmd) return cmd_check(o, out);
    if (*variant_cmd) return cmd_variant(o, out);
    if (*ot_cmd) return cmd_ordertype(o, out);
    if (*reduce_cmd) return cmd_reduce(o, out);
    if (*solve_cmd) return cmd_solve(o, out);
    if (*diag_cmd) return cmd_diag(o, out);
  } catch (const InvariantViolation& e) {
    err << "BUG: " << e.what() << "\n";
    return kBug;
  } catch (const BoundednessViolation& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace barriers::cli
