#include "barriers/barrier.hpp"

#include <span>
#include <stdexcept>

namespace barriers {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

enum class Status { Element, Partial, NotInBase };

struct Consumed {
  Status status;
  std::size_t end;  // one past the element when status == Element
};

Consumed consume(const BarrierSpec& b, std::span<const Nat> s, std::size_t pos);

Consumed consume_canonical(const Ordinal& alpha, std::span<const Nat> s, std::size_t pos) {
  if (alpha.is_zero()) return {Status::Element, pos};
  // alpha = lambda + k: k singleton blocks, then the limit part.
  const auto& terms = alpha.terms();
  std::uint64_t singles = 0;
  Ordinal lambda;
  for (const auto& term : terms) {
    if (term.exponent.is_zero()) {
      singles = term.coefficient;
    } else {
      lambda = lambda + Ordinal::monomial(term.exponent, term.coefficient);
    }
  }
  if (s.size() - pos < singles) return {Status::Partial, s.size()};
  pos += singles;
  if (lambda.is_zero()) return {Status::Element, pos};
  if (pos == s.size()) return {Status::Partial, pos};
  const Nat n = s[pos++];
  // (n) * B[lambda[n]] * B[lambda[n-1]] * ... * B[lambda[0]]
  for (Nat j = n + 1; j-- > 0;) {
    Consumed block = consume_canonical(fund_seq(lambda, j), s, pos);
    if (block.status != Status::Element) return block;
    pos = block.end;
  }
  return {Status::Element, pos};
}

std::vector<Nat> shifted_down(std::span<const Nat> s, std::size_t pos) {
  std::vector<Nat> out;
  out.reserve(s.size() - pos);
  for (std::size_t i = pos; i < s.size(); ++i) out.push_back(s[i] - 1);
  return out;
}

Consumed consume(const BarrierSpec& b, std::span<const Nat> s, std::size_t pos) {
  const std::size_t remaining = s.size() - pos;
  return std::visit(
      overloaded{
          [&](const node::Unit&) { return Consumed{Status::Element, pos}; },
          [&](const node::ExactSize& e) {
            if (remaining < e.n) return Consumed{Status::Partial, s.size()};
            return Consumed{Status::Element, pos + e.n};
          },
          [&](const node::Schreier&) {
            if (remaining == 0 || remaining < s[pos] + 1) return Consumed{Status::Partial, s.size()};
            return Consumed{Status::Element, pos + s[pos] + 1};
          },
          [&](const node::Canonical& c) { return consume_canonical(c.alpha, s, pos); },
          [&](const node::Product& p) {
            Consumed head = consume(*p.left, s, pos);
            if (head.status != Status::Element) return head;
            return consume(*p.right, s, head.end);
          },
          [&](const node::Plus& p) {
            if (remaining == 0) return Consumed{Status::Partial, s.size()};
            if (s[pos] == 0) return Consumed{Status::NotInBase, pos};
            const std::vector<Nat> down = shifted_down(s, pos);
            Consumed inner = consume(*p.inner, down, 0);
            if (inner.status != Status::Element) return Consumed{inner.status, s.size()};
            const std::size_t last = pos + inner.end;
            if (last == s.size()) return Consumed{Status::Partial, s.size()};
            if (!in_base(*p.inner, s[last] - 1)) return Consumed{Status::NotInBase, last};
            return Consumed{Status::Element, last + 1};
          },
          [&](const node::Derived& d) {
            if (remaining > 0 && s[pos] <= d.n) return Consumed{Status::NotInBase, pos};
            std::vector<Nat> extended{d.n};
            extended.insert(extended.end(), s.begin() + static_cast<std::ptrdiff_t>(pos), s.end());
            Consumed inner = consume(*d.inner, extended, 0);
            if (inner.status != Status::Element) return Consumed{inner.status, s.size()};
            if (inner.end == 0) throw InvariantViolation("derived barrier over a barrier containing ()");
            return Consumed{Status::Element, pos + inner.end - 1};
          },
          [&](const node::Restrict& r) {
            Consumed inner = consume(*r.inner, s, pos);
            const std::size_t examined = inner.status == Status::Element ? inner.end : s.size();
            for (std::size_t i = pos; i < examined; ++i) {
              if (!r.set.contains(s[i])) return Consumed{Status::NotInBase, i};
            }
            return inner;
          },
      },
      b.node());
}

struct Walk {
  enum Kind { Hit, Inconclusive, Inconsistent } kind;
  Seq element;
  std::string reason;
};

// Feeds the prefixes of `stream` to classify until an element appears,
// checking that every earlier prefix is a proper prefix.
Walk walk(const BarrierSpec& b, const Seq& stream) {
  for (std::size_t len = 0; len <= stream.size(); ++len) {
    Seq prefix = stream.prefix(len);
    switch (classify(b, prefix)) {
      case Classification::Element:
        return {Walk::Hit, prefix, {}};
      case Classification::ProperPrefix:
        break;
      case Classification::Overrun:
        return {Walk::Inconsistent, prefix, "overrun of " + prefix.to_string() + " with no element prefix"};
      case Classification::NotInBase:
        throw NotInBaseError("stream prefix " + prefix.to_string() + " leaves the base of " + b.to_string());
    }
  }
  return {Walk::Inconclusive, {}, {}};
}

bool same_node(const BarrierSpec::Node& a, const BarrierSpec::Node& b);

bool same_spec(const std::shared_ptr<const BarrierSpec>& a, const std::shared_ptr<const BarrierSpec>& b) {
  return *a == *b;
}

bool same_node(const BarrierSpec::Node& a, const BarrierSpec::Node& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      overloaded{
          [](const node::Unit&) { return true; },
          [&](const node::ExactSize& x) { return x.n == std::get<node::ExactSize>(b).n; },
          [](const node::Schreier&) { return true; },
          [&](const node::Canonical& x) { return x.alpha == std::get<node::Canonical>(b).alpha; },
          [&](const node::Product& x) {
            const auto& y = std::get<node::Product>(b);
            return same_spec(x.left, y.left) && same_spec(x.right, y.right);
          },
          [&](const node::Plus& x) { return same_spec(x.inner, std::get<node::Plus>(b).inner); },
          [&](const node::Derived& x) {
            const auto& y = std::get<node::Derived>(b);
            return x.n == y.n && same_spec(x.inner, y.inner);
          },
          [&](const node::Restrict& x) {
            const auto& y = std::get<node::Restrict>(b);
            return x.set == y.set && same_spec(x.inner, y.inner);
          },
      },
      a);
}

}  // namespace

BarrierSpec::BarrierSpec(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

BarrierSpec BarrierSpec::unit() { return BarrierSpec(node::Unit{}); }
BarrierSpec BarrierSpec::exact(Nat n) { return BarrierSpec(node::ExactSize{n}); }
BarrierSpec BarrierSpec::schreier() { return BarrierSpec(node::Schreier{}); }

bool operator==(const BarrierSpec& a, const BarrierSpec& b) { return a.node_ == b.node_ || same_node(*a.node_, *b.node_); }

std::string BarrierSpec::to_string() const {
  return std::visit(
      overloaded{
          [](const node::Unit&) -> std::string { return "unit"; },
          [](const node::ExactSize& e) { return "exact:" + std::to_string(e.n); },
          [](const node::Schreier&) -> std::string { return "schreier"; },
          [](const node::Canonical& c) { return "canonical:" + c.alpha.to_string(); },
          [](const node::Product& p) { return "product(" + p.left->to_string() + "," + p.right->to_string() + ")"; },
          [](const node::Plus& p) { return "plus(" + p.inner->to_string() + ")"; },
          [](const node::Derived& d) { return "derived(" + d.inner->to_string() + "," + std::to_string(d.n) + ")"; },
          [](const node::Restrict& r) { return "restrict(" + r.inner->to_string() + "," + r.set.to_string() + ")"; },
      },
      *node_);
}

BarrierSpec make_product(const BarrierSpec& left, const BarrierSpec& right) {
  return BarrierSpec(node::Product{std::make_shared<const BarrierSpec>(left), std::make_shared<const BarrierSpec>(right)});
}

BarrierSpec make_plus(const BarrierSpec& inner) {
  return BarrierSpec(node::Plus{std::make_shared<const BarrierSpec>(inner)});
}

BarrierSpec make_derived(const BarrierSpec& inner, Nat n) {
  const Classification c = classify(inner, Seq{n});
  // (n) itself being an element would leave only {()}, which has an empty base.
  if (c != Classification::ProperPrefix) {
    throw std::invalid_argument("derived barrier: (" + std::to_string(n) + ") is not a proper prefix of an element of " +
                                inner.to_string() + " (" + to_string(c) + ")");
  }
  return BarrierSpec(node::Derived{std::make_shared<const BarrierSpec>(inner), n});
}

BarrierSpec make_restrict(const BarrierSpec& inner, const GroundSet& set) {
  if (set.is_finite()) {
    throw std::invalid_argument("restriction needs an infinite set (with a tail), got " + set.to_string());
  }
  return BarrierSpec(node::Restrict{std::make_shared<const BarrierSpec>(inner), set});
}

BarrierSpec make_canonical(const Ordinal& alpha) { return BarrierSpec(node::Canonical{alpha}); }

bool in_base(const BarrierSpec& b, Nat x) {
  return std::visit(overloaded{
                        [](const node::Unit&) { return false; },
                        [](const node::ExactSize& e) { return e.n > 0; },
                        [](const node::Schreier&) { return true; },
                        [](const node::Canonical& c) { return !c.alpha.is_zero(); },
                        [&](const node::Product& p) { return in_base(*p.left, x) || in_base(*p.right, x); },
                        [&](const node::Plus& p) { return x >= 1 && in_base(*p.inner, x - 1); },
                        [&](const node::Derived& d) { return x > d.n && in_base(*d.inner, x); },
                        [&](const node::Restrict& r) { return r.set.contains(x) && in_base(*r.inner, x); },
                    },
                    b.node());
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Element: return "Element";
    case Classification::ProperPrefix: return "ProperPrefix";
    case Classification::Overrun: return "Overrun";
    case Classification::NotInBase: return "NotInBase";
  }
  return "?";
}

Classification classify(const BarrierSpec& b, const Seq& s) {
  for (Nat x : s) {
    if (!in_base(b, x)) return Classification::NotInBase;
  }
  const Consumed r = consume(b, s.span(), 0);
  switch (r.status) {
    case Status::NotInBase: return Classification::NotInBase;
    case Status::Partial: return Classification::ProperPrefix;
    case Status::Element: return r.end == s.size() ? Classification::Element : Classification::Overrun;
  }
  return Classification::NotInBase;
}

std::optional<Seq> step(const BarrierSpec& b, const Seq& stream) {
  Walk w = walk(b, stream);
  switch (w.kind) {
    case Walk::Hit: return w.element;
    case Walk::Inconclusive: return std::nullopt;
    case Walk::Inconsistent: throw InvariantViolation(w.reason);
  }
  return std::nullopt;
}

std::vector<Seq> front(const BarrierSpec& b, const GroundSet& ground) {
  const std::vector<Nat> elems = ground.elements();
  std::vector<Seq> out;
  // Depth-first in lex order; elements and overruns end a branch.
  auto visit = [&](auto&& self, const Seq& current, std::size_t next) -> void {
    switch (classify(b, current)) {
      case Classification::Element:
        out.push_back(current);
        return;
      case Classification::ProperPrefix:
        for (std::size_t j = next; j < elems.size(); ++j) self(self, current.append(elems[j]), j + 1);
        return;
      default:
        return;
    }
  };
  visit(visit, Seq{}, 0);
  return out;
}

bool check_sperner(const std::vector<Seq>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i != j && members[i] != members[j] && members[i].subset_of(members[j])) return false;
    }
  }
  return true;
}

DensityReport density_probe(const BarrierSpec& b, const GroundSet& ground) {
  std::vector<Nat> elems;
  for (Nat x : ground.elements()) {
    if (in_base(b, x)) elems.push_back(x);
  }
  if (elems.size() > 24) throw std::invalid_argument("density probe limited to 24 base elements");
  DensityReport report;
  const std::uint64_t subsets = std::uint64_t{1} << elems.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::vector<Nat> ys;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (mask >> i & 1) ys.push_back(elems[i]);
    }
    Seq stream(std::move(ys));
    Walk w = walk(b, stream);
    switch (w.kind) {
      case Walk::Hit: ++report.hit; break;
      case Walk::Inconclusive: ++report.inconclusive; break;
      case Walk::Inconsistent: report.violations.push_back({stream, w.reason}); break;
    }
  }
  return report;
}

Seq variant(const BarrierSpec& b, const Seq& s, Nat k) {
  if (classify(b, s) != Classification::Element) {
    throw std::invalid_argument("variant: " + s.to_string() + " is not an element of " + b.to_string());
  }
  if (k >= s.max()) {
    throw VariantOutOfRange("variant: k=" + std::to_string(k) + " is not below max" + s.to_string());
  }
  if (s.contains(k)) throw std::invalid_argument("variant: k=" + std::to_string(k) + " already in " + s.to_string());
  if (!in_base(b, k)) throw NotInBaseError("variant: k=" + std::to_string(k) + " not in base of " + b.to_string());
  const Seq stream = s.insert(k);
  std::optional<Seq> hit = step(b, stream);
  if (!hit || !hit->contains(k) || hit->contains(s.max())) {
    throw InvariantViolation("variant of " + s.to_string() + " at " + std::to_string(k) + " in " + b.to_string() +
                             " is not of the expected form");
  }
  if (lex_cmp(*hit, s) >= 0) throw InvariantViolation("variant " + hit->to_string() + " is not lex-below " + s.to_string());
  return *hit;
}

Seq append_variant(const BarrierSpec& b, const Seq& s, Nat k) {
  if (classify(b, s) != Classification::Element || s.empty()) {
    throw std::invalid_argument("append_variant: " + s.to_string() + " is not a nonempty element of " + b.to_string());
  }
  const std::size_t n = s.size();
  if (k >= s[n - 1] || (n >= 2 && k <= s[n - 2])) {
    throw VariantOutOfRange("append_variant: k=" + std::to_string(k) + " not strictly between the last two coordinates of " +
                            s.to_string());
  }
  if (!in_base(b, k)) throw NotInBaseError("append_variant: k=" + std::to_string(k) + " not in base of " + b.to_string());
  Seq out = s.prefix(n - 1).append(k);
  if (classify(b, out) != Classification::Element) {
    throw InvariantViolation("append_variant result " + out.to_string() + " is not an element of " + b.to_string());
  }
  return out;
}

OrderType order_type(const BarrierSpec& b) {
  return std::visit(
      overloaded{
          [](const node::Unit&) { return OrderType{Ordinal(1)}; },
          [](const node::ExactSize& e) { return OrderType{Ordinal::omega_pow(Ordinal(e.n))}; },
          [](const node::Schreier&) { return OrderType{Ordinal::omega_pow(Ordinal::omega())}; },
          [](const node::Canonical& c) { return OrderType{Ordinal::omega_pow(c.alpha)}; },
          [](const node::Product& p) {
            OrderType left = order_type(*p.left);
            OrderType right = order_type(*p.right);
            return OrderType{right.value * left.value, left.exact && right.exact};
          },
          [](const node::Plus& p) {
            OrderType inner = order_type(*p.inner);
            return OrderType{Ordinal::omega() * inner.value, inner.exact};
          },
          [](const node::Derived&) -> OrderType { throw UnsupportedError("order type of a derived barrier"); },
          [](const node::Restrict& r) { return OrderType{order_type(*r.inner).value, false}; },
      },
      b.node());
}

}  // namespace barriers
