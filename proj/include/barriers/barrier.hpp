#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "barriers/ground_set.hpp"
#include "barriers/ordinal.hpp"
#include "barriers/seq.hpp"
#include "barriers/types.hpp"

namespace barriers {

class BarrierSpec;

namespace node {
/// The degenerate barrier {()}.
struct Unit {};
/// [N]^n.
struct ExactSize {
  Nat n;
};
/// {s : |s| = min(s) + 1}.
struct Schreier {};
/// Canonical barrier of order type omega^alpha.
struct Canonical {
  Ordinal alpha;
};
/// A * B = {s u t : s in A, t in B, max(s) < min(t)}.
struct Product {
  std::shared_ptr<const BarrierSpec> left, right;
};
/// B+ = {s+ u {m} : s in B, m in base(B)+, m > max(s+)}.
struct Plus {
  std::shared_ptr<const BarrierSpec> inner;
};
/// B_n = {s : min(s) > n, {n} u s in B}.
struct Derived {
  std::shared_ptr<const BarrierSpec> inner;
  Nat n;
};
/// B|X = {s in B : s subset of X}.
struct Restrict {
  std::shared_ptr<const BarrierSpec> inner;
  GroundSet set;
};
}  // namespace node

/// An intensional description of a computable barrier.
///
/// A spec never lists its elements. It decides, for any finite increasing
/// sequence, whether the sequence is an element, a proper prefix of an
/// element, or overruns one. Specs are immutable and cheap to copy.
class BarrierSpec {
 public:
  using Node = std::variant<node::Unit, node::ExactSize, node::Schreier, node::Canonical, node::Product,
                            node::Plus, node::Derived, node::Restrict>;

  static BarrierSpec unit();
  static BarrierSpec exact(Nat n);
  static BarrierSpec schreier();

  const Node& node() const { return *node_; }
  /// Short constructor-tree rendering, e.g. `plus(schreier)`.
  std::string to_string() const;

  friend bool operator==(const BarrierSpec& a, const BarrierSpec& b);

 private:
  explicit BarrierSpec(Node node);
  std::shared_ptr<const Node> node_;

  friend BarrierSpec make_product(const BarrierSpec&, const BarrierSpec&);
  friend BarrierSpec make_plus(const BarrierSpec&);
  friend BarrierSpec make_derived(const BarrierSpec&, Nat);
  friend BarrierSpec make_restrict(const BarrierSpec&, const GroundSet&);
  friend BarrierSpec make_canonical(const Ordinal&);
};

BarrierSpec make_product(const BarrierSpec& left, const BarrierSpec& right);
BarrierSpec make_plus(const BarrierSpec& inner);
/// Requires (n) to be a proper prefix of an element of `inner`.
BarrierSpec make_derived(const BarrierSpec& inner, Nat n);
/// Requires an infinite set (one with a tail), so the result stays a barrier.
BarrierSpec make_restrict(const BarrierSpec& inner, const GroundSet& set);
BarrierSpec make_canonical(const Ordinal& alpha);

/// Membership in the base b(B).
bool in_base(const BarrierSpec& b, Nat x);

enum class Classification { Element, ProperPrefix, Overrun, NotInBase };
std::string to_string(Classification c);

/// Decides the position of s relative to B:
///  - Element: s is in B;
///  - ProperPrefix: s is a proper prefix of some element;
///  - Overrun: a proper prefix of s is in B (exactly one, by Sperner);
///  - NotInBase: s is not a subset of b(B).
Classification classify(const BarrierSpec& b, const Seq& s);

/// Shortest prefix of `stream` that is an element of B, or nullopt when the
/// stream ends while still a proper prefix (inconclusive).
/// Throws NotInBaseError if an examined prefix leaves the base.
std::optional<Seq> step(const BarrierSpec& b, const Seq& stream);

/// All elements of B contained in the finite set `ground`, in lex order.
std::vector<Seq> front(const BarrierSpec& b, const GroundSet& ground);

/// True iff no member is a strict subset of another.
bool check_sperner(const std::vector<Seq>& members);

struct DensityViolation {
  Seq stream;
  std::string reason;
};

struct DensityReport {
  std::size_t hit = 0;
  std::size_t inconclusive = 0;
  std::vector<DensityViolation> violations;
};

/// Streams every nonempty Y contained in (ground intersect base) through the
/// stop rule and checks that classifications along each stream are coherent.
DensityReport density_probe(const BarrierSpec& b, const GroundSet& ground);

/// k lies at or above max(s); the k-variant is only defined below max(s).
class VariantOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The k-variant s[k]: the unique element of B of the form
/// (s_0, ..., s_i, k, s_{i+1}, ..., s_j) with j < |s| - 1. Always lex-smaller
/// than s. Requires s in B, k in base(B), k not in s, k < max(s).
Seq variant(const BarrierSpec& b, const Seq& s, Nat k);

/// (s_0, ..., s_{n-1}, k) for s_{n-1} < k < s_n: replaces the last coordinate.
Seq append_variant(const BarrierSpec& b, const Seq& s, Nat k);

struct OrderType {
  Ordinal value;
  /// False when `value` is only an upper bound (restrictions).
  bool exact = true;
};

/// Symbolic order type of the lexicographic order on B.
/// Throws UnsupportedError for derived barriers.
OrderType order_type(const BarrierSpec& b);

}  // namespace barriers
