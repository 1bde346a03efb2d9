#include <gtest/gtest.h>

#include <set>

#include "barriers/barrier.hpp"
#include "barriers/spec_json.hpp"
#include "oracles.hpp"

using namespace barriers;

namespace {

using C = Classification;

Ordinal P(const char* text) { return Ordinal::parse(text); }
GroundSet R(Nat lo, Nat hi) { return GroundSet::range(lo, hi); }
GroundSet evens() { return GroundSet({}, Tail{0, 2}); }

struct Named {
  std::string name;
  BarrierSpec spec;
};

std::vector<Named> pool() {
  const auto s = BarrierSpec::schreier();
  return {
      {"exact1", BarrierSpec::exact(1)},
      {"exact2", BarrierSpec::exact(2)},
      {"exact3", BarrierSpec::exact(3)},
      {"schreier", s},
      {"cb0", make_canonical(P("0"))},
      {"cb1", make_canonical(P("1"))},
      {"cb2", make_canonical(P("2"))},
      {"cb3", make_canonical(P("3"))},
      {"cbw", make_canonical(P("w"))},
      {"cbw1", make_canonical(P("w+1"))},
      {"cbw2", make_canonical(P("w*2"))},
      {"cbww", make_canonical(P("w^2"))},
      {"cbwtow", make_canonical(P("w^w"))},
      {"plus_schreier", make_plus(s)},
      {"plus_exact1", make_plus(BarrierSpec::exact(1))},
      {"product", make_product(BarrierSpec::exact(1), s)},
      {"derived", make_derived(s, 2)},
      {"restrict_evens", make_restrict(s, evens())},
  };
}

TEST(Seq, Basics) {
  EXPECT_THROW(Seq({3, 3}), std::invalid_argument);
  EXPECT_THROW(Seq({4, 2}), std::invalid_argument);
  const Seq s{2, 4, 5};
  EXPECT_EQ(s.min(), 2u);
  EXPECT_EQ(s.max(), 5u);
  EXPECT_EQ(s.insert(3), Seq({2, 3, 4, 5}));
  EXPECT_EQ(s.to_string(), "(2,4,5)");
  EXPECT_TRUE(Seq({2, 5}).subset_of(s));
  EXPECT_TRUE(Seq({2, 4}).is_prefix_of(s));
  EXPECT_FALSE(Seq({2, 5}).is_prefix_of(s));
}

TEST(Seq, ShiftsAndLex) {
  EXPECT_EQ(seq_plus(Seq({0, 3})), Seq({1, 4}));
  EXPECT_EQ(seq_minus(Seq({2, 5})), Seq({1}));
  EXPECT_EQ(seq_minus(Seq({1})), Seq());
  EXPECT_THROW(seq_minus(Seq()), std::invalid_argument);
  EXPECT_THROW(seq_minus(Seq({0, 3})), std::invalid_argument);
  EXPECT_EQ(lex_cmp(Seq({1, 5}), Seq({1, 7})), std::strong_ordering::less);
  EXPECT_EQ(lex_cmp(Seq({2, 3, 4}), Seq({2, 4, 5})), std::strong_ordering::less);
  EXPECT_EQ(lex_cmp(Seq({3}), Seq({3})), std::strong_ordering::equal);
  EXPECT_EQ(lex_cmp(Seq({3}), Seq({3, 4})), std::strong_ordering::less);
}

TEST(GroundSet, ParsingAndQueries) {
  EXPECT_EQ(parse_ground("0..6").elements(), (std::vector<Nat>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(parse_ground("0..=3").elements(), (std::vector<Nat>{0, 1, 2, 3}));
  EXPECT_EQ(parse_ground("5,1,3").elements(), (std::vector<Nat>{1, 3, 5}));
  EXPECT_THROW(parse_ground("a..b"), std::invalid_argument);
  const GroundSet e = evens();
  EXPECT_TRUE(e.contains(10));
  EXPECT_FALSE(e.contains(7));
  EXPECT_EQ(e.next(4), 6u);
  EXPECT_EQ(e.next(4, true), 4u);
  EXPECT_EQ(e.first(3), (std::vector<Nat>{0, 2, 4}));
  EXPECT_EQ(e.elements_below(7), (std::vector<Nat>{0, 2, 4, 6}));
  EXPECT_THROW(e.elements(), std::invalid_argument);
  const GroundSet mixed({1, 3}, Tail{10, 5});
  EXPECT_EQ(mixed.first(4), (std::vector<Nat>{1, 3, 10, 15}));
  EXPECT_EQ(mixed.next(3), 10u);
}

TEST(Classify, Examples) {
  const auto s = BarrierSpec::schreier();
  EXPECT_EQ(classify(s, Seq({2, 4, 5})), C::Element);
  EXPECT_EQ(classify(s, Seq({1, 3, 7})), C::Overrun);
  EXPECT_EQ(classify(s, Seq({2, 4})), C::ProperPrefix);
  EXPECT_EQ(classify(s, Seq()), C::ProperPrefix);
  EXPECT_EQ(classify(make_canonical(P("w")), Seq({2, 3, 5, 8})), C::Element);
  EXPECT_EQ(classify(make_canonical(P("2")), Seq({3, 7})), C::Element);
  EXPECT_EQ(classify(make_derived(s, 2), Seq({5, 6})), C::Element);
  EXPECT_EQ(classify(make_restrict(s, evens()), Seq({1, 2})), C::NotInBase);
  EXPECT_EQ(classify(make_plus(s), Seq({0, 2})), C::NotInBase);
  EXPECT_EQ(classify(make_derived(s, 2), Seq({2, 5})), C::NotInBase);
  EXPECT_EQ(classify(BarrierSpec::unit(), Seq()), C::Element);
  EXPECT_EQ(classify(BarrierSpec::exact(0), Seq()), C::Element);
}

TEST(Classify, CanonicalOmegaMatchesBlockGenerator) {
  // From the block generator: CB(w) elements starting at 2 have blocks of sizes 2, 1, 0.
  const auto gen = oracle::canonical_front(P("w"), 9);
  EXPECT_TRUE(std::find(gen.begin(), gen.end(), Seq({2, 3, 5, 8})) != gen.end());
}

TEST(Step, Examples) {
  EXPECT_EQ(step(BarrierSpec::exact(2), Seq({4, 9, 13})), Seq({4, 9}));
  EXPECT_EQ(step(BarrierSpec::schreier(), Seq({0, 5, 6})), Seq({0}));
  EXPECT_EQ(step(make_canonical(P("1")), Seq({7})), Seq({7}));
  EXPECT_EQ(step(BarrierSpec::exact(3), Seq({1, 2})), std::nullopt);
  EXPECT_THROW(step(make_plus(BarrierSpec::schreier()), Seq({0, 1})), NotInBaseError);
}

TEST(Front, Examples) {
  EXPECT_EQ(front(BarrierSpec::exact(3), R(0, 6)).size(), 20u);
  EXPECT_EQ(front(BarrierSpec::schreier(), R(0, 6)).size(), 8u);
  EXPECT_EQ(front(make_plus(BarrierSpec::exact(1)), GroundSet({1, 2, 3})),
            (std::vector<Seq>{Seq({1, 2}), Seq({1, 3}), Seq({2, 3})}));
  EXPECT_EQ(front(BarrierSpec::unit(), R(0, 3)), (std::vector<Seq>{Seq()}));
}

TEST(Front, SchreierCountsMatchSubsetFilter) {
  // Counts from a brute-force subset filter over [0, N).
  const std::vector<std::size_t> frozen = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
  for (Nat n = 0; n <= 10; ++n) {
    const auto expected = oracle::filter(oracle::subsets(n), oracle::schreier);
    EXPECT_EQ(front(BarrierSpec::schreier(), R(0, n)), expected) << "N=" << n;
    EXPECT_EQ(expected.size(), frozen[n]);
  }
}

TEST(Front, CanonicalMatchesBlockGenerator) {
  for (const char* alpha : {"0", "1", "2", "3", "w", "w+1", "w*2", "w^2", "w^w", "w^2+w"}) {
    for (Nat n : {0, 5, 9, 11}) {
      EXPECT_EQ(front(make_canonical(P(alpha)), R(0, n)), oracle::canonical_front(P(alpha), n))
          << "alpha=" << alpha << " N=" << n;
    }
  }
}

TEST(Front, CanonicalFiniteIsExactSize) {
  for (Nat k = 0; k <= 4; ++k) {
    EXPECT_EQ(front(make_canonical(Ordinal(k)), R(0, 9)), front(BarrierSpec::exact(k), R(0, 9)));
  }
}

TEST(Sperner, Examples) {
  EXPECT_TRUE(check_sperner({Seq({0}), Seq({1, 2})}));
  EXPECT_FALSE(check_sperner({Seq({1}), Seq({1, 2})}));
  EXPECT_FALSE(check_sperner({Seq({1, 2}), Seq({1})}));
  EXPECT_TRUE(check_sperner(front(make_canonical(P("w")), R(0, 8))));
}

TEST(Density, Examples) {
  auto r = density_probe(BarrierSpec::exact(1), GroundSet({0, 1, 2}));
  EXPECT_EQ(r.hit, 7u);
  EXPECT_EQ(r.inconclusive, 0u);
  r = density_probe(BarrierSpec::exact(3), GroundSet({0, 1}));
  EXPECT_EQ(r.hit, 0u);
  EXPECT_EQ(r.inconclusive, 3u);
  EXPECT_TRUE(density_probe(BarrierSpec::schreier(), R(0, 7)).violations.empty());
}

TEST(Constructors, Validation) {
  const auto s = BarrierSpec::schreier();
  EXPECT_THROW(make_restrict(s, GroundSet({1, 2, 3})), std::invalid_argument);
  EXPECT_THROW(make_derived(BarrierSpec::unit(), 0), std::invalid_argument);
  EXPECT_THROW(make_derived(make_restrict(s, evens()), 3), std::invalid_argument);
  // {0} is itself a Schreier element, so it has no proper extension.
  EXPECT_THROW(make_derived(s, 0), std::invalid_argument);
  EXPECT_NO_THROW(make_derived(s, 1));
}

TEST(Base, Membership) {
  const auto s = BarrierSpec::schreier();
  EXPECT_FALSE(in_base(BarrierSpec::unit(), 0));
  EXPECT_TRUE(in_base(s, 0));
  EXPECT_FALSE(in_base(make_plus(s), 0));
  EXPECT_TRUE(in_base(make_plus(s), 1));
  EXPECT_FALSE(in_base(make_plus(make_plus(s)), 1));
  EXPECT_FALSE(in_base(make_derived(s, 2), 2));
  EXPECT_TRUE(in_base(make_derived(s, 2), 3));
  EXPECT_FALSE(in_base(make_restrict(s, evens()), 3));
}

TEST(Variant, Examples) {
  const auto s = BarrierSpec::schreier();
  EXPECT_EQ(variant(s, Seq({2, 4, 5}), 3), Seq({2, 3, 4}));
  EXPECT_EQ(variant(s, Seq({2, 4, 5}), 1), Seq({1, 2}));
  EXPECT_EQ(variant(BarrierSpec::exact(2), Seq({4, 9}), 6), Seq({4, 6}));
  EXPECT_THROW(variant(s, Seq({2, 4, 5}), 5), std::invalid_argument);
  EXPECT_THROW(variant(s, Seq({2, 4, 5}), 7), VariantOutOfRange);
  EXPECT_THROW(variant(s, Seq({2, 4}), 3), std::invalid_argument);
  EXPECT_EQ(append_variant(s, Seq({2, 4, 7}), 5), Seq({2, 4, 5}));
  EXPECT_THROW(append_variant(s, Seq({2, 4, 7}), 3), std::invalid_argument);
}

TEST(OrderType, Examples) {
  const auto s = BarrierSpec::schreier();
  EXPECT_EQ(order_type(s).value, P("w^w"));
  EXPECT_EQ(order_type(make_plus(s)).value, P("w^w"));
  EXPECT_EQ(order_type(make_canonical(P("w^2"))).value, P("w^(w^2)"));
  EXPECT_EQ(order_type(BarrierSpec::exact(3)).value, P("w^3"));
  EXPECT_EQ(order_type(BarrierSpec::unit()).value, P("1"));
  EXPECT_EQ(order_type(make_product(BarrierSpec::exact(1), s)).value, P("w^(w+1)"));
  EXPECT_EQ(order_type(make_product(BarrierSpec::exact(2), BarrierSpec::exact(3))).value, P("w^5"));
  EXPECT_EQ(order_type(make_plus(BarrierSpec::exact(2))).value, P("w^3"));
  const auto restricted = order_type(make_restrict(s, evens()));
  EXPECT_EQ(restricted.value, P("w^w"));
  EXPECT_FALSE(restricted.exact);
  EXPECT_TRUE(order_type(s).exact);
  EXPECT_THROW(order_type(make_derived(s, 2)), UnsupportedError);
}

TEST(OrderType, PlusIsOmegaTimes) {
  for (const auto& [name, b] : pool()) {
    if (name == "derived") continue;
    if (name == "cb0") continue;  // {()}+ is not a barrier: () has no max.
    EXPECT_EQ(order_type(make_plus(b)).value, mul(Ordinal::omega(), order_type(b).value)) << name;
  }
}

// Exhaustive checks over every increasing sequence with max <= 12.
class PoolProperties : public ::testing::TestWithParam<Named> {};

TEST_P(PoolProperties, TrichotomyAndPrefixCoherence) {
  const BarrierSpec& b = GetParam().spec;
  for (const auto& s : oracle::subsets(13)) {
    const C c = classify(b, s);
    bool over_base = true;
    for (Nat x : s) over_base = over_base && in_base(b, x);
    if (!over_base) {
      ASSERT_EQ(c, C::NotInBase) << s.to_string();
      continue;
    }
    ASSERT_NE(c, C::NotInBase) << s.to_string();
    std::size_t element_prefixes = 0;
    for (std::size_t len = 0; len < s.size(); ++len) {
      const C pc = classify(b, s.prefix(len));
      if (pc == C::Element) ++element_prefixes;
      if (c == C::Element || c == C::ProperPrefix) {
        ASSERT_EQ(pc, C::ProperPrefix) << s.to_string() << " len " << len;
      }
    }
    if (c == C::Overrun) {
      ASSERT_EQ(element_prefixes, 1u) << s.to_string();
    }
  }
}

TEST_P(PoolProperties, SpernerAndDensityOnSmallGround) {
  const BarrierSpec& b = GetParam().spec;
  for (Nat n : {8, 12}) {
    EXPECT_TRUE(check_sperner(front(b, R(0, n)))) << n;
  }
  EXPECT_TRUE(density_probe(b, R(0, 12)).violations.empty());
}

TEST_P(PoolProperties, FrontMatchesClassifyFilter) {
  const BarrierSpec& b = GetParam().spec;
  auto expected = oracle::filter(oracle::subsets(10), [&](const Seq& s) { return classify(b, s) == C::Element; });
  EXPECT_EQ(front(b, R(0, 10)), expected);
}

TEST_P(PoolProperties, VariantLaws) {
  const BarrierSpec& b = GetParam().spec;
  if (GetParam().name == "cb0") return;
  for (const auto& s : front(b, R(0, 11))) {
    for (Nat k = 0; !s.empty() && k < s.max(); ++k) {
      if (s.contains(k) || !in_base(b, k)) continue;
      const Seq v = variant(b, s, k);
      ASSERT_EQ(classify(b, v), C::Element);
      ASSERT_TRUE(lex_cmp(v, s) < 0);
      ASSERT_TRUE(v.contains(k));
      // Coordinates below k are kept; the rest come from s in order.
      std::vector<Nat> rest;
      for (Nat x : v) {
        if (x != k) rest.push_back(x);
      }
      ASSERT_TRUE(Seq(rest).is_prefix_of(s)) << s.to_string() << "[" << k << "] = " << v.to_string();
      ASSERT_LT(rest.size(), s.size());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Pool, PoolProperties, ::testing::ValuesIn(pool()),
                         [](const auto& info) { return info.param.name; });

TEST(Laws, SchreierVariantFacts) {
  const auto b = BarrierSpec::schreier();
  std::size_t checked = 0;
  for (const auto& s : front(b, R(0, 11))) {
    const auto& e = s.elems();
    for (Nat k = 0; k < s.max(); ++k) {
      if (s.contains(k)) continue;
      const Seq v = variant(b, s, k);
      std::vector<Nat> expected;
      if (k < s.min()) {
        // {k} u {s_0, ..., s_{k-1}}
        expected.push_back(k);
        for (Nat j = 0; j < k; ++j) expected.push_back(e[j]);
      } else {
        // s_i < k < s_{i+1}: {s_0..s_i, k, s_{i+1}..s_{s_0 - 1}}
        std::size_t i = 0;
        while (e[i + 1] < k) ++i;
        for (std::size_t j = 0; j <= i; ++j) expected.push_back(e[j]);
        expected.push_back(k);
        for (std::size_t j = i + 1; j + 1 <= e[0]; ++j) expected.push_back(e[j]);
      }
      ASSERT_EQ(v, Seq(expected)) << s.to_string() << "[" << k << "]";
      ++checked;
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(Laws, PlusFront) {
  for (const auto& b : {BarrierSpec::exact(1), BarrierSpec::exact(2), BarrierSpec::schreier(),
                        make_canonical(P("w")), make_canonical(P("2"))}) {
    for (const auto& g : {R(0, 10), GroundSet({0, 2, 3, 5, 8, 9, 11})}) {
      std::vector<Nat> shifted_down;
      for (Nat x : g.elements()) {
        if (x >= 1) shifted_down.push_back(x - 1);
      }
      std::set<Seq> expected;
      for (const auto& s : front(b, GroundSet(shifted_down))) {
        const Seq sp = seq_plus(s);
        for (Nat m : g.elements()) {
          if (m > sp.max()) expected.insert(sp.append(m));
        }
      }
      const auto got = front(make_plus(b), g);
      EXPECT_EQ(std::set<Seq>(got.begin(), got.end()), expected) << b.to_string() << " " << g.to_string();
    }
  }
}

TEST(Laws, RestrictFront) {
  const GroundSet x({1, 4}, Tail{6, 3});
  for (const auto& b : {BarrierSpec::exact(2), BarrierSpec::schreier(), make_canonical(P("w"))}) {
    const auto g = R(0, 13);
    std::vector<Nat> meet;
    for (Nat v : g.elements()) {
      if (x.contains(v)) meet.push_back(v);
    }
    EXPECT_EQ(front(make_restrict(b, x), g), front(b, GroundSet(meet))) << b.to_string();
  }
}

TEST(Laws, DerivedFront) {
  for (const auto& [b, n] : std::vector<std::pair<BarrierSpec, Nat>>{
           {BarrierSpec::schreier(), 2}, {BarrierSpec::schreier(), 3}, {BarrierSpec::exact(3), 1},
           {make_canonical(P("w")), 2}}) {
    const auto g = R(0, 12);
    const auto derived = front(make_derived(b, n), g);
    std::vector<Nat> with_n = g.elements();
    const auto base_front = front(b, GroundSet(with_n));
    std::set<Seq> expected;
    for (const auto& t : base_front) {
      if (t.size() >= 2 && t[0] == n) expected.insert(Seq(std::vector<Nat>(t.begin() + 1, t.end())));
    }
    EXPECT_EQ(std::set<Seq>(derived.begin(), derived.end()), expected) << b.to_string() << " n=" << n;
  }
}

TEST(Json, BarrierRoundTrip) {
  for (const auto& [name, b] : pool()) {
    const json j = barrier_to_json(b);
    EXPECT_EQ(barrier_from_json(j), b) << name << " " << j.dump();
    EXPECT_EQ(barrier_from_json(json::parse(j.dump())), b) << name;
  }
  EXPECT_EQ(barrier_from_json(json::parse(R"({"plus":"schreier"})")), make_plus(BarrierSpec::schreier()));
  EXPECT_EQ(barrier_from_json(json::parse(R"({"canonical":"w*2"})")), make_canonical(P("w*2")));
  EXPECT_EQ(barrier_from_json(json::parse(R"({"exact":3})")), BarrierSpec::exact(3));
  EXPECT_THROW(barrier_from_json(json::parse(R"({"nope":1})")), std::invalid_argument);
  EXPECT_THROW(barrier_from_json(json::parse(R"("exact:x")")), std::invalid_argument);
}

}  // namespace
