#include <gtest/gtest.h>

#include <functional>

#include "permred/behaviors.hpp"

using namespace permred;

namespace {

using enum PairType;

constexpr GeneratorKind kTurnFree[] = {GeneratorKind::RevId, GeneratorKind::IdRev,
                                       GeneratorKind::RevRev, GeneratorKind::Sw};

void for_each_word(std::size_t max_len, const std::function<void(const GeneratorWord&)>& fn) {
  GeneratorWord w;
  std::function<void()> rec = [&] {
    fn(w);
    if (w.size() == max_len) return;
    for (auto k : kTurnFree) {
      w.push_back({k});
      rec();
      w.pop_back();
    }
  };
  rec();
}

NamedBehavior named(const Behavior& b) { return std::get<NamedBehavior>(classify(b)); }

}  // namespace

TEST(BehaviorOfWord, Examples) {
  EXPECT_EQ(behavior_of_word({}), (Behavior{T1, T2}));
  EXPECT_EQ(behavior_of_word({{GeneratorKind::RevId}}), (Behavior{T4, T3}));
  EXPECT_EQ(behavior_of_word({{GeneratorKind::Sw}}), (Behavior{T1, T4}));
  EXPECT_EQ(behavior_of_word({{GeneratorKind::IdRev}}), (Behavior{T2, T1}));
  EXPECT_EQ(behavior_of_word({{GeneratorKind::RevRev}}), (Behavior{T3, T4}));
}

TEST(BehaviorOfWord, RejectsTurns) {
  EXPECT_THROW(behavior_of_word({{GeneratorKind::TurnFirst, 1}}), std::invalid_argument);
  EXPECT_THROW(behavior_of_word({{GeneratorKind::Sw}, {GeneratorKind::TurnSecond, 0}}),
               std::invalid_argument);
}

TEST(Compose, Examples) {
  const auto id_rev = behavior_of(NamedBehavior::IdRev);
  const auto rev_id = behavior_of(NamedBehavior::RevId);
  const auto sw = behavior_of(NamedBehavior::Sw);
  const auto rot = behavior_of(NamedBehavior::SwIdRev);
  EXPECT_EQ(named(compose(id_rev, rev_id)), NamedBehavior::RevRev);
  EXPECT_EQ(named(compose(sw, sw)), NamedBehavior::Id);
  EXPECT_EQ(named(compose(rot, rot)), NamedBehavior::RevRev);
  EXPECT_THROW(compose(Behavior{T1, T1}, sw), std::invalid_argument);
  EXPECT_THROW(compose(sw, Behavior{T1, T3}), std::invalid_argument);
}

TEST(Compose, IsAHomomorphismOnWords) {
  for_each_word(4, [](const GeneratorWord& u) {
    if (u.size() > 4) return;
    for_each_word(4 - u.size(), [&](const GeneratorWord& v) {
      GeneratorWord uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      EXPECT_EQ(behavior_of_word(uv), compose(behavior_of_word(u), behavior_of_word(v)))
          << to_string(uv);
    });
  });
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify({T1, T2}), BehaviorClass{NamedBehavior::Id});
  EXPECT_EQ(classify({T1, T1}), (BehaviorClass{DiagonalBehavior{1, true}}));
  EXPECT_EQ(classify({T3, T3}), (BehaviorClass{DiagonalBehavior{1, false}}));
  EXPECT_EQ(classify({T1, T3}), (BehaviorClass{DiagonalBehavior{2, true}}));
  EXPECT_EQ(classify({T4, T2}), (BehaviorClass{DiagonalBehavior{2, true}}));
  EXPECT_EQ(classify({T3, T1}), (BehaviorClass{DiagonalBehavior{2, false}}));
  EXPECT_EQ(to_string(classify({T1, T2})), "named: id");
  EXPECT_EQ(to_string(classify({T1, T1})), "diagonal: order 1, preserve");
}

TEST(Classify, Census) {
  int named_count = 0, order1 = 0, order2 = 0;
  for (const auto& b : all_behaviors()) {
    const auto c = classify(b);
    if (std::holds_alternative<NamedBehavior>(c)) ++named_count;
    else if (std::get<DiagonalBehavior>(c).order == 1) ++order1;
    else ++order2;
  }
  EXPECT_EQ(named_count, 8);
  EXPECT_EQ(order1, 4);
  EXPECT_EQ(order2, 4);
}

TEST(Classify, NamedBehaviorsRoundTrip) {
  for (auto n : kAllNamedBehaviors) EXPECT_EQ(named(behavior_of(n)), n) << name(n);
}

TEST(Classify, DiagonalBehaviorsAreExactlyTheNonPermutations) {
  // A behavior comes from a turn-free word iff it is named.
  std::set<Behavior> realized;
  for_each_word(3, [&](const GeneratorWord& w) { realized.insert(behavior_of_word(w)); });
  for (const auto& b : all_behaviors()) EXPECT_EQ(realized.count(b) == 1, is_named(b));
}

TEST(Parse, Behaviors) {
  EXPECT_EQ(parse_behavior("t4,t3"), (Behavior{T4, T3}));
  EXPECT_EQ(to_string(Behavior{T4, T3}), "t4,t3");
  EXPECT_THROW(parse_behavior("t4"), std::invalid_argument);
  EXPECT_THROW(parse_behavior("t4,t5"), std::invalid_argument);
}

TEST(NamedGroup, IsDihedralOfOrderEight) {
  const NamedGroup g;
  int order4 = 0;
  for (auto a : kAllNamedBehaviors) {
    EXPECT_EQ(g.product(a, g.inverse(a)), NamedBehavior::Id);
    if (g.element_order(a) == 4) ++order4;
    for (auto b : kAllNamedBehaviors)
      for (auto c : kAllNamedBehaviors)
        EXPECT_EQ(g.product(g.product(a, b), c), g.product(a, g.product(b, c)));
  }
  EXPECT_EQ(order4, 2);
  EXPECT_EQ(g.element_order(NamedBehavior::SwIdRev), 4u);
  EXPECT_EQ(g.element_order(NamedBehavior::SwRevId), 4u);
  EXPECT_EQ(g.subgroups().size(), 10u);
  EXPECT_EQ(g.generated(0xFF), 0xFF);
}

TEST(NamedGroup, MatchesWordComposition) {
  const NamedGroup g;
  for (auto a : kAllNamedBehaviors)
    for (auto b : kAllNamedBehaviors)
      EXPECT_EQ(behavior_of(g.product(a, b)), compose(behavior_of(a), behavior_of(b)));
}

TEST(NamedGroup, RotationSubgroupAndCenter) {
  const NamedGroup g;
  const auto rot = g.generated(NamedGroup::singleton(NamedBehavior::SwIdRev));
  const auto expected = NamedGroup::singleton(NamedBehavior::Id) |
                        NamedGroup::singleton(NamedBehavior::SwIdRev) |
                        NamedGroup::singleton(NamedBehavior::RevRev) |
                        NamedGroup::singleton(NamedBehavior::SwRevId);
  EXPECT_EQ(rot, expected);
  EXPECT_EQ(g.generated(NamedGroup::singleton(NamedBehavior::SwRevId)), expected);
  EXPECT_EQ(g.center(), NamedGroup::singleton(NamedBehavior::Id) |
                            NamedGroup::singleton(NamedBehavior::RevRev));
  EXPECT_TRUE(g.is_subgroup(expected));
  EXPECT_FALSE(g.is_subgroup(NamedGroup::singleton(NamedBehavior::Sw)));
}
