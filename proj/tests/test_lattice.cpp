#include <gtest/gtest.h>

#include <set>

#include "permred/golden.hpp"
#include "permred/lattice.hpp"
#include "permred/preservation.hpp"

using namespace permred;

namespace {

LetterSet L(const char* s) { return LetterSet::parse(s); }

const Lattice& lattice() {
  static const Lattice l = enumerate_lattice();
  return l;
}

std::size_t count_containing(Letter x) {
  std::size_t n = 0;
  for (const auto& e : lattice().elements()) n += e.members.contains(x);
  return n;
}

}  // namespace

TEST(LetterSet, ParseAndPrint) {
  EXPECT_EQ(L("fab").str(), "abf");
  EXPECT_EQ(L("bottom"), LetterSet{});
  EXPECT_EQ(L(""), LetterSet{});
  EXPECT_EQ(L("sym"), LetterSet::all());
  EXPECT_EQ(LetterSet{}.str(), "{}");
  EXPECT_EQ(LetterSet::all().size(), 10u);
  EXPECT_THROW(L("ak"), std::invalid_argument);
}

TEST(Closure, Examples) {
  EXPECT_EQ(closure(L("ac")), L("ace"));
  EXPECT_EQ(closure(L("fb")), L("bdf"));
  EXPECT_EQ(closure(L("h")), L("eh"));
  EXPECT_EQ(closure(L("bd")), L("bd"));
  EXPECT_EQ(closure(L("ij")), LetterSet::all());
  EXPECT_EQ(closure(L("if")), LetterSet::all());
  EXPECT_EQ(closure(L("jg")), LetterSet::all());
}

TEST(Closure, AutOfFirstOrderAbsorbsItsSubgroups) {
  // Reversing or turning the second order keeps the first one.
  EXPECT_EQ(closure(L("i")), L("abi"));
  EXPECT_EQ(closure(L("ia")), L("abi"));
  EXPECT_EQ(closure(L("j")), L("cdj"));
  EXPECT_EQ(minimal_label(closure(L("ia"))), "i");
}

TEST(Closure, IsAClosureOperator) {
  for (std::uint16_t m = 0; m < 1024; ++m) {
    const LetterSet s(m);
    const auto c = closure(s);
    EXPECT_TRUE(s.subset_of(c));
    EXPECT_EQ(closure(c), c);
    for (std::uint16_t bit = 1; bit < 1024; bit <<= 1) {
      const LetterSet bigger(static_cast<std::uint16_t>(m | bit));
      EXPECT_TRUE(c.subset_of(closure(bigger)));
    }
  }
}

TEST(Closure, DerivationTraceReplays) {
  const auto& engine = default_engine();
  for (std::uint16_t m = 0; m < 1024; ++m) {
    const auto d = engine.derive(LetterSet(m));
    LetterSet cur(m);
    for (const auto& f : d.trace) {
      const auto& rule = engine.rules()[f.rule];
      ASSERT_TRUE(rule.premise.subset_of(cur));
      EXPECT_FALSE(f.added.empty());
      EXPECT_EQ(f.added, rule.conclusion - cur);
      cur |= f.added;
    }
    EXPECT_EQ(cur, d.closed);
    EXPECT_EQ(d.closed, closure(LetterSet(m)));
  }
}

// Among the letters realized by canonical permutations, closure is exactly
// the subgroup generated in the named-behavior group.
TEST(Closure, MatchesBehaviorSubgroups) {
  const NamedGroup g;
  const std::vector<Letter> behavioral{Letter::A, Letter::C, Letter::E,
                                       Letter::F, Letter::G, Letter::H};
  for (unsigned m = 0; m < 64; ++m) {
    LetterSet s;
    NamedGroup::Subset gens = 0;
    for (std::size_t k = 0; k < behavioral.size(); ++k)
      if (m & (1u << k)) {
        s |= LetterSet{behavioral[k]};
        gens |= NamedGroup::singleton(*behavior_letter(behavioral[k]));
      }
    const auto sub = g.generated(gens);
    LetterSet expected;
    for (auto l : behavioral)
      if (sub & NamedGroup::singleton(*behavior_letter(l))) expected |= LetterSet{l};
    EXPECT_EQ(closure(s), expected) << s.str();
  }
}

// Dual route: a letter belongs to the closure of S iff it preserves every
// relation the group generated by S preserves.
TEST(Closure, MatchesRelationalClosure) {
  std::array<PreservationRow, kLetterCount> letter_rows;
  for (std::size_t k = 0; k < kLetterCount; ++k) {
    const auto l = static_cast<Letter>(k);
    const std::vector<WordTemplate> gens{generator_of(l)};
    letter_rows[k] = group_row(gens, Budget{}, false).row();
  }
  for (std::uint16_t m = 0; m < 1024; ++m) {
    PreservationRow row;
    row.bits.fill(true);
    for (std::size_t k = 0; k < kLetterCount; ++k)
      if (m & (1u << k))
        for (std::size_t r = 0; r < kRelationCount; ++r) row.bits[r] = row.bits[r] && letter_rows[k].bits[r];
    LetterSet relational;
    for (std::size_t k = 0; k < kLetterCount; ++k)
      if (row.subset_of(letter_rows[k])) relational |= LetterSet{static_cast<Letter>(k)};
    EXPECT_EQ(relational, closure(LetterSet(m))) << LetterSet(m).str();
  }
}

TEST(Lattice, HasThirtyNineElements) {
  EXPECT_EQ(lattice().size(), kExpectedLatticeSize);
  EXPECT_EQ(lattice().elements().front().label, "bottom");
  EXPECT_EQ(lattice().elements().back().label, "sym");
}

TEST(Lattice, LabelsMatchTheTable) {
  std::set<std::string> labels;
  for (const auto& e : lattice().elements()) labels.insert(e.label);
  std::set<std::string> expected{"bottom", "sym"};
  const auto golden_table = GoldenTable::embedded();
  for (const auto& r : golden_table.rows()) expected.insert(r.label);
  EXPECT_EQ(labels, expected);
}

TEST(Lattice, MinimalLabels) {
  EXPECT_EQ(minimal_label(L("acefgh")), "af");
  EXPECT_EQ(minimal_label(L("bdeh")), "bh");
  EXPECT_EQ(minimal_label(L("abcde")), "abcd");
  EXPECT_EQ(minimal_label(LetterSet{}), "bottom");
  EXPECT_EQ(minimal_label(LetterSet::all()), "sym");
  for (const auto& e : lattice().elements()) {
    if (e.members.empty() || e.members == LetterSet::all()) continue;
    EXPECT_EQ(closure(L(e.label.c_str())), e.members);
  }
}

TEST(Lattice, AutOfOneOrderLiesInFiveGroups) {
  EXPECT_EQ(count_containing(Letter::I), 5u);
  EXPECT_EQ(count_containing(Letter::J), 5u);
  std::set<std::string> with_i;
  for (const auto& e : lattice().elements())
    if (e.members.contains(Letter::I)) with_i.insert(e.label);
  EXPECT_EQ(with_i, (std::set<std::string>{"i", "ci", "di", "cdi", "sym"}));
}

TEST(Lattice, TwentyFiveJoinsOfOrderGroups) {
  std::set<LetterSet> joins;
  const auto base = L("abcdij");
  for (std::uint16_t m = 0; m < 1024; ++m) {
    const LetterSet s(m);
    if (s.subset_of(base)) joins.insert(closure(s));
  }
  EXPECT_EQ(joins.size(), 25u);
}

TEST(Lattice, JoinAndMeet) {
  const auto& l = lattice();
  EXPECT_EQ(l.join(L("a"), L("j")), L("acdej"));
  EXPECT_EQ(minimal_label(l.join(L("a"), L("j"))), "aj");
  EXPECT_EQ(l.join(L("b"), L("d")), L("bd"));
  EXPECT_EQ(l.meet(L("ace"), L("e")), L("e"));
  for (const auto& x : l.elements())
    for (const auto& y : l.elements()) {
      EXPECT_TRUE(l.find(l.meet(x.members, y.members)).has_value());
      EXPECT_TRUE(l.find(l.join(x.members, y.members)).has_value());
    }
}

TEST(Lattice, SwapTurnGroupHasFourProperSubgroups) {
  const auto top = L("bdf");
  EXPECT_EQ(closure(top), top);
  std::size_t proper = 0;
  for (const auto& e : lattice().elements())
    if (!e.members.empty() && e.members != top && e.members.subset_of(top)) ++proper;
  EXPECT_EQ(proper, 4u);
}

TEST(Hasse, Covers) {
  const auto& l = lattice();
  const auto& el = l.elements();
  // Pinned regression value.
  EXPECT_EQ(l.covers().size(), 86u);
  std::set<std::string> atoms;
  for (auto [lo, hi] : l.covers()) {
    EXPECT_TRUE(el[lo].members.subset_of(el[hi].members));
    EXPECT_NE(el[lo].members, el[hi].members);
    if (lo == 0) atoms.insert(el[hi].label);
  }
  // h closes to {e,h}, which sits above e; i and j absorb a, b and c, d.
  EXPECT_EQ(atoms, (std::set<std::string>{"a", "b", "c", "d", "e", "f", "g"}));
}

TEST(Hasse, DotIsDeterministic) {
  const auto dot = lattice().to_dot();
  EXPECT_EQ(dot, enumerate_lattice().to_dot());
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  std::size_t edges = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++edges;
  EXPECT_EQ(edges, lattice().covers().size());
}

TEST(Lattice, TableOrder) {
  const auto order = lattice().table_order();
  ASSERT_EQ(order.size(), 39u);
  EXPECT_EQ(lattice().elements()[order.front()].label, "bottom");
  EXPECT_EQ(lattice().elements()[order.back()].label, "sym");
  EXPECT_EQ(lattice().elements()[order[1]].label, "a");
}
