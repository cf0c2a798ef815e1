#include "permred/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace permred {
namespace {

constexpr std::array<std::string_view, kLetterCount> kGroupNames = {
    "<id/rev>", "<id/t>",        "<rev/id>",      "<t/id>",    "<rev/rev>",
    "<sw>",     "<sw∘rev/rev>", "<sw∘id/rev>", "Aut(D;<1)", "Aut(D;<2)",
};

constexpr std::array<Letter, kLetterCount> kLetters = {
    Letter::A, Letter::B, Letter::C, Letter::D, Letter::E,
    Letter::F, Letter::G, Letter::H, Letter::I, Letter::J,
};

NamedGroup::Subset behavior_subgroup(const NamedGroup& group, LetterSet s) {
  NamedGroup::Subset gens = 0;
  for (auto l : s.letters())
    if (auto b = behavior_letter(l)) gens |= NamedGroup::singleton(*b);
  return group.generated(gens);
}

LetterSet behavior_letters() {
  return {Letter::A, Letter::C, Letter::E, Letter::F, Letter::G, Letter::H};
}

}  // namespace

std::string_view group_name(Letter l) { return kGroupNames[static_cast<std::size_t>(l)]; }

WordTemplate generator_of(Letter l) {
  using enum GeneratorKind;
  switch (l) {
    case Letter::A: return {IdRev};
    case Letter::B: return {TurnSecond};
    case Letter::C: return {RevId};
    case Letter::D: return {TurnFirst};
    case Letter::E: return {RevRev};
    case Letter::F: return {Sw};
    case Letter::G: return {RevRev, Sw};
    case Letter::H: return {IdRev, Sw};
    case Letter::I: return {SwapSecond};
    case Letter::J: return {SwapFirst};
  }
  return {};
}

std::optional<NamedBehavior> behavior_letter(Letter l) {
  switch (l) {
    case Letter::A: return NamedBehavior::IdRev;
    case Letter::C: return NamedBehavior::RevId;
    case Letter::E: return NamedBehavior::RevRev;
    case Letter::F: return NamedBehavior::Sw;
    case Letter::G: return NamedBehavior::SwRevRev;
    case Letter::H: return NamedBehavior::SwIdRev;
    default: return std::nullopt;
  }
}

LetterSet LetterSet::parse(std::string_view text) {
  if (text.empty() || text == "bottom" || text == "{}") return {};
  if (text == "sym") return all();
  LetterSet out;
  for (char ch : text) {
    if (ch < 'a' || ch > 'j')
      throw std::invalid_argument("unknown letter '" + std::string(1, ch) + "' (expected a..j)");
    out |= LetterSet{static_cast<Letter>(ch - 'a')};
  }
  return out;
}

std::size_t LetterSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<Letter> LetterSet::letters() const {
  std::vector<Letter> out;
  for (auto l : kLetters)
    if (contains(l)) out.push_back(l);
  return out;
}

std::string LetterSet::str() const {
  if (empty()) return "{}";
  std::string out;
  for (auto l : letters()) out += letter_char(l);
  return out;
}

LetterSet RuleEngine::closure(LetterSet s) const { return derive(s).closed; }

Derivation RuleEngine::derive(LetterSet s) const {
  Derivation d{s, {}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < rules_.size(); ++k) {
      const auto& rule = rules_[k];
      if (!rule.premise.subset_of(d.closed)) continue;
      const auto added = rule.conclusion - d.closed;
      if (added.empty()) continue;
      d.closed |= added;
      d.trace.push_back({k, added});
      changed = true;
    }
  }
  return d;
}

std::vector<ClosureRule> default_rules() {
  using enum Letter;
  std::vector<ClosureRule> rules;
  const LetterSet all = LetterSet::all();

  // Aut(D;<1) contains every map preserving <1, among them id/rev and id/t.
  rules.push_back({{I}, {A, B}, "id/rev and id/t preserve <1, so <id/rev>,<id/t> ⊆ Aut(D;<1)"});
  rules.push_back({{J}, {C, D}, "rev/id and t/id preserve <2, so <rev/id>,<t/id> ⊆ Aut(D;<2)"});
  for (auto x : {F, G, H, J})
    rules.push_back({{I, x}, all,
                     std::string("Aut(D;<1) with ") + letter_char(x) +
                         ": no closed proper supergroup of Aut(D;<1) contains it, so Sym(D)"});
  for (auto x : {F, G, H})
    rules.push_back({{J, x}, all,
                     std::string("Aut(D;<2) with ") + letter_char(x) +
                         ": no closed proper supergroup of Aut(D;<2) contains it, so Sym(D)"});

  // A swap-type generator conjugates one turn into the other.
  for (auto x : {F, G, H})
    for (auto t : {B, D})
      rules.push_back({{x, t}, {B, D},
                       std::string(1, letter_char(x)) + " with a turn contains both turns"});

  rules.push_back({{H}, {E}, "sw∘id/rev squared is rev/rev"});

  // Subgroup membership in the named-behavior group, from all generating
  // sets of at most two letters (every subgroup of that group is 2-generated).
  const NamedGroup group;
  const auto candidates = behavior_letters().letters();
  for (std::size_t x = 0; x < candidates.size(); ++x) {
    for (std::size_t y = x; y < candidates.size(); ++y) {
      const LetterSet premise{candidates[x], candidates[y]};
      const auto sub = behavior_subgroup(group, premise);
      LetterSet forced;
      for (auto l : candidates) {
        const auto own = group.generated(NamedGroup::singleton(*behavior_letter(l)));
        if ((own & ~sub) == 0) forced |= LetterSet{l};
      }
      forced = forced - premise;
      if (forced.empty()) continue;
      rules.push_back({premise, forced,
                       "behavior subgroup generated by " + premise.str() + " = " + to_string(sub)});
    }
  }
  return rules;
}

const RuleEngine& default_engine() {
  static const RuleEngine engine(default_rules());
  return engine;
}

LetterSet closure(LetterSet s) { return default_engine().closure(s); }

std::string minimal_label(LetterSet closed) {
  if (closed.empty()) return "bottom";
  if (closed == LetterSet::all()) return "sym";
  const auto letters = closed.letters();
  const std::size_t n = letters.size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::optional<std::string> best;
    for_each_combination(n, k, [&](std::span<const Point> pick) {
      LetterSet s;
      for (auto i : pick) s |= LetterSet{letters[i]};
      if (closure(s) != closed) return;
      auto label = s.str();
      if (!best || label < *best) best = std::move(label);
    });
    if (best) return *best;
  }
  throw std::invalid_argument("minimal_label: " + closed.str() + " is not closed");
}

std::optional<std::size_t> Lattice::find(LetterSet members) const {
  for (std::size_t k = 0; k < elements_.size(); ++k)
    if (elements_[k].members == members) return k;
  return std::nullopt;
}

std::optional<std::size_t> Lattice::find_label(std::string_view label) const {
  for (std::size_t k = 0; k < elements_.size(); ++k)
    if (elements_[k].label == label) return k;
  return std::nullopt;
}

LetterSet Lattice::join(LetterSet x, LetterSet y) const { return closure(x | y); }

// Intersections of closed sets are closed because the rules are Horn clauses.
LetterSet Lattice::meet(LetterSet x, LetterSet y) const { return x & y; }

std::vector<std::size_t> Lattice::table_order() const {
  std::vector<std::size_t> order(elements_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto key = [&](std::size_t k) {
    const auto& lab = elements_[k].label;
    const int tier = lab == "bottom" ? 0 : (lab == "sym" ? 2 : 1);
    return std::make_tuple(tier, lab.size(), lab);
  };
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return key(a) < key(b); });
  return order;
}

std::string Lattice::to_dot() const {
  std::ostringstream os;
  os << "digraph closed_supergroups {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t k = 0; k < elements_.size(); ++k)
    os << "  n" << k << " [label=\"" << elements_[k].label << "\"];\n";
  for (const auto& [lo, hi] : covers_) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

Lattice enumerate_lattice() {
  std::set<LetterSet> seen;
  for (std::uint16_t bits = 0; bits < (1u << kLetterCount); ++bits)
    seen.insert(closure(LetterSet(bits)));

  Lattice lat;
  for (auto s : seen) lat.elements_.push_back({s, minimal_label(s)});
  std::sort(lat.elements_.begin(), lat.elements_.end(),
            [](const ClosedSet& a, const ClosedSet& b) { return a.members.bits() < b.members.bits(); });

  if (lat.elements_.size() != kExpectedLatticeSize) {
    std::string msg = "enumerate_lattice: expected " + std::to_string(kExpectedLatticeSize) +
                      " closed sets, found " + std::to_string(lat.elements_.size()) + ":";
    for (const auto& e : lat.elements_) msg += ' ' + e.members.str();
    throw std::runtime_error(msg);
  }

  const auto& els = lat.elements_;
  const auto strictly_below = [](LetterSet a, LetterSet b) { return a != b && a.subset_of(b); };
  for (std::size_t lo = 0; lo < els.size(); ++lo) {
    for (std::size_t hi = 0; hi < els.size(); ++hi) {
      if (!strictly_below(els[lo].members, els[hi].members)) continue;
      bool covered = true;
      for (std::size_t mid = 0; mid < els.size() && covered; ++mid)
        covered = !(strictly_below(els[lo].members, els[mid].members) &&
                    strictly_below(els[mid].members, els[hi].members));
      if (covered) lat.covers_.emplace_back(lo, hi);
    }
  }
  return lat;
}

}  // namespace permred
