#include "permred/behaviors.hpp"

#include <stdexcept>

namespace permred {
namespace {

constexpr std::array<std::string_view, 8> kNamedNames = {
    "id", "id/rev", "rev/id", "rev/rev", "sw", "sw∘rev/rev", "sw∘id/rev", "sw∘rev/id",
};

// Words realizing the named behaviors; sw∘f applies f first.
GeneratorWord word_of(NamedBehavior b) {
  using enum GeneratorKind;
  switch (b) {
    case NamedBehavior::Id: return {};
    case NamedBehavior::IdRev: return {{IdRev, 0}};
    case NamedBehavior::RevId: return {{RevId, 0}};
    case NamedBehavior::RevRev: return {{RevRev, 0}};
    case NamedBehavior::Sw: return {{Sw, 0}};
    case NamedBehavior::SwRevRev: return {{RevRev, 0}, {Sw, 0}};
    case NamedBehavior::SwIdRev: return {{IdRev, 0}, {Sw, 0}};
    case NamedBehavior::SwRevId: return {{RevId, 0}, {Sw, 0}};
  }
  return {};
}

std::size_t idx(NamedBehavior b) { return static_cast<std::size_t>(b); }

}  // namespace

std::string_view name(NamedBehavior b) { return kNamedNames[idx(b)]; }

std::string to_string(const Behavior& b) {
  return std::string(to_string(b.on_up)) + "," + std::string(to_string(b.on_down));
}

std::string to_string(const BehaviorClass& c) {
  if (const auto* n = std::get_if<NamedBehavior>(&c)) return "named: " + std::string(name(*n));
  const auto& d = std::get<DiagonalBehavior>(c);
  return "diagonal: order " + std::to_string(d.order) + (d.preserve ? ", preserve" : ", reverse");
}

Behavior parse_behavior(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos)
    throw std::invalid_argument("behavior must look like 't1,t2'");
  return {parse_pair_type(text.substr(0, comma)), parse_pair_type(text.substr(comma + 1))};
}

std::array<Behavior, 16> all_behaviors() {
  std::array<Behavior, 16> out{};
  std::size_t k = 0;
  for (auto a : kAllPairTypes)
    for (auto b : kAllPairTypes) out[k++] = {a, b};
  return out;
}

Behavior behavior_of_word(const GeneratorWord& w) {
  for (const auto& g : w)
    if (takes_parameter(g.kind))
      throw std::invalid_argument("behavior_of_word: '" + to_string(g) +
                                  "' is not canonical on pairs; only rev1, rev2, revrev and sw "
                                  "have a behavior");
  const auto read = [&](const Pattern& p) {
    const auto m = apply_word(w, p);
    return pair_type_unchecked(m.image, m.correspondence[0], m.correspondence[1]);
  };
  return {read(Pattern({0, 1})), read(Pattern({1, 0}))};
}

Behavior behavior_of(NamedBehavior b) { return behavior_of_word(word_of(b)); }

BehaviorClass classify(const Behavior& b) {
  using enum PairType;
  const auto u = b.on_up;
  const auto d = b.on_down;
  if (u == d) return DiagonalBehavior{1, u == T1 || u == T2};
  if ((u == T1 && d == T3) || (u == T4 && d == T2)) return DiagonalBehavior{2, true};
  if ((u == T3 && d == T1) || (u == T2 && d == T4)) return DiagonalBehavior{2, false};
  for (auto n : kAllNamedBehaviors)
    if (behavior_of(n) == b) return n;
  throw std::logic_error("classify: unreachable behavior " + to_string(b));
}

bool is_named(const Behavior& b) { return std::holds_alternative<NamedBehavior>(classify(b)); }

Behavior compose(const Behavior& first, const Behavior& second) {
  if (!is_named(first) || !is_named(second))
    throw std::invalid_argument("compose: behaviors with diagonal image are not composable");
  return {second.apply(first.on_up), second.apply(first.on_down)};
}

NamedGroup::NamedGroup() {
  for (auto a : kAllNamedBehaviors) {
    for (auto b : kAllNamedBehaviors) {
      const auto c = std::get<NamedBehavior>(classify(compose(behavior_of(a), behavior_of(b))));
      table_[idx(a)][idx(b)] = c;
    }
  }
}

NamedBehavior NamedGroup::product(NamedBehavior a, NamedBehavior b) const {
  return table_[idx(a)][idx(b)];
}

NamedBehavior NamedGroup::inverse(NamedBehavior a) const {
  for (auto b : kAllNamedBehaviors)
    if (product(a, b) == NamedBehavior::Id) return b;
  throw std::logic_error("NamedGroup: element without inverse");
}

std::size_t NamedGroup::element_order(NamedBehavior a) const {
  std::size_t k = 1;
  for (auto x = a; x != NamedBehavior::Id; x = product(x, a)) ++k;
  return k;
}

NamedGroup::Subset NamedGroup::generated(Subset gens) const {
  Subset s = gens | singleton(NamedBehavior::Id);
  while (true) {
    Subset next = s;
    for (auto a : kAllNamedBehaviors)
      for (auto b : kAllNamedBehaviors)
        if ((s & singleton(a)) && (s & singleton(b))) next |= singleton(product(a, b));
    if (next == s) return s;
    s = next;
  }
}

bool NamedGroup::is_subgroup(Subset s) const {
  return (s & singleton(NamedBehavior::Id)) && generated(s) == s;
}

std::vector<NamedGroup::Subset> NamedGroup::subgroups() const {
  std::vector<Subset> out;
  for (unsigned s = 0; s < 256; ++s)
    if (is_subgroup(static_cast<Subset>(s))) out.push_back(static_cast<Subset>(s));
  return out;
}

NamedGroup::Subset NamedGroup::center() const {
  Subset c = 0;
  for (auto a : kAllNamedBehaviors) {
    bool central = true;
    for (auto b : kAllNamedBehaviors) central = central && product(a, b) == product(b, a);
    if (central) c |= singleton(a);
  }
  return c;
}

std::string to_string(NamedGroup::Subset s) {
  std::string out = "{";
  bool first = true;
  for (auto a : kAllNamedBehaviors) {
    if (!(s & NamedGroup::singleton(a))) continue;
    if (!first) out += ", ";
    out += name(a);
    first = false;
  }
  return out + "}";
}

}  // namespace permred
