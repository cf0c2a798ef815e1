#include "permred/relations.hpp"

#include <stdexcept>
#include <string>

namespace permred {
namespace {

constexpr std::array<std::string_view, kRelationCount> kNames = {
    "lt1", "btw1", "cyc1", "sep1", "lt2", "btw2", "cyc2", "sep2", "st", "up",
    "dow", "r1",   "r2",   "r3",   "r4",  "r5",   "r6",   "r7",   "r8", "r9",
};

constexpr std::array<std::size_t, kRelationCount> kArity = {
    2, 3, 3, 4, 2, 3, 3, 4, 2, 2, 2, 3, 3, 3, 4, 3, 3, 3, 3, 4,
};

// Which of the two orders a single-order predicate looks at.
enum class Order { First, Second };

bool lt(const Pattern& p, Order o, Point x, Point y) {
  return o == Order::First ? p.less1(x, y) : p.less2(x, y);
}

bool btw(const Pattern& p, Order o, Point x, Point y, Point z) {
  return (lt(p, o, x, y) && lt(p, o, y, z)) || (lt(p, o, z, y) && lt(p, o, y, x));
}

bool cyc(const Pattern& p, Order o, Point x, Point y, Point z) {
  return (lt(p, o, x, y) && lt(p, o, y, z)) || (lt(p, o, y, z) && lt(p, o, z, x)) ||
         (lt(p, o, z, x) && lt(p, o, x, y));
}

bool sep(const Pattern& p, Order o, Point w, Point x, Point y, Point z) {
  return (cyc(p, o, w, x, y) && cyc(p, o, w, z, x)) ||
         (cyc(p, o, w, y, x) && cyc(p, o, w, x, z));
}

bool up(const Pattern& p, Point x, Point y) { return p.less1(x, y) && p.less2(x, y); }
bool dow(const Pattern& p, Point x, Point y) { return p.less1(x, y) && p.less2(y, x); }

bool r1(const Pattern& p, Point x, Point y, Point z) {
  return (up(p, x, y) && dow(p, y, z) && up(p, x, z)) ||
         (dow(p, x, y) && up(p, z, y) && dow(p, x, z)) ||
         (up(p, y, x) && dow(p, z, y) && up(p, z, x)) ||
         (dow(p, y, x) && up(p, y, z) && dow(p, z, x));
}

// Chain x <o y <o z together with a cyclic condition on the other order.
bool chained_cyc(const Pattern& p, Order chain, Order cyclic, Point x, Point y, Point z) {
  return (lt(p, chain, x, y) && lt(p, chain, y, z) && cyc(p, cyclic, x, y, z)) ||
         (lt(p, chain, z, y) && lt(p, chain, y, x) && cyc(p, cyclic, z, y, x));
}

bool r7(const Pattern& p, Point x, Point y, Point z) {
  return (cyc(p, Order::First, x, y, z) && cyc(p, Order::Second, x, y, z)) ||
         (cyc(p, Order::First, z, y, x) && cyc(p, Order::Second, z, y, x));
}

bool r9(const Pattern& p, Point x, Point y, Point w, Point z) {
  const bool a1 = cyc(p, Order::First, x, y, w);
  const bool a2 = cyc(p, Order::Second, x, y, w);
  const bool b1 = cyc(p, Order::First, y, w, z);
  const bool b2 = cyc(p, Order::Second, y, w, z);
  return (a1 && a2 && b1 && !b2) || (!a1 && a2 && b1 && b2) || (!a1 && !a2 && !b1 && b2) ||
         (a1 && !a2 && !b1 && !b2);
}

}  // namespace

std::size_t arity(RelationId r) { return kArity[index_of(r)]; }

std::string_view name(RelationId r) { return kNames[index_of(r)]; }

std::optional<RelationId> parse_relation(std::string_view text) {
  for (std::size_t i = 0; i < kRelationCount; ++i)
    if (kNames[i] == text) return kAllRelations[i];
  return std::nullopt;
}

bool holds(RelationId r, const Pattern& p, std::span<const Point> t) {
  using enum RelationId;
  constexpr Order k1 = Order::First;
  constexpr Order k2 = Order::Second;
  switch (r) {
    case Lt1: return p.less1(t[0], t[1]);
    case Btw1: return btw(p, k1, t[0], t[1], t[2]);
    case Cyc1: return cyc(p, k1, t[0], t[1], t[2]);
    case Sep1: return sep(p, k1, t[0], t[1], t[2], t[3]);
    case Lt2: return p.less2(t[0], t[1]);
    case Btw2: return btw(p, k2, t[0], t[1], t[2]);
    case Cyc2: return cyc(p, k2, t[0], t[1], t[2]);
    case Sep2: return sep(p, k2, t[0], t[1], t[2], t[3]);
    case St: return up(p, t[0], t[1]) || up(p, t[1], t[0]);
    case Up: return up(p, t[0], t[1]);
    case Dow: return dow(p, t[0], t[1]);
    case R1: return r1(p, t[0], t[1], t[2]);
    case R2: return btw(p, k1, t[0], t[1], t[2]) || btw(p, k2, t[0], t[1], t[2]);
    case R3: return cyc(p, k1, t[0], t[1], t[2]) || cyc(p, k2, t[0], t[1], t[2]);
    // Four-ary: the disjuncts are the four-ary separation relations.
    case R4: return sep(p, k1, t[0], t[1], t[2], t[3]) || sep(p, k2, t[0], t[1], t[2], t[3]);
    case R5: return chained_cyc(p, k2, k1, t[0], t[1], t[2]);
    case R6: return chained_cyc(p, k1, k2, t[0], t[1], t[2]);
    case R7: return r7(p, t[0], t[1], t[2]);
    case R8: return cyc(p, k1, t[0], t[1], t[2]) && !cyc(p, k2, t[0], t[1], t[2]);
    case R9: return r9(p, t[0], t[1], t[2], t[3]);
  }
  return false;
}

bool eval(RelationId r, const Pattern& p, std::span<const Point> tuple) {
  if (tuple.size() != arity(r))
    throw std::invalid_argument(std::string(name(r)) + " expects " + std::to_string(arity(r)) +
                                " arguments, got " + std::to_string(tuple.size()));
  check_tuple(p, tuple);
  return holds(r, p, tuple);
}

}  // namespace permred
