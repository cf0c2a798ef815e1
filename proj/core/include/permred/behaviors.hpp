#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "permred/generators.hpp"
#include "permred/pattern.hpp"

namespace permred {

/// The action of a canonical map on pair types. Images of T3 and T4 follow
/// from the images of T1 and T2 by argument reversal.
struct Behavior {
  PairType on_up = PairType::T1;    // image of T1
  PairType on_down = PairType::T2;  // image of T2

  PairType apply(PairType t) const {
    switch (t) {
      case PairType::T1: return on_up;
      case PairType::T2: return on_down;
      case PairType::T3: return reversed(on_up);
      case PairType::T4: return reversed(on_down);
    }
    return t;
  }

  friend auto operator<=>(const Behavior&, const Behavior&) = default;
};

/// The eight behaviors realized by permutations (no diagonal image).
enum class NamedBehavior : std::uint8_t {
  Id,
  IdRev,
  RevId,
  RevRev,
  Sw,
  SwRevRev,
  SwIdRev,
  SwRevId,
};

inline constexpr std::array<NamedBehavior, 8> kAllNamedBehaviors = {
    NamedBehavior::Id,     NamedBehavior::IdRev,    NamedBehavior::RevId,
    NamedBehavior::RevRev, NamedBehavior::Sw,       NamedBehavior::SwRevRev,
    NamedBehavior::SwIdRev, NamedBehavior::SwRevId,
};

/// A behavior with diagonal image; `order` is the order it keeps (1 or 2)
/// and `preserve` whether it keeps it in the same sense or reversed.
struct DiagonalBehavior {
  int order = 1;
  bool preserve = true;

  friend auto operator<=>(const DiagonalBehavior&, const DiagonalBehavior&) = default;
};

using BehaviorClass = std::variant<NamedBehavior, DiagonalBehavior>;

std::string_view name(NamedBehavior b);
std::string to_string(const Behavior& b);        // "t4,t3"
std::string to_string(const BehaviorClass& c);   // "named: id", "diagonal: order 1, preserve"
Behavior parse_behavior(std::string_view text);  // "t4,t3"

/// All 16 behaviors, ordered by (on_up, on_down).
std::array<Behavior, 16> all_behaviors();

Behavior behavior_of(NamedBehavior b);
BehaviorClass classify(const Behavior& b);
bool is_named(const Behavior& b);

/// Behavior read off a word by applying it to "12" and "21". Throws
/// std::invalid_argument for words containing turns or swaps, which do not
/// act canonically on pairs.
Behavior behavior_of_word(const GeneratorWord& w);

/// The behavior of `second` after `first`. Throws std::invalid_argument if
/// either argument has diagonal image.
Behavior compose(const Behavior& first, const Behavior& second);

/// The group formed by the eight named behaviors under composition.
class NamedGroup {
 public:
  NamedGroup();

  static constexpr std::size_t kOrder = 8;

  /// product(a, b) = b after a.
  NamedBehavior product(NamedBehavior a, NamedBehavior b) const;
  NamedBehavior inverse(NamedBehavior a) const;
  std::size_t element_order(NamedBehavior a) const;

  /// Elements encoded as bitmasks over kAllNamedBehaviors indices.
  using Subset = std::uint8_t;
  static Subset singleton(NamedBehavior a) {
    return static_cast<Subset>(1u << static_cast<unsigned>(a));
  }

  Subset generated(Subset gens) const;
  bool is_subgroup(Subset s) const;
  std::vector<Subset> subgroups() const;
  Subset center() const;

 private:
  std::array<std::array<NamedBehavior, 8>, 8> table_{};
};

std::string to_string(NamedGroup::Subset s);

}  // namespace permred
