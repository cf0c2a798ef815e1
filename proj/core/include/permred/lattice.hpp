#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permred/behaviors.hpp"
#include "permred/generators.hpp"

namespace permred {

/// The ten join-irreducible closed supergroups.
///   a <id/rev>   b <id/t>   c <rev/id>   d <t/id>   e <rev/rev>
///   f <sw>       g <sw∘rev/rev>          h <sw∘id/rev>
///   i Aut(D;<1)  j Aut(D;<2)
enum class Letter : std::uint8_t { A, B, C, D, E, F, G, H, I, J };

inline constexpr std::size_t kLetterCount = 10;

constexpr char letter_char(Letter l) { return static_cast<char>('a' + static_cast<int>(l)); }

/// Human-readable group for a letter, e.g. "<id/t>" or "Aut(D;<1)".
std::string_view group_name(Letter l);

/// Generator template of the group of a letter. The templates of i and j are
/// the adjacent transpositions of the other order.
WordTemplate generator_of(Letter l);

/// Named behavior generating the behavior subgroup of a letter, for the six
/// letters realized by canonical permutations (a, c, e, f, g, h).
std::optional<NamedBehavior> behavior_letter(Letter l);

/// A subset of the ten letters.
class LetterSet {
 public:
  constexpr LetterSet() = default;
  constexpr explicit LetterSet(std::uint16_t bits) : bits_(bits & kMask) {}
  constexpr LetterSet(std::initializer_list<Letter> ls) {
    for (auto l : ls) bits_ |= bit(l);
  }

  /// Parses a string of letters such as "abf"; "bottom"/"" is empty and
  /// "sym" is the full set.
  static LetterSet parse(std::string_view text);
  static constexpr LetterSet all() { return LetterSet(kMask); }

  constexpr std::uint16_t bits() const { return bits_; }
  constexpr bool contains(Letter l) const { return (bits_ & bit(l)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  constexpr bool subset_of(LetterSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(LetterSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr LetterSet operator|(LetterSet o) const { return LetterSet(bits_ | o.bits_); }
  constexpr LetterSet operator&(LetterSet o) const { return LetterSet(bits_ & o.bits_); }
  constexpr LetterSet operator-(LetterSet o) const {
    return LetterSet(static_cast<std::uint16_t>(bits_ & ~o.bits_));
  }
  LetterSet& operator|=(LetterSet o) { bits_ |= o.bits_; return *this; }

  std::vector<Letter> letters() const;
  /// Letters in alphabetical order, e.g. "ace"; "{}" for the empty set.
  std::string str() const;

  friend constexpr auto operator<=>(LetterSet, LetterSet) = default;

 private:
  static constexpr std::uint16_t kMask = (1u << kLetterCount) - 1;
  static constexpr std::uint16_t bit(Letter l) {
    return static_cast<std::uint16_t>(1u << static_cast<unsigned>(l));
  }
  std::uint16_t bits_ = 0;
};

/// Horn rule: whenever `premise` is contained in a set, add `conclusion`.
struct ClosureRule {
  LetterSet premise;
  LetterSet conclusion;
  std::string provenance;
};

struct RuleFiring {
  std::size_t rule = 0;
  LetterSet added;
};

struct Derivation {
  LetterSet closed;
  std::vector<RuleFiring> trace;
};

/// Least-fixpoint closure under a fixed list of Horn rules.
class RuleEngine {
 public:
  explicit RuleEngine(std::vector<ClosureRule> rules) : rules_(std::move(rules)) {}

  const std::vector<ClosureRule>& rules() const { return rules_; }
  LetterSet closure(LetterSet s) const;
  Derivation derive(LetterSet s) const;

 private:
  std::vector<ClosureRule> rules_;
};

/// The rules for the lattice of closed supergroups. Rules among a, c, e, f,
/// g, h are generated from the named-behavior group; the remaining ones are
/// hand-written.
std::vector<ClosureRule> default_rules();
const RuleEngine& default_engine();

LetterSet closure(LetterSet s);

/// Minimum-cardinality generating subset, lexicographically least; "bottom"
/// for the empty set and "sym" for the full set.
std::string minimal_label(LetterSet closed);

struct ClosedSet {
  LetterSet members;
  std::string label;
};

class Lattice {
 public:
  /// Elements ordered by member bitmask.
  const std::vector<ClosedSet>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  std::optional<std::size_t> find(LetterSet members) const;
  std::optional<std::size_t> find_label(std::string_view label) const;

  LetterSet join(LetterSet x, LetterSet y) const;
  LetterSet meet(LetterSet x, LetterSet y) const;

  /// Covering pairs (lower, upper) as element indices, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

  /// Elements in table order: bottom, then by label length and label, top last.
  std::vector<std::size_t> table_order() const;

  std::string to_dot() const;

 private:
  friend Lattice enumerate_lattice();
  std::vector<ClosedSet> elements_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

inline constexpr std::size_t kExpectedLatticeSize = 39;

/// Closures of all 1024 letter sets, deduplicated. Throws std::runtime_error
/// naming the offending sets if the count differs from 39.
Lattice enumerate_lattice();

}  // namespace permred
