#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "permred/pattern.hpp"

namespace permred {

/// The twenty relations distinguishing the closed supergroups, in the column
/// order of the preservation table.
enum class RelationId : std::uint8_t {
  Lt1, Btw1, Cyc1, Sep1,
  Lt2, Btw2, Cyc2, Sep2,
  St, Up, Dow,
  R1, R2, R3, R4, R5, R6, R7, R8, R9,
};

inline constexpr std::size_t kRelationCount = 20;

inline constexpr std::array<RelationId, kRelationCount> kAllRelations = {
    RelationId::Lt1, RelationId::Btw1, RelationId::Cyc1, RelationId::Sep1,
    RelationId::Lt2, RelationId::Btw2, RelationId::Cyc2, RelationId::Sep2,
    RelationId::St,  RelationId::Up,   RelationId::Dow,  RelationId::R1,
    RelationId::R2,  RelationId::R3,   RelationId::R4,   RelationId::R5,
    RelationId::R6,  RelationId::R7,   RelationId::R8,   RelationId::R9,
};

constexpr std::size_t index_of(RelationId r) { return static_cast<std::size_t>(r); }

std::size_t arity(RelationId r);

/// Lower-case name used on the command line and in CSV headers ("lt1", "r9").
std::string_view name(RelationId r);
std::optional<RelationId> parse_relation(std::string_view text);

/// Evaluates r on `tuple`. Throws on arity mismatch, out-of-range or repeated
/// entries.
bool eval(RelationId r, const Pattern& p, std::span<const Point> tuple);

/// Same as eval without argument checks.
bool holds(RelationId r, const Pattern& p, std::span<const Point> tuple);

}  // namespace permred
