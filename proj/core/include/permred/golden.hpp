#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permred/relations.hpp"

namespace permred {

/// One row of the preservation table: which of the twenty relations a group
/// preserves.
struct PreservationRow {
  std::string label;
  std::array<bool, kRelationCount> bits{};

  bool preserves(RelationId r) const { return bits[index_of(r)]; }
  /// True iff every relation preserved here is preserved by `other`.
  bool subset_of(const PreservationRow& other) const;

  friend bool operator==(const PreservationRow&, const PreservationRow&) = default;
};

/// CSV with a header row of relation names and one row per group:
/// "label,lt1,...,r9" then "a,1,1,1,1,0,...".
std::string to_csv(std::span<const PreservationRow> rows);

/// Reference preservation table for the 37 proper nontrivial groups, kept
/// exactly as transcribed.
class GoldenTable {
 public:
  GoldenTable() = default;
  explicit GoldenTable(std::vector<PreservationRow> rows);

  /// The table compiled into the library from data/golden_table.csv.
  static GoldenTable embedded();
  /// Throws std::invalid_argument on malformed input or duplicate labels.
  static GoldenTable parse_csv(std::string_view text);
  static GoldenTable load(const std::filesystem::path& path);

  const std::vector<PreservationRow>& rows() const { return rows_; }
  const PreservationRow* find(std::string_view label) const;

 private:
  std::vector<PreservationRow> rows_;
};

}  // namespace permred
