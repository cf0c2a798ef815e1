#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permred/generators.hpp"
#include "permred/golden.hpp"
#include "permred/lattice.hpp"
#include "permred/pattern.hpp"
#include "permred/relations.hpp"

namespace permred {

struct Budget {
  std::size_t max_size = 5;      // patterns checked for positive cells
  std::size_t witness_size = 6;  // largest witness pattern
  std::size_t max_word = 3;      // longest witness word
};

/// Certificate that a word of generators breaks a relation.
struct Witness {
  RelationId relation = RelationId::Lt1;
  Pattern pattern;
  PointTuple tuple;
  GeneratorWord word;
  Pattern image;
  PointTuple image_tuple;
};

/// Re-evaluates the witness from scratch.
bool verify(const Witness& w);

std::string to_string(const Witness& w);

/// True iff every instance of `t` (every parameter choice) maps every tuple
/// of every pattern of size <= max_size satisfying r onto a tuple satisfying r.
bool generator_preserves(const WordTemplate& t, RelationId r, std::size_t max_size);
bool generator_preserves(GeneratorKind k, RelationId r, std::size_t max_size);

/// Appends the inverse of every template not already present.
std::vector<WordTemplate> inverse_closed(std::span<const WordTemplate> gens);

/// Shortest violating word over `alphabet`; ties broken by pattern size,
/// pattern, position of the templates in `alphabet`, parameters, tuple.
std::optional<Witness> find_witness(std::span<const WordTemplate> alphabet, RelationId r,
                                    const Budget& budget = {});

/// Memoizes generator_preserves for one size bound.
class PreservationCache {
 public:
  explicit PreservationCache(std::size_t max_size) : max_size_(max_size) {}
  bool preserves(const WordTemplate& t, RelationId r);
  std::size_t max_size() const { return max_size_; }

 private:
  std::size_t max_size_;
  std::map<std::pair<WordTemplate, RelationId>, bool> memo_;
};

enum class CellStatus { Preserved, Violated, UnconfirmedNegative };

std::string_view to_string(CellStatus s);

struct Cell {
  CellStatus status = CellStatus::Preserved;
  std::optional<Witness> witness;
};

struct GroupRow {
  std::string label;
  std::array<Cell, kRelationCount> cells{};

  PreservationRow row() const;
  std::size_t unconfirmed() const;
};

/// Row of the group generated by `gens` (inverses are added internally).
/// With `with_witnesses` false, negative cells are reported as Violated
/// without searching for a certificate.
GroupRow group_row(std::span<const WordTemplate> gens, const Budget& budget = {},
                   bool with_witnesses = true, PreservationCache* cache = nullptr);

/// Generator templates of the letters in `members`.
std::vector<WordTemplate> generators_of(LetterSet members);

struct PreservationTable {
  std::vector<GroupRow> rows;  // lattice table order

  std::vector<PreservationRow> bit_rows() const;
  std::size_t unconfirmed() const;
  const GroupRow* find(std::string_view label) const;
};

PreservationTable full_table(const Lattice& lattice, const Budget& budget = {},
                             bool with_witnesses = true);
PreservationTable full_table(const Budget& budget = {}, bool with_witnesses = true);

struct CellDiff {
  std::string label;
  RelationId relation = RelationId::Lt1;
  std::optional<bool> golden;    // absent: label missing from the golden table
  std::optional<bool> computed;  // absent: label missing from the computed rows
};

/// Cells where the computed rows disagree with the golden table. Rows whose
/// label is not in the golden table (bottom, sym) are ignored; golden rows
/// without a computed counterpart are reported cell by cell.
std::vector<CellDiff> diff_golden(std::span<const PreservationRow> computed,
                                  const GoldenTable& golden);

struct MonotonicityViolation {
  std::string smaller;
  std::string larger;
  RelationId relation = RelationId::Lt1;
};

/// Pairs of lattice elements X ⊂ Y whose rows claim Y preserves a relation
/// that X does not. Rows are matched to elements by label.
std::vector<MonotonicityViolation> monotonicity_violations(std::span<const PreservationRow> rows,
                                                           const Lattice& lattice);

/// Labels of rows that occur more than once with identical bits.
std::vector<std::pair<std::string, std::string>> duplicate_rows(
    std::span<const PreservationRow> rows);

}  // namespace permred
