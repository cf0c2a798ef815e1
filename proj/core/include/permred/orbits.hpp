#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "permred/behaviors.hpp"
#include "permred/pattern.hpp"

namespace permred {

/// A pattern together with designated constant points.
struct ConstantSet {
  Pattern pattern;
  std::vector<Point> constants;

  /// Throws std::invalid_argument on out-of-range or repeated constants.
  void validate() const;
  bool is_constant(Point p) const;
};

/// The orbit of a non-constant point: `column` constants lie <1-below it and
/// `row` constants lie <2-below it.
struct OrbitCell {
  std::size_t row = 0;
  std::size_t column = 0;

  friend auto operator<=>(const OrbitCell&, const OrbitCell&) = default;
};

std::string to_string(const OrbitCell& c);  // "R1∩C0"

/// Throws std::invalid_argument if p is a constant or out of range.
OrbitCell cell_of(const ConstantSet& cs, Point p);

/// Non-constant points grouped by cell, cells in increasing order.
std::vector<std::pair<OrbitCell, std::vector<Point>>> cells(const ConstantSet& cs);

/// A finite partial injective map from the points of `source` into `image`.
struct SampledMap {
  Pattern source;
  Pattern image;
  std::vector<std::optional<Point>> map;  // indexed by source point

  /// Restriction of a generator word to all points of `p`.
  static SampledMap of_word(const GeneratorWord& w, const Pattern& p);
  bool defined_on(std::span<const Point> xs) const;
};

/// True iff every pair of distinct points of X is sent to a pair of type
/// b(type). Throws std::invalid_argument if f is undefined somewhere on X.
bool behaves_like_on(const SampledMap& f, std::span<const Point> xs, const Behavior& b);

/// Same, for pairs (x, y) and (y, x) with x in X and y in Y. Throws if X and
/// Y overlap or f is undefined on them.
bool behaves_like_between(const SampledMap& f, std::span<const Point> xs,
                          std::span<const Point> ys, const Behavior& b);

/// Two source pairs of equal type whose images have different types.
struct TypeConflict {
  std::pair<Point, Point> first;
  std::pair<Point, Point> second;
  PairType source_type = PairType::T1;
};

/// Verdict for one cell or one pair of cells. Sampled pairs are read in
/// <1-increasing orientation, so only T1 and T2 sources occur; an image is
/// absent when its source type was never sampled.
struct CellReport {
  OrbitCell cell;
  std::optional<OrbitCell> other;  // set for cell pairs
  std::size_t pairs = 0;
  std::optional<PairType> up_image;
  std::optional<PairType> down_image;
  std::optional<TypeConflict> conflict;

  /// The behavior, when conflict-free and both source types were sampled.
  std::optional<Behavior> behavior() const;
};

struct CanonicalReport {
  std::vector<CellReport> on_cells;
  std::vector<CellReport> between_cells;
  /// Set when cells are individually canonical but not all by one behavior.
  bool mixed_on_cell_behaviors = false;

  bool canonical() const;
};

/// Points where f is undefined are skipped; constants are ignored.
CanonicalReport check_canonical(const ConstantSet& cs, const SampledMap& f);

}  // namespace permred
