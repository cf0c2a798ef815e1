#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permred {

/// A point of a pattern, identified by its 0-based rank in the first order.
using Point = std::size_t;

/// Ordered sequence of pairwise distinct points.
using PointTuple = std::vector<Point>;

/// The four isomorphism types of an ordered pair (x, y) of distinct points.
///   T1: up(x,y)   T2: dow(x,y)   T3: up(y,x)   T4: dow(y,x)
enum class PairType : std::uint8_t { T1, T2, T3, T4 };

inline constexpr std::array<PairType, 4> kAllPairTypes = {PairType::T1, PairType::T2,
                                                          PairType::T3, PairType::T4};

/// Type of (y, x) given the type of (x, y).
constexpr PairType reversed(PairType t) {
  switch (t) {
    case PairType::T1: return PairType::T3;
    case PairType::T2: return PairType::T4;
    case PairType::T3: return PairType::T1;
    case PairType::T4: return PairType::T2;
  }
  return t;
}

std::string_view to_string(PairType t);
PairType parse_pair_type(std::string_view text);

/// A finite set carrying two linear orders, stored as the permutation that
/// sends first-order ranks to second-order ranks.
class Pattern {
 public:
  Pattern() = default;

  /// `ranks[i]` is the 0-based second-order rank of the point whose
  /// first-order rank is i. Throws std::invalid_argument unless `ranks` is a
  /// permutation of 0..n-1.
  explicit Pattern(std::vector<int> ranks);

  /// Parses the one-line notation: "231" (1-based digits) or "2,3,1".
  /// The empty string denotes the empty pattern.
  static Pattern parse(std::string_view text);

  std::size_t size() const { return ranks_.size(); }
  bool empty() const { return ranks_.empty(); }

  int rank2(Point p) const { return ranks_[p]; }
  std::span<const int> ranks() const { return ranks_; }

  bool less1(Point a, Point b) const { return a < b; }
  bool less2(Point a, Point b) const { return ranks_[a] < ranks_[b]; }

  /// Point with the given second-order rank.
  Point at_rank2(int r) const;

  /// The pattern with both orders exchanged (inverse permutation).
  Pattern inverse() const;

  /// One-line notation; digits for n <= 9, comma separated beyond.
  std::string str() const;

  friend auto operator<=>(const Pattern&, const Pattern&) = default;
  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<int> ranks_;
};

/// Builds the pattern of a finite independent point set in the plane
/// (first coordinate = first order, second coordinate = second order).
/// Throws std::invalid_argument if two points share a coordinate.
template <std::totally_ordered Coord>
Pattern from_points(std::span<const std::pair<Coord, Coord>> coords) {
  const std::size_t n = coords.size();
  std::vector<std::size_t> by1(n), by2(n);
  std::iota(by1.begin(), by1.end(), std::size_t{0});
  std::iota(by2.begin(), by2.end(), std::size_t{0});
  std::sort(by1.begin(), by1.end(),
            [&](std::size_t a, std::size_t b) { return coords[a].first < coords[b].first; });
  std::sort(by2.begin(), by2.end(),
            [&](std::size_t a, std::size_t b) { return coords[a].second < coords[b].second; });
  for (std::size_t k = 1; k < n; ++k) {
    if (!(coords[by1[k - 1]].first < coords[by1[k]].first))
      throw std::invalid_argument("from_points: repeated first coordinate");
    if (!(coords[by2[k - 1]].second < coords[by2[k]].second))
      throw std::invalid_argument("from_points: repeated second coordinate");
  }
  std::vector<int> rank2_of(n);
  for (std::size_t k = 0; k < n; ++k) rank2_of[by2[k]] = static_cast<int>(k);
  std::vector<int> ranks(n);
  for (std::size_t k = 0; k < n; ++k) ranks[k] = rank2_of[by1[k]];
  return Pattern(std::move(ranks));
}

template <std::totally_ordered Coord>
Pattern from_points(const std::vector<std::pair<Coord, Coord>>& coords) {
  return from_points(std::span<const std::pair<Coord, Coord>>(coords));
}

/// Throws unless every entry of `tuple` is a point of `p` and no entry repeats.
void check_tuple(const Pattern& p, std::span<const Point> tuple);

/// Type of the pair (i, j); throws if i == j or either is out of range.
PairType pair_type(const Pattern& p, Point i, Point j);

/// Type of the pair (i, j) without argument checks.
inline PairType pair_type_unchecked(const Pattern& p, Point i, Point j) {
  const bool up2 = p.less2(i, j);
  if (i < j) return up2 ? PairType::T1 : PairType::T2;
  return up2 ? PairType::T4 : PairType::T3;
}

/// Induced sub-pattern on the point set `s` (order of `s` is irrelevant).
Pattern sub_pattern(const Pattern& p, std::span<const Point> s);

/// All sorted index sets S with sub_pattern(host, S) == small, in
/// lexicographic order.
std::vector<PointTuple> copies_of(const Pattern& host, const Pattern& small);

/// All n! patterns of size n in lexicographic order of rank sequences.
std::vector<Pattern> enumerate_patterns(std::size_t n);

/// True iff all pairs in `s` are straight, or all are twisted.
bool is_diagonal(const Pattern& p, std::span<const Point> s);

/// Calls fn(span<const Point>) for each k-subset of {0..n-1}, lexicographically.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<Point> idx(k);
  std::iota(idx.begin(), idx.end(), Point{0});
  while (true) {
    fn(std::span<const Point>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Calls fn(span<const Point>) for each ordered k-tuple of distinct points of
/// {0..n-1}, lexicographically.
template <typename Fn>
void for_each_arrangement(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<Point> tuple(k);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == k) {
      fn(std::span<const Point>(tuple));
      return;
    }
    for (Point v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      tuple[depth] = v;
      self(self, depth + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);
}

/// Formats points 1-based: "(p1,p3)".
std::string format_points(std::span<const Point> pts);

}  // namespace permred
