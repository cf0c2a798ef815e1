#include "permred/orbits.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace permred {

namespace {

Point image_point(const SampledMap& f, Point x) {
  if (x >= f.map.size() || !f.map[x])
    throw std::invalid_argument("sampled map undefined at " + format_points(std::vector{x}));
  return *f.map[x];
}

PairType image_type(const SampledMap& f, Point x, Point y) {
  return pair_type(f.image, image_point(f, x), image_point(f, y));
}

/// Accumulates (source type -> image type) observations for one report.
struct Collector {
  CellReport& report;
  std::map<PairType, std::pair<Point, Point>> first_seen;

  void add(const SampledMap& f, Point x, Point y) {
    if (y < x) std::swap(x, y);
    const auto src = pair_type_unchecked(f.source, x, y);
    const auto img = image_type(f, x, y);
    ++report.pairs;
    auto& slot = src == PairType::T1 ? report.up_image : report.down_image;
    if (!slot) {
      slot = img;
      first_seen[src] = {x, y};
    } else if (*slot != img && !report.conflict) {
      report.conflict = TypeConflict{first_seen[src], {x, y}, src};
    }
  }
};

bool compatible(const CellReport& a, const CellReport& b) {
  if (a.up_image && b.up_image && *a.up_image != *b.up_image) return false;
  if (a.down_image && b.down_image && *a.down_image != *b.down_image) return false;
  return true;
}

}  // namespace

void ConstantSet::validate() const {
  check_tuple(pattern, constants);
}

bool ConstantSet::is_constant(Point p) const {
  return std::find(constants.begin(), constants.end(), p) != constants.end();
}

std::string to_string(const OrbitCell& c) {
  return "R" + std::to_string(c.row) + "∩C" + std::to_string(c.column);
}

OrbitCell cell_of(const ConstantSet& cs, Point p) {
  cs.validate();
  if (p >= cs.pattern.size()) throw std::invalid_argument("cell_of: point out of range");
  if (cs.is_constant(p)) throw std::invalid_argument("cell_of: point is a constant");
  OrbitCell c;
  for (auto k : cs.constants) {
    if (cs.pattern.less1(k, p)) ++c.column;
    if (cs.pattern.less2(k, p)) ++c.row;
  }
  return c;
}

std::vector<std::pair<OrbitCell, std::vector<Point>>> cells(const ConstantSet& cs) {
  std::map<OrbitCell, std::vector<Point>> by_cell;
  for (Point p = 0; p < cs.pattern.size(); ++p)
    if (!cs.is_constant(p)) by_cell[cell_of(cs, p)].push_back(p);
  return {by_cell.begin(), by_cell.end()};
}

SampledMap SampledMap::of_word(const GeneratorWord& w, const Pattern& p) {
  auto m = apply_word(w, p);
  SampledMap f{p, std::move(m.image), {}};
  for (auto q : m.correspondence) f.map.emplace_back(q);
  return f;
}

bool SampledMap::defined_on(std::span<const Point> xs) const {
  return std::all_of(xs.begin(), xs.end(),
                     [&](Point x) { return x < map.size() && map[x].has_value(); });
}

bool behaves_like_on(const SampledMap& f, std::span<const Point> xs, const Behavior& b) {
  check_tuple(f.source, xs);
  if (!f.defined_on(xs)) throw std::invalid_argument("behaves_like_on: map undefined on X");
  for (auto x : xs)
    for (auto y : xs)
      if (x != y && image_type(f, x, y) != b.apply(pair_type_unchecked(f.source, x, y)))
        return false;
  return true;
}

bool behaves_like_between(const SampledMap& f, std::span<const Point> xs,
                          std::span<const Point> ys, const Behavior& b) {
  check_tuple(f.source, xs);
  check_tuple(f.source, ys);
  for (auto x : xs)
    if (std::find(ys.begin(), ys.end(), x) != ys.end())
      throw std::invalid_argument("behaves_like_between: X and Y overlap");
  if (!f.defined_on(xs) || !f.defined_on(ys))
    throw std::invalid_argument("behaves_like_between: map undefined on X or Y");
  for (auto x : xs)
    for (auto y : ys)
      if (image_type(f, x, y) != b.apply(pair_type_unchecked(f.source, x, y))) return false;
  return true;
}

std::optional<Behavior> CellReport::behavior() const {
  if (conflict || !up_image || !down_image) return std::nullopt;
  return Behavior{*up_image, *down_image};
}

bool CanonicalReport::canonical() const {
  auto clean = [](const CellReport& r) { return !r.conflict; };
  return std::all_of(on_cells.begin(), on_cells.end(), clean) &&
         std::all_of(between_cells.begin(), between_cells.end(), clean);
}

CanonicalReport check_canonical(const ConstantSet& cs, const SampledMap& f) {
  cs.validate();
  if (f.map.size() != f.source.size() || !(f.source == cs.pattern))
    throw std::invalid_argument("check_canonical: sample source differs from the constant set");
  std::vector<std::pair<OrbitCell, std::vector<Point>>> groups;
  for (auto& [cell, pts] : cells(cs)) {
    std::vector<Point> defined;
    std::copy_if(pts.begin(), pts.end(), std::back_inserter(defined),
                 [&](Point p) { return f.map[p].has_value(); });
    groups.emplace_back(cell, std::move(defined));
  }

  CanonicalReport report;
  for (const auto& [cell, pts] : groups) {
    CellReport r;
    r.cell = cell;
    Collector col{r, {}};
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) col.add(f, pts[i], pts[j]);
    report.on_cells.push_back(r);
  }
  for (std::size_t a = 0; a < groups.size(); ++a) {
    for (std::size_t b = a + 1; b < groups.size(); ++b) {
      CellReport r;
      r.cell = groups[a].first;
      r.other = groups[b].first;
      Collector col{r, {}};
      for (auto x : groups[a].second)
        for (auto y : groups[b].second) col.add(f, x, y);
      report.between_cells.push_back(r);
    }
  }
  for (std::size_t a = 0; a < report.on_cells.size(); ++a)
    for (std::size_t b = a + 1; b < report.on_cells.size(); ++b) {
      const auto& x = report.on_cells[a];
      const auto& y = report.on_cells[b];
      if (!x.conflict && !y.conflict && !compatible(x, y)) report.mixed_on_cell_behaviors = true;
    }
  return report;
}

}  // namespace permred
