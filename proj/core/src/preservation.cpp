#include "permred/preservation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace permred {

namespace {

PointTuple image_of(std::span<const Point> tuple, const std::vector<Point>& corr) {
  PointTuple out(tuple.size());
  for (std::size_t k = 0; k < tuple.size(); ++k) out[k] = corr[tuple[k]];
  return out;
}

/// First tuple of `p` satisfying r whose image under `m` does not.
std::optional<PointTuple> broken_tuple(RelationId r, const Pattern& p, const MappedPattern& m) {
  std::optional<PointTuple> found;
  PointTuple img(arity(r));
  for_each_arrangement(p.size(), arity(r), [&](std::span<const Point> t) {
    if (found || !holds(r, p, t)) return;
    for (std::size_t k = 0; k < t.size(); ++k) img[k] = m.correspondence[t[k]];
    if (!holds(r, m.image, img)) found = PointTuple(t.begin(), t.end());
  });
  return found;
}

WordTemplate concatenate(std::span<const WordTemplate> alphabet, std::span<const std::size_t> seq) {
  WordTemplate out;
  for (auto i : seq) out.insert(out.end(), alphabet[i].begin(), alphabet[i].end());
  return out;
}

}  // namespace

bool verify(const Witness& w) {
  if (w.tuple.size() != arity(w.relation)) return false;
  const auto m = apply_word(w.word, w.pattern);
  return m.image == w.image && image_of(w.tuple, m.correspondence) == w.image_tuple &&
         eval(w.relation, w.pattern, w.tuple) && !eval(w.relation, w.image, w.image_tuple);
}

std::string to_string(const Witness& w) {
  std::ostringstream os;
  os << "relation " << name(w.relation) << '\n'
     << "word     " << (w.word.empty() ? std::string("(empty)") : to_string(w.word)) << '\n'
     << "pattern  " << w.pattern.str() << "  tuple " << format_points(w.tuple) << "  holds\n"
     << "image    " << w.image.str() << "  tuple " << format_points(w.image_tuple) << "  fails\n";
  return os.str();
}

bool generator_preserves(const WordTemplate& t, RelationId r, std::size_t max_size) {
  bool ok = true;
  for (std::size_t n = std::max<std::size_t>(arity(r), 1); n <= max_size && ok; ++n) {
    for (const auto& p : enumerate_patterns(n)) {
      for_each_instance(t, n, [&](const GeneratorWord& w) {
        if (ok && broken_tuple(r, p, apply_word(w, p))) ok = false;
      });
      if (!ok) break;
    }
  }
  return ok;
}

bool generator_preserves(GeneratorKind k, RelationId r, std::size_t max_size) {
  return generator_preserves(WordTemplate{k}, r, max_size);
}

std::vector<WordTemplate> inverse_closed(std::span<const WordTemplate> gens) {
  std::vector<WordTemplate> out(gens.begin(), gens.end());
  for (const auto& g : gens) {
    auto inv = inverse(g);
    if (std::find(out.begin(), out.end(), inv) == out.end()) out.push_back(std::move(inv));
  }
  return out;
}

std::optional<Witness> find_witness(std::span<const WordTemplate> alphabet, RelationId r,
                                    const Budget& budget) {
  if (alphabet.empty()) return std::nullopt;
  const std::size_t k = arity(r);
  for (std::size_t len = 1; len <= budget.max_word; ++len) {
    for (std::size_t n = std::max<std::size_t>(k, 1); n <= budget.witness_size; ++n) {
      for (const auto& p : enumerate_patterns(n)) {
        std::vector<std::size_t> seq(len, 0);
        while (true) {
          std::optional<Witness> hit;
          for_each_instance(concatenate(alphabet, seq), n, [&](const GeneratorWord& w) {
            if (hit) return;
            auto m = apply_word(w, p);
            if (auto t = broken_tuple(r, p, m)) {
              hit = Witness{r, p, *t, w, m.image, image_of(*t, m.correspondence)};
            }
          });
          if (hit) return hit;
          std::size_t pos = len;
          while (pos > 0 && ++seq[pos - 1] == alphabet.size()) seq[--pos] = 0;
          if (pos == 0) break;
        }
      }
    }
  }
  return std::nullopt;
}

bool PreservationCache::preserves(const WordTemplate& t, RelationId r) {
  auto key = std::make_pair(t, r);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const bool v = generator_preserves(t, r, max_size_);
  memo_.emplace(std::move(key), v);
  return v;
}

std::string_view to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Preserved: return "preserved";
    case CellStatus::Violated: return "violated";
    case CellStatus::UnconfirmedNegative: return "unconfirmed-negative";
  }
  return "?";
}

PreservationRow GroupRow::row() const {
  PreservationRow out;
  out.label = label;
  for (std::size_t k = 0; k < kRelationCount; ++k)
    out.bits[k] = cells[k].status == CellStatus::Preserved;
  return out;
}

std::size_t GroupRow::unconfirmed() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const Cell& c) {
    return c.status == CellStatus::UnconfirmedNegative;
  }));
}

GroupRow group_row(std::span<const WordTemplate> gens, const Budget& budget, bool with_witnesses,
                   PreservationCache* cache) {
  PreservationCache local(budget.max_size);
  if (cache == nullptr || cache->max_size() != budget.max_size) cache = &local;
  const auto alphabet = inverse_closed(gens);
  GroupRow out;
  for (auto r : kAllRelations) {
    auto& cell = out.cells[index_of(r)];
    const bool preserved = std::all_of(alphabet.begin(), alphabet.end(),
                                       [&](const WordTemplate& t) { return cache->preserves(t, r); });
    if (preserved) continue;
    if (!with_witnesses) {
      cell.status = CellStatus::Violated;
      continue;
    }
    cell.witness = find_witness(alphabet, r, budget);
    cell.status = cell.witness ? CellStatus::Violated : CellStatus::UnconfirmedNegative;
  }
  return out;
}

std::vector<WordTemplate> generators_of(LetterSet members) {
  std::vector<WordTemplate> out;
  for (auto l : members.letters()) out.push_back(generator_of(l));
  return out;
}

std::vector<PreservationRow> PreservationTable::bit_rows() const {
  std::vector<PreservationRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.row());
  return out;
}

std::size_t PreservationTable::unconfirmed() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.unconfirmed();
  return n;
}

const GroupRow* PreservationTable::find(std::string_view label) const {
  for (const auto& r : rows)
    if (r.label == label) return &r;
  return nullptr;
}

PreservationTable full_table(const Lattice& lattice, const Budget& budget, bool with_witnesses) {
  PreservationCache cache(budget.max_size);
  PreservationTable table;
  for (auto idx : lattice.table_order()) {
    const auto& element = lattice.elements()[idx];
    const auto gens = generators_of(element.members);
    auto row = group_row(gens, budget, with_witnesses, &cache);
    row.label = element.label;
    table.rows.push_back(std::move(row));
  }
  return table;
}

PreservationTable full_table(const Budget& budget, bool with_witnesses) {
  return full_table(enumerate_lattice(), budget, with_witnesses);
}

std::vector<CellDiff> diff_golden(std::span<const PreservationRow> computed,
                                  const GoldenTable& golden) {
  std::vector<CellDiff> out;
  for (const auto& g : golden.rows()) {
    const auto it = std::find_if(computed.begin(), computed.end(),
                                 [&](const PreservationRow& c) { return c.label == g.label; });
    for (auto r : kAllRelations) {
      const bool gv = g.preserves(r);
      if (it == computed.end()) {
        out.push_back({g.label, r, gv, std::nullopt});
      } else if (it->preserves(r) != gv) {
        out.push_back({g.label, r, gv, it->preserves(r)});
      }
    }
  }
  return out;
}

std::vector<MonotonicityViolation> monotonicity_violations(std::span<const PreservationRow> rows,
                                                           const Lattice& lattice) {
  std::vector<MonotonicityViolation> out;
  for (const auto& small : rows) {
    const auto xs = lattice.find_label(small.label);
    if (!xs) continue;
    const auto x = lattice.elements()[*xs].members;
    for (const auto& large : rows) {
      const auto ys = lattice.find_label(large.label);
      if (!ys || *ys == *xs) continue;
      if (!x.subset_of(lattice.elements()[*ys].members)) continue;
      for (auto r : kAllRelations)
        if (large.preserves(r) && !small.preserves(r)) out.push_back({small.label, large.label, r});
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> duplicate_rows(
    std::span<const PreservationRow> rows) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (rows[i].bits == rows[j].bits) out.emplace_back(rows[i].label, rows[j].label);
  return out;
}

}  // namespace permred
