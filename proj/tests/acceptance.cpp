// Acceptance suite: one PASS/FAIL line per criterion.
//   permred_acceptance        run all criteria
//   permred_acceptance N      run criterion N only
// Exit status is 0 iff every criterion run passed.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "permred/behaviors.hpp"
#include "permred/golden.hpp"
#include "permred/lattice.hpp"
#include "permred/preservation.hpp"
#include "permred/ramsey.hpp"

using namespace permred;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << " s";
  return os.str();
}

Outcome lattice_count() {
  const auto t0 = Clock::now();
  const auto l = enumerate_lattice();
  const double dt = seconds_since(t0);
  return {l.size() == 39 && dt < 1.0,
          std::to_string(l.size()) + " closed sets in " + fmt_seconds(dt)};
}

Outcome label_match() {
  const auto lattice = enumerate_lattice();
  std::set<std::string> computed;
  for (const auto& e : lattice.elements())
    if (e.label != "bottom" && e.label != "sym") computed.insert(e.label);
  std::set<std::string> golden;
  const auto golden_table = GoldenTable::embedded();
  for (const auto& r : golden_table.rows()) golden.insert(r.label);
  std::string detail = std::to_string(computed.size()) + " computed labels, " +
                       std::to_string(golden.size()) + " table labels";
  for (const auto& c : computed)
    if (!golden.count(c)) detail += "; extra " + c;
  for (const auto& g : golden)
    if (!computed.count(g)) detail += "; missing " + g;
  return {computed == golden && computed.size() == 37, detail};
}

Outcome order_automorphisms() {
  const auto l = enumerate_lattice();
  std::size_t with_i = 0, with_j = 0;
  for (const auto& e : l.elements()) {
    with_i += e.members.contains(Letter::I);
    with_j += e.members.contains(Letter::J);
  }
  return {with_i == 5 && with_j == 5,
          "containing i: " + std::to_string(with_i) + ", containing j: " + std::to_string(with_j)};
}

Outcome join_count() {
  const auto base = LetterSet::parse("abcdij");
  std::set<LetterSet> joins;
  for (std::uint16_t m = 0; m < 1024; ++m)
    if (LetterSet(m).subset_of(base)) joins.insert(closure(LetterSet(m)));
  return {joins.size() == 25, std::to_string(joins.size()) + " distinct closures"};
}

Outcome table_reproduction() {
  const auto t0 = Clock::now();
  const auto table = full_table(Budget{5, 6, 3});
  const double dt = seconds_since(t0);
  const auto diffs = diff_golden(table.bit_rows(), GoldenTable::embedded());
  std::string detail = std::to_string(diffs.size()) + " mismatched cells, " +
                       std::to_string(table.unconfirmed()) + " unconfirmed negatives, " +
                       fmt_seconds(dt);
  for (const auto& d : diffs) {
    detail += "; " + d.label + "/" + std::string(name(d.relation)) + " golden=" +
              (d.golden ? (*d.golden ? "1" : "0") : "-") +
              " computed=" + (d.computed ? (*d.computed ? "1" : "0") : "-");
  }
  return {diffs.empty() && table.unconfirmed() == 0 && dt < 300.0, detail};
}

Outcome distinguishing_rows() {
  const auto rows = full_table(Budget{}, false).bit_rows();
  const auto dups = duplicate_rows(rows);
  const auto all_of = [](const PreservationRow& r, bool v) {
    return std::all_of(r.bits.begin(), r.bits.end(), [v](bool b) { return b == v; });
  };
  const bool bottom = rows.front().label == "bottom" && all_of(rows.front(), true);
  const bool top = rows.back().label == "sym" && all_of(rows.back(), false);
  std::string detail = std::to_string(rows.size()) + " rows, " + std::to_string(dups.size()) +
                       " duplicate pairs, bottom all-true " + (bottom ? "yes" : "no") +
                       ", top all-false " + (top ? "yes" : "no");
  return {rows.size() == 39 && dups.empty() && bottom && top, detail};
}

Outcome behavior_census() {
  int named = 0, order1 = 0, order2 = 0;
  for (const auto& b : all_behaviors()) {
    const auto c = classify(b);
    if (std::holds_alternative<NamedBehavior>(c)) ++named;
    else if (std::get<DiagonalBehavior>(c).order == 1) ++order1;
    else ++order2;
  }
  return {named == 8 && order1 == 4 && order2 == 4,
          std::to_string(named) + " named, " + std::to_string(order1) + " order-1 diagonal, " +
              std::to_string(order2) + " order-2 diagonal"};
}

Outcome dihedral_facts() {
  const NamedGroup g;
  const auto subgroups = g.subgroups().size();
  const auto top = LetterSet::parse("bdf");
  const auto lattice = enumerate_lattice();
  std::size_t proper = 0;
  for (const auto& e : lattice.elements())
    if (!e.members.empty() && e.members != top && e.members.subset_of(top)) ++proper;
  const bool closed = closure(top) == top;
  return {NamedGroup::kOrder == 8 && subgroups == 10 && closed && proper == 4,
          "group order 8, " + std::to_string(subgroups) + " subgroups; {b,d,f} closed " +
              (closed ? "yes" : "no") + " with " + std::to_string(proper) +
              " proper nontrivial closed subsets"};
}

Outcome generator_laws() {
  constexpr GeneratorKind kinds[] = {
      GeneratorKind::RevId,     GeneratorKind::IdRev,      GeneratorKind::RevRev,
      GeneratorKind::Sw,        GeneratorKind::TurnFirst,  GeneratorKind::TurnSecond,
      GeneratorKind::SwapFirst, GeneratorKind::SwapSecond,
  };
  std::size_t checks = 0, failures = 0;
  auto expect = [&](bool ok) {
    ++checks;
    failures += !ok;
  };
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<Generator> gens;
    for (auto k : kinds)
      for (std::size_t c = 0; c < parameter_count(k, n); ++c) gens.push_back({k, c});
    std::vector<Point> id(n);
    std::iota(id.begin(), id.end(), Point{0});
    for (const auto& p : enumerate_patterns(n)) {
      for (const auto& g : gens) {
        const auto m = apply(g, p);
        const auto back = apply(inverse(g, n), m.image);
        expect(back.image == p && compose(m.correspondence, back.correspondence) == id);
        if (!takes_parameter(g.kind)) {
          const auto twice = apply(g, m.image);
          expect(twice.image == p && compose(m.correspondence, twice.correspondence) == id);
        }
        for (const auto& h : gens) {
          const auto second = apply(h, m.image);
          const auto whole = apply_word({g, h}, p);
          expect(whole.image == second.image &&
                 whole.correspondence == compose(m.correspondence, second.correspondence));
        }
      }
    }
  }
  // Behavior extraction is a homomorphism on turn-free words of length <= 4.
  constexpr GeneratorKind turn_free[] = {GeneratorKind::RevId, GeneratorKind::IdRev,
                                         GeneratorKind::RevRev, GeneratorKind::Sw};
  std::vector<GeneratorWord> words{{}};
  for (std::size_t len = 1, start = 0; len <= 4; ++len) {
    const std::size_t end = words.size();
    for (std::size_t i = start; i < end; ++i)
      for (auto k : turn_free) {
        auto w = words[i];
        w.push_back({k});
        words.push_back(std::move(w));
      }
    start = end;
  }
  for (const auto& u : words)
    for (const auto& v : words) {
      if (u.size() + v.size() > 4) continue;
      GeneratorWord uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      expect(behavior_of_word(uv) == compose(behavior_of_word(u), behavior_of_word(v)));
    }
  return {failures == 0, std::to_string(checks) + " checks, " + std::to_string(failures) + " failures"};
}

Outcome ramsey_desk_scale() {
  const auto point = Pattern::parse("1");
  const auto omega = Pattern::parse("12");
  auto t0 = Clock::now();
  const auto holds = check_ramsey_witness(Pattern::parse("123"), point, omega);
  const double t_holds = seconds_since(t0);
  t0 = Clock::now();
  const auto fails = check_ramsey_witness(Pattern::parse("12"), point, omega);
  const double t_fails = seconds_since(t0);
  t0 = Clock::now();
  const auto found = search_witness(point, omega, 4);
  const double t_search = seconds_since(t0);
  const bool ok = holds.verdict == RamseyVerdict::Holds && fails.verdict == RamseyVerdict::Fails &&
                  found && *found == Pattern::parse("123") && t_holds < 1.0 && t_fails < 1.0 &&
                  t_search < 1.0;
  return {ok, std::string("(123) ") + (holds.verdict == RamseyVerdict::Holds ? "holds" : "does not hold") +
                  ", (12) " + (fails.verdict == RamseyVerdict::Fails ? "fails" : "does not fail") +
                  ", search -> " + (found ? found->str() : "none") + ", slowest " +
                  fmt_seconds(std::max({t_holds, t_fails, t_search}))};
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> check;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "lattice count", lattice_count},
      {2, "label match", label_match},
      {3, "order automorphism groups", order_automorphisms},
      {4, "joins of order groups", join_count},
      {5, "table reproduction", table_reproduction},
      {6, "distinguishing rows", distinguishing_rows},
      {7, "behavior census", behavior_census},
      {8, "dihedral facts", dihedral_facts},
      {9, "generator laws", generator_laws},
      {10, "ramsey desk scale", ramsey_desk_scale},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > static_cast<int>(criteria().size())) {
      std::cerr << "usage: " << argv[0] << " [1-" << criteria().size() << "]\n";
      return 2;
    }
  }
  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << ": " << o.detail
              << std::endl;
  }
  return all_pass ? 0 : 1;
}
