#include "permred_cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "permred/behaviors.hpp"
#include "permred/golden.hpp"
#include "permred/lattice.hpp"
#include "permred/orbits.hpp"
#include "permred/preservation.hpp"
#include "permred/ramsey.hpp"
#include "permred/relations.hpp"

namespace permred::cli {

namespace {

using nlohmann::json;

/// Bad user input; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Pattern read_pattern(const std::string& text) {
  if (text == "point") return Pattern::parse("1");
  try {
    return Pattern::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("bad pattern '" + text + "': " + e.what());
  }
}

RelationId read_relation(const std::string& text) {
  if (auto r = parse_relation(text)) return *r;
  throw UsageError("unknown relation '" + text + "'");
}

/// A lattice label such as "abf", or any letter set (closed on the fly).
ClosedSet read_group(const Lattice& lattice, const std::string& text) {
  if (auto idx = lattice.find_label(text)) return lattice.elements()[*idx];
  LetterSet letters;
  try {
    letters = LetterSet::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown group label '" + text + "'");
  }
  const auto closed = closure(letters);
  return lattice.elements()[*lattice.find(closed)];
}

std::vector<Point> read_points(const std::string& text, std::size_t n) {
  std::vector<Point> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty() && (item.front() == 'p' || item.front() == 'P')) item.erase(0, 1);
    std::size_t k = 0;
    try {
      k = std::stoul(item);
    } catch (const std::exception&) {
      throw UsageError("bad point '" + item + "'");
    }
    if (k < 1 || k > n) throw UsageError("point " + item + " out of range 1.." + std::to_string(n));
    out.push_back(k - 1);
  }
  return out;
}

json points_json(std::span<const Point> pts) {
  json a = json::array();
  for (auto p : pts) a.push_back(p + 1);
  return a;
}

json witness_json(const Witness& w) {
  return {{"relation", std::string(name(w.relation))},
          {"word", to_string(w.word)},
          {"pattern", w.pattern.str()},
          {"tuple", points_json(w.tuple)},
          {"image", w.image.str()},
          {"image_tuple", points_json(w.image_tuple)}};
}

std::string plural(std::size_t n, const std::string& word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "es");
}

// ---------------------------------------------------------------------------

struct TableOptions {
  Budget budget;
  std::string format = "csv";
  bool diff = false;
  std::string golden_path;
};

int cmd_table(const TableOptions& o, std::ostream& out, std::ostream& err) {
  const auto lattice = enumerate_lattice();
  const auto table = full_table(lattice, o.budget, o.format == "json");
  const auto rows = table.bit_rows();
  if (table.unconfirmed() > 0)
    err << "warning: " << table.unconfirmed() << " unconfirmed negative cells\n";

  if (o.diff) {
    const auto golden = o.golden_path.empty() ? GoldenTable::embedded()
                                              : GoldenTable::load(o.golden_path);
    const auto diffs = diff_golden(rows, golden);
    for (const auto& d : diffs) {
      out << d.label << ',' << name(d.relation) << ": golden "
          << (d.golden ? (*d.golden ? "1" : "0") : "missing") << ", computed "
          << (d.computed ? (*d.computed ? "1" : "0") : "missing") << '\n';
    }
    for (const auto& v : monotonicity_violations(golden.rows(), lattice))
      out << "note: golden table marks " << name(v.relation) << " for " << v.larger
          << " but not for its subgroup " << v.smaller << '\n';
    out << plural(diffs.size(), "mismatch") << '\n';
    return diffs.empty() && table.unconfirmed() == 0 ? kExitOk : kExitFailure;
  }

  if (o.format == "json") {
    json j;
    j["budget"] = {{"max_size", o.budget.max_size},
                   {"witness_size", o.budget.witness_size},
                   {"max_word", o.budget.max_word}};
    j["relations"] = json::array();
    for (auto r : kAllRelations) j["relations"].push_back(std::string(name(r)));
    j["rows"] = json::array();
    for (const auto& gr : table.rows) {
      json row{{"label", gr.label}, {"members", lattice.elements()[*lattice.find_label(gr.label)].members.str()}};
      json cells = json::object();
      for (auto r : kAllRelations) {
        const auto& c = gr.cells[index_of(r)];
        json cell{{"status", std::string(to_string(c.status))}};
        if (c.witness) cell["witness"] = witness_json(*c.witness);
        cells[std::string(name(r))] = std::move(cell);
      }
      row["cells"] = std::move(cells);
      j["rows"].push_back(std::move(row));
    }
    j["unconfirmed"] = table.unconfirmed();
    out << j.dump(2) << '\n';
  } else {
    out << to_csv(rows);
  }
  return table.unconfirmed() == 0 ? kExitOk : kExitFailure;
}

struct LatticeOptions {
  bool count_only = false;
  std::string format = "text";
};

int cmd_lattice(const LatticeOptions& o, std::ostream& out) {
  const auto lattice = enumerate_lattice();
  if (o.count_only) {
    out << lattice.size() << '\n';
    return kExitOk;
  }
  const auto& el = lattice.elements();
  if (o.format == "dot") {
    out << lattice.to_dot();
  } else if (o.format == "json") {
    json j;
    j["elements"] = json::array();
    for (auto idx : lattice.table_order())
      j["elements"].push_back({{"label", el[idx].label}, {"members", el[idx].members.str()}});
    j["covers"] = json::array();
    for (auto [lo, hi] : lattice.covers())
      j["covers"].push_back({{"lower", el[lo].label}, {"upper", el[hi].label}});
    out << j.dump(2) << '\n';
  } else {
    for (auto idx : lattice.table_order()) {
      std::vector<std::string> ups;
      for (auto [lo, hi] : lattice.covers())
        if (lo == idx) ups.push_back(el[hi].label);
      out << el[idx].label << "  " << el[idx].members.str();
      if (!ups.empty()) {
        out << "  <";
        for (const auto& u : ups) out << ' ' << u;
      }
      out << '\n';
    }
    out << lattice.size() << " elements, " << lattice.covers().size() << " covers\n";
  }
  return kExitOk;
}

int cmd_closure(const std::string& letters, std::ostream& out) {
  LetterSet start;
  try {
    start = LetterSet::parse(letters);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto& engine = default_engine();
  const auto d = engine.derive(start);
  out << "input   " << start.str() << '\n';
  for (const auto& f : d.trace) {
    const auto& rule = engine.rules()[f.rule];
    out << "rule " << f.rule << "  " << rule.premise.str() << " => " << rule.conclusion.str()
        << "  adds " << f.added.str() << "  [" << rule.provenance << "]\n";
  }
  out << "closed  " << d.closed.str() << '\n' << "label   " << minimal_label(d.closed) << '\n';
  return kExitOk;
}

int cmd_classify(const std::string& text, const std::string& format, std::ostream& out) {
  Behavior b;
  try {
    b = parse_behavior(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto c = classify(b);
  if (format == "json") {
    json j;
    if (const auto* n = std::get_if<NamedBehavior>(&c)) {
      j = {{"class", "named"}, {"detail", std::string(name(*n))}};
    } else {
      const auto& d = std::get<DiagonalBehavior>(c);
      j = {{"class", "diagonal"},
           {"detail", {{"order", d.order}, {"sense", d.preserve ? "preserve" : "reverse"}}}};
    }
    out << j.dump() << '\n';
  } else {
    out << to_string(c) << '\n';
  }
  return kExitOk;
}

int cmd_witness(const std::string& label, const std::string& relation, const Budget& budget,
                const std::string& format, std::ostream& out) {
  const auto lattice = enumerate_lattice();
  const auto group = read_group(lattice, label);
  const auto r = read_relation(relation);
  const auto gens = generators_of(group.members);
  const auto row = group_row(gens, budget);
  const auto& cell = row.cells[index_of(r)];
  if (format == "json") {
    json j{{"group", group.label}, {"relation", relation}, {"status", std::string(to_string(cell.status))}};
    if (cell.witness) j["witness"] = witness_json(*cell.witness);
    out << j.dump(2) << '\n';
  } else if (cell.witness) {
    out << "group    " << group.label << ' ' << group.members.str() << '\n' << to_string(*cell.witness);
  } else {
    out << group.label << ' ' << to_string(cell.status) << ' ' << relation
        << " (patterns up to size " << budget.max_size << ")\n";
  }
  return cell.witness ? kExitOk : kExitFailure;
}

int cmd_orbits(const std::string& pattern, const std::string& constants, const std::string& format,
               std::ostream& out) {
  ConstantSet cs{read_pattern(pattern), {}};
  if (!constants.empty()) cs.constants = read_points(constants, cs.pattern.size());
  try {
    cs.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto groups = cells(cs);
  if (format == "json") {
    json j = json::array();
    for (const auto& [cell, pts] : groups)
      j.push_back({{"row", cell.row}, {"column", cell.column}, {"points", points_json(pts)}});
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [cell, pts] : groups) out << to_string(cell) << "  " << format_points(pts) << '\n';
  }
  return kExitOk;
}

std::string image_text(const CellReport& r) {
  auto one = [](const std::optional<PairType>& t) {
    return t ? std::string(to_string(*t)) : std::string("?");
  };
  std::string s = one(r.up_image) + "," + one(r.down_image);
  if (auto b = r.behavior()) s += " (" + to_string(classify(*b)) + ")";
  return s;
}

int cmd_check_canonical(const std::string& path, std::ostream& out) {
  json j;
  try {
    if (path == "-") {
      j = json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw UsageError("cannot open '" + path + "'");
      j = json::parse(in);
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad sample file: ") + e.what());
  }
  SampledMap f;
  ConstantSet cs;
  try {
    f.source = read_pattern(j.at("source_pattern").get<std::string>());
    f.image = read_pattern(j.at("image_pattern").get<std::string>());
    for (const auto& v : j.at("map")) {
      if (v.is_null()) {
        f.map.emplace_back();
        continue;
      }
      const auto k = v.get<std::size_t>();
      if (k < 1 || k > f.image.size()) throw UsageError("map entry out of range");
      f.map.emplace_back(k - 1);
    }
    if (f.map.size() != f.source.size()) throw UsageError("map must have one entry per source point");
    cs.pattern = f.source;
    for (const auto& v : j.value("constants", json::array())) {
      const auto k = v.get<std::size_t>();
      if (k < 1 || k > f.source.size()) throw UsageError("constant out of range");
      cs.constants.push_back(k - 1);
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad sample file: ") + e.what());
  }
  const auto report = check_canonical(cs, f);
  auto print = [&](const CellReport& r) {
    out << to_string(r.cell);
    if (r.other) out << " x " << to_string(*r.other);
    out << "  pairs " << r.pairs << "  ";
    if (r.conflict) {
      const auto& c = *r.conflict;
      out << "conflict: " << to_string(c.source_type) << " pairs "
          << format_points(std::vector{c.first.first, c.first.second}) << " and "
          << format_points(std::vector{c.second.first, c.second.second})
          << " have different image types\n";
    } else {
      out << image_text(r) << '\n';
    }
  };
  for (const auto& r : report.on_cells) print(r);
  for (const auto& r : report.between_cells) print(r);
  if (report.mixed_on_cell_behaviors) out << "mixed behaviors across cells\n";
  out << (report.canonical() ? "canonical" : "not canonical") << '\n';
  return report.canonical() ? kExitOk : kExitFailure;
}

int cmd_ramsey(const std::string& delta, const std::string& gamma, const std::string& omega,
               std::uint64_t budget, std::ostream& out) {
  const auto d = read_pattern(delta);
  const auto res = check_ramsey_witness(d, read_pattern(gamma), read_pattern(omega), budget);
  switch (res.verdict) {
    case RamseyVerdict::Holds:
      out << "holds (" << res.colorings_checked << " colorings)\n";
      return kExitOk;
    case RamseyVerdict::Fails: {
      out << "fails; coloring without a monochromatic copy:\n";
      const auto copies = copies_of(d, read_pattern(gamma));
      for (std::size_t k = 0; k < copies.size(); ++k)
        out << "  " << format_points(copies[k]) << " -> " << int((*res.counterexample)[k]) << '\n';
      return kExitFailure;
    }
    case RamseyVerdict::Infeasible:
      out << "infeasible: " << res.gamma_copies << " copies exceed the coloring budget\n";
      return kExitFailure;
  }
  return kExitFailure;
}

int cmd_ramsey_search(const std::string& gamma, const std::string& omega, std::size_t max_n,
                      std::uint64_t budget, std::ostream& out) {
  std::size_t skipped = 0;
  const auto hit = search_witness(read_pattern(gamma), read_pattern(omega), max_n, budget, &skipped);
  if (hit) out << hit->str() << '\n';
  else out << "none up to size " << max_n << '\n';
  if (skipped > 0) out << skipped << " hosts skipped as infeasible\n";
  return hit ? kExitOk : kExitFailure;
}

void add_budget_flags(CLI::App* sub, Budget& b) {
  sub->add_option("--max-size", b.max_size, "Largest pattern for positive checks")
      ->capture_default_str()
      ->check(CLI::Range(1, 8));
  sub->add_option("--max-word", b.max_word, "Longest witness word")
      ->capture_default_str()
      ->check(CLI::Range(1, 4));
  sub->add_option("--witness-size", b.witness_size, "Largest witness pattern")
      ->capture_default_str()
      ->check(CLI::Range(1, 8));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed supergroups of the automorphism group of the random permutation"};
  app.name("permred");
  app.set_version_flag("--version", std::string("permred ") + PERMRED_VERSION);
  app.require_subcommand(1);

  TableOptions table_opts;
  auto* table = app.add_subcommand("table", "Preservation table of all lattice elements");
  add_budget_flags(table, table_opts.budget);
  table->add_option("--format", table_opts.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  table->add_flag("--diff", table_opts.diff, "Compare against the golden table");
  table->add_option("--golden", table_opts.golden_path, "Golden table CSV (default: embedded)")
      ->check(CLI::ExistingFile);

  LatticeOptions lattice_opts;
  auto* lattice = app.add_subcommand("lattice", "The lattice of closed letter sets");
  lattice->add_flag("--count-only", lattice_opts.count_only);
  lattice->add_option("--format", lattice_opts.format)
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();

  std::string letters;
  auto* closure_cmd = app.add_subcommand("closure", "Close a letter set under the rules");
  closure_cmd->add_option("letters", letters, "Letters such as abf")->required();

  std::string behavior;
  std::string classify_format = "text";
  auto* classify_cmd = app.add_subcommand("classify", "Classify a behavior");
  classify_cmd->add_option("--behavior", behavior, "Images of t1 and t2, e.g. t4,t3")->required();
  classify_cmd->add_option("--format", classify_format)->check(CLI::IsMember({"text", "json"}));

  std::string w_label, w_relation, w_format = "text";
  Budget w_budget;
  auto* witness = app.add_subcommand("witness", "Certificate for a non-preserved relation");
  witness->add_option("label", w_label, "Group label")->required();
  witness->add_option("relation", w_relation, "Relation name")->required();
  witness->add_option("--format", w_format)->check(CLI::IsMember({"text", "json"}));
  add_budget_flags(witness, w_budget);

  std::string o_pattern, o_constants, o_format = "text";
  auto* orbits = app.add_subcommand("orbits", "Orbit cells relative to constants");
  orbits->add_option("--pattern", o_pattern)->required();
  orbits->add_option("--constants", o_constants, "1-based points, comma separated");
  orbits->add_option("--format", o_format)->check(CLI::IsMember({"text", "json"}));

  std::string sample_path;
  auto* canonical = app.add_subcommand("check-canonical", "Check a sampled map for canonicity");
  canonical->add_option("sample", sample_path, "JSON sample file, or - for stdin")->required();

  std::string r_delta, r_gamma, r_omega;
  std::uint64_t r_budget = kDefaultColoringBudget;
  std::size_t r_max_n = 4;
  auto* ramsey = app.add_subcommand("ramsey", "Exhaustive Ramsey check for one host");
  ramsey->add_option("--delta", r_delta)->required();
  ramsey->add_option("--gamma", r_gamma)->required();
  ramsey->add_option("--omega", r_omega)->required();
  ramsey->add_option("--budget", r_budget, "Maximum number of colorings")->capture_default_str();

  auto* ramsey_search = app.add_subcommand("ramsey-search", "Smallest Ramsey host");
  ramsey_search->add_option("--gamma", r_gamma)->required();
  ramsey_search->add_option("--omega", r_omega)->required();
  ramsey_search->add_option("--max-n", r_max_n)->capture_default_str()->check(CLI::Range(1, 8));
  ramsey_search->add_option("--budget", r_budget, "Maximum colorings per host")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*table) return cmd_table(table_opts, out, err);
    if (*lattice) return cmd_lattice(lattice_opts, out);
    if (*closure_cmd) return cmd_closure(letters, out);
    if (*classify_cmd) return cmd_classify(behavior, classify_format, out);
    if (*witness) return cmd_witness(w_label, w_relation, w_budget, w_format, out);
    if (*orbits) return cmd_orbits(o_pattern, o_constants, o_format, out);
    if (*canonical) return cmd_check_canonical(sample_path, out);
    if (*ramsey) return cmd_ramsey(r_delta, r_gamma, r_omega, r_budget, out);
    if (*ramsey_search) return cmd_ramsey_search(r_gamma, r_omega, r_max_n, r_budget, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace permred::cli
