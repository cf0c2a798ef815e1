#include "permred/golden.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace permred {
namespace detail {
extern const std::string_view kEmbeddedGoldenCsv;
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t next = std::min(line.find(sep, pos), line.size());
    out.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

bool PreservationRow::subset_of(const PreservationRow& other) const {
  for (std::size_t k = 0; k < kRelationCount; ++k)
    if (bits[k] && !other.bits[k]) return false;
  return true;
}

std::string to_csv(std::span<const PreservationRow> rows) {
  std::ostringstream os;
  os << "label";
  for (auto r : kAllRelations) os << ',' << name(r);
  os << '\n';
  for (const auto& row : rows) {
    os << row.label;
    for (bool b : row.bits) os << ',' << (b ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

GoldenTable::GoldenTable(std::vector<PreservationRow> rows) : rows_(std::move(rows)) {
  std::set<std::string> labels;
  for (const auto& r : rows_)
    if (!labels.insert(r.label).second)
      throw std::invalid_argument("golden table: duplicate label '" + r.label + "'");
}

GoldenTable GoldenTable::embedded() { return parse_csv(detail::kEmbeddedGoldenCsv); }

GoldenTable GoldenTable::parse_csv(std::string_view text) {
  std::vector<PreservationRow> rows;
  bool header_seen = false;
  std::size_t line_no = 0;
  for (auto raw : split(text, '\n')) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != kRelationCount + 1)
      throw std::invalid_argument("golden table line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(kRelationCount + 1) + " fields");
    if (!header_seen) {
      for (std::size_t k = 0; k < kRelationCount; ++k)
        if (trim(cells[k + 1]) != name(kAllRelations[k]))
          throw std::invalid_argument("golden table header: column " + std::to_string(k + 1) +
                                      " should be '" + std::string(name(kAllRelations[k])) + "'");
      header_seen = true;
      continue;
    }
    PreservationRow row;
    row.label = std::string(trim(cells[0]));
    for (std::size_t k = 0; k < kRelationCount; ++k) {
      const auto c = trim(cells[k + 1]);
      if (c == "1" || c == "x")
        row.bits[k] = true;
      else if (c == "0" || c.empty())
        row.bits[k] = false;
      else
        throw std::invalid_argument("golden table line " + std::to_string(line_no) +
                                    ": bad cell '" + std::string(c) + "'");
    }
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw std::invalid_argument("golden table: missing header");
  return GoldenTable(std::move(rows));
}

GoldenTable GoldenTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden table '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str());
}

const PreservationRow* GoldenTable::find(std::string_view label) const {
  for (const auto& r : rows_)
    if (r.label == label) return &r;
  return nullptr;
}

}  // namespace permred
