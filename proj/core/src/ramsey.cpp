#include "permred/ramsey.hpp"

#include <algorithm>
#include <stdexcept>

namespace permred {

namespace {

/// For each Ω-copy, the indices of the Γ-copies inside it.
std::vector<std::vector<std::size_t>> omega_structure(const Pattern& delta, const Pattern& omega,
                                                      const std::vector<PointTuple>& g_copies,
                                                      std::vector<PointTuple>* o_copies_out) {
  auto o_copies = copies_of(delta, omega);
  std::vector<std::vector<std::size_t>> inside;
  inside.reserve(o_copies.size());
  for (const auto& oc : o_copies) {
    std::vector<std::size_t> members;
    for (std::size_t g = 0; g < g_copies.size(); ++g)
      if (std::includes(oc.begin(), oc.end(), g_copies[g].begin(), g_copies[g].end()))
        members.push_back(g);
    inside.push_back(std::move(members));
  }
  if (o_copies_out) *o_copies_out = std::move(o_copies);
  return inside;
}

bool mono(const std::vector<std::size_t>& members, auto&& color) {
  return std::all_of(members.begin(), members.end(),
                     [&](std::size_t g) { return color(g) == color(members.front()); });
}

}  // namespace

std::optional<PointTuple> find_mono_copy(const Pattern& delta, const Pattern& gamma,
                                         const Pattern& omega, const Coloring& chi) {
  const auto g_copies = copies_of(delta, gamma);
  if (chi.size() != g_copies.size())
    throw std::invalid_argument("find_mono_copy: coloring has " + std::to_string(chi.size()) +
                                " entries for " + std::to_string(g_copies.size()) + " copies");
  std::vector<PointTuple> o_copies;
  const auto inside = omega_structure(delta, omega, g_copies, &o_copies);
  for (std::size_t k = 0; k < o_copies.size(); ++k)
    if (mono(inside[k], [&](std::size_t g) { return chi[g]; })) return o_copies[k];
  return std::nullopt;
}

RamseyResult check_ramsey_witness(const Pattern& delta, const Pattern& gamma,
                                  const Pattern& omega, std::uint64_t budget) {
  RamseyResult res;
  const auto g_copies = copies_of(delta, gamma);
  res.gamma_copies = g_copies.size();
  if (g_copies.size() >= 64 || (std::uint64_t{1} << g_copies.size()) > budget) return res;
  const auto inside = omega_structure(delta, omega, g_copies, nullptr);
  const std::uint64_t total = std::uint64_t{1} << g_copies.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    ++res.colorings_checked;
    auto color = [mask](std::size_t g) { return (mask >> g) & 1u; };
    const bool found = std::any_of(inside.begin(), inside.end(),
                                   [&](const auto& members) { return mono(members, color); });
    if (!found) {
      res.verdict = RamseyVerdict::Fails;
      Coloring chi(g_copies.size());
      for (std::size_t g = 0; g < chi.size(); ++g) chi[g] = static_cast<std::uint8_t>(color(g));
      res.counterexample = std::move(chi);
      return res;
    }
  }
  res.verdict = RamseyVerdict::Holds;
  return res;
}

std::optional<Pattern> search_witness(const Pattern& gamma, const Pattern& omega,
                                      std::size_t max_n, std::uint64_t budget,
                                      std::size_t* skipped) {
  if (skipped) *skipped = 0;
  for (std::size_t n = std::max<std::size_t>(omega.size(), 1); n <= max_n; ++n) {
    for (const auto& delta : enumerate_patterns(n)) {
      const auto r = check_ramsey_witness(delta, gamma, omega, budget);
      if (r.verdict == RamseyVerdict::Holds) return delta;
      if (r.verdict == RamseyVerdict::Infeasible && skipped) ++*skipped;
    }
  }
  return std::nullopt;
}

}  // namespace permred
