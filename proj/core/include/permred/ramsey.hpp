#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "permred/pattern.hpp"

namespace permred {

/// Colors of the copies of a small pattern inside a host, indexed like
/// copies_of(host, small).
using Coloring = std::vector<std::uint8_t>;

/// An Ω-copy in Δ all of whose Γ-subcopies share one color. Throws
/// std::invalid_argument if `chi` does not cover every Γ-copy.
std::optional<PointTuple> find_mono_copy(const Pattern& delta, const Pattern& gamma,
                                         const Pattern& omega, const Coloring& chi);

inline constexpr std::uint64_t kDefaultColoringBudget = std::uint64_t{1} << 24;

enum class RamseyVerdict { Holds, Fails, Infeasible };

struct RamseyResult {
  RamseyVerdict verdict = RamseyVerdict::Infeasible;
  std::size_t gamma_copies = 0;
  std::uint64_t colorings_checked = 0;
  std::optional<Coloring> counterexample;  // set when the verdict is Fails
};

/// Whether every 2-coloring of the Γ-copies of Δ has a monochromatic Ω-copy,
/// decided by enumerating all colorings. Infeasible when 2^#copies exceeds
/// `budget`.
RamseyResult check_ramsey_witness(const Pattern& delta, const Pattern& gamma,
                                  const Pattern& omega,
                                  std::uint64_t budget = kDefaultColoringBudget);

/// Smallest Δ (lexicographically least among equal sizes) of size <= max_n
/// with a Holds verdict. Sizes whose check is infeasible are skipped and
/// reported through `skipped`, if given.
std::optional<Pattern> search_witness(const Pattern& gamma, const Pattern& omega,
                                      std::size_t max_n,
                                      std::uint64_t budget = kDefaultColoringBudget,
                                      std::size_t* skipped = nullptr);

}  // namespace permred
