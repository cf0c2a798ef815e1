#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "permred/pattern.hpp"

namespace permred {

/// Geometric generator maps acting on patterns.
///
/// RevId / IdRev / RevRev reverse the first, second or both orders; Sw
/// exchanges the orders. TurnFirst(k) rotates the first order so that its k
/// lowest points become the k highest, keeping the order inside both blocks
/// (a turn at a cut between ranks k and k+1); TurnSecond(k) does the same on
/// the second order. SwapFirst(k) exchanges first-order ranks k and k+1 and
/// keeps the second order, so it acts like an element of Aut(D;<2);
/// SwapSecond(k) is the mirror image and acts like an element of Aut(D;<1).
enum class GeneratorKind : std::uint8_t {
  RevId,
  IdRev,
  RevRev,
  Sw,
  TurnFirst,
  TurnSecond,
  SwapFirst,
  SwapSecond,
};

/// True for the kinds carrying a position parameter (turns and swaps).
constexpr bool takes_parameter(GeneratorKind k) {
  return k == GeneratorKind::TurnFirst || k == GeneratorKind::TurnSecond ||
         k == GeneratorKind::SwapFirst || k == GeneratorKind::SwapSecond;
}

/// Valid parameters on a pattern of size n: turns 0..n, swaps 0..n-2, and the
/// single dummy value 0 for the other kinds.
std::size_t parameter_count(GeneratorKind k, std::size_t n);

struct Generator {
  GeneratorKind kind = GeneratorKind::RevId;
  std::size_t param = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Generators are applied left to right.
using GeneratorWord = std::vector<Generator>;

/// Image of a pattern under a map, with `correspondence[p]` the image of p.
struct MappedPattern {
  Pattern image;
  std::vector<Point> correspondence;
};

MappedPattern apply(const Generator& g, const Pattern& p);
MappedPattern apply_word(const GeneratorWord& w, const Pattern& p);

/// Generator g' with apply(g', apply(g, p).image) undoing g on size-n patterns.
Generator inverse(const Generator& g, std::size_t n);
GeneratorWord inverse(const GeneratorWord& w, std::size_t n);

/// Composition of two correspondences: first `a`, then `b`.
std::vector<Point> compose(std::span<const Point> a, std::span<const Point> b);

std::string to_string(GeneratorKind k);
std::string to_string(const Generator& g);
std::string to_string(const GeneratorWord& w);

/// Parses "rev1", "rev2", "revrev", "sw", "t1@k", "t2@k", "x1@k", "x2@k".
Generator parse_generator(std::string_view text);
/// Parses a comma separated word such as "sw,rev2,t1@2". Empty text is the
/// empty word.
GeneratorWord parse_word(std::string_view text);

/// A word of generator kinds whose parameters are left free. It stands for
/// all words obtained by choosing every parameter independently.
using WordTemplate = std::vector<GeneratorKind>;

/// Template of the inverse words: reversed sequence; every kind's inverse
/// has the same kind.
WordTemplate inverse(const WordTemplate& t);

std::string to_string(const WordTemplate& t);

/// Calls fn(const GeneratorWord&) for each instance of `t` valid on patterns
/// of size n, in lexicographic order of parameters.
void for_each_instance(const WordTemplate& t, std::size_t n,
                       const std::function<void(const GeneratorWord&)>& fn);

}  // namespace permred
