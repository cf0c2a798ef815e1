#include "permred/generators.hpp"

#include <charconv>
#include <stdexcept>

namespace permred {
namespace {

struct KindName {
  GeneratorKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {GeneratorKind::RevId, "rev1"},     {GeneratorKind::IdRev, "rev2"},
    {GeneratorKind::RevRev, "revrev"},  {GeneratorKind::Sw, "sw"},
    {GeneratorKind::TurnFirst, "t1"},   {GeneratorKind::TurnSecond, "t2"},
    {GeneratorKind::SwapFirst, "x1"},   {GeneratorKind::SwapSecond, "x2"},
};

std::size_t turn(std::size_t r, std::size_t k, std::size_t n) {
  return r < k ? r + (n - k) : r - k;
}

std::size_t swap_adjacent(std::size_t r, std::size_t k) {
  if (r == k) return k + 1;
  if (r == k + 1) return k;
  return r;
}

}  // namespace

std::size_t parameter_count(GeneratorKind k, std::size_t n) {
  switch (k) {
    case GeneratorKind::TurnFirst:
    case GeneratorKind::TurnSecond: return n + 1;
    case GeneratorKind::SwapFirst:
    case GeneratorKind::SwapSecond: return n >= 2 ? n - 1 : 0;
    default: return 1;
  }
}

MappedPattern apply(const Generator& g, const Pattern& p) {
  const std::size_t n = p.size();
  if (takes_parameter(g.kind) && g.param >= parameter_count(g.kind, n))
    throw std::invalid_argument("invalid parameter " + std::to_string(g.param) + " for " +
                                to_string(g.kind) + " on a pattern of size " +
                                std::to_string(n));
  std::vector<int> ranks(n);
  std::vector<Point> corr(n);
  for (Point pt = 0; pt < n; ++pt) {
    std::size_t r1 = pt;
    std::size_t r2 = static_cast<std::size_t>(p.rank2(pt));
    std::size_t n1 = r1;
    std::size_t n2 = r2;
    switch (g.kind) {
      case GeneratorKind::RevId: n1 = n - 1 - r1; break;
      case GeneratorKind::IdRev: n2 = n - 1 - r2; break;
      case GeneratorKind::RevRev: n1 = n - 1 - r1; n2 = n - 1 - r2; break;
      case GeneratorKind::Sw: n1 = r2; n2 = r1; break;
      case GeneratorKind::TurnFirst: n1 = turn(r1, g.param, n); break;
      case GeneratorKind::TurnSecond: n2 = turn(r2, g.param, n); break;
      case GeneratorKind::SwapFirst: n1 = swap_adjacent(r1, g.param); break;
      case GeneratorKind::SwapSecond: n2 = swap_adjacent(r2, g.param); break;
    }
    ranks[n1] = static_cast<int>(n2);
    corr[pt] = n1;
  }
  return {Pattern(std::move(ranks)), std::move(corr)};
}

std::vector<Point> compose(std::span<const Point> a, std::span<const Point> b) {
  std::vector<Point> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

MappedPattern apply_word(const GeneratorWord& w, const Pattern& p) {
  MappedPattern cur{p, {}};
  cur.correspondence.resize(p.size());
  std::iota(cur.correspondence.begin(), cur.correspondence.end(), Point{0});
  for (const auto& g : w) {
    auto step = apply(g, cur.image);
    cur.correspondence = compose(cur.correspondence, step.correspondence);
    cur.image = std::move(step.image);
  }
  return cur;
}

Generator inverse(const Generator& g, std::size_t n) {
  switch (g.kind) {
    case GeneratorKind::TurnFirst:
    case GeneratorKind::TurnSecond:
      if (g.param > n) throw std::invalid_argument("turn cut exceeds pattern size");
      return {g.kind, n - g.param};
    default: return g;
  }
}

GeneratorWord inverse(const GeneratorWord& w, std::size_t n) {
  GeneratorWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it, n));
  return out;
}

std::string to_string(GeneratorKind k) {
  for (const auto& kn : kKindNames)
    if (kn.kind == k) return std::string(kn.name);
  return "?";
}

std::string to_string(const Generator& g) {
  auto s = to_string(g.kind);
  if (takes_parameter(g.kind)) s += '@' + std::to_string(g.param);
  return s;
}

std::string to_string(const GeneratorWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(w[i]);
  }
  return out;
}

Generator parse_generator(std::string_view text) {
  const auto at = text.find('@');
  const auto head = text.substr(0, at);
  for (const auto& kn : kKindNames) {
    if (kn.name != head) continue;
    if (!takes_parameter(kn.kind)) {
      if (at != std::string_view::npos)
        throw std::invalid_argument("generator '" + std::string(head) + "' takes no parameter");
      return {kn.kind, 0};
    }
    if (at == std::string_view::npos)
      throw std::invalid_argument("generator '" + std::string(head) + "' needs '@k'");
    const auto num = text.substr(at + 1);
    std::size_t k = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
    if (ec != std::errc{} || ptr != num.data() + num.size())
      throw std::invalid_argument("bad generator parameter in '" + std::string(text) + "'");
    return {kn.kind, k};
  }
  throw std::invalid_argument("unknown generator '" + std::string(text) + "'");
}

GeneratorWord parse_word(std::string_view text) {
  GeneratorWord out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = std::min(text.find(',', pos), text.size());
    out.push_back(parse_generator(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

WordTemplate inverse(const WordTemplate& t) { return WordTemplate(t.rbegin(), t.rend()); }

std::string to_string(const WordTemplate& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(t[i]);
    if (takes_parameter(t[i])) out += "@*";
  }
  return out;
}

void for_each_instance(const WordTemplate& t, std::size_t n,
                       const std::function<void(const GeneratorWord&)>& fn) {
  GeneratorWord word(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (parameter_count(t[i], n) == 0) return;
    word[i] = {t[i], 0};
  }
  while (true) {
    fn(word);
    std::size_t i = t.size();
    while (i > 0) {
      --i;
      if (++word[i].param < parameter_count(t[i], n)) break;
      word[i].param = 0;
      if (i == 0) return;
    }
    if (t.empty()) return;
  }
}

}  // namespace permred
