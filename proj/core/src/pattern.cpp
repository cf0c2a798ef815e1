#include "permred/pattern.hpp"

#include <charconv>

namespace permred {

std::string_view to_string(PairType t) {
  switch (t) {
    case PairType::T1: return "t1";
    case PairType::T2: return "t2";
    case PairType::T3: return "t3";
    case PairType::T4: return "t4";
  }
  return "?";
}

PairType parse_pair_type(std::string_view text) {
  if (text.size() == 2 && (text[0] == 't' || text[0] == 'T') && text[1] >= '1' && text[1] <= '4')
    return static_cast<PairType>(text[1] - '1');
  throw std::invalid_argument("unknown pair type '" + std::string(text) + "'");
}

Pattern::Pattern(std::vector<int> ranks) : ranks_(std::move(ranks)) {
  std::vector<bool> seen(ranks_.size(), false);
  for (int r : ranks_) {
    if (r < 0 || static_cast<std::size_t>(r) >= ranks_.size() || seen[r])
      throw std::invalid_argument("pattern ranks must be a permutation of 0..n-1");
    seen[r] = true;
  }
}

Pattern Pattern::parse(std::string_view text) {
  std::vector<int> ranks;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t next = std::min(text.find(',', pos), text.size());
      const auto tok = text.substr(pos, next - pos);
      int v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("bad pattern token '" + std::string(tok) + "'");
      ranks.push_back(v - 1);
      pos = next + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw std::invalid_argument("bad pattern character in '" + std::string(text) + "'");
      ranks.push_back(ch - '1');
    }
  }
  return Pattern(std::move(ranks));
}

Point Pattern::at_rank2(int r) const {
  const auto it = std::find(ranks_.begin(), ranks_.end(), r);
  if (it == ranks_.end()) throw std::out_of_range("second-order rank out of range");
  return static_cast<Point>(it - ranks_.begin());
}

Pattern Pattern::inverse() const {
  std::vector<int> inv(ranks_.size());
  for (std::size_t i = 0; i < ranks_.size(); ++i) inv[ranks_[i]] = static_cast<int>(i);
  return Pattern(std::move(inv));
}

std::string Pattern::str() const {
  std::string out;
  const bool compact = ranks_.size() <= 9;
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(ranks_[i] + 1);
  }
  return out;
}

void check_tuple(const Pattern& p, std::span<const Point> tuple) {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] >= p.size()) throw std::out_of_range("point index out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (tuple[i] == tuple[j]) throw std::invalid_argument("tuple has repeated entries");
  }
}

PairType pair_type(const Pattern& p, Point i, Point j) {
  if (i >= p.size() || j >= p.size()) throw std::out_of_range("point index out of range");
  if (i == j) throw std::invalid_argument("pair_type needs two distinct points");
  return pair_type_unchecked(p, i, j);
}

Pattern sub_pattern(const Pattern& p, std::span<const Point> s) {
  check_tuple(p, s);
  std::vector<Point> pts(s.begin(), s.end());
  std::sort(pts.begin(), pts.end());
  std::vector<int> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return p.rank2(pts[a]) < p.rank2(pts[b]); });
  std::vector<int> ranks(pts.size());
  for (std::size_t k = 0; k < order.size(); ++k) ranks[order[k]] = static_cast<int>(k);
  return Pattern(std::move(ranks));
}

std::vector<PointTuple> copies_of(const Pattern& host, const Pattern& small) {
  std::vector<PointTuple> out;
  for_each_combination(host.size(), small.size(), [&](std::span<const Point> s) {
    if (sub_pattern(host, s) == small) out.emplace_back(s.begin(), s.end());
  });
  return out;
}

std::vector<Pattern> enumerate_patterns(std::size_t n) {
  std::vector<int> ranks(n);
  std::iota(ranks.begin(), ranks.end(), 0);
  std::vector<Pattern> out;
  do {
    out.emplace_back(ranks);
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  return out;
}

bool is_diagonal(const Pattern& p, std::span<const Point> s) {
  check_tuple(p, s);
  bool all_straight = true;
  bool all_twisted = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const bool straight = (s[i] < s[j]) == p.less2(s[i], s[j]);
      all_straight = all_straight && straight;
      all_twisted = all_twisted && !straight;
    }
  }
  return all_straight || all_twisted;
}

std::string format_points(std::span<const Point> pts) {
  std::string out = "(";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) out += ',';
    out += 'p' + std::to_string(pts[i] + 1);
  }
  return out + ')';
}

}  // namespace permred
