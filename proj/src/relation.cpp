#include "relation.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "errors.hpp"

namespace ipfo {

Relation::Relation(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Relation Relation::full(int n) {
  std::vector<Pair> ps;
  ps.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) ps.emplace_back(a, b);
  return Relation(std::move(ps));
}

Relation Relation::identity(int n) {
  std::vector<Pair> ps;
  ps.reserve(n);
  for (int a = 0; a < n; ++a) ps.emplace_back(a, a);
  return Relation(std::move(ps));
}

Relation Relation::le(int n) {
  std::vector<Pair> ps;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) ps.emplace_back(a, b);
  return Relation(std::move(ps));
}

bool Relation::contains(int a, int b) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{a, b});
}

Relation Relation::converse() const {
  std::vector<Pair> ps;
  ps.reserve(pairs_.size());
  for (const auto& [a, b] : pairs_) ps.emplace_back(b, a);
  return Relation(std::move(ps));
}

Relation Relation::compose(const Relation& other) const {
  std::vector<Pair> ps;
  for (const auto& [a, b] : pairs_) {
    auto it = std::lower_bound(other.pairs_.begin(), other.pairs_.end(),
                               Pair{b, std::numeric_limits<int>::min()});
    for (; it != other.pairs_.end() && it->first == b; ++it)
      ps.emplace_back(a, it->second);
  }
  return Relation(std::move(ps));
}

Relation Relation::intersect(const Relation& other) const {
  std::vector<Pair> ps;
  std::set_intersection(pairs_.begin(), pairs_.end(), other.pairs_.begin(),
                        other.pairs_.end(), std::back_inserter(ps));
  Relation r;
  r.pairs_ = std::move(ps);
  return r;
}

Relation Relation::unite(const Relation& other) const {
  std::vector<Pair> ps;
  std::set_union(pairs_.begin(), pairs_.end(), other.pairs_.begin(),
                 other.pairs_.end(), std::back_inserter(ps));
  Relation r;
  r.pairs_ = std::move(ps);
  return r;
}

Relation Relation::complement(int n) const {
  std::vector<Pair> ps;
  ps.reserve(static_cast<std::size_t>(n) * n - pairs_.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!contains(a, b)) ps.emplace_back(a, b);
  Relation r;
  r.pairs_ = std::move(ps);
  return r;
}

std::vector<int> Relation::image(const std::vector<int>& s) const {
  std::vector<int> out;
  for (const auto& [a, b] : pairs_)
    if (std::binary_search(s.begin(), s.end(), a)) out.push_back(b);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> Relation::preimage(const std::vector<int>& s) const {
  std::vector<int> out;
  for (const auto& [a, b] : pairs_)
    if (std::binary_search(s.begin(), s.end(), b)) out.push_back(a);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Interval Interval::of(int lo, int hi) {
  if (hi < lo) throw UsageError("interval bounds out of order");
  return {lo, hi};
}

Interval Interval::intersect(const Interval& other) const {
  if (empty() || other.empty()) return empty_interval();
  int lo2 = std::max(lo, other.lo);
  int hi2 = std::min(hi, other.hi);
  return hi2 < lo2 ? empty_interval() : Interval{lo2, hi2};
}

namespace {

// Forward half of the check. On a finite chain every interval equals
// [min, max] of a pair of its points, so checking the minimal interval
// [a1,a2] for every pair of related points suffices (property-tested against
// the all-intervals checker in the test suite).
std::optional<IpCounterexample> forward_counterexample(const Relation& r,
                                                       int n,
                                                       IpDirection dir) {
  std::vector<char> in_range(std::max(n, 1), 0);
  std::vector<std::vector<int>> preimage_of(std::max(n, 1));
  for (const auto& [a, b] : r.pairs()) {
    in_range[b] = 1;
    preimage_of[b].push_back(a);  // sorted: pairs are sorted by first coord
  }
  const auto& ps = r.pairs();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = 0; j < ps.size(); ++j) {
      int a1 = ps[i].first, b1 = ps[i].second;
      int a2 = ps[j].first, b2 = ps[j].second;
      if (a1 > a2) continue;
      int lo = std::min(b1, b2), hi = std::max(b1, b2);
      for (int b = lo + 1; b < hi; ++b) {
        if (!in_range[b]) continue;
        const auto& pre = preimage_of[b];
        auto it = std::lower_bound(pre.begin(), pre.end(), a1);
        if (it == pre.end() || *it > a2)
          return IpCounterexample{a1, a2, b, dir};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<IpCounterexample> ip_counterexample(const Relation& r, int n) {
  if (auto c = forward_counterexample(r, n, IpDirection::Forward)) return c;
  return forward_counterexample(r.converse(), n, IpDirection::Backward);
}

bool is_interval_preserving(const Relation& r, int n) {
  return !ip_counterexample(r, n).has_value();
}

std::string ip_witness_text(const IpCounterexample& c) {
  std::ostringstream out;
  out << "counterexample (a1=" << c.a1 << ", a2=" << c.a2 << ", b=" << c.b
      << ", "
      << (c.direction == IpDirection::Forward ? "forward" : "backward") << ")";
  return out.str();
}

}  // namespace ipfo
