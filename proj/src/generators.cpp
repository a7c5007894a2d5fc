#include "generators.hpp"

#include <algorithm>
#include <random>

#include "errors.hpp"

namespace ipfo {

namespace {

std::vector<int> sample_subset(int n, int count, std::mt19937_64& rng) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

Relation gen_monotone(int n, std::uint64_t seed, MonotoneDirection dir,
                      double density) {
  if (!(density > 0.0 && density <= 1.0))
    throw UsageError("density must be in (0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution pick(density);
  std::vector<int> domain;
  for (int i = 0; i < n; ++i)
    if (pick(rng)) domain.push_back(i);
  std::vector<int> values =
      sample_subset(n, static_cast<int>(domain.size()), rng);
  if (dir == MonotoneDirection::Decreasing)
    std::reverse(values.begin(), values.end());
  std::vector<Relation::Pair> ps;
  ps.reserve(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i)
    ps.emplace_back(domain[i], values[i]);
  return Relation(std::move(ps));
}

Relation gen_until(const Structure& m, const std::string& p,
                   const std::string& q) {
  const auto& pv = m.pred(p);
  const auto& qv = m.pred(q);
  auto in = [](const std::vector<int>& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
  };
  std::vector<Relation::Pair> ps;
  for (int b : qv) {
    // walk left from b while P holds strictly in between
    for (int a = b - 1; a >= 0; --a) {
      ps.emplace_back(a, b);
      if (!in(pv, a)) break;  // a itself would sit strictly between a-1 and b
    }
  }
  return Relation(std::move(ps));
}

Relation gen_succ(int n, int k) {
  if (k < 0) throw UsageError("succ offset must be nonnegative");
  std::vector<Relation::Pair> ps;
  for (int i = 0; i + k <= n - 1; ++i) ps.emplace_back(i, i + k);
  return Relation(std::move(ps));
}

namespace {

Relation random_valuation_until(int n, std::mt19937_64& rng) {
  std::vector<int> pv, qv;
  std::bernoulli_distribution half(0.5);
  for (int i = 0; i < n; ++i) {
    if (half(rng)) pv.push_back(i);
    if (half(rng)) qv.push_back(i);
  }
  Structure m(n, {{"P", pv}, {"Q", qv}}, {});
  return gen_until(m, "P", "Q");
}

Relation random_ip_rec(int n, std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> roll(0, 99);
  int r = roll(rng);
  if (depth > 0 && r < 30) {
    // combine two smaller samples; closure keeps them interval-preserving
    Relation a = random_ip_rec(n, rng, depth - 1);
    Relation b = random_ip_rec(n, rng, depth - 1);
    return r < 20 ? a.compose(b) : a.intersect(b);
  }
  if (depth > 0 && r < 40)
    return random_ip_rec(n, rng, depth - 1).converse();
  if (r < 55) return random_valuation_until(n, rng);
  if (r < 65) {
    std::uniform_int_distribution<int> offs(0, std::max(n - 1, 0));
    return gen_succ(n, offs(rng));
  }
  if (r < 90) {
    std::uniform_real_distribution<double> dens(0.2, 1.0);
    return gen_monotone(n, rng(), r % 2 ? MonotoneDirection::Increasing
                                        : MonotoneDirection::Decreasing,
                        dens(rng));
  }
  // rejection sampling: sparse random subsets are IP often enough
  for (int tries = 0; tries < 32; ++tries) {
    std::bernoulli_distribution pick(n > 0 ? 1.5 / n : 0.5);
    std::vector<Relation::Pair> ps;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (pick(rng)) ps.emplace_back(a, b);
    Relation cand(std::move(ps));
    if (is_interval_preserving(cand, n)) return cand;
  }
  return gen_monotone(n, rng(), MonotoneDirection::Increasing, 0.5);
}

}  // namespace

Relation gen_random_ip(int n, std::uint64_t seed) {
  if (n <= 0) return Relation();
  std::mt19937_64 rng(seed);
  Relation out = random_ip_rec(n, rng, 2);
  if (!is_interval_preserving(out, n))
    throw InternalError("gen_random_ip produced a non-IP relation");
  return out;
}

std::vector<Relation> enumerate_ip_relations(int n) {
  if (n > 3)
    throw UsageError(
        "enumerate_ip_relations is exhaustive over 2^(n*n) subsets and is "
        "capped at n <= 3");
  if (n < 0) throw UsageError("domain size must be nonnegative");
  std::vector<Relation::Pair> cells;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) cells.emplace_back(a, b);
  std::vector<Relation> out;
  for (std::uint64_t mask = 0; mask < (1ULL << cells.size()); ++mask) {
    std::vector<Relation::Pair> ps;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (mask & (1ULL << i)) ps.push_back(cells[i]);
    Relation r(std::move(ps));
    if (is_interval_preserving(r, n)) out.push_back(std::move(r));
  }
  return out;
}

Relation non_ip_family(int n) {
  if (n < 3) throw UsageError("non_ip_family requires n >= 3");
  std::vector<Relation::Pair> ps;
  ps.emplace_back(0, 0);
  for (int i = 1; i < n; ++i) ps.emplace_back(i, n - i);
  return Relation(std::move(ps));
}

}  // namespace ipfo
