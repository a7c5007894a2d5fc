#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "model.hpp"
#include "relation.hpp"

namespace ipfo {

enum class MonotoneDirection { Increasing, Decreasing };

// Graph of a strictly monotone partial function over a random subset of the
// domain of expected size density * n. Interval-preserving by construction.
Relation gen_monotone(int n, std::uint64_t seed, MonotoneDirection dir,
                      double density);

// until relation: pairs (a,b) with a < b, Q at b, and P at every point
// strictly between.
Relation gen_until(const Structure& m, const std::string& p,
                   const std::string& q);

// {(i, i+k) | 0 <= i, i+k <= n-1}; an increasing partial function.
Relation gen_succ(int n, int k);

// Random interval-preserving relation: combinations of the generators above
// plus occasional rejection sampling of arbitrary relations through the
// checker.
Relation gen_random_ip(int n, std::uint64_t seed);

// Every interval-preserving subset of {0..n-1}^2, exactly once. n <= 3.
std::vector<Relation> enumerate_ip_relations(int n);

// {(0,0)} followed by the decreasing tail (i, n-i); the minimal family of
// relations rejected by the checker, used by the negative-control suite.
// Requires n >= 3.
Relation non_ip_family(int n);

}  // namespace ipfo
