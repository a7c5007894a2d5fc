#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ipfo {

// Finite binary relation over domain indices. Pairs are kept sorted and
// duplicate-free, so set algebra reduces to merges.
class Relation {
 public:
  using Pair = std::pair<int, int>;

  Relation() = default;
  explicit Relation(std::vector<Pair> pairs);

  static Relation full(int n);
  static Relation identity(int n);
  static Relation le(int n);  // reflexive order relation on 0..n-1

  const std::vector<Pair>& pairs() const { return pairs_; }
  bool contains(int a, int b) const;
  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }

  Relation converse() const;
  Relation compose(const Relation& other) const;
  Relation intersect(const Relation& other) const;
  Relation unite(const Relation& other) const;
  Relation complement(int n) const;

  // image(S) = { b | exists a in S with (a,b) in R }; inputs and outputs are
  // sorted index sets.
  std::vector<int> image(const std::vector<int>& s) const;
  std::vector<int> preimage(const std::vector<int>& s) const;

  bool operator==(const Relation& other) const = default;

 private:
  std::vector<Pair> pairs_;
};

// Closed interval of the index order; hi < lo encodes the empty interval.
struct Interval {
  int lo = 0;
  int hi = -1;

  static Interval empty_interval() { return {0, -1}; }
  static Interval of(int lo, int hi);
  bool empty() const { return hi < lo; }
  bool contains(int v) const { return lo <= v && v <= hi; }
  Interval intersect(const Interval& other) const;
};

enum class IpDirection { Forward, Backward };

// Witness that a relation is not interval-preserving. For Forward, [a1,a2]
// is the offending interval of first coordinates and b the point of the
// image's span that has a preimage but none inside [a1,a2]. For Backward the
// roles are mirrored through the converse: [a1,a2] lies among second
// coordinates and b among first coordinates.
struct IpCounterexample {
  int a1, a2, b;
  IpDirection direction;
};

std::optional<IpCounterexample> ip_counterexample(const Relation& r, int n);
bool is_interval_preserving(const Relation& r, int n);
std::string ip_witness_text(const IpCounterexample& c);

}  // namespace ipfo
