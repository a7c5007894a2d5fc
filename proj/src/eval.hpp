#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ast.hpp"
#include "model.hpp"

namespace ipfo {

using Assignment = std::map<std::string, int>;

// Brute-force evaluation over one structure. Results are memoized per node
// (and, for FO nodes, per assignment restricted to the node's free
// variables) for the lifetime of the evaluator; translated formulas share
// subterms heavily, so this keeps repeated work linear.
//
// Cost: path evaluation is O(n^3) per Compose node and O(n^2) per other
// node; FO evaluation visits each (node, restricted assignment) pair once.
class Evaluator {
 public:
  explicit Evaluator(const Structure& m) : m_(m) {}

  const Structure& structure() const { return m_; }

  const Relation& path(const PathPtr& p);
  const std::vector<int>& state(const StatePtr& s);  // sorted point set
  bool fo(const FoPtr& f, const Assignment& nu);
  bool pbc(const PbcPtr& p, const Assignment& nu);

 private:
  struct FoKey {
    const FoNode* node;
    std::vector<int> vals;
    bool operator==(const FoKey&) const = default;
  };
  struct FoKeyHash {
    std::size_t operator()(const FoKey& k) const;
  };

  bool fo_rec(const FoPtr& f, std::map<std::string, int>& nu);
  const std::vector<std::string>& fo_free(const FoPtr& f);

  const Structure& m_;
  std::unordered_map<const PathNode*, Relation> path_memo_;
  std::unordered_map<const StateNode*, std::vector<int>> state_memo_;
  std::unordered_map<const FoNode*, std::vector<std::string>> fo_free_memo_;
  std::unordered_map<FoKey, bool, FoKeyHash> fo_memo_;
};

bool eval_fo(const Structure& m, const FoPtr& f, const Assignment& nu);
std::vector<int> eval_state(const Structure& m, const StatePtr& s);
Relation eval_path(const Structure& m, const PathPtr& p);
bool eval_pbc(const Structure& m, const PbcPtr& p, const Assignment& nu);

// Equivalence of two FO formulas on one structure: iterates every assignment
// over the union of the free variables (in sorted variable order, values in
// lexicographic order) and returns the first disagreement, if any.
std::optional<Assignment> fo_equiv_witness(const Structure& m, const FoPtr& a,
                                           const FoPtr& b);

}  // namespace ipfo
