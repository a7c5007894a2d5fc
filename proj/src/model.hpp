#pragma once

#include <map>
#include <string>
#include <vector>

#include "relation.hpp"

namespace ipfo {

// Finite linearly ordered structure. The domain is 0..size-1 and the linear
// order is the index order; structures never carry an explicit order
// relation. Relations must pass the interval-preservation check unless the
// structure is built with allow_non_ip.
class Structure {
 public:
  Structure(int size, std::map<std::string, std::vector<int>> predicates,
            std::map<std::string, Relation> relations,
            bool allow_non_ip = false);

  int size() const { return size_; }
  bool allow_non_ip() const { return allow_non_ip_; }

  bool has_pred(const std::string& p) const { return preds_.count(p) != 0; }
  bool has_rel(const std::string& r) const { return rels_.count(r) != 0; }
  const std::vector<int>& pred(const std::string& p) const;  // sorted
  const Relation& rel(const std::string& r) const;

  const std::map<std::string, std::vector<int>>& predicates() const {
    return preds_;
  }
  const std::map<std::string, Relation>& relations() const { return rels_; }

  // Model file format: {"size": 4, "predicates": {"P": [1,3]},
  // "relations": {"a": [[0,2],[1,2]]}}. Unknown keys, out-of-range indices
  // and duplicate entries are rejected.
  static Structure from_json(const std::string& text,
                             bool allow_non_ip = false);
  std::string to_json() const;

 private:
  int size_;
  std::map<std::string, std::vector<int>> preds_;
  std::map<std::string, Relation> rels_;
  bool allow_non_ip_;
};

}  // namespace ipfo
