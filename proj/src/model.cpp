#include "model.hpp"

#include <algorithm>

#include <json.hpp>

#include "ast.hpp"
#include "errors.hpp"

namespace ipfo {

Structure::Structure(int size,
                     std::map<std::string, std::vector<int>> predicates,
                     std::map<std::string, Relation> relations,
                     bool allow_non_ip)
    : size_(size),
      preds_(std::move(predicates)),
      rels_(std::move(relations)),
      allow_non_ip_(allow_non_ip) {
  if (size_ < 0) throw ModelError("size must be nonnegative");
  for (auto& [name, ixs] : preds_) {
    std::sort(ixs.begin(), ixs.end());
    ixs.erase(std::unique(ixs.begin(), ixs.end()), ixs.end());
    for (int i : ixs)
      if (i < 0 || i >= size_)
        throw ModelError("predicate " + name + ": index out of range");
  }
  for (const auto& [name, rel] : rels_) {
    for (const auto& [a, b] : rel.pairs())
      if (a < 0 || a >= size_ || b < 0 || b >= size_)
        throw ModelError("relation " + name + ": index out of range");
    if (!allow_non_ip_) {
      if (auto cex = ip_counterexample(rel, size_))
        throw ModelError("relation " + name +
                         " is not interval-preserving: " +
                         ip_witness_text(*cex));
    }
  }
}

const std::vector<int>& Structure::pred(const std::string& p) const {
  auto it = preds_.find(p);
  if (it == preds_.end()) throw UsageError("unknown predicate: " + p);
  return it->second;
}

const Relation& Structure::rel(const std::string& r) const {
  auto it = rels_.find(r);
  if (it == rels_.end()) throw UsageError("unknown relation: " + r);
  return it->second;
}

Structure Structure::from_json(const std::string& text, bool allow_non_ip) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(std::string("model is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ModelError("model must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "size" && key != "predicates" && key != "relations")
      throw ModelError("unknown key in model: " + key);
  if (!j.contains("size") || !j["size"].is_number_integer())
    throw ModelError("model requires an integer \"size\"");
  int size = j["size"].get<int>();

  std::map<std::string, std::vector<int>> preds;
  if (j.contains("predicates")) {
    if (!j["predicates"].is_object())
      throw ModelError("\"predicates\" must be an object");
    for (const auto& [name, val] : j["predicates"].items()) {
      if (!is_pred_name(name))
        throw ModelError("invalid predicate name: " + name);
      if (!val.is_array())
        throw ModelError("predicate " + name + " must map to an array");
      std::vector<int> ixs;
      for (const auto& v : val) {
        if (!v.is_number_integer())
          throw ModelError("predicate " + name + ": indices must be integers");
        ixs.push_back(v.get<int>());
      }
      auto sorted = ixs;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ModelError("predicate " + name + ": duplicate index");
      preds[name] = std::move(ixs);
    }
  }

  std::map<std::string, Relation> rels;
  if (j.contains("relations")) {
    if (!j["relations"].is_object())
      throw ModelError("\"relations\" must be an object");
    for (const auto& [name, val] : j["relations"].items()) {
      if (!is_rel_name(name))
        throw ModelError("invalid relation symbol: " + name);
      if (!val.is_array())
        throw ModelError("relation " + name + " must map to an array");
      std::vector<Relation::Pair> ps;
      for (const auto& pair : val) {
        if (!pair.is_array() || pair.size() != 2 ||
            !pair[0].is_number_integer() || !pair[1].is_number_integer())
          throw ModelError("relation " + name +
                           ": pairs must be two-element integer arrays");
        ps.emplace_back(pair[0].get<int>(), pair[1].get<int>());
      }
      auto sorted = ps;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ModelError("relation " + name + ": duplicate pair");
      rels.emplace(name, Relation(std::move(ps)));
    }
  }

  return Structure(size, std::move(preds), std::move(rels), allow_non_ip);
}

std::string Structure::to_json() const {
  nlohmann::json j;
  j["size"] = size_;
  j["predicates"] = nlohmann::json::object();
  for (const auto& [name, ixs] : preds_) j["predicates"][name] = ixs;
  j["relations"] = nlohmann::json::object();
  for (const auto& [name, rel] : rels_) {
    auto arr = nlohmann::json::array();
    for (const auto& [a, b] : rel.pairs()) arr.push_back({a, b});
    j["relations"][name] = arr;
  }
  return j.dump(2);
}

}  // namespace ipfo
