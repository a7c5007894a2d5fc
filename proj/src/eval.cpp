#include "eval.hpp"

#include <algorithm>

#include "errors.hpp"

namespace ipfo {

std::size_t Evaluator::FoKeyHash::operator()(const FoKey& k) const {
  std::size_t h = std::hash<const void*>{}(k.node);
  for (int v : k.vals)
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  return h;
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> complement_set(const std::vector<int>& s, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  return out;
}

}  // namespace

const std::vector<int>& Evaluator::state(const StatePtr& s) {
  auto it = state_memo_.find(s.get());
  if (it != state_memo_.end()) return it->second;
  int n = m_.size();
  std::vector<int> out;
  switch (s->kind) {
    case StateK::Pred:
      out = m_.pred(s->pred);
      break;
    case StateK::True:
      for (int i = 0; i < n; ++i) out.push_back(i);
      break;
    case StateK::False:
      break;
    case StateK::Or: {
      const auto& a = state(s->a);
      const auto& b = state(s->b);
      std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                     std::back_inserter(out));
      break;
    }
    case StateK::And: {
      const auto& a = state(s->a);
      const auto& b = state(s->b);
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(out));
      break;
    }
    case StateK::Not:
      out = complement_set(state(s->a), n);
      break;
    case StateK::Diamond: {
      const auto& r = path(s->path);
      out = r.preimage(state(s->a));
      break;
    }
    case StateK::Loop: {
      const auto& r = path(s->path);
      for (int i = 0; i < n; ++i)
        if (r.contains(i, i)) out.push_back(i);
      break;
    }
  }
  return state_memo_.emplace(s.get(), std::move(out)).first->second;
}

const Relation& Evaluator::path(const PathPtr& p) {
  auto it = path_memo_.find(p.get());
  if (it != path_memo_.end()) return it->second;
  int n = m_.size();
  Relation out;
  switch (p->kind) {
    case PathK::Atom:
      out = m_.rel(p->rel);
      break;
    case PathK::Le:
      out = Relation::le(n);
      break;
    case PathK::Test: {
      std::vector<Relation::Pair> ps;
      for (int i : state(p->test)) ps.emplace_back(i, i);
      out = Relation(std::move(ps));
      break;
    }
    case PathK::Converse:
      out = path(p->a).converse();
      break;
    case PathK::Compose:
      out = path(p->a).compose(path(p->b));
      break;
    case PathK::Union:
      out = path(p->a).unite(path(p->b));
      break;
    case PathK::Inter:
      out = path(p->a).intersect(path(p->b));
      break;
    case PathK::Complement:
      out = path(p->a).complement(n);
      break;
    case PathK::C1:
    case PathK::C2:
    case PathK::C3:
    case PathK::C4: {
      // Direct semantics from the row/column extrema of the child relation;
      // the definitional expansion is kept only as a cross-check.
      const Relation& r = path(p->a);
      std::vector<int> row_min(n, -1), row_max(n, -1), col_min(n, -1),
          col_max(n, -1);
      for (const auto& [a, b] : r.pairs()) {
        if (row_min[a] < 0 || b < row_min[a]) row_min[a] = b;
        if (b > row_max[a]) row_max[a] = b;
        if (col_min[b] < 0 || a < col_min[b]) col_min[b] = a;
        if (a > col_max[b]) col_max[b] = a;
      }
      bool b_left = p->kind == PathK::C1 || p->kind == PathK::C2;
      bool a_left = p->kind == PathK::C1 || p->kind == PathK::C3;
      std::vector<Relation::Pair> ps;
      for (int a = 0; a < n; ++a) {
        if (row_min[a] < 0) continue;  // empty image row
        for (int b = 0; b < n; ++b) {
          if (col_min[b] < 0) continue;
          bool bok = b_left ? b < row_min[a] : b > row_max[a];
          bool aok = a_left ? a < col_min[b] : a > col_max[b];
          if (bok && aok) ps.emplace_back(a, b);
        }
      }
      out = Relation(std::move(ps));
      break;
    }
  }
  return path_memo_.emplace(p.get(), std::move(out)).first->second;
}

const std::vector<std::string>& Evaluator::fo_free(const FoPtr& f) {
  auto it = fo_free_memo_.find(f.get());
  if (it != fo_free_memo_.end()) return it->second;
  auto fv = free_vars(f);
  std::vector<std::string> out(fv.begin(), fv.end());
  return fo_free_memo_.emplace(f.get(), std::move(out)).first->second;
}

bool Evaluator::fo_rec(const FoPtr& f, std::map<std::string, int>& nu) {
  switch (f->kind) {
    case FoK::Pred: {
      const auto& s = m_.pred(f->name);
      return std::binary_search(s.begin(), s.end(), nu.at(f->x));
    }
    case FoK::Le:
      return nu.at(f->x) <= nu.at(f->y);
    case FoK::Eq:
      return nu.at(f->x) == nu.at(f->y);
    case FoK::Rel:
      return m_.rel(f->name).contains(nu.at(f->x), nu.at(f->y));
    default:
      break;
  }
  FoKey key{f.get(), {}};
  const auto& fv = fo_free(f);
  key.vals.reserve(fv.size());
  for (const auto& v : fv) key.vals.push_back(nu.at(v));
  auto it = fo_memo_.find(key);
  if (it != fo_memo_.end()) return it->second;
  bool result = false;
  switch (f->kind) {
    case FoK::Or:
      result = fo_rec(f->a, nu) || fo_rec(f->b, nu);
      break;
    case FoK::And:
      result = fo_rec(f->a, nu) && fo_rec(f->b, nu);
      break;
    case FoK::Implies:
      result = !fo_rec(f->a, nu) || fo_rec(f->b, nu);
      break;
    case FoK::Not:
      result = !fo_rec(f->a, nu);
      break;
    case FoK::Exists:
    case FoK::Forall: {
      bool exists = f->kind == FoK::Exists;
      auto saved = nu.find(f->name);
      std::optional<int> old;
      if (saved != nu.end()) old = saved->second;
      result = !exists;
      for (int v = 0; v < m_.size(); ++v) {
        nu[f->name] = v;
        bool inner = fo_rec(f->a, nu);
        if (exists && inner) {
          result = true;
          break;
        }
        if (!exists && !inner) {
          result = false;
          break;
        }
      }
      if (old)
        nu[f->name] = *old;
      else
        nu.erase(f->name);
      break;
    }
    default:
      throw InternalError("eval_fo: bad node");
  }
  fo_memo_.emplace(std::move(key), result);
  return result;
}

bool Evaluator::fo(const FoPtr& f, const Assignment& nu) {
  for (const auto& v : fo_free(f))
    if (!nu.count(v))
      throw UsageError("unbound free variable: " + v);
  std::map<std::string, int> work = nu;
  for (const auto& [var, val] : work)
    if (val < 0 || val >= m_.size())
      throw UsageError("assignment for " + var + " is out of range");
  return fo_rec(f, work);
}

bool Evaluator::pbc(const PbcPtr& p, const Assignment& nu) {
  switch (p->kind) {
    case PbcK::Atom: {
      auto x = nu.find(p->x);
      auto y = nu.find(p->y);
      if (x == nu.end()) throw UsageError("unbound free variable: " + p->x);
      if (y == nu.end()) throw UsageError("unbound free variable: " + p->y);
      return path(p->path).contains(x->second, y->second);
    }
    case PbcK::Or:
      for (const auto& kid : p->kids)
        if (pbc(kid, nu)) return true;
      return false;
    case PbcK::And:
      for (const auto& kid : p->kids)
        if (!pbc(kid, nu)) return false;
      return true;
  }
  throw InternalError("eval_pbc: bad node");
}

bool eval_fo(const Structure& m, const FoPtr& f, const Assignment& nu) {
  Evaluator ev(m);
  return ev.fo(f, nu);
}

std::vector<int> eval_state(const Structure& m, const StatePtr& s) {
  Evaluator ev(m);
  return ev.state(s);
}

Relation eval_path(const Structure& m, const PathPtr& p) {
  Evaluator ev(m);
  return ev.path(p);
}

bool eval_pbc(const Structure& m, const PbcPtr& p, const Assignment& nu) {
  Evaluator ev(m);
  return ev.pbc(p, nu);
}

std::optional<Assignment> fo_equiv_witness(const Structure& m, const FoPtr& a,
                                           const FoPtr& b) {
  auto fva = free_vars(a);
  auto fvb = free_vars(b);
  std::vector<std::string> vars(fva.begin(), fva.end());
  for (const auto& v : fvb)
    if (!fva.count(v)) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  Evaluator ev(m);
  int n = m.size();
  std::size_t k = vars.size();
  std::vector<int> vals(k, 0);
  while (true) {
    Assignment nu;
    for (std::size_t i = 0; i < k; ++i) nu[vars[i]] = vals[i];
    if (ev.fo(a, nu) != ev.fo(b, nu)) return nu;
    std::size_t i = k;
    while (i > 0) {
      if (++vals[i - 1] < n) break;
      vals[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return std::nullopt;
}

}  // namespace ipfo
