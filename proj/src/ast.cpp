#include "ast.hpp"

#include <algorithm>
#include <array>
#include <cassert>

#include "errors.hpp"

namespace ipfo {

namespace {

inline std::size_t hash_combine(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

inline std::size_t hash_str(const std::string& s) {
  return std::hash<std::string>{}(s);
}

FoPtr mk_fo(FoK k, std::string name, std::string x, std::string y, FoPtr a,
            FoPtr b) {
  std::size_t h = hash_combine(0x10, static_cast<std::size_t>(k));
  h = hash_combine(h, hash_str(name));
  h = hash_combine(h, hash_str(x));
  h = hash_combine(h, hash_str(y));
  if (a) h = hash_combine(h, a->hash);
  if (b) h = hash_combine(h, b->hash);
  return std::make_shared<const FoNode>(FoNode{
      k, std::move(name), std::move(x), std::move(y), std::move(a),
      std::move(b), h});
}

StatePtr mk_st(StateK k, std::string pred, StatePtr a, StatePtr b, PathPtr p) {
  std::size_t h = hash_combine(0x20, static_cast<std::size_t>(k));
  h = hash_combine(h, hash_str(pred));
  if (a) h = hash_combine(h, a->hash);
  if (b) h = hash_combine(h, b->hash);
  if (p) h = hash_combine(h, p->hash);
  return std::make_shared<const StateNode>(StateNode{
      k, std::move(pred), std::move(a), std::move(b), std::move(p), h});
}

PathPtr mk_pt(PathK k, std::string rel, StatePtr t, PathPtr a, PathPtr b) {
  std::size_t h = hash_combine(0x30, static_cast<std::size_t>(k));
  h = hash_combine(h, hash_str(rel));
  if (t) h = hash_combine(h, t->hash);
  if (a) h = hash_combine(h, a->hash);
  if (b) h = hash_combine(h, b->hash);
  return std::make_shared<const PathNode>(PathNode{
      k, std::move(rel), std::move(t), std::move(a), std::move(b), h});
}

}  // namespace

FoPtr fo_pred(std::string p, std::string x) {
  return mk_fo(FoK::Pred, std::move(p), std::move(x), "", nullptr, nullptr);
}
FoPtr fo_le(std::string x, std::string y) {
  return mk_fo(FoK::Le, "", std::move(x), std::move(y), nullptr, nullptr);
}
FoPtr fo_eq(std::string x, std::string y) {
  return mk_fo(FoK::Eq, "", std::move(x), std::move(y), nullptr, nullptr);
}
FoPtr fo_rel(std::string r, std::string x, std::string y) {
  return mk_fo(FoK::Rel, std::move(r), std::move(x), std::move(y), nullptr,
               nullptr);
}
FoPtr fo_or(FoPtr a, FoPtr b) {
  return mk_fo(FoK::Or, "", "", "", std::move(a), std::move(b));
}
FoPtr fo_and(FoPtr a, FoPtr b) {
  return mk_fo(FoK::And, "", "", "", std::move(a), std::move(b));
}
FoPtr fo_not(FoPtr a) {
  return mk_fo(FoK::Not, "", "", "", std::move(a), nullptr);
}
FoPtr fo_implies(FoPtr a, FoPtr b) {
  return mk_fo(FoK::Implies, "", "", "", std::move(a), std::move(b));
}
FoPtr fo_exists(std::string v, FoPtr body) {
  return mk_fo(FoK::Exists, std::move(v), "", "", std::move(body), nullptr);
}
FoPtr fo_forall(std::string v, FoPtr body) {
  return mk_fo(FoK::Forall, std::move(v), "", "", std::move(body), nullptr);
}

StatePtr st_pred(std::string p) {
  return mk_st(StateK::Pred, std::move(p), nullptr, nullptr, nullptr);
}
StatePtr st_or(StatePtr a, StatePtr b) {
  return mk_st(StateK::Or, "", std::move(a), std::move(b), nullptr);
}
StatePtr st_and(StatePtr a, StatePtr b) {
  return mk_st(StateK::And, "", std::move(a), std::move(b), nullptr);
}
StatePtr st_not(StatePtr a) {
  return mk_st(StateK::Not, "", std::move(a), nullptr, nullptr);
}
StatePtr st_diamond(PathPtr p, StatePtr s) {
  return mk_st(StateK::Diamond, "", std::move(s), nullptr, std::move(p));
}
StatePtr st_loop(PathPtr p) {
  return mk_st(StateK::Loop, "", nullptr, nullptr, std::move(p));
}
StatePtr st_true() { return mk_st(StateK::True, "", nullptr, nullptr, nullptr); }
StatePtr st_false() {
  return mk_st(StateK::False, "", nullptr, nullptr, nullptr);
}

PathPtr pt_atom(std::string r) {
  return mk_pt(PathK::Atom, std::move(r), nullptr, nullptr, nullptr);
}
PathPtr pt_le() { return mk_pt(PathK::Le, "", nullptr, nullptr, nullptr); }
PathPtr pt_ge() { return pt_converse(pt_le()); }
PathPtr pt_test(StatePtr s) {
  return mk_pt(PathK::Test, "", std::move(s), nullptr, nullptr);
}
PathPtr pt_converse(PathPtr p) {
  return mk_pt(PathK::Converse, "", nullptr, std::move(p), nullptr);
}
PathPtr pt_compose(PathPtr a, PathPtr b) {
  return mk_pt(PathK::Compose, "", nullptr, std::move(a), std::move(b));
}
PathPtr pt_union(PathPtr a, PathPtr b) {
  return mk_pt(PathK::Union, "", nullptr, std::move(a), std::move(b));
}
PathPtr pt_inter(PathPtr a, PathPtr b) {
  return mk_pt(PathK::Inter, "", nullptr, std::move(a), std::move(b));
}
PathPtr pt_complement(PathPtr p) {
  return mk_pt(PathK::Complement, "", nullptr, std::move(p), nullptr);
}
PathPtr pt_c(int i, PathPtr p) {
  assert(i >= 1 && i <= 4);
  static const std::array<PathK, 4> ks = {PathK::C1, PathK::C2, PathK::C3,
                                          PathK::C4};
  return mk_pt(ks[i - 1], "", nullptr, std::move(p), nullptr);
}

PbcPtr pbc_atom(PathPtr p, std::string x, std::string y) {
  std::size_t h = hash_combine(0x40, p->hash);
  h = hash_combine(h, hash_str(x));
  h = hash_combine(h, hash_str(y));
  return std::make_shared<const PbcNode>(
      PbcNode{PbcK::Atom, std::move(p), std::move(x), std::move(y), {}, h});
}

static PbcPtr pbc_nary(PbcK k, std::vector<PbcPtr> kids) {
  if (kids.empty()) throw InternalError("empty boolean combination");
  std::vector<PbcPtr> flat;
  flat.reserve(kids.size());
  for (auto& kid : kids) {
    if (kid->kind == k) {
      flat.insert(flat.end(), kid->kids.begin(), kid->kids.end());
    } else {
      flat.push_back(std::move(kid));
    }
  }
  if (flat.size() == 1) return flat[0];
  std::size_t h = hash_combine(0x50, static_cast<std::size_t>(k));
  for (const auto& kid : flat) h = hash_combine(h, kid->hash);
  return std::make_shared<const PbcNode>(
      PbcNode{k, nullptr, "", "", std::move(flat), h});
}

PbcPtr pbc_or(std::vector<PbcPtr> kids) {
  return pbc_nary(PbcK::Or, std::move(kids));
}
PbcPtr pbc_and(std::vector<PbcPtr> kids) {
  return pbc_nary(PbcK::And, std::move(kids));
}

// ---- equality / ordering ----------------------------------------------------

bool equal(const FoPtr& a, const FoPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash != b->hash || a->kind != b->kind) return false;
  return a->name == b->name && a->x == b->x && a->y == b->y &&
         equal(a->a, b->a) && equal(a->b, b->b);
}

bool equal(const StatePtr& a, const StatePtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash != b->hash || a->kind != b->kind) return false;
  return a->pred == b->pred && equal(a->a, b->a) && equal(a->b, b->b) &&
         equal(a->path, b->path);
}

bool equal(const PathPtr& a, const PathPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash != b->hash || a->kind != b->kind) return false;
  return a->rel == b->rel && equal(a->test, b->test) && equal(a->a, b->a) &&
         equal(a->b, b->b);
}

bool equal(const PbcPtr& a, const PbcPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash != b->hash || a->kind != b->kind) return false;
  if (a->kind == PbcK::Atom)
    return a->x == b->x && a->y == b->y && equal(a->path, b->path);
  if (a->kids.size() != b->kids.size()) return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!equal(a->kids[i], b->kids[i])) return false;
  return true;
}

namespace {
inline int cmp3(int a, int b) { return a < b ? -1 : (a > b ? 1 : 0); }
inline int cmp3(const std::string& a, const std::string& b) {
  return a.compare(b) < 0 ? -1 : (a == b ? 0 : 1);
}
}  // namespace

int compare(const StatePtr& a, const StatePtr& b);

int compare(const PathPtr& a, const PathPtr& b) {
  if (a.get() == b.get()) return 0;
  if (!a) return b ? -1 : 0;
  if (!b) return 1;
  if (int c = cmp3(static_cast<int>(a->kind), static_cast<int>(b->kind)))
    return c;
  if (int c = cmp3(a->rel, b->rel)) return c;
  if (int c = compare(a->test, b->test)) return c;
  if (int c = compare(a->a, b->a)) return c;
  return compare(a->b, b->b);
}

int compare(const StatePtr& a, const StatePtr& b) {
  if (a.get() == b.get()) return 0;
  if (!a) return b ? -1 : 0;
  if (!b) return 1;
  if (int c = cmp3(static_cast<int>(a->kind), static_cast<int>(b->kind)))
    return c;
  if (int c = cmp3(a->pred, b->pred)) return c;
  if (int c = compare(a->a, b->a)) return c;
  if (int c = compare(a->b, b->b)) return c;
  return compare(a->path, b->path);
}

int compare(const PbcPtr& a, const PbcPtr& b) {
  if (a.get() == b.get()) return 0;
  if (!a) return b ? -1 : 0;
  if (!b) return 1;
  if (int c = cmp3(static_cast<int>(a->kind), static_cast<int>(b->kind)))
    return c;
  if (a->kind == PbcK::Atom) {
    if (int c = cmp3(a->x, b->x)) return c;
    if (int c = cmp3(a->y, b->y)) return c;
    return compare(a->path, b->path);
  }
  if (int c = cmp3(static_cast<int>(a->kids.size()),
                   static_cast<int>(b->kids.size())))
    return c;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (int c = compare(a->kids[i], b->kids[i])) return c;
  return 0;
}

// ---- names ------------------------------------------------------------------

bool is_reserved_word(const std::string& s) {
  static const std::set<std::string> words = {
      "le", "true", "false", "test", "inv",    "comp",  "loop",
      "c1", "c2",   "c3",    "c4",   "exists", "forall"};
  return words.count(s) != 0;
}

static bool name_tail_ok(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    char c = s[i];
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

bool is_pred_name(const std::string& s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0])) &&
         name_tail_ok(s);
}

bool is_rel_name(const std::string& s) {
  return !s.empty() && std::islower(static_cast<unsigned char>(s[0])) &&
         name_tail_ok(s) && !is_reserved_word(s);
}

bool is_var_name(const std::string& s) { return is_rel_name(s); }

bool is_fresh_family(const std::string& s) {
  if (s.size() < 2 || s[0] != 'v') return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

void Signature::validate() const {
  for (const auto& p : predicates)
    if (!is_pred_name(p)) throw UsageError("invalid predicate name: " + p);
  for (const auto& r : relsyms)
    if (!is_rel_name(r)) throw UsageError("invalid relation symbol: " + r);
  for (const auto& p : predicates)
    if (std::binary_search(relsyms.begin(), relsyms.end(), p))
      throw UsageError("name used as both predicate and relation: " + p);
}

bool Signature::has_pred(const std::string& p) const {
  return std::binary_search(predicates.begin(), predicates.end(), p);
}
bool Signature::has_rel(const std::string& r) const {
  return std::binary_search(relsyms.begin(), relsyms.end(), r);
}
void Signature::add_pred(const std::string& p) {
  auto it = std::lower_bound(predicates.begin(), predicates.end(), p);
  if (it == predicates.end() || *it != p) predicates.insert(it, p);
}
void Signature::add_rel(const std::string& r) {
  auto it = std::lower_bound(relsyms.begin(), relsyms.end(), r);
  if (it == relsyms.end() || *it != r) relsyms.insert(it, r);
}

void collect_signature(const FoPtr& f, Signature& sig) {
  if (!f) return;
  if (f->kind == FoK::Pred) sig.add_pred(f->name);
  if (f->kind == FoK::Rel) sig.add_rel(f->name);
  collect_signature(f->a, sig);
  collect_signature(f->b, sig);
}

void collect_signature(const StatePtr& s, Signature& sig) {
  if (!s) return;
  if (s->kind == StateK::Pred) sig.add_pred(s->pred);
  collect_signature(s->a, sig);
  collect_signature(s->b, sig);
  collect_signature(s->path, sig);
}

void collect_signature(const PathPtr& p, Signature& sig) {
  if (!p) return;
  if (p->kind == PathK::Atom) sig.add_rel(p->rel);
  collect_signature(p->test, sig);
  collect_signature(p->a, sig);
  collect_signature(p->b, sig);
}

Signature infer_signature(const FoPtr& f) {
  Signature sig;
  collect_signature(f, sig);
  return sig;
}

// ---- variables --------------------------------------------------------------

namespace {

template <typename OnVar>
void visit_var_occurrences(const FoPtr& f, std::set<std::string>& bound,
                           const OnVar& on_free) {
  if (!f) return;
  switch (f->kind) {
    case FoK::Pred:
      if (!bound.count(f->x)) on_free(f->x);
      return;
    case FoK::Le:
    case FoK::Eq:
    case FoK::Rel:
      if (!bound.count(f->x)) on_free(f->x);
      if (!bound.count(f->y)) on_free(f->y);
      return;
    case FoK::Exists:
    case FoK::Forall: {
      bool was = bound.count(f->name) != 0;
      bound.insert(f->name);
      visit_var_occurrences(f->a, bound, on_free);
      if (!was) bound.erase(f->name);
      return;
    }
    default:
      visit_var_occurrences(f->a, bound, on_free);
      visit_var_occurrences(f->b, bound, on_free);
      return;
  }
}

}  // namespace

std::set<std::string> free_vars(const FoPtr& f) {
  std::set<std::string> out, bound;
  visit_var_occurrences(f, bound, [&](const std::string& v) { out.insert(v); });
  return out;
}

std::vector<std::string> free_vars_ordered(const FoPtr& f) {
  std::vector<std::string> out;
  std::set<std::string> seen, bound;
  visit_var_occurrences(f, bound, [&](const std::string& v) {
    if (seen.insert(v).second) out.push_back(v);
  });
  return out;
}

static void collect_all_vars(const FoPtr& f, std::set<std::string>& out) {
  if (!f) return;
  switch (f->kind) {
    case FoK::Pred:
      out.insert(f->x);
      return;
    case FoK::Le:
    case FoK::Eq:
    case FoK::Rel:
      out.insert(f->x);
      out.insert(f->y);
      return;
    case FoK::Exists:
    case FoK::Forall:
      out.insert(f->name);
      collect_all_vars(f->a, out);
      return;
    default:
      collect_all_vars(f->a, out);
      collect_all_vars(f->b, out);
      return;
  }
}

std::set<std::string> all_var_names(const FoPtr& f) {
  std::set<std::string> out;
  collect_all_vars(f, out);
  return out;
}

int count_vars(const FoPtr& f) {
  return static_cast<int>(all_var_names(f).size());
}

int fresh_var_base(const FoPtr& f) {
  int base = 0;
  for (const auto& v : all_var_names(f)) {
    if (is_fresh_family(v)) {
      int k = std::stoi(v.substr(1));
      base = std::max(base, k + 1);
    }
  }
  return base;
}

FoPtr rename_free_var(const FoPtr& f, const std::string& from,
                      const std::string& to) {
  if (!f) return f;
  switch (f->kind) {
    case FoK::Pred:
      return f->x == from ? fo_pred(f->name, to) : f;
    case FoK::Le:
    case FoK::Eq:
    case FoK::Rel: {
      if (f->x != from && f->y != from) return f;
      std::string nx = f->x == from ? to : f->x;
      std::string ny = f->y == from ? to : f->y;
      if (f->kind == FoK::Le) return fo_le(nx, ny);
      if (f->kind == FoK::Eq) return fo_eq(nx, ny);
      return fo_rel(f->name, nx, ny);
    }
    case FoK::Exists:
    case FoK::Forall: {
      if (f->name == from) return f;  // shadowed
      FoPtr body = rename_free_var(f->a, from, to);
      if (body.get() == f->a.get()) return f;
      return f->kind == FoK::Exists ? fo_exists(f->name, body)
                                    : fo_forall(f->name, body);
    }
    case FoK::Not: {
      FoPtr a = rename_free_var(f->a, from, to);
      return a.get() == f->a.get() ? f : fo_not(a);
    }
    default: {
      FoPtr a = rename_free_var(f->a, from, to);
      FoPtr b = rename_free_var(f->b, from, to);
      if (a.get() == f->a.get() && b.get() == f->b.get()) return f;
      if (f->kind == FoK::Or) return fo_or(a, b);
      if (f->kind == FoK::And) return fo_and(a, b);
      return fo_implies(a, b);
    }
  }
}

// ---- desugaring -------------------------------------------------------------

FoPtr desugar(const FoPtr& f) {
  if (!f) return f;
  switch (f->kind) {
    case FoK::Pred:
    case FoK::Le:
    case FoK::Eq:
    case FoK::Rel:
      return f;
    case FoK::Or:
      return fo_or(desugar(f->a), desugar(f->b));
    case FoK::Not:
      return fo_not(desugar(f->a));
    case FoK::And:
      return fo_not(fo_or(fo_not(desugar(f->a)), fo_not(desugar(f->b))));
    case FoK::Implies:
      return fo_or(fo_not(desugar(f->a)), desugar(f->b));
    case FoK::Exists:
      return fo_exists(f->name, desugar(f->a));
    case FoK::Forall:
      return fo_not(fo_exists(f->name, fo_not(desugar(f->a))));
  }
  throw InternalError("desugar: bad node");
}

bool is_desugared(const FoPtr& f) {
  if (!f) return true;
  if (f->kind == FoK::And || f->kind == FoK::Implies ||
      f->kind == FoK::Forall)
    return false;
  return is_desugared(f->a) && is_desugared(f->b);
}

// ---- prenex normal form -------------------------------------------------------

namespace {

struct PrefixEntry {
  bool exists;
  std::string var;
};

// Pulls all quantifiers of a desugared formula to the front. Each pulled
// binder is immediately renamed to a unique placeholder so prefixes from
// sibling subtrees can be concatenated without capture.
std::pair<std::vector<PrefixEntry>, FoPtr> pull_quantifiers(const FoPtr& f,
                                                            int& next_ph) {
  switch (f->kind) {
    case FoK::Or: {
      auto [p1, m1] = pull_quantifiers(f->a, next_ph);
      auto [p2, m2] = pull_quantifiers(f->b, next_ph);
      p1.insert(p1.end(), p2.begin(), p2.end());
      return {std::move(p1), fo_or(m1, m2)};
    }
    case FoK::Not: {
      auto [p, m] = pull_quantifiers(f->a, next_ph);
      for (auto& e : p) e.exists = !e.exists;
      return {std::move(p), fo_not(m)};
    }
    case FoK::Exists: {
      auto [p, m] = pull_quantifiers(f->a, next_ph);
      std::string ph = "#" + std::to_string(next_ph++);
      m = rename_free_var(m, f->name, ph);
      p.insert(p.begin(), PrefixEntry{true, ph});
      return {std::move(p), std::move(m)};
    }
    case FoK::Pred:
    case FoK::Le:
    case FoK::Eq:
    case FoK::Rel:
      return {{}, f};
    default:
      throw UsageError("to_prenex requires a desugared formula");
  }
}

}  // namespace

FoPtr to_prenex(const FoPtr& f) {
  if (!is_desugared(f)) throw UsageError("to_prenex requires a desugared formula");
  int next_ph = 0;
  auto [prefix, matrix] = pull_quantifiers(f, next_ph);
  int base = fresh_var_base(f);
  for (auto& e : prefix) {
    std::string fresh = "v" + std::to_string(base++);
    matrix = rename_free_var(matrix, e.var, fresh);
    e.var = fresh;
  }
  FoPtr out = matrix;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
    out = it->exists ? fo_exists(it->var, out) : fo_forall(it->var, out);
  return out;
}

PrenexForm prenex_parts(const FoPtr& f) {
  PrenexForm pf;
  FoPtr cur = f;
  while (cur && (cur->kind == FoK::Exists || cur->kind == FoK::Forall)) {
    pf.prefix.emplace_back(cur->kind == FoK::Exists, cur->name);
    cur = cur->a;
  }
  pf.matrix = cur;
  return pf;
}

// ---- dialects ---------------------------------------------------------------

bool dialect_check(const PathPtr& p, Dialect d) {
  if (!p) return true;
  switch (p->kind) {
    case PathK::Atom:
    case PathK::Le:
      return true;
    case PathK::Test:
      return dialect_check(p->test, d);
    case PathK::Union:
    case PathK::Complement:
      if (d != Dialect::Full) return false;
      break;
    case PathK::Inter:
      if (d == Dialect::FragLoop) return false;
      break;
    default:
      break;
  }
  return dialect_check(p->a, d) && dialect_check(p->b, d);
}

bool dialect_check(const StatePtr& s, Dialect d) {
  if (!s) return true;
  switch (s->kind) {
    case StateK::Pred:
    case StateK::True:
    case StateK::False:
      return true;
    case StateK::Diamond:
      return dialect_check(s->path, d) && dialect_check(s->a, d);
    case StateK::Loop:
      // loop(pi) abbreviates one intersection, so pi gets the cap dialect.
      return dialect_check(s->path,
                           d == Dialect::FragLoop ? Dialect::FragCap : d);
    default:
      return dialect_check(s->a, d) && dialect_check(s->b, d);
  }
}

// ---- DNF ---------------------------------------------------------------------

namespace {

using Conj = std::vector<PbcPtr>;

void insert_atom(Conj& c, const PbcPtr& a) {
  auto it = std::lower_bound(c.begin(), c.end(), a,
                             [](const PbcPtr& l, const PbcPtr& r) {
                               return compare(l, r) < 0;
                             });
  if (it != c.end() && compare(*it, a) == 0) return;  // idempotence
  c.insert(it, a);
}

bool conj_subset(const Conj& small, const Conj& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end(),
                       [](const PbcPtr& l, const PbcPtr& r) {
                         return compare(l, r) < 0;
                       });
}

// Absorption: drop any conjunct that contains another one. Keeps the
// original encounter order of the survivors.
std::vector<Conj> absorb(std::vector<Conj> cs) {
  std::vector<std::size_t> order(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cs[a].size() < cs[b].size();
  });
  std::vector<bool> keep(cs.size(), false);
  std::vector<std::size_t> kept;
  for (std::size_t idx : order) {
    bool subsumed = false;
    for (std::size_t k : kept) {
      if (conj_subset(cs[k], cs[idx])) {
        subsumed = true;
        break;
      }
    }
    if (!subsumed) {
      keep[idx] = true;
      kept.push_back(idx);
    }
  }
  std::vector<Conj> out;
  out.reserve(kept.size());
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (keep[i]) out.push_back(std::move(cs[i]));
  return out;
}

std::vector<Conj> dnf_rec(const PbcPtr& p) {
  switch (p->kind) {
    case PbcK::Atom:
      return {{p}};
    case PbcK::Or: {
      std::vector<Conj> out;
      for (const auto& kid : p->kids) {
        auto sub = dnf_rec(kid);
        out.insert(out.end(), std::make_move_iterator(sub.begin()),
                   std::make_move_iterator(sub.end()));
      }
      return absorb(std::move(out));
    }
    case PbcK::And: {
      std::vector<Conj> acc = {{}};
      for (const auto& kid : p->kids) {
        auto sub = dnf_rec(kid);
        std::vector<Conj> next;
        next.reserve(acc.size() * sub.size());
        for (const auto& c1 : acc) {
          for (const auto& c2 : sub) {
            Conj merged = c1;
            for (const auto& a : c2) insert_atom(merged, a);
            next.push_back(std::move(merged));
          }
        }
        acc = absorb(std::move(next));
      }
      return acc;
    }
  }
  throw InternalError("dnf: bad node");
}

}  // namespace

std::vector<std::vector<PbcPtr>> pbc_to_dnf(const PbcPtr& p) {
  return dnf_rec(p);
}

void collect_pbc_atoms(const PbcPtr& p, std::vector<PbcPtr>& out) {
  if (!p) return;
  if (p->kind == PbcK::Atom) {
    out.push_back(p);
    return;
  }
  for (const auto& kid : p->kids) collect_pbc_atoms(kid, out);
}

std::vector<std::string> pbc_vars_ordered(const PbcPtr& p) {
  std::vector<PbcPtr> atoms;
  collect_pbc_atoms(p, atoms);
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& a : atoms) {
    if (seen.insert(a->x).second) out.push_back(a->x);
    if (seen.insert(a->y).second) out.push_back(a->y);
  }
  return out;
}

}  // namespace ipfo
