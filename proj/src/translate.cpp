#include "translate.hpp"

#include <algorithm>
#include <cassert>

#include "errors.hpp"

namespace ipfo {

namespace {

StatePtr diamond_true(const PathPtr& pi) { return st_diamond(pi, st_true()); }

bool is_test_true(const PathPtr& p) {
  return p->kind == PathK::Test && p->test->kind == StateK::True;
}

PathPtr compose_simplified(const PathPtr& a, const PathPtr& b,
                           const TranslateOptions& opts) {
  if (opts.simplify) {
    if (is_test_true(a)) return b;
    if (is_test_true(b)) return a;
  }
  return pt_compose(a, b);
}

PathPtr inter_simplified(const PathPtr& a, const PathPtr& b,
                         const TranslateOptions& opts) {
  if (opts.simplify && equal(a, b)) return a;
  return pt_inter(a, b);
}

StatePtr loop_simplified(const PathPtr& p, const TranslateOptions& opts) {
  if (opts.simplify && p->kind == PathK::Test) return p->test;
  return st_loop(p);
}

}  // namespace

PathPtr left_of(const PathPtr& pi) {
  return pt_compose(pt_test(diamond_true(pi)),
                    pt_complement(pt_compose(pi, pt_le())));
}

PathPtr right_of(const PathPtr& pi) {
  return pt_compose(pt_test(diamond_true(pi)),
                    pt_complement(pt_compose(pi, pt_ge())));
}

namespace {

StatePtr expand_c_state(const StatePtr& s);

PathPtr expand_c_path(const PathPtr& p) {
  switch (p->kind) {
    case PathK::Atom:
    case PathK::Le:
      return p;
    case PathK::Test: {
      StatePtr t = expand_c_state(p->test);
      return t.get() == p->test.get() ? p : pt_test(t);
    }
    case PathK::C1:
    case PathK::C2:
    case PathK::C3:
    case PathK::C4: {
      PathPtr pi = expand_c_path(p->a);
      bool b_left = p->kind == PathK::C1 || p->kind == PathK::C2;
      bool a_left = p->kind == PathK::C1 || p->kind == PathK::C3;
      PathPtr lhs = b_left ? left_of(pi) : right_of(pi);
      PathPtr inner = a_left ? left_of(pt_converse(pi))
                             : right_of(pt_converse(pi));
      return pt_inter(lhs, pt_converse(inner));
    }
    default: {
      PathPtr a = p->a ? expand_c_path(p->a) : nullptr;
      PathPtr b = p->b ? expand_c_path(p->b) : nullptr;
      if (a.get() == p->a.get() && b.get() == p->b.get()) return p;
      switch (p->kind) {
        case PathK::Converse:
          return pt_converse(a);
        case PathK::Compose:
          return pt_compose(a, b);
        case PathK::Union:
          return pt_union(a, b);
        case PathK::Inter:
          return pt_inter(a, b);
        case PathK::Complement:
          return pt_complement(a);
        default:
          throw InternalError("expand_c: bad node");
      }
    }
  }
}

StatePtr expand_c_state(const StatePtr& s) {
  switch (s->kind) {
    case StateK::Pred:
    case StateK::True:
    case StateK::False:
      return s;
    case StateK::Not: {
      StatePtr a = expand_c_state(s->a);
      return a.get() == s->a.get() ? s : st_not(a);
    }
    case StateK::Or:
    case StateK::And: {
      StatePtr a = expand_c_state(s->a);
      StatePtr b = expand_c_state(s->b);
      if (a.get() == s->a.get() && b.get() == s->b.get()) return s;
      return s->kind == StateK::Or ? st_or(a, b) : st_and(a, b);
    }
    case StateK::Diamond: {
      PathPtr p = expand_c_path(s->path);
      StatePtr a = expand_c_state(s->a);
      if (p.get() == s->path.get() && a.get() == s->a.get()) return s;
      return st_diamond(p, a);
    }
    case StateK::Loop: {
      PathPtr p = expand_c_path(s->path);
      return p.get() == s->path.get() ? s : st_loop(p);
    }
  }
  throw InternalError("expand_c: bad state node");
}

}  // namespace

PathPtr expand_c(const PathPtr& pi) { return expand_c_path(pi); }

std::vector<PathPtr> complement_fragment(const PathPtr& pi,
                                         const TranslateOptions& opts) {
  if (!dialect_check(pi, Dialect::FragLoop))
    throw UsageError(
        "complement elimination requires a loop-fragment path formula");
  if (opts.complement_log) opts.complement_log->push_back(pi);
  PathPtr inv_pi = pt_converse(pi);
  std::vector<PathPtr> out;
  out.reserve(8);
  out.push_back(pt_compose(pt_test(st_not(diamond_true(pi))), pt_le()));
  out.push_back(pt_compose(pt_test(st_not(diamond_true(pi))), pt_ge()));
  out.push_back(pt_compose(pt_le(), pt_test(st_not(diamond_true(inv_pi)))));
  out.push_back(pt_compose(pt_ge(), pt_test(st_not(diamond_true(inv_pi)))));
  for (int i = 1; i <= 4; ++i) out.push_back(pt_c(i, pi));
  return out;
}

PbcPtr negate_pbc(const PbcPtr& p, const TranslateOptions& opts) {
  switch (p->kind) {
    case PbcK::Atom: {
      std::vector<PbcPtr> kids;
      for (const auto& d : complement_fragment(p->path, opts))
        kids.push_back(pbc_atom(d, p->x, p->y));
      return pbc_or(std::move(kids));
    }
    case PbcK::Or: {
      std::vector<PbcPtr> kids;
      for (const auto& kid : p->kids) kids.push_back(negate_pbc(kid, opts));
      return pbc_and(std::move(kids));
    }
    case PbcK::And: {
      std::vector<PbcPtr> kids;
      for (const auto& kid : p->kids) kids.push_back(negate_pbc(kid, opts));
      return pbc_or(std::move(kids));
    }
  }
  throw InternalError("negate_pbc: bad node");
}

PbcPtr eliminate_exists(const ExistsInstance& inst,
                        const TranslateOptions& opts) {
  if (inst.atoms.empty())
    throw UsageError("eliminate_exists requires at least one atom");
  for (const auto& [pi, y] : inst.atoms) {
    (void)pi;
    if (y == inst.target)
      throw UsageError("eliminate_exists: atom variable equals the target");
  }
  // psi = guard & /\_i <inv(pi_i)>true
  StatePtr psi;
  bool guard_trivial =
      opts.simplify && inst.guard && inst.guard->kind == StateK::True;
  if (inst.guard && !guard_trivial) psi = inst.guard;
  for (const auto& [pi, y] : inst.atoms) {
    (void)y;
    StatePtr d = diamond_true(pt_converse(pi));
    psi = psi ? st_and(psi, d) : d;
  }
  PathPtr test_psi = pt_test(psi);
  std::vector<PbcPtr> conj;
  const auto& atoms = inst.atoms;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if (opts.prune_converse_pairs && j < i) continue;
      PathPtr comp = compose_simplified(
          compose_simplified(atoms[i].first, test_psi, opts),
          pt_converse(atoms[j].first), opts);
      conj.push_back(pbc_atom(comp, atoms[i].second, atoms[j].second));
    }
  }
  return pbc_and(std::move(conj));
}

PbcPtr exists_empty_case(const StatePtr& guard, const std::string& anchor) {
  PathPtr t = pt_test(guard);
  PathPtr first = pt_compose(pt_compose(pt_le(), t), pt_ge());
  PathPtr second = pt_compose(pt_compose(pt_ge(), t), pt_le());
  return pbc_or({pbc_atom(first, anchor, anchor),
                 pbc_atom(second, anchor, anchor)});
}

// ---- the Theorem 3 recursion --------------------------------------------------

namespace {

// Quantifier-free matrix to PBC, pushing negations to the atoms and
// expanding the negated atoms through the eight-disjunct complement.
PbcPtr matrix_to_pbc(const FoPtr& f, bool positive,
                     const TranslateOptions& opts) {
  switch (f->kind) {
    case FoK::Not:
      return matrix_to_pbc(f->a, !positive, opts);
    case FoK::Or: {
      std::vector<PbcPtr> kids = {matrix_to_pbc(f->a, positive, opts),
                                  matrix_to_pbc(f->b, positive, opts)};
      return positive ? pbc_or(std::move(kids)) : pbc_and(std::move(kids));
    }
    case FoK::Le:
    case FoK::Eq:
    case FoK::Rel:
    case FoK::Pred: {
      PbcPtr atom;
      if (f->kind == FoK::Le)
        atom = pbc_atom(pt_le(), f->x, f->y);
      else if (f->kind == FoK::Eq)
        atom = pbc_atom(pt_test(st_true()), f->x, f->y);
      else if (f->kind == FoK::Rel)
        atom = pbc_atom(pt_atom(f->name), f->x, f->y);
      else
        atom = pbc_atom(pt_test(st_pred(f->name)), f->x, f->x);
      return positive ? atom : negate_pbc(atom, opts);
    }
    default:
      throw InternalError("matrix_to_pbc: quantifier inside matrix");
  }
}

bool pbc_mentions(const PbcPtr& p, const std::string& v) {
  if (p->kind == PbcK::Atom) return p->x == v || p->y == v;
  for (const auto& kid : p->kids)
    if (pbc_mentions(kid, v)) return true;
  return false;
}

// Eliminates `exists x` over a PBC, one DNF conjunct at a time.
PbcPtr eliminate_var(const PbcPtr& p, const std::string& x,
                     const TranslateOptions& opts) {
  if (!pbc_mentions(p, x)) return p;
  auto dnf = pbc_to_dnf(p);
  // Anchor for conjuncts whose atoms all sit on x: any other variable of
  // the combination (the paper picks x1 among the remaining free variables).
  std::string fallback_anchor;
  for (const auto& v : pbc_vars_ordered(p)) {
    if (v != x) {
      fallback_anchor = v;
      break;
    }
  }
  std::vector<PbcPtr> disjuncts;
  for (const auto& conj : dnf) {
    std::vector<PbcPtr> u1;
    std::vector<std::pair<PathPtr, std::string>> u2;
    std::vector<PathPtr> u3;
    for (const auto& atom : conj) {
      bool lx = atom->x == x, rx = atom->y == x;
      if (!lx && !rx) {
        u1.push_back(atom);
      } else if (lx && rx) {
        u3.push_back(atom->path);
      } else if (rx) {
        u2.emplace_back(atom->path, atom->x);
      } else {
        // orient so that x is the second argument
        u2.emplace_back(pt_converse(atom->path), atom->y);
      }
    }
    if (u2.empty() && u3.empty()) {
      disjuncts.push_back(conj.size() == 1 ? conj[0] : pbc_and(u1));
      continue;
    }
    StatePtr guard;
    for (const auto& pi : u3) {
      StatePtr l = loop_simplified(pi, opts);
      guard = guard ? st_and(guard, l) : l;
    }
    if (!guard) guard = st_true();
    PbcPtr eliminated;
    if (u2.empty()) {
      std::string anchor = u1.empty() ? fallback_anchor : u1[0]->x;
      if (anchor.empty())
        throw InternalError(
            "existential elimination found no remaining free variable");
      eliminated = exists_empty_case(guard, anchor);
    } else {
      eliminated = eliminate_exists({x, std::move(u2), guard}, opts);
    }
    if (!u1.empty()) {
      u1.push_back(eliminated);
      eliminated = pbc_and(std::move(u1));
    }
    disjuncts.push_back(eliminated);
  }
  return pbc_or(std::move(disjuncts));
}

}  // namespace

PbcPtr fo_to_pbc(const FoPtr& f, const TranslateOptions& opts) {
  if (!is_desugared(f))
    throw UsageError("fo_to_pbc requires a desugared formula");
  FoPtr input = f;
  if (free_vars(input).empty()) {
    if (!opts.allow_sentence)
      throw UsageError("formula has no free variable");
    // anchor the sentence to a fresh variable via v = v
    std::string anchor = "v" + std::to_string(fresh_var_base(input));
    input = fo_not(fo_or(fo_not(input), fo_not(fo_eq(anchor, anchor))));
  }
  FoPtr pn = to_prenex(input);
  auto parts = prenex_parts(pn);
  PbcPtr p = matrix_to_pbc(parts.matrix, true, opts);
  for (auto it = parts.prefix.rbegin(); it != parts.prefix.rend(); ++it) {
    const auto& [is_exists, var] = *it;
    if (!pbc_mentions(p, var)) continue;  // vacuous quantifier
    if (is_exists) {
      p = eliminate_var(p, var, opts);
    } else {
      p = negate_pbc(p, opts);
      p = eliminate_var(p, var, opts);
      p = negate_pbc(p, opts);
    }
  }
  return p;
}

namespace {

StatePtr pbc_to_state(const PbcPtr& p, const std::string& x,
                      const TranslateOptions& opts) {
  if (p->kind == PbcK::Atom) {
    if (p->x != x || p->y != x)
      throw InternalError("single-variable combination has a mixed atom");
    return loop_simplified(p->path, opts);
  }
  StatePtr out;
  for (const auto& kid : p->kids) {
    StatePtr s = pbc_to_state(kid, x, opts);
    out = !out ? s : (p->kind == PbcK::Or ? st_or(out, s) : st_and(out, s));
  }
  return out;
}

PathPtr pbc_to_path(const PbcPtr& p, const std::string& x,
                    const std::string& y, const TranslateOptions& opts) {
  if (p->kind == PbcK::Atom) {
    if (p->x == x && p->y == y) return p->path;
    if (p->x == y && p->y == x) return pt_converse(p->path);
    // trad pi(x,x): loop(pi) holds at the first coordinate
    if (p->x == x && p->y == x) {
      PathPtr t = pt_test(loop_simplified(p->path, opts));
      return pt_union(pt_compose(t, pt_le()), pt_compose(t, pt_ge()));
    }
    if (p->x == y && p->y == y) {
      PathPtr t = pt_test(loop_simplified(p->path, opts));
      return pt_union(pt_compose(pt_le(), t), pt_compose(pt_ge(), t));
    }
    throw InternalError("two-variable combination has a foreign atom");
  }
  PathPtr out;
  for (const auto& kid : p->kids) {
    PathPtr q = pbc_to_path(kid, x, y, opts);
    out = !out ? q
               : (p->kind == PbcK::Or ? pt_union(out, q)
                                      : inter_simplified(out, q, opts));
  }
  return out;
}

}  // namespace

StatePtr fo_to_state(const FoPtr& f, const TranslateOptions& opts) {
  auto fv = free_vars_ordered(f);
  if (fv.size() != 1)
    throw UsageError("state translation requires exactly one free variable");
  return pbc_to_state(fo_to_pbc(f, opts), fv[0], opts);
}

PathPtr fo_to_path(const FoPtr& f, const TranslateOptions& opts) {
  auto fv = free_vars_ordered(f);
  if (fv.size() != 2)
    throw UsageError("path translation requires exactly two free variables");
  return pbc_to_path(fo_to_pbc(f, opts), fv[0], fv[1], opts);
}

// ---- three-variable emission ---------------------------------------------------

FoPtr pdl_path_to_fo3(const PathPtr& p, const std::string& x,
                      const std::string& y, const std::string& spare) {
  if (x == y || x == spare || y == spare)
    throw UsageError("pdl_path_to_fo3 requires three distinct variables");
  switch (p->kind) {
    case PathK::Atom:
      return fo_rel(p->rel, x, y);
    case PathK::Le:
      return fo_le(x, y);
    case PathK::Test:
      return fo_and(fo_eq(x, y), pdl_state_to_fo3(p->test, {x, y, spare}));
    case PathK::Converse:
      return pdl_path_to_fo3(p->a, y, x, spare);
    case PathK::Compose:
      return fo_exists(spare, fo_and(pdl_path_to_fo3(p->a, x, spare, y),
                                     pdl_path_to_fo3(p->b, spare, y, x)));
    case PathK::Union:
      return fo_or(pdl_path_to_fo3(p->a, x, y, spare),
                   pdl_path_to_fo3(p->b, x, y, spare));
    case PathK::Inter:
      return fo_and(pdl_path_to_fo3(p->a, x, y, spare),
                    pdl_path_to_fo3(p->b, x, y, spare));
    case PathK::Complement:
      return fo_not(pdl_path_to_fo3(p->a, x, y, spare));
    case PathK::C1:
    case PathK::C2:
    case PathK::C3:
    case PathK::C4:
      return pdl_path_to_fo3(expand_c(p), x, y, spare);
  }
  throw InternalError("pdl_path_to_fo3: bad node");
}

FoPtr pdl_state_to_fo3(const StatePtr& s,
                       const std::array<std::string, 3>& pool) {
  const std::string& x = pool[0];
  const std::string& y = pool[1];
  const std::string& z = pool[2];
  if (x == y || x == z || y == z)
    throw UsageError("pdl_state_to_fo3 requires three distinct variables");
  switch (s->kind) {
    case StateK::Pred:
      return fo_pred(s->pred, x);
    case StateK::True:
      return fo_eq(x, x);
    case StateK::False:
      return fo_not(fo_eq(x, x));
    case StateK::Or:
      return fo_or(pdl_state_to_fo3(s->a, pool), pdl_state_to_fo3(s->b, pool));
    case StateK::And:
      return fo_and(pdl_state_to_fo3(s->a, pool),
                    pdl_state_to_fo3(s->b, pool));
    case StateK::Not:
      return fo_not(pdl_state_to_fo3(s->a, pool));
    case StateK::Diamond:
      // exists y. (trad pi(x,y) & trad phi(y)); phi continues with pool
      // rotated so its spares are z and x.
      return fo_exists(y, fo_and(pdl_path_to_fo3(s->path, x, y, z),
                                 pdl_state_to_fo3(s->a, {y, z, x})));
    case StateK::Loop:
      // equality-guarded to avoid capture under the rotated pools
      return fo_exists(y,
                       fo_and(fo_eq(x, y), pdl_path_to_fo3(s->path, x, y, z)));
  }
  throw InternalError("pdl_state_to_fo3: bad state node");
}

Fo3Emission fo_to_fo3_detailed(const FoPtr& f, const TranslateOptions& opts) {
  PbcPtr p = fo_to_pbc(f, opts);
  auto vars = pbc_vars_ordered(p);
  int fresh = fresh_var_base(f);
  for (const auto& v : vars)  // the sentence anchor may sit above the base
    if (is_fresh_family(v)) fresh = std::max(fresh, std::stoi(v.substr(1)) + 1);

  // Spares reuse other free variables first (each atom formula then stays
  // within three names overall), falling back to fresh v<k> names.
  auto spares_for = [&](const std::string& a,
                        const std::string& b) -> std::vector<std::string> {
    std::vector<std::string> out;
    for (const auto& v : vars)
      if (v != a && v != b) out.push_back(v);
    for (int k = 0; out.size() < 2; ++k)
      out.push_back("v" + std::to_string(fresh + k));
    return out;
  };

  Fo3Emission em;
  auto emit_atom = [&](const PbcPtr& atom) -> FoPtr {
    FoPtr out;
    if (atom->x == atom->y) {
      auto sp = spares_for(atom->x, atom->x);
      if (opts.simplify && atom->path->kind == PathK::Test) {
        // (test(phi))(x,x) holds exactly when phi holds at x
        out = pdl_state_to_fo3(atom->path->test, {atom->x, sp[0], sp[1]});
      } else {
        out = fo_exists(sp[0],
                        fo_and(fo_eq(atom->x, sp[0]),
                               pdl_path_to_fo3(atom->path, atom->x, sp[0],
                                               sp[1])));
      }
    } else {
      auto sp = spares_for(atom->x, atom->y);
      out = pdl_path_to_fo3(atom->path, atom->x, atom->y, sp[0]);
    }
    em.atoms.push_back(out);
    return out;
  };

  // The FO formula mirrors the combination's and/or shape.
  auto rec = [&](auto&& self, const PbcPtr& node) -> FoPtr {
    if (node->kind == PbcK::Atom) return emit_atom(node);
    FoPtr out;
    for (const auto& kid : node->kids) {
      FoPtr g = self(self, kid);
      out = !out ? g
                 : (node->kind == PbcK::Or ? fo_or(out, g) : fo_and(out, g));
    }
    return out;
  };
  em.formula = rec(rec, p);
  return em;
}

FoPtr fo_to_fo3(const FoPtr& f, const TranslateOptions& opts) {
  return fo_to_fo3_detailed(f, opts).formula;
}

}  // namespace ipfo
