#pragma once

// Formula ASTs: monadic first-order logic over a linear order with binary
// relation symbols, the two sorts of star-free PDL (state / path), and
// positive boolean combinations of path atoms.
//
// Nodes are immutable values behind shared pointers. Builders precompute a
// structural hash so equality tests and memo tables stay cheap on the large
// trees the translator produces.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ipfo {

struct FoNode;
struct StateNode;
struct PathNode;
struct PbcNode;
using FoPtr = std::shared_ptr<const FoNode>;
using StatePtr = std::shared_ptr<const StateNode>;
using PathPtr = std::shared_ptr<const PathNode>;
using PbcPtr = std::shared_ptr<const PbcNode>;

enum class FoK { Pred, Le, Eq, Rel, Or, And, Not, Implies, Exists, Forall };
enum class StateK { Pred, Or, And, Not, Diamond, Loop, True, False };
enum class PathK {
  Atom, Le, Test, Converse, Compose, Union, Inter, Complement, C1, C2, C3, C4
};
enum class PbcK { Atom, Or, And };

struct FoNode {
  FoK kind;
  std::string name;  // predicate/relation name, or the bound variable
  std::string x, y;  // atom arguments
  FoPtr a, b;        // children; unary nodes use `a`
  std::size_t hash;
};

struct StateNode {
  StateK kind;
  std::string pred;
  StatePtr a, b;
  PathPtr path;  // Diamond / Loop argument
  std::size_t hash;
};

struct PathNode {
  PathK kind;
  std::string rel;
  StatePtr test;  // Test argument
  PathPtr a, b;
  std::size_t hash;
};

struct PbcNode {
  PbcK kind;
  PathPtr path;  // Atom
  std::string x, y;
  std::vector<PbcPtr> kids;  // Or / And children (n-ary, flattened)
  std::size_t hash;
};

// ---- builders -------------------------------------------------------------

FoPtr fo_pred(std::string p, std::string x);
FoPtr fo_le(std::string x, std::string y);
FoPtr fo_eq(std::string x, std::string y);
FoPtr fo_rel(std::string r, std::string x, std::string y);
FoPtr fo_or(FoPtr a, FoPtr b);
FoPtr fo_and(FoPtr a, FoPtr b);
FoPtr fo_not(FoPtr a);
FoPtr fo_implies(FoPtr a, FoPtr b);
FoPtr fo_exists(std::string v, FoPtr body);
FoPtr fo_forall(std::string v, FoPtr body);

StatePtr st_pred(std::string p);
StatePtr st_or(StatePtr a, StatePtr b);
StatePtr st_and(StatePtr a, StatePtr b);
StatePtr st_not(StatePtr a);
StatePtr st_diamond(PathPtr p, StatePtr s);
StatePtr st_loop(PathPtr p);
StatePtr st_true();
StatePtr st_false();

PathPtr pt_atom(std::string r);
PathPtr pt_le();
PathPtr pt_ge();  // Converse(le)
PathPtr pt_test(StatePtr s);
PathPtr pt_converse(PathPtr p);
PathPtr pt_compose(PathPtr a, PathPtr b);
PathPtr pt_union(PathPtr a, PathPtr b);
PathPtr pt_inter(PathPtr a, PathPtr b);
PathPtr pt_complement(PathPtr p);
PathPtr pt_c(int i, PathPtr p);  // i in 1..4

PbcPtr pbc_atom(PathPtr p, std::string x, std::string y);
// Or/And flatten same-kind children and collapse singletons; kids nonempty.
PbcPtr pbc_or(std::vector<PbcPtr> kids);
PbcPtr pbc_and(std::vector<PbcPtr> kids);

// ---- structural equality and ordering --------------------------------------

bool equal(const FoPtr& a, const FoPtr& b);
bool equal(const StatePtr& a, const StatePtr& b);
bool equal(const PathPtr& a, const PathPtr& b);
bool equal(const PbcPtr& a, const PbcPtr& b);

// Deterministic total order (independent of pointer values and hashes).
int compare(const PathPtr& a, const PathPtr& b);
int compare(const StatePtr& a, const StatePtr& b);
int compare(const PbcPtr& a, const PbcPtr& b);

// ---- signatures and name validation ----------------------------------------

// Words the surface grammar claims for itself.
bool is_reserved_word(const std::string& s);
// Predicates: [A-Z][A-Za-z0-9_]*. Relation symbols and variables:
// [a-z][A-Za-z0-9_]*, not reserved.
bool is_pred_name(const std::string& s);
bool is_rel_name(const std::string& s);
bool is_var_name(const std::string& s);
// v0, v1, ... — the family the translator draws fresh variables from.
bool is_fresh_family(const std::string& s);

struct Signature {
  std::vector<std::string> predicates;  // sorted, unique
  std::vector<std::string> relsyms;
  void validate() const;  // throws UsageError
  bool has_pred(const std::string& p) const;
  bool has_rel(const std::string& r) const;
  void add_pred(const std::string& p);
  void add_rel(const std::string& r);
};

Signature infer_signature(const FoPtr& f);
void collect_signature(const FoPtr& f, Signature& sig);
void collect_signature(const StatePtr& s, Signature& sig);
void collect_signature(const PathPtr& p, Signature& sig);

// ---- variables --------------------------------------------------------------

std::set<std::string> free_vars(const FoPtr& f);
// First-occurrence order (depth-first, atom arguments left to right).
std::vector<std::string> free_vars_ordered(const FoPtr& f);
// Distinct variable names occurring anywhere, free or bound, binders included.
int count_vars(const FoPtr& f);
// All variable names occurring (used to pick fresh v<k> names).
std::set<std::string> all_var_names(const FoPtr& f);
// Smallest k such that v<k>, v<k+1>, ... are unused in `f`.
int fresh_var_base(const FoPtr& f);

// Renames free occurrences of `from` to `to`. `to` must not be captured by
// any binder in scope of an occurrence; callers use globally fresh names.
FoPtr rename_free_var(const FoPtr& f, const std::string& from,
                      const std::string& to);

// ---- desugaring and prenex form ---------------------------------------------

// Removes And / Implies / Forall, yielding the Or / Not / Exists / atom core.
FoPtr desugar(const FoPtr& f);
bool is_desugared(const FoPtr& f);

// Input must be desugared. Output is Q1 v.. Qk v . M with M quantifier-free;
// every bound variable is renamed to the fresh family v0, v1, ... in prefix
// order, skipping any v<k> already present in the input.
FoPtr to_prenex(const FoPtr& f);

struct PrenexForm {
  std::vector<std::pair<bool, std::string>> prefix;  // (is_exists, var)
  FoPtr matrix;
};
PrenexForm prenex_parts(const FoPtr& f);

// ---- PDL dialects -----------------------------------------------------------

// Full:     all path constructors.
// FragCap:  no Union, no Complement.
// FragLoop: additionally no Inter; a Loop state node licenses FragCap
//           (i.e. intersections) inside its path argument.
enum class Dialect { Full, FragCap, FragLoop };

bool dialect_check(const PathPtr& p, Dialect d);
bool dialect_check(const StatePtr& s, Dialect d);

// ---- positive boolean combinations ------------------------------------------

// Disjunctive normal form as a list of conjuncts; each conjunct is a sorted,
// duplicate-free list of Atom nodes. Applies idempotence (X & X -> X) and
// absorption (drop conjuncts that are supersets of another).
std::vector<std::vector<PbcPtr>> pbc_to_dnf(const PbcPtr& p);

// Variables mentioned by atoms, in first-occurrence order.
std::vector<std::string> pbc_vars_ordered(const PbcPtr& p);

void collect_pbc_atoms(const PbcPtr& p, std::vector<PbcPtr>& out);

}  // namespace ipfo
