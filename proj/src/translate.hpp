#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ast.hpp"

namespace ipfo {

struct TranslateOptions {
  // Local rewrites: test(true) as composition identity, p & p -> p,
  // loop(test(s)) -> s, dropping a trivially true guard conjunct. All are
  // semantics-preserving and switched off by --no-simplify.
  bool simplify = true;
  // Emit only the (i,j) with i <= j in the existential elimination; the
  // (j,i) atom is the converse of (i,j) and therefore redundant.
  bool prune_converse_pairs = false;
  // Translate a sentence as itself conjoined with v<k> = v<k> for a fresh
  // anchor variable; off means sentences are rejected.
  bool allow_sentence = true;
  // When set, records every path formula whose complement gets rewritten
  // into the eight-disjunct union.
  std::vector<PathPtr>* complement_log = nullptr;
};

// b strictly left (right) of the nonempty image of pi: derived operators
// test(<pi>true) . comp(pi . le) and test(<pi>true) . comp(pi . inv(le)).
PathPtr left_of(const PathPtr& pi);
PathPtr right_of(const PathPtr& pi);

// Replaces every c1..c4 node by its definition over test, comp, inv, ., &
// and le. Output is in the Full dialect; a C-free input is returned as-is.
PathPtr expand_c(const PathPtr& pi);

// The eight disjuncts whose union is equivalent to comp(pi) for
// interval-preserving pi, in proof-display order: the two <pi>-emptiness
// tests, the two <inv(pi)>-emptiness tests, then c1(pi)..c4(pi).
// pi must be in the loop fragment.
std::vector<PathPtr> complement_fragment(const PathPtr& pi,
                                         const TranslateOptions& opts = {});

// De Morgan dualization; each negated leaf becomes the disjunction of its
// eight complement_fragment atoms. Input and output are positive.
PbcPtr negate_pbc(const PbcPtr& p, const TranslateOptions& opts = {});

// One existential elimination instance: exists x. (guard(x) & /\ pi_i(y_i, x)).
struct ExistsInstance {
  std::string target;                                 // x
  std::vector<std::pair<PathPtr, std::string>> atoms; // (pi_i, y_i), y_i != x
  StatePtr guard;                                     // state formula at x
};

// PAnd over ordered pairs (i,j) of (pi_i . test(psi) . inv(pi_j))(y_i, y_j)
// with psi = guard & /\ <inv(pi_i)>true. Throws on an empty atom list.
PbcPtr eliminate_exists(const ExistsInstance& inst,
                        const TranslateOptions& opts = {});

// exists x. guard(x) relative to an anchor variable:
// (le . test(guard) . inv(le))(anchor,anchor) | (inv(le) . test(guard) . le)(...)
PbcPtr exists_empty_case(const StatePtr& guard, const std::string& anchor);

// Full recursion: prenex, translate the matrix, then process quantifiers
// innermost-out (forall as two negations around an exists). Input must be
// desugared. Every atom of the result is in the loop fragment.
PbcPtr fo_to_pbc(const FoPtr& f, const TranslateOptions& opts = {});

// Packaging for one and two free variables.
StatePtr fo_to_state(const FoPtr& f, const TranslateOptions& opts = {});
PathPtr fo_to_path(const FoPtr& f, const TranslateOptions& opts = {});

// Three-variable first-order emission. The variable pool is (current, two
// spares); every emitted formula uses at most three distinct variables.
FoPtr pdl_state_to_fo3(const StatePtr& s,
                       const std::array<std::string, 3>& pool);
FoPtr pdl_path_to_fo3(const PathPtr& p, const std::string& x,
                      const std::string& y, const std::string& spare);

struct Fo3Emission {
  FoPtr formula;
  std::vector<FoPtr> atoms;  // one FO formula per PBC atom
};
Fo3Emission fo_to_fo3_detailed(const FoPtr& f, const TranslateOptions& opts = {});
FoPtr fo_to_fo3(const FoPtr& f, const TranslateOptions& opts = {});

}  // namespace ipfo
