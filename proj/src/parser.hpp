#pragma once

#include <string>

#include "ast.hpp"

namespace ipfo {

// Surface grammar (one line per sort; \ see README for the full table):
//   FO:    exists x. f | forall x. f | f -> f | f | f | f & f | !f
//          | P(x) | r(x,y) | x <= y | x = y | ( f )
//   state: P | true | false | !s | s & s | s | s | <p> s | loop(p) | ( s )
//   path:  r | le | test(s) | inv(p) | comp(p) | c1(p)..c4(p)
//          | p . p | p & p | p | p | ( p )
// Precedence: FO  ! > & > | > ->  (quantifiers extend maximally right);
//             path . > & > |.  Binary operators associate left, -> right.
FoPtr parse_fo(const std::string& text);
StatePtr parse_state(const std::string& text);
PathPtr parse_path(const std::string& text);

enum class FormulaSort { Fo, State, Path };

struct AnyFormula {
  FormulaSort sort;
  FoPtr fo;
  StatePtr state;
  PathPtr path;
};

// Tries FO, then state, then path; on failure reports the error of the
// parser that consumed the most input.
AnyFormula parse_any(const std::string& text);

}  // namespace ipfo
