#pragma once

#include <string>

#include "ast.hpp"

namespace ipfo {

// Inverse of the parsers: parse_*(print_*(t)) is structurally equal to t.
std::string print_fo(const FoPtr& f);
std::string print_state(const StatePtr& s);
std::string print_path(const PathPtr& p);

// Positive boolean combinations have no input syntax; this listing form
// prints every atom as (path)(x,y) joined with & and |.
std::string print_pbc(const PbcPtr& p);

}  // namespace ipfo
