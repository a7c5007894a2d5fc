#include "printer.hpp"

#include <sstream>

#include "errors.hpp"

namespace ipfo {

namespace {

// FO precedence levels: -> 1, | 2, & 3, ! 4, atoms 5. Quantifiers sit at
// level 0 and swallow everything to their right, so any operand whose right
// spine ends in a quantifier must be parenthesized when something follows it.
bool fo_open_right(const FoPtr& f) {
  switch (f->kind) {
    case FoK::Exists:
    case FoK::Forall:
      return true;
    case FoK::Not:
      return fo_open_right(f->a);
    case FoK::Or:
    case FoK::And:
    case FoK::Implies:
      return fo_open_right(f->b);
    default:
      return false;
  }
}

int fo_prec(const FoPtr& f) {
  switch (f->kind) {
    case FoK::Exists:
    case FoK::Forall:
      return 0;
    case FoK::Implies:
      return 1;
    case FoK::Or:
      return 2;
    case FoK::And:
      return 3;
    case FoK::Not:
      return 4;
    default:
      return 5;
  }
}

void fo_print(const FoPtr& f, int min_prec, bool something_follows,
              std::ostringstream& out) {
  bool parens = fo_prec(f) < min_prec ||
                (something_follows && fo_open_right(f));
  if (parens) out << '(';
  switch (f->kind) {
    case FoK::Pred:
      out << f->name << '(' << f->x << ')';
      break;
    case FoK::Le:
      out << f->x << " <= " << f->y;
      break;
    case FoK::Eq:
      out << f->x << " = " << f->y;
      break;
    case FoK::Rel:
      out << f->name << '(' << f->x << ',' << f->y << ')';
      break;
    case FoK::Implies:
      fo_print(f->a, 2, true, out);
      out << " -> ";
      fo_print(f->b, 1, parens ? false : something_follows, out);
      break;
    case FoK::Or:
      fo_print(f->a, 2, true, out);
      out << " | ";
      fo_print(f->b, 3, parens ? false : something_follows, out);
      break;
    case FoK::And:
      fo_print(f->a, 3, true, out);
      out << " & ";
      fo_print(f->b, 4, parens ? false : something_follows, out);
      break;
    case FoK::Not:
      out << '!';
      fo_print(f->a, 4, parens ? false : something_follows, out);
      break;
    case FoK::Exists:
    case FoK::Forall:
      out << (f->kind == FoK::Exists ? "exists " : "forall ") << f->name
          << ". ";
      fo_print(f->a, 0, false, out);
      break;
  }
  if (parens) out << ')';
}

// State precedence: | 1, & 2, unary 3, atoms 4.
int st_prec(const StatePtr& s) {
  switch (s->kind) {
    case StateK::Or:
      return 1;
    case StateK::And:
      return 2;
    case StateK::Not:
    case StateK::Diamond:
      return 3;
    default:
      return 4;
  }
}

void pt_print(const PathPtr& p, int min_prec, std::ostringstream& out);

void st_print(const StatePtr& s, int min_prec, std::ostringstream& out) {
  bool parens = st_prec(s) < min_prec;
  if (parens) out << '(';
  switch (s->kind) {
    case StateK::Pred:
      out << s->pred;
      break;
    case StateK::True:
      out << "true";
      break;
    case StateK::False:
      out << "false";
      break;
    case StateK::Loop:
      out << "loop(";
      pt_print(s->path, 0, out);
      out << ')';
      break;
    case StateK::Or:
      st_print(s->a, 1, out);
      out << " | ";
      st_print(s->b, 2, out);
      break;
    case StateK::And:
      st_print(s->a, 2, out);
      out << " & ";
      st_print(s->b, 3, out);
      break;
    case StateK::Not:
      out << '!';
      st_print(s->a, 3, out);
      break;
    case StateK::Diamond:
      out << '<';
      pt_print(s->path, 0, out);
      out << '>';
      st_print(s->a, 3, out);
      break;
  }
  if (parens) out << ')';
}

// Path precedence: | 1, & 2, . 3, atoms/functions 4.
int pt_prec(const PathPtr& p) {
  switch (p->kind) {
    case PathK::Union:
      return 1;
    case PathK::Inter:
      return 2;
    case PathK::Compose:
      return 3;
    default:
      return 4;
  }
}

void pt_print(const PathPtr& p, int min_prec, std::ostringstream& out) {
  bool parens = pt_prec(p) < min_prec;
  if (parens) out << '(';
  switch (p->kind) {
    case PathK::Atom:
      out << p->rel;
      break;
    case PathK::Le:
      out << "le";
      break;
    case PathK::Test:
      out << "test(";
      st_print(p->test, 0, out);
      out << ')';
      break;
    case PathK::Converse:
      out << "inv(";
      pt_print(p->a, 0, out);
      out << ')';
      break;
    case PathK::Complement:
      out << "comp(";
      pt_print(p->a, 0, out);
      out << ')';
      break;
    case PathK::C1:
    case PathK::C2:
    case PathK::C3:
    case PathK::C4:
      out << 'c'
          << 1 + static_cast<int>(p->kind) - static_cast<int>(PathK::C1)
          << '(';
      pt_print(p->a, 0, out);
      out << ')';
      break;
    case PathK::Union:
      pt_print(p->a, 1, out);
      out << " | ";
      pt_print(p->b, 2, out);
      break;
    case PathK::Inter:
      pt_print(p->a, 2, out);
      out << " & ";
      pt_print(p->b, 3, out);
      break;
    case PathK::Compose:
      pt_print(p->a, 3, out);
      out << " . ";
      pt_print(p->b, 4, out);
      break;
  }
  if (parens) out << ')';
}

void pbc_print(const PbcPtr& p, int min_prec, std::ostringstream& out) {
  // | 1, & 2, atoms 3
  int prec = p->kind == PbcK::Or ? 1 : (p->kind == PbcK::And ? 2 : 3);
  bool parens = prec < min_prec;
  if (parens) out << '(';
  if (p->kind == PbcK::Atom) {
    out << '(';
    pt_print(p->path, 0, out);
    out << ")(" << p->x << ',' << p->y << ')';
  } else {
    const char* sep = p->kind == PbcK::Or ? " | " : " & ";
    int kid_prec = p->kind == PbcK::Or ? 2 : 3;
    for (std::size_t i = 0; i < p->kids.size(); ++i) {
      if (i) out << sep;
      pbc_print(p->kids[i], kid_prec, out);
    }
  }
  if (parens) out << ')';
}

}  // namespace

std::string print_fo(const FoPtr& f) {
  std::ostringstream out;
  fo_print(f, 0, false, out);
  return out.str();
}

std::string print_state(const StatePtr& s) {
  std::ostringstream out;
  st_print(s, 0, out);
  return out.str();
}

std::string print_path(const PathPtr& p) {
  std::ostringstream out;
  pt_print(p, 0, out);
  return out.str();
}

std::string print_pbc(const PbcPtr& p) {
  std::ostringstream out;
  pbc_print(p, 0, out);
  return out.str();
}

}  // namespace ipfo
