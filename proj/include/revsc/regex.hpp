#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "revsc/automata.hpp"

namespace revsc {

// Regular expression syntax tree. Letters are indices into the alphabet the
// expression was parsed against. Star keeps its operand in left.
struct RegexAst {
  enum class Kind { kEmpty, kEpsilon, kLetter, kUnion, kConcat, kStar };

  Kind kind = Kind::kEmpty;
  int letter = -1;
  std::unique_ptr<RegexAst> left, right;
};

using RegexPtr = std::unique_ptr<RegexAst>;

RegexPtr rx_empty();
RegexPtr rx_epsilon();
RegexPtr rx_letter(int letter);
RegexPtr rx_union(RegexPtr a, RegexPtr b);
RegexPtr rx_concat(RegexPtr a, RegexPtr b);
RegexPtr rx_star(RegexPtr a);
RegexPtr rx_clone(const RegexAst& ast);

bool ast_equal(const RegexAst& a, const RegexAst& b);

class RegexParseError : public std::runtime_error {
 public:
  RegexParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_ = 0;
};

// Dialect: + for union, juxtaposition for concatenation, postfix * for star,
// parentheses, and "eps" or the UTF-8 epsilon for the empty word. Star binds
// tighter than concatenation, which binds tighter than union; union and
// concatenation associate to the left. Letters are matched against the
// alphabet longest-name-first, whitespace is skipped, and errors carry the
// byte position they were found at.
RegexPtr parse_regex(std::string_view text,
                     std::span<const std::string> alphabet);

// Prints with parentheses only where reparsing would otherwise reassociate
// the tree, so parse_regex(to_string(ast)) reproduces ast exactly.
std::string to_string(const RegexAst& ast,
                      std::span<const std::string> alphabet);

// Position automaton: one state per letter occurrence plus a start state,
// built from the nullable, first, last and follow sets of the tree. The
// result has no epsilon transitions by construction. Expressions with more
// than 63 letter occurrences are rejected.
Nfa regex_to_nfa(const RegexAst& ast, int alphabet_size);

Dfa regex_to_min_dfa(std::string_view text,
                     std::span<const std::string> alphabet);

}  // namespace revsc
