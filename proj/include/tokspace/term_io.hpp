#pragma once

#include <string>

#include "tokspace/errors.hpp"
#include "tokspace/symbol.hpp"

namespace tokspace {

// Text codec for symbols and tree terms. Printing delegates to str();
// parsing accepts exactly that output plus surrounding whitespace.
//
//   term   := "eps" | symbol | "(" [term {"," term}] ")"
//   symbol := NAME | "#" NAME [INDEX] | NAME ":" symbol | "<" symbol "," symbol ">"
//           | "fn:{" [symbol ">" symbol {"," ...}] "}" | "set:{" [symbol {"," ...}] "}"
//           | "term:" term
//
// Errors carry code SyntaxError with a line:column position.
Symbol parse_symbol(const std::string& text);
TreeTerm parse_term(const std::string& text);

std::string print_symbol(const Symbol& s);
std::string print_term(const TreeTerm& t);

}  // namespace tokspace
