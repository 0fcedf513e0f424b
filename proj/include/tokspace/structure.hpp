#pragma once

#include <string>
#include <vector>

#include "tokspace/token_class.hpp"

namespace tokspace {

// The tree token (s1,...,sn) carrying the tuple's symbols as leaves.
TreeTerm token_to_term(const Token& t);

struct ProductResult {
  TokenClass cls;
  TokenMap pi1, pi2;
};

struct CoproductResult {
  TokenClass cls;
  TokenMap in1, in2;
};

struct ExponentResult {
  TokenClass cls;   // function-symbol base, cofinite heap
  TokenClass prod;  // cls x t2, the domain of ev
  TokenMap ev;
  std::vector<Token> excluded;  // tokens cut out of the full tokenoid
  TokenClass t1, t2;
};

struct DiagramArrow {
  std::string src, dst;
  ElemMap f0;
};

struct Diagram {
  std::vector<std::pair<std::string, TokenClass>> objects;  // unique ids
  std::vector<DiagramArrow> arrows;

  const TokenClass& object(const std::string& id) const;
};

struct LimitResult {
  TokenClass cls;
  std::vector<std::pair<std::string, TokenMap>> cone;  // one leg per object

  const TokenMap& leg(const std::string& id) const;
};

// Pairwise product with projections. Requires equal cores.
ProductResult product(const TokenClass& t1, const TokenClass& t2);

// Tagged coproduct with injections. Requires equal cores.
CoproductResult coproduct(const TokenClass& t1, const TokenClass& t2);

// Exponent t1^t2 with evaluation map. Requires equal cores and a finite
// heap on t2.
ExponentResult exponent(const TokenClass& t1, const TokenClass& t2);

// Transpose of f : s (x) t2 -> t1 across the exponent adjunction.
TokenMap curry(const TokenMap& f, const TokenClass& s, const ExponentResult& exp);
TokenMap uncurry(const TokenMap& g, const TokenClass& s, const ExponentResult& exp);

// Limit of a finite diagram: commuting tuples, heap cut down by every
// projection. Requires a shared core and validates the arrows.
LimitResult limit(const Diagram& d);

// Keep the tuple structure, forget the base: heap tokens become the base
// of a heapless class. Requires a finite heap.
TokenClass abstracting(const TokenClass& t);

// Keep the alphabet, admit every token.
TokenClass stuffing(const TokenClass& t);

// f and g side by side on the given products.
TokenMap product_map(const TokenMap& f, const TokenMap& g,
                     const ProductResult& src, const ProductResult& dst);

// Is (c, c1, c2) a pullback of the cospan c1.dst -> z <- c2.dst?
Verdict is_pullback(const TokenMap& g1, const TokenMap& g2, const TokenClass& c,
                    const TokenMap& c1, const TokenMap& c2);

// Characteristic-map verification that f0 embeds sub into super: both the
// stuffed square and the abstracted square must be pullbacks against the
// truth class.
Verdict subclass_via_pullbacks(const TokenClass& sub, const TokenClass& super,
                               const ElemMap& f0);

}  // namespace tokspace
