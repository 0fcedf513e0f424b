#pragma once

#include "tokspace/structure.hpp"
#include "tokspace/token_class.hpp"

namespace tokspace {

// Same-core set operations on flat classes. delete_heap(T, T') keeps T's
// base and removes T''s heap tokens.
TokenClass merging(const TokenClass& t1, const TokenClass& t2);
TokenClass meeting(const TokenClass& t1, const TokenClass& t2);
TokenClass forgetting(const TokenClass& t);
TokenClass deleting(const TokenClass& t, const TokenClass& minus);

// Fresh marker of the given name avoiding every symbol the class can see.
Symbol fresh_marker(const std::string& name, const Alphabet& alpha);

// Adjoin an unknown element e and its witness token.
TokenClass introduce_unknown(const TokenClass& t);
TokenMap introduce_unknown_map(const TokenMap& f);

// Powerset extension: base {e} + B + P(B), membership tokens, and the
// subset-lifted heap. Finite heap required; base capped.
TokenClass powering(const TokenClass& t, std::size_t base_cap = 10);
TokenMap powering_map(const TokenMap& f, std::size_t base_cap = 10);

// Demote the core into the base.
TokenClass obscuring(const TokenClass& t);
TokenMap obscuring_map(const TokenMap& f);

// Pairwise matchup: both projections must hit their heaps. Finite heaps.
TokenClass matchup(const TokenClass& t1, const TokenClass& t2);
// Blending: at least one projection hits its heap. Finite heaps.
TokenClass blending(const TokenClass& t1, const TokenClass& t2);
// Tagged union of bases and heaps.
TokenClass union_y(const TokenClass& t1, const TokenClass& t2);
// Function-space class: a tuple is admitted when every compatible
// argument tuple from t2's heap evaluates into t1's heap.
TokenClass refering(const TokenClass& t1, const TokenClass& t2);

// Base/core re-taggings.
TokenClass lifting(const TokenClass& t, std::vector<Symbol> s);
TokenClass absolute_lifting(const TokenClass& t, std::vector<Symbol> s);
TokenClass releasing(const TokenClass& t, std::vector<Symbol> eprime);
TokenClass renaming(const TokenClass& t, const ElemMap& alpha);

// Contravariant powerset transpose: a map power(forget(dst)) ->
// power(forget(src)) sending subsets to preimages and elements to e.
TokenMap reversing(const TokenMap& f);

// Push a subclass through a self-classification map f : T -> power(T);
// the heap survives only if f fixes or collects every base element.
TokenClass generalizing(const TokenMap& f, const TokenClass& tprime);

}  // namespace tokspace
