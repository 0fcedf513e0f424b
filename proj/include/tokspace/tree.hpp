#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tokspace/errors.hpp"
#include "tokspace/token_class.hpp"

namespace tokspace {

// Metrics of the (., &, eps) algebra: leaf count, nesting depth, and the
// number of top-level factors.
std::size_t term_length(const TreeTerm& t);
std::size_t term_depth(const TreeTerm& t);
std::size_t term_ary(const TreeTerm& t);
// Factor count one level inside an &-node; 0 on leaves. Errors on terms
// that are not tree tokens.
std::size_t term_tary(const TreeTerm& t);

// Is the term a tree token (every node has at most one factor)?
bool is_token_term(const TreeTerm& t);

// Splice two tokens: &(unwrap(r1).unwrap(r2)). Errors (NotAToken) unless
// both are &-nodes.
TreeTerm connect(const TreeTerm& r1, const TreeTerm& r2);

// Recursive flattening to a depth-2 token over the leaves.
TreeTerm flatten(const TreeTerm& r);

/// Leaf assignment extended homomorphically; symbols without an entry are
/// fixed. Images must be tree tokens.
struct LeafMap {
  std::vector<std::pair<Symbol, TreeTerm>> entries;  // sorted by key

  static LeafMap from(std::vector<std::pair<Symbol, TreeTerm>> kv);
  const TreeTerm* find(const Symbol& s) const;
};

TreeTerm tmorph_apply(const LeafMap& f, const TreeTerm& t);

// Indexed token with the same shape as r, leaves renamed 1..|r| in reading
// order; empty nested tuples count as one leaf and collapse to an index.
TreeTerm universal_of(const TreeTerm& r);
// Does flattening give exactly (1,...,n)?
bool is_universal(const TreeTerm& u);
Symbol index_symbol(std::size_t i);
// The token (1,...,n).
TreeTerm index_token(std::size_t n);

// The unique leaf assignment carrying src onto dst, if one exists.
std::optional<LeafMap> corr(const TreeTerm& src, const TreeTerm& dst);

// Subterm selections. Results are canonical (sorted, deduplicated).
std::vector<TreeTerm> scatter_by(const LeafMap& g);
std::vector<TreeTerm> scatter_flat(const TreeTerm& r);   // factors of flatten(r)
std::vector<TreeTerm> scatter_star(const TreeTerm& r);   // every subterm incl. r

// Leaf symbols appearing anywhere below r.
std::vector<Symbol> term_base(const TreeTerm& r);

// Terms with the same flattening as r, depth <= max_depth, built from the
// flattened leaves with a bounded budget of empty-tuple insertions.
std::vector<TreeTerm> flatten_class(const TreeTerm& r, std::size_t max_depth);

/// Class of tree tokens: alphabet plus an explicit token list.
struct TreeClass {
  std::string name;
  Alphabet alpha;  // reuse: base/core symbol sets
  std::vector<TreeTerm> heap;  // sorted tree tokens
};

TreeClass mk_tclass(std::string name, std::vector<Symbol> base,
                    std::vector<Symbol> core, std::vector<TreeTerm> heap);

// Smallest base supporting the given tokens.
std::vector<Symbol> base_of(const std::vector<TreeTerm>& heap);

/// Map of tree classes, determined by the base action; images are tree
/// tokens over the target alphabet but never bare core symbols.
struct TreeMap {
  TreeClass src;
  TreeClass dst;
  LeafMap f0;
};

TreeMap mk_tmap(TreeClass src, TreeClass dst, LeafMap f0);
TreeTerm apply_tmap(const TreeMap& f, const TreeTerm& t);

TreeClass tclass_coproduct(const TreeClass& t1, const TreeClass& t2,
                           TreeMap* out_in1 = nullptr, TreeMap* out_in2 = nullptr);

// Same-alphabet set operations on tree classes.
enum class TSetOp { Merge, Meet, Delete };
TreeClass tclass_setop(TSetOp op, const TreeClass& t1, const TreeClass& t2);
TreeClass tclass_forget(const TreeClass& t);

}  // namespace tokspace
