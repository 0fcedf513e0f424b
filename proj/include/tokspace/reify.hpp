#pragma once

#include <cstddef>
#include <vector>

#include "tokspace/tree.hpp"

namespace tokspace {

// Leaf subtrees stay plain symbols; compounds become Term symbols.
Symbol subtree_symbol(const TreeTerm& t);
// Inverse view: the tree a reified base symbol stands for.
TreeTerm symbol_subtree(const Symbol& s);

// Root adjacency: {(eps, r)} on a leaf, {(eps, r, x1,...,xn)} otherwise.
std::vector<Token> self_nesting(const TreeTerm& r);

// Flat class of parent-children adjacency tokens over the subtrees of r.
// The core gains the markers eps and F; collisions raise MarkerCollision.
TokenClass reify_token(const TreeTerm& r, const std::vector<Symbol>& base,
                       const std::vector<Symbol>& core);

TokenClass reify_class(const TreeClass& t);
TokenMap reify_map(const TreeMap& f);

// All leaf assignments src-base -> candidate terms carrying every heap
// term of t1 into t1's heap image inside t2. Candidate images are the
// subtrees of t2's heap terms of depth <= depth_bound plus t2's leaves.
std::vector<LeafMap> enumerate_tmaps(const TreeClass& t1, const TreeClass& t2,
                                     std::size_t depth_bound = 2);

// All maps between the reifications of two single tokens, found by
// propagating the root adjacency choice; at most one should exist.
std::vector<ElemMap> singleton_pmaps(const TreeTerm& r1, const TreeTerm& r2);

// The leaf assignment with tmorph image exactly r2 (no eps images), if any.
std::optional<LeafMap> singleton_tmap(const TreeTerm& r1, const TreeTerm& r2);

/// Two-sided comparison of tree maps against maps of reified classes.
struct HomCorrReport {
  std::vector<LeafMap> tmaps;
  std::size_t pmap_count = 0;
  bool every_tmap_reifies = false;
  bool every_pmap_restricts = false;
  bool counts_match = false;

  bool ok() const { return every_tmap_reifies && every_pmap_restricts && counts_match; }
};

HomCorrReport hom_correspondence(const TreeClass& t1, const TreeClass& t2,
                                 std::size_t depth_bound = 2);

}  // namespace tokspace
