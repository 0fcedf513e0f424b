#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tokspace/token_class.hpp"

namespace tokspace {

/// Signature of a structured object: special-element names and relation
/// symbols with arities. Arity 0 means variadic.
struct StructureSig {
  std::vector<Symbol> theta;
  std::vector<std::pair<Symbol, std::size_t>> gamma;  // sorted by symbol

  bool operator==(const StructureSig& o) const {
    return theta == o.theta && gamma == o.gamma;
  }
};

/// Finite carrier with named special elements and relation tables.
struct StructuredObject {
  std::string name;
  StructureSig sig;
  std::vector<Symbol> carrier;
  std::vector<std::pair<Symbol, Symbol>> specials;          // theta -> carrier
  std::vector<std::pair<Symbol, std::vector<Token>>> rels;  // gamma -> tuples

  const std::vector<Token>* relation(const Symbol& g) const;
};

// Validated constructor. Throws ArityViolation, ForeignSymbol, BadInput.
StructuredObject mk_structured(std::string name, StructureSig sig,
                               std::vector<Symbol> carrier,
                               std::vector<std::pair<Symbol, Symbol>> specials,
                               std::vector<std::pair<Symbol, std::vector<Token>>> rels);

// Encode as a token class: base = carrier, core = theta + relation
// symbols, heap = special and relation tokens.
TokenClass rep_structured(const StructuredObject& obj);

// Specials map to specials, relation tuples map into the same relation.
Verdict check_preserving(const ElemMap& f, const StructuredObject& src,
                         const StructuredObject& dst);

// Encoded map; throws NotPreserving with the violated tuple.
TokenMap rep_map(const ElemMap& f, const StructuredObject& src,
                 const StructuredObject& dst);

// Builtin structured objects.
StructuredObject obj_set(std::string name, std::vector<Symbol> carrier);
StructuredObject obj_pointed(std::string name, std::vector<Symbol> carrier,
                             Symbol point);
// rel lists the related pairs (x, y); relsym defaults to "le".
StructuredObject obj_ordered(std::string name, std::vector<Symbol> carrier,
                             std::vector<std::pair<Symbol, Symbol>> rel,
                             std::string relsym = "le");
StructuredObject obj_graph(std::string name, std::vector<Symbol> vertices,
                           std::vector<std::pair<Symbol, Symbol>> edges);

/// Finite ring given by operation tables over carrier indices.
struct RingSpec {
  std::string name;
  std::vector<Symbol> elems;
  std::vector<std::vector<std::size_t>> add;  // elems x elems -> index
  std::vector<std::vector<std::size_t>> mul;
  std::vector<std::size_t> neg;
  std::size_t zero = 0;
};

// Relation symbols are the atoms add/mul/neg/zero so carriers named with
// digits stay clear of the core. Throws NotAStructure on malformed tables.
StructuredObject obj_ring(const RingSpec& spec);
RingSpec ring_z2();
RingSpec ring_z4();
RingSpec ring_z2xz2();

/// Finite vector space over a finite field: the field is a RingSpec and
/// vectors carry their own addition and scalar-action tables.
struct VctSpec {
  std::string name;
  RingSpec field;
  std::vector<Symbol> vecs;
  std::vector<std::vector<std::size_t>> add;     // vecs x vecs -> index
  std::vector<std::vector<std::size_t>> scale;   // field x vecs -> index
  std::size_t zero = 0;
};

// Scalars appear as relation symbols tagged "s" to keep them apart from
// the vector carrier.
StructuredObject obj_vct(const VctSpec& spec);
// Two-sorted variant: carrier = vectors + scalars with sort relations.
StructuredObject obj_vct_prime(const VctSpec& spec);
VctSpec vct_f2_dim1();

/// Finite topological space; opens are sorted subsets of points.
struct TopSpec {
  std::string name;
  std::vector<Symbol> points;
  std::vector<std::vector<Symbol>> opens;
};

// Throws NotATopology unless opens contain {} and the space and are
// closed under union and intersection.
void check_topology(const TopSpec& spec);

// Powerset class of the point set with an open-set predicate token
// (gammaO, S) per open S.
TokenClass rep_top(const TopSpec& spec);

// The reversed continuous map: rep_top(Y) -> rep_top(X), subsets to
// preimages, everything else to e. Throws NotContinuous with the
// offending open set.
TokenMap top_reverse(const ElemMap& f, const TopSpec& x, const TopSpec& y);

bool is_continuous(const ElemMap& f, const TopSpec& x, const TopSpec& y);

}  // namespace tokspace
