#pragma once

#include <string>

#include "tokspace/rep.hpp"
#include "tokspace/token_class.hpp"

namespace tokspace {

// JSON class documents. Symbols are codec strings (see term_io), tokens
// are string arrays, heaps are either explicit token lists or expression
// trees with node tags full/finite/union/intersect/difference/preimage/
// imagebij. Writing is canonical; malformed input raises SchemaError.
TokenClass parse_class_doc(const std::string& text);
std::string print_class_doc(const TokenClass& t);

TokenClass read_class(const std::string& path);
void write_class(const std::string& path, const TokenClass& t);

/// Structure document: either a structured object or a finite topology.
struct StructureDoc {
  bool is_top = false;
  StructuredObject obj;
  TopSpec top;
};

// Kinds: set, pointed, poset, graph, ring (z2/z4/z2xz2 or explicit
// tables), vct, vctprime (builtin f2dim1), top.
StructureDoc parse_structure_doc(const std::string& text);
StructureDoc read_structure(const std::string& path);

}  // namespace tokspace
