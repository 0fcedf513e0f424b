#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tokspace/errors.hpp"
#include "tokspace/heap.hpp"
#include "tokspace/symbol.hpp"

namespace tokspace {

/// Base and core alphabets. Kept sorted; base and core are disjoint.
struct Alphabet {
  std::vector<Symbol> base;
  std::vector<Symbol> core;

  std::vector<Symbol> universe() const { return set_union(base, core); }
  bool in_base(const Symbol& s) const { return contains(base, s); }
  bool in_core(const Symbol& s) const { return contains(core, s); }
  bool operator==(const Alphabet& o) const { return base == o.base && core == o.core; }
};

/// A class of tokens: alphabet plus a heap of admitted tokens. The heap's
/// normal form is computed once and shared.
struct TokenClass {
  std::string name;
  Alphabet alpha;
  HeapExpr heap;
  std::shared_ptr<const std::optional<NormalHeap>> norm_cache;

  // Normal form of the heap; nullopt for expressions outside the
  // finite-plus-cofinite shape.
  const std::optional<NormalHeap>& norm() const;
};

/// Validated construction. Throws Error codes AlphabetOverlap and
/// ForeignSymbol.
TokenClass mk_class(std::string name, std::vector<Symbol> base,
                    std::vector<Symbol> core, HeapExpr heap);

bool heap_member(const TokenClass& cls, const Token& t);
Verdict heap_subset_in(const TokenClass& cls, const HeapExpr& a, const HeapExpr& b,
                       std::size_t bound = 6);
std::vector<Token> heap_enumerate(const TokenClass& cls, std::size_t max_len);

// Same alphabets and semantically equal heaps.
bool class_equal(const TokenClass& a, const TokenClass& b);

/// A map of token classes, determined by its base-symbol action; core
/// symbols are fixed.
struct TokenMap {
  TokenClass src;
  TokenClass dst;
  ElemMap f0;  // domain = src base, values in dst base

  ElemMap elem() const;  // f0 extended identically to the core
};

/// Validated construction. Throws CoreMismatch, NotTotal, ForeignSymbol,
/// HeapViolation (with witness) or UndecidedContainment.
TokenMap mk_map(TokenClass src, TokenClass dst, ElemMap f0, std::size_t bound = 6);

// Non-throwing variant used by enumeration loops: Holds means valid.
Verdict check_map(const TokenClass& src, const TokenClass& dst, const ElemMap& f0,
                  std::size_t bound = 6);

Token apply_map(const TokenMap& f, const Token& t);
TokenMap compose_map(const TokenMap& g, const TokenMap& f);  // g after f
TokenMap identity_map(const TokenClass& cls);
bool map_equal(const TokenMap& a, const TokenMap& b);

enum class ConstantKind { Initial, Terminal, Truth };
TokenClass constant_class(ConstantKind kind, std::vector<Symbol> core);

// Componentwise containment: same core, base subset, heap subset.
Verdict is_subclass(const TokenClass& sub, const TokenClass& super,
                    std::size_t bound = 6);

struct HomSet {
  std::vector<TokenMap> maps;
  std::size_t undecided = 0;  // candidates dropped on an Undecided verdict
};

// Every map src -> dst, by exhausting base assignments.
HomSet hom_enumerate(const TokenClass& src, const TokenClass& dst,
                     std::size_t bound = 6);

}  // namespace tokspace
