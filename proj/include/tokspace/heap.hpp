#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tokspace/symbol.hpp"

namespace tokspace {

/// Three-valued result of a semantic query. A failing verdict carries a
/// witness where one exists.
struct Verdict {
  enum class State { Holds, Fails, Undecided };

  State state = State::Holds;
  std::optional<Token> witness;
  std::string detail;
  std::size_t bound = 0;

  static Verdict holds() { return {}; }
  static Verdict fails(Token w, std::string d = "") {
    Verdict v;
    v.state = State::Fails;
    v.witness = std::move(w);
    v.detail = std::move(d);
    return v;
  }
  static Verdict fails(std::string d) {
    Verdict v;
    v.state = State::Fails;
    v.detail = std::move(d);
    return v;
  }
  static Verdict undecided(std::size_t bound, std::string d = "") {
    Verdict v;
    v.state = State::Undecided;
    v.bound = bound;
    v.detail = std::move(d);
    return v;
  }

  bool holds_p() const { return state == State::Holds; }
  bool fails_p() const { return state == State::Fails; }
  explicit operator bool() const { return state == State::Holds; }
};

/// Finite symbol map, total on its listed domain. Applied to tokens
/// elementwise; application fails on symbols outside the domain.
struct ElemMap {
  std::vector<std::pair<Symbol, Symbol>> entries;  // sorted by key, keys unique

  static ElemMap from(std::vector<std::pair<Symbol, Symbol>> kv);
  static ElemMap identity(const std::vector<Symbol>& dom);

  const Symbol* find(const Symbol& key) const;
  std::optional<Token> apply(const Token& t) const;
  std::vector<Symbol> domain() const;
  std::vector<Symbol> range() const;
  // Domain symbols mapping to a given value.
  std::vector<Symbol> preimage(const Symbol& value) const;
  // All tokens mapping to t: cartesian product of per-symbol preimages.
  std::vector<Token> preimage(const Token& t) const;
  bool injective() const;
  ElemMap inverse() const;  // requires injective()
  // this after other: compose(g, f)(x) = g(f(x)); domain is f's.
  static ElemMap compose(const ElemMap& g, const ElemMap& f);
  // Union of two maps whose domains are disjoint or agree pointwise.
  static ElemMap merge(const ElemMap& a, const ElemMap& b);
};

/// Symbolic heap expression. Leaves are explicit token lists or the full
/// tokenoid over an alphabet; inner nodes are boolean combinators plus
/// preimage/image under an elementwise symbol map.
class HeapExpr {
 public:
  enum class Kind { Finite, Full, Union, Intersect, Difference, Preimage, ImageBij };

  HeapExpr() : kind_(Kind::Finite) {}

  static HeapExpr finite(std::vector<Token> tokens);
  static HeapExpr full(std::vector<Symbol> alphabet);
  static HeapExpr empty() { return finite({}); }
  static HeapExpr union_(HeapExpr l, HeapExpr r);
  static HeapExpr intersect(HeapExpr l, HeapExpr r);
  static HeapExpr difference(HeapExpr l, HeapExpr r);
  static HeapExpr preimage(ElemMap m, HeapExpr of);
  static HeapExpr image_bij(ElemMap m, HeapExpr of);  // m must be injective

  Kind kind() const { return kind_; }
  const std::vector<Token>& tokens() const { return tokens_; }
  const std::vector<Symbol>& alphabet() const { return alpha_; }
  const HeapExpr& lhs() const { return *lhs_; }
  const HeapExpr& rhs() const { return *rhs_; }
  const ElemMap& map() const { return map_; }

  // Exact membership, evaluated structurally.
  bool member(const Token& t) const;

  // Symbols named anywhere in the expression (used for validation).
  std::vector<Symbol> mentioned_symbols() const;

 private:
  Kind kind_;
  std::vector<Token> tokens_;
  std::vector<Symbol> alpha_;
  std::shared_ptr<const HeapExpr> lhs_, rhs_;
  ElemMap map_;
};

/// Exact normal form: a finite token set plus a union of cofinite blocks,
/// each block being the full tokenoid over `sigma` minus a finite list.
/// Everything the class constructors build normalizes to this shape;
/// only exotic hand-written differences can fall outside it.
struct NormalHeap {
  struct Block {
    std::vector<Symbol> sigma;   // nonempty
    std::vector<Token> minus;    // tokens over sigma, sorted
  };

  std::vector<Token> plus;       // sorted
  std::vector<Block> blocks;

  static NormalHeap finite(std::vector<Token> tokens);
  static NormalHeap full(std::vector<Symbol> sigma);
  static NormalHeap cofin(std::vector<Symbol> sigma, std::vector<Token> excluded);

  bool member(const Token& t) const;
  bool is_finite() const { return blocks.empty(); }
  bool is_empty() const { return plus.empty() && blocks.empty(); }
};

// Exact normal form, or nullopt when the expression does not fit the
// finite-plus-cofinite-blocks shape.
std::optional<NormalHeap> normalize(const HeapExpr& e);
HeapExpr to_expr(const NormalHeap& n);

// Exact subset test between normal forms. Never returns Undecided.
Verdict heap_subset(const NormalHeap& a, const NormalHeap& b);
bool heap_equal(const NormalHeap& a, const NormalHeap& b);

// Subset test on raw expressions. Exact when the operands normalize (or
// the left side is finite); otherwise scans tokens over `alphabet` up to
// length `bound` and reports Undecided if no counterexample turns up.
Verdict heap_subset(const HeapExpr& a, const HeapExpr& b,
                    const std::vector<Symbol>& alphabet, std::size_t bound = 6);

// All tokens over `alphabet` of length <= max_len, canonical order.
std::vector<Token> all_tokens(const std::vector<Symbol>& alphabet, std::size_t max_len);

// Members of the heap with length <= max_len, canonical order.
std::vector<Token> enumerate_members(const NormalHeap& n, std::size_t max_len);

// A member of `n` outside the finite set `avoid`, if one exists.
std::optional<Token> find_member_not_in(const NormalHeap& n,
                                        const std::vector<Token>& avoid);

}  // namespace tokspace
