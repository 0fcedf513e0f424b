#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tokspace {

class TreeTerm;

/// Structured atom. Alphabets, tokens and tree-term leaves are built from
/// these. A total canonical order (variant rank, then recursive field
/// order) makes every symbol set sortable and diffable.
class Symbol {
 public:
  enum class Kind { Atom, Marker, Pair, Tag, Fn, Subset, Term };

  Symbol() : kind_(Kind::Atom) {}

  static Symbol atom(std::string name);
  static Symbol marker(std::string name, int index = 0);
  static Symbol pair(Symbol left, Symbol right);
  static Symbol tag(std::string label, Symbol inner);
  // graph entries are sorted by key and must have unique keys (total map).
  static Symbol fn(std::vector<std::pair<Symbol, Symbol>> graph);
  static Symbol subset(std::vector<Symbol> members);
  static Symbol term(TreeTerm t);

  Kind kind() const { return kind_; }
  const std::string& text() const { return text_; }
  int marker_index() const { return index_; }

  const Symbol& left() const { return kids_[0]; }    // Pair
  const Symbol& right() const { return kids_[1]; }   // Pair
  const Symbol& inner() const { return kids_[0]; }   // Tag
  const std::vector<Symbol>& members() const { return kids_; }  // Subset
  std::size_t fn_size() const { return kids_.size() / 2; }
  const Symbol& fn_key(std::size_t i) const { return kids_[2 * i]; }
  const Symbol& fn_val(std::size_t i) const { return kids_[2 * i + 1]; }
  const Symbol* fn_lookup(const Symbol& key) const;
  const TreeTerm& tree() const { return *term_; }

  bool is_marker(const std::string& name) const {
    return kind_ == Kind::Marker && text_ == name;
  }

  std::string str() const;

  friend int cmp(const Symbol& a, const Symbol& b);
  bool operator==(const Symbol& o) const { return cmp(*this, o) == 0; }
  bool operator!=(const Symbol& o) const { return cmp(*this, o) != 0; }
  bool operator<(const Symbol& o) const { return cmp(*this, o) < 0; }

 private:
  Kind kind_;
  std::string text_;  // Atom name, Marker name, Tag label
  int index_ = 0;     // Marker index (fresh-marker policy)
  std::vector<Symbol> kids_;
  std::shared_ptr<const TreeTerm> term_;
};

/// Term of the free (·, &, ε) algebra, kept in normal form: ε never occurs
/// inside a concatenation, concatenations are flat and have at least two
/// parts. (x1,...,xn) denotes &(x1·...·xn).
class TreeTerm {
 public:
  enum class Kind { Eps, Leaf, Concat, Amp };

  TreeTerm() : kind_(Kind::Eps) {}

  static TreeTerm eps();
  static TreeTerm leaf(Symbol s);
  static TreeTerm concat(std::vector<TreeTerm> parts);
  static TreeTerm amp(TreeTerm child);

  Kind kind() const { return kind_; }
  const Symbol& symbol() const { return *sym_; }            // Leaf
  const std::vector<TreeTerm>& parts() const { return sub_; }  // Concat
  const TreeTerm& child() const { return sub_[0]; }         // Amp

  // Parts of this term viewed as a concatenation: [] for ε, [t] for a
  // leaf or an &-node, the part list for a concatenation.
  std::vector<TreeTerm> factors() const;

  std::string str() const;

  friend int cmp(const TreeTerm& a, const TreeTerm& b);
  bool operator==(const TreeTerm& o) const { return cmp(*this, o) == 0; }
  bool operator!=(const TreeTerm& o) const { return cmp(*this, o) != 0; }
  bool operator<(const TreeTerm& o) const { return cmp(*this, o) < 0; }

 private:
  Kind kind_;
  std::optional<Symbol> sym_;
  std::vector<TreeTerm> sub_;
};

/// A token: finite tuple of symbols. The empty tuple is the monoid unit ε.
struct Token {
  std::vector<Symbol> elems;

  Token() = default;
  explicit Token(std::vector<Symbol> e) : elems(std::move(e)) {}

  std::size_t size() const { return elems.size(); }
  bool empty() const { return elems.empty(); }

  std::string str() const;

  friend int cmp(const Token& a, const Token& b);  // length, then lex
  bool operator==(const Token& o) const { return cmp(*this, o) == 0; }
  bool operator!=(const Token& o) const { return cmp(*this, o) != 0; }
  bool operator<(const Token& o) const { return cmp(*this, o) < 0; }
};

// Sorted-unique helpers used for alphabets, heaps and symbol sets.
void sort_unique(std::vector<Symbol>& v);
void sort_unique(std::vector<Token>& v);
bool contains(const std::vector<Symbol>& sorted, const Symbol& s);
bool contains(const std::vector<Token>& sorted, const Token& t);
std::vector<Symbol> set_union(const std::vector<Symbol>& a, const std::vector<Symbol>& b);
std::vector<Symbol> set_intersect(const std::vector<Symbol>& a, const std::vector<Symbol>& b);
std::vector<Symbol> set_difference(const std::vector<Symbol>& a, const std::vector<Symbol>& b);
std::vector<Token> set_union(const std::vector<Token>& a, const std::vector<Token>& b);
std::vector<Token> set_intersect(const std::vector<Token>& a, const std::vector<Token>& b);
std::vector<Token> set_difference(const std::vector<Token>& a, const std::vector<Token>& b);
bool is_subset(const std::vector<Symbol>& a, const std::vector<Symbol>& b);

}  // namespace tokspace
