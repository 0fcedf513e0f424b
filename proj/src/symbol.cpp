#include "tokspace/symbol.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace tokspace {

Symbol Symbol::atom(std::string name) {
  Symbol s;
  s.kind_ = Kind::Atom;
  s.text_ = std::move(name);
  return s;
}

Symbol Symbol::marker(std::string name, int index) {
  Symbol s;
  s.kind_ = Kind::Marker;
  s.text_ = std::move(name);
  s.index_ = index;
  return s;
}

Symbol Symbol::pair(Symbol left, Symbol right) {
  Symbol s;
  s.kind_ = Kind::Pair;
  s.kids_.push_back(std::move(left));
  s.kids_.push_back(std::move(right));
  return s;
}

Symbol Symbol::tag(std::string label, Symbol inner) {
  Symbol s;
  s.kind_ = Kind::Tag;
  s.text_ = std::move(label);
  s.kids_.push_back(std::move(inner));
  return s;
}

Symbol Symbol::fn(std::vector<std::pair<Symbol, Symbol>> graph) {
  std::sort(graph.begin(), graph.end(), [](const auto& a, const auto& b) {
    return a.first < b.first;
  });
  Symbol s;
  s.kind_ = Kind::Fn;
  s.kids_.reserve(graph.size() * 2);
  for (auto& kv : graph) {
    assert(s.kids_.empty() || s.kids_[s.kids_.size() - 2] != kv.first);
    s.kids_.push_back(std::move(kv.first));
    s.kids_.push_back(std::move(kv.second));
  }
  return s;
}

Symbol Symbol::subset(std::vector<Symbol> members) {
  sort_unique(members);
  Symbol s;
  s.kind_ = Kind::Subset;
  s.kids_ = std::move(members);
  return s;
}

Symbol Symbol::term(TreeTerm t) {
  Symbol s;
  s.kind_ = Kind::Term;
  s.term_ = std::make_shared<const TreeTerm>(std::move(t));
  return s;
}

const Symbol* Symbol::fn_lookup(const Symbol& key) const {
  for (std::size_t i = 0; i < fn_size(); ++i)
    if (fn_key(i) == key) return &fn_val(i);
  return nullptr;
}

int cmp(const Symbol& a, const Symbol& b) {
  if (a.kind_ != b.kind_)
    return static_cast<int>(a.kind_) < static_cast<int>(b.kind_) ? -1 : 1;
  if (int c = a.text_.compare(b.text_); c != 0) return c < 0 ? -1 : 1;
  if (a.index_ != b.index_) return a.index_ < b.index_ ? -1 : 1;
  if (a.kind_ == Symbol::Kind::Term) return cmp(*a.term_, *b.term_);
  if (a.kids_.size() != b.kids_.size())
    return a.kids_.size() < b.kids_.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.kids_.size(); ++i)
    if (int c = cmp(a.kids_[i], b.kids_[i]); c != 0) return c;
  return 0;
}

std::string Symbol::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Atom:
      os << text_;
      break;
    case Kind::Marker:
      os << '#' << text_;
      if (index_ != 0) os << index_;
      break;
    case Kind::Pair:
      os << '<' << left().str() << ',' << right().str() << '>';
      break;
    case Kind::Tag:
      os << text_ << ':' << inner().str();
      break;
    case Kind::Fn: {
      os << "fn:{";
      for (std::size_t i = 0; i < fn_size(); ++i) {
        if (i) os << ',';
        os << fn_key(i).str() << '>' << fn_val(i).str();
      }
      os << '}';
      break;
    }
    case Kind::Subset: {
      os << "set:{";
      for (std::size_t i = 0; i < kids_.size(); ++i) {
        if (i) os << ',';
        os << kids_[i].str();
      }
      os << '}';
      break;
    }
    case Kind::Term:
      os << "term:" << term_->str();
      break;
  }
  return os.str();
}

TreeTerm TreeTerm::eps() { return TreeTerm(); }

TreeTerm TreeTerm::leaf(Symbol s) {
  TreeTerm t;
  t.kind_ = Kind::Leaf;
  t.sym_ = std::move(s);
  return t;
}

TreeTerm TreeTerm::concat(std::vector<TreeTerm> parts) {
  std::vector<TreeTerm> flat;
  for (auto& p : parts) {
    switch (p.kind_) {
      case Kind::Eps:
        break;
      case Kind::Concat:
        for (auto& q : p.sub_) flat.push_back(std::move(q));
        break;
      default:
        flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return eps();
  if (flat.size() == 1) return std::move(flat[0]);
  TreeTerm t;
  t.kind_ = Kind::Concat;
  t.sub_ = std::move(flat);
  return t;
}

TreeTerm TreeTerm::amp(TreeTerm child) {
  TreeTerm t;
  t.kind_ = Kind::Amp;
  t.sub_.push_back(std::move(child));
  return t;
}

std::vector<TreeTerm> TreeTerm::factors() const {
  switch (kind_) {
    case Kind::Eps:
      return {};
    case Kind::Concat:
      return sub_;
    default:
      return {*this};
  }
}

int cmp(const TreeTerm& a, const TreeTerm& b) {
  if (a.kind_ != b.kind_)
    return static_cast<int>(a.kind_) < static_cast<int>(b.kind_) ? -1 : 1;
  switch (a.kind_) {
    case TreeTerm::Kind::Eps:
      return 0;
    case TreeTerm::Kind::Leaf:
      return cmp(*a.sym_, *b.sym_);
    case TreeTerm::Kind::Amp:
      return cmp(a.sub_[0], b.sub_[0]);
    case TreeTerm::Kind::Concat: {
      if (a.sub_.size() != b.sub_.size())
        return a.sub_.size() < b.sub_.size() ? -1 : 1;
      for (std::size_t i = 0; i < a.sub_.size(); ++i)
        if (int c = cmp(a.sub_[i], b.sub_[i]); c != 0) return c;
      return 0;
    }
  }
  return 0;
}

std::string TreeTerm::str() const {
  switch (kind_) {
    case Kind::Eps:
      return "eps";
    case Kind::Leaf:
      return sym_->str();
    case Kind::Amp: {
      std::ostringstream os;
      os << '(';
      auto fs = sub_[0].factors();
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) os << ',';
        os << fs[i].str();
      }
      os << ')';
      return os.str();
    }
    case Kind::Concat: {
      // Bare concatenations only occur as intermediate values.
      std::ostringstream os;
      for (std::size_t i = 0; i < sub_.size(); ++i) {
        if (i) os << '.';
        os << sub_[i].str();
      }
      return os.str();
    }
  }
  return "";
}

int cmp(const Token& a, const Token& b) {
  if (a.elems.size() != b.elems.size())
    return a.elems.size() < b.elems.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.elems.size(); ++i)
    if (int c = cmp(a.elems[i], b.elems[i]); c != 0) return c;
  return 0;
}

std::string Token::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) os << ',';
    os << elems[i].str();
  }
  os << ')';
  return os.str();
}

void sort_unique(std::vector<Symbol>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void sort_unique(std::vector<Token>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool contains(const std::vector<Symbol>& sorted, const Symbol& s) {
  return std::binary_search(sorted.begin(), sorted.end(), s);
}

bool contains(const std::vector<Token>& sorted, const Token& t) {
  return std::binary_search(sorted.begin(), sorted.end(), t);
}

template <typename T>
static std::vector<T> merge_union(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

template <typename T>
static std::vector<T> merge_intersect(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

template <typename T>
static std::vector<T> merge_difference(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Symbol> set_union(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
  return merge_union(a, b);
}
std::vector<Symbol> set_intersect(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
  return merge_intersect(a, b);
}
std::vector<Symbol> set_difference(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
  return merge_difference(a, b);
}
std::vector<Token> set_union(const std::vector<Token>& a, const std::vector<Token>& b) {
  return merge_union(a, b);
}
std::vector<Token> set_intersect(const std::vector<Token>& a, const std::vector<Token>& b) {
  return merge_intersect(a, b);
}
std::vector<Token> set_difference(const std::vector<Token>& a, const std::vector<Token>& b) {
  return merge_difference(a, b);
}

bool is_subset(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace tokspace
