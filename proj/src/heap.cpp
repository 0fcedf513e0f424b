#include "tokspace/heap.hpp"

#include <algorithm>
#include <stdexcept>

namespace tokspace {

ElemMap ElemMap::from(std::vector<std::pair<Symbol, Symbol>> kv) {
  std::sort(kv.begin(), kv.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < kv.size(); ++i) {
    if (kv[i].first == kv[i - 1].first) {
      if (kv[i].second == kv[i - 1].second) continue;
      throw std::invalid_argument("elementwise map has conflicting entries for " +
                                  kv[i].first.str());
    }
  }
  kv.erase(std::unique(kv.begin(), kv.end(),
                       [](const auto& a, const auto& b) { return a.first == b.first; }),
           kv.end());
  ElemMap m;
  m.entries = std::move(kv);
  return m;
}

ElemMap ElemMap::identity(const std::vector<Symbol>& dom) {
  std::vector<std::pair<Symbol, Symbol>> kv;
  kv.reserve(dom.size());
  for (const auto& s : dom) kv.emplace_back(s, s);
  return from(std::move(kv));
}

const Symbol* ElemMap::find(const Symbol& key) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), key,
                             [](const auto& e, const Symbol& k) { return e.first < k; });
  if (it != entries.end() && it->first == key) return &it->second;
  return nullptr;
}

std::optional<Token> ElemMap::apply(const Token& t) const {
  Token out;
  out.elems.reserve(t.size());
  for (const auto& s : t.elems) {
    const Symbol* v = find(s);
    if (!v) return std::nullopt;
    out.elems.push_back(*v);
  }
  return out;
}

std::vector<Symbol> ElemMap::domain() const {
  std::vector<Symbol> d;
  d.reserve(entries.size());
  for (const auto& e : entries) d.push_back(e.first);
  return d;
}

std::vector<Symbol> ElemMap::range() const {
  std::vector<Symbol> r;
  r.reserve(entries.size());
  for (const auto& e : entries) r.push_back(e.second);
  sort_unique(r);
  return r;
}

std::vector<Symbol> ElemMap::preimage(const Symbol& value) const {
  std::vector<Symbol> p;
  for (const auto& e : entries)
    if (e.second == value) p.push_back(e.first);
  return p;
}

std::vector<Token> ElemMap::preimage(const Token& t) const {
  std::vector<std::vector<Symbol>> choices;
  choices.reserve(t.size());
  for (const auto& s : t.elems) {
    auto p = preimage(s);
    if (p.empty()) return {};
    choices.push_back(std::move(p));
  }
  std::vector<Token> out;
  Token cur;
  cur.elems.resize(t.size());
  std::vector<std::size_t> idx(t.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < t.size(); ++i) cur.elems[i] = choices[i][idx[i]];
    out.push_back(cur);
    std::size_t i = t.size();
    while (i > 0) {
      --i;
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
      if (i == 0) {
        sort_unique(out);
        return out;
      }
    }
    if (t.size() == 0) {  // single empty tuple
      sort_unique(out);
      return out;
    }
  }
}

bool ElemMap::injective() const {
  std::vector<Symbol> vals;
  vals.reserve(entries.size());
  for (const auto& e : entries) vals.push_back(e.second);
  std::sort(vals.begin(), vals.end());
  return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
}

ElemMap ElemMap::inverse() const {
  std::vector<std::pair<Symbol, Symbol>> kv;
  kv.reserve(entries.size());
  for (const auto& e : entries) kv.emplace_back(e.second, e.first);
  return from(std::move(kv));
}

ElemMap ElemMap::compose(const ElemMap& g, const ElemMap& f) {
  std::vector<std::pair<Symbol, Symbol>> kv;
  kv.reserve(f.entries.size());
  for (const auto& e : f.entries) {
    const Symbol* v = g.find(e.second);
    if (!v)
      throw std::invalid_argument("composition leaves " + e.second.str() +
                                  " without an image");
    kv.emplace_back(e.first, *v);
  }
  return from(std::move(kv));
}

ElemMap ElemMap::merge(const ElemMap& a, const ElemMap& b) {
  std::vector<std::pair<Symbol, Symbol>> kv = a.entries;
  kv.insert(kv.end(), b.entries.begin(), b.entries.end());
  return from(std::move(kv));
}

HeapExpr HeapExpr::finite(std::vector<Token> tokens) {
  sort_unique(tokens);
  HeapExpr e;
  e.kind_ = Kind::Finite;
  e.tokens_ = std::move(tokens);
  return e;
}

HeapExpr HeapExpr::full(std::vector<Symbol> alphabet) {
  sort_unique(alphabet);
  HeapExpr e;
  e.kind_ = Kind::Full;
  e.alpha_ = std::move(alphabet);
  return e;
}

HeapExpr HeapExpr::union_(HeapExpr l, HeapExpr r) {
  HeapExpr e;
  e.kind_ = Kind::Union;
  e.lhs_ = std::make_shared<const HeapExpr>(std::move(l));
  e.rhs_ = std::make_shared<const HeapExpr>(std::move(r));
  return e;
}
HeapExpr HeapExpr::intersect(HeapExpr l, HeapExpr r) {
  HeapExpr e;
  e.kind_ = Kind::Intersect;
  e.lhs_ = std::make_shared<const HeapExpr>(std::move(l));
  e.rhs_ = std::make_shared<const HeapExpr>(std::move(r));
  return e;
}
HeapExpr HeapExpr::difference(HeapExpr l, HeapExpr r) {
  HeapExpr e;
  e.kind_ = Kind::Difference;
  e.lhs_ = std::make_shared<const HeapExpr>(std::move(l));
  e.rhs_ = std::make_shared<const HeapExpr>(std::move(r));
  return e;
}

HeapExpr HeapExpr::preimage(ElemMap m, HeapExpr of) {
  HeapExpr e;
  e.kind_ = Kind::Preimage;
  e.map_ = std::move(m);
  e.lhs_ = std::make_shared<const HeapExpr>(std::move(of));
  return e;
}

HeapExpr HeapExpr::image_bij(ElemMap m, HeapExpr of) {
  if (!m.injective())
    throw std::invalid_argument("image node requires an injective symbol map");
  HeapExpr e;
  e.kind_ = Kind::ImageBij;
  e.map_ = std::move(m);
  e.lhs_ = std::make_shared<const HeapExpr>(std::move(of));
  return e;
}

bool HeapExpr::member(const Token& t) const {
  switch (kind_) {
    case Kind::Finite:
      return contains(tokens_, t);
    case Kind::Full:
      for (const auto& s : t.elems)
        if (!contains(alpha_, s)) return false;
      return true;
    case Kind::Union:
      return lhs_->member(t) || rhs_->member(t);
    case Kind::Intersect:
      return lhs_->member(t) && rhs_->member(t);
    case Kind::Difference:
      return lhs_->member(t) && !rhs_->member(t);
    case Kind::Preimage: {
      auto img = map_.apply(t);
      return img && lhs_->member(*img);
    }
    case Kind::ImageBij: {
      auto pre = map_.inverse().apply(t);
      return pre && lhs_->member(*pre);
    }
  }
  return false;
}

std::vector<Symbol> HeapExpr::mentioned_symbols() const {
  std::vector<Symbol> out;
  switch (kind_) {
    case Kind::Finite:
      for (const auto& t : tokens_)
        out.insert(out.end(), t.elems.begin(), t.elems.end());
      break;
    case Kind::Full:
      out = alpha_;
      break;
    case Kind::Union:
    case Kind::Intersect:
    case Kind::Difference: {
      out = lhs_->mentioned_symbols();
      auto r = rhs_->mentioned_symbols();
      out.insert(out.end(), r.begin(), r.end());
      break;
    }
    case Kind::Preimage:
    case Kind::ImageBij: {
      out = lhs_->mentioned_symbols();
      for (const auto& e : map_.entries) {
        out.push_back(e.first);
        out.push_back(e.second);
      }
      break;
    }
  }
  sort_unique(out);
  return out;
}

}  // namespace tokspace
