#include "tokspace/reify.hpp"

#include <algorithm>
#include <map>

namespace tokspace {

namespace {

const Symbol& eps_marker() {
  static const Symbol s = Symbol::marker("eps");
  return s;
}
const Symbol& frak_marker() {
  static const Symbol s = Symbol::marker("F");
  return s;
}

void check_markers(const std::vector<Symbol>& base, const std::vector<Symbol>& core) {
  if (contains(base, eps_marker()) || contains(core, eps_marker()) ||
      contains(base, frak_marker()) || contains(core, frak_marker()))
    fail("MarkerCollision", "reification markers already occur in the alphabet");
}

bool is_compound(const TreeTerm& t) { return t.kind() == TreeTerm::Kind::Amp; }

Token adjacency(const TreeTerm& p) {
  Token t{{eps_marker(), subtree_symbol(p)}};
  if (is_compound(p))
    for (const auto& x : p.child().factors())
      t.elems.push_back(subtree_symbol(x));
  return t;
}

}  // namespace

Symbol subtree_symbol(const TreeTerm& t) {
  if (t.kind() == TreeTerm::Kind::Leaf) return t.symbol();
  return Symbol::term(t);
}

TreeTerm symbol_subtree(const Symbol& s) {
  if (s.kind() == Symbol::Kind::Term) return s.tree();
  return TreeTerm::leaf(s);
}

std::vector<Token> self_nesting(const TreeTerm& r) {
  if (!is_token_term(r)) fail("NotAToken", "self nesting needs a tree token");
  Token root{{eps_marker(), subtree_symbol(r)}};
  if (!is_compound(r)) return {std::move(root)};
  // the bare children tuple is the only eps-free heap token, so p-maps
  // between reifications must send the root to the root
  Token kids;
  for (const auto& x : r.child().factors()) kids.elems.push_back(subtree_symbol(x));
  return {std::move(root), std::move(kids)};
}

TokenClass reify_token(const TreeTerm& r, const std::vector<Symbol>& base,
                       const std::vector<Symbol>& core) {
  check_markers(base, core);
  std::vector<Symbol> univ = set_union(base, core);
  for (const auto& s : term_base(r))
    if (!contains(univ, s))
      fail("ForeignSymbol", s.str() + " is not in the alphabet");
  if (!is_token_term(r)) fail("NotAToken", "reification needs a tree token");

  std::vector<Symbol> out_base;
  std::vector<Token> heap;
  for (const auto& p : scatter_star(r)) {
    Symbol s = subtree_symbol(p);
    if (!contains(core, s)) out_base.push_back(s);
    if (is_compound(p)) heap.push_back(adjacency(p));
  }
  for (auto& t : self_nesting(r)) heap.push_back(std::move(t));
  sort_unique(out_base);
  sort_unique(heap);

  std::vector<Symbol> out_core = core;
  out_core.push_back(eps_marker());
  out_core.push_back(frak_marker());
  return mk_class("reify(" + r.str() + ")", std::move(out_base), std::move(out_core),
                  HeapExpr::finite(std::move(heap)));
}

TokenClass reify_class(const TreeClass& t) {
  check_markers(t.alpha.base, t.alpha.core);
  std::vector<Symbol> base;
  std::vector<Token> heap;
  for (const auto& r : t.heap) {
    TokenClass part = reify_token(r, t.alpha.base, t.alpha.core);
    base = set_union(base, part.alpha.base);
    heap = set_union(heap, part.norm()->plus);
  }
  std::vector<Symbol> core = t.alpha.core;
  core.push_back(eps_marker());
  core.push_back(frak_marker());
  return mk_class("reify(" + t.name + ")", std::move(base), std::move(core),
                  HeapExpr::finite(std::move(heap)));
}

TokenMap reify_map(const TreeMap& f) {
  TokenClass src = reify_class(f.src);
  TokenClass dst = reify_class(f.dst);
  std::vector<std::pair<Symbol, Symbol>> kv;
  for (const auto& s : src.alpha.base)
    kv.emplace_back(s, subtree_symbol(tmorph_apply(f.f0, symbol_subtree(s))));
  return mk_map(std::move(src), std::move(dst), ElemMap::from(std::move(kv)));
}

namespace {

using Assign = std::map<Symbol, Symbol>;

bool assign(Assign& m, const Symbol& key, const Symbol& val) {
  auto it = m.find(key);
  if (it != m.end()) return it->second == val;
  m.emplace(key, val);
  return true;
}

// Force g(p) = q and propagate through p's adjacency token.
bool match_pmap(const TreeTerm& p, const TreeTerm& q, Assign& m) {
  if (!assign(m, subtree_symbol(p), subtree_symbol(q))) return false;
  if (!is_compound(p)) return true;  // leaves carry no token of their own
  if (!is_compound(q)) return false;
  auto xs = p.child().factors();
  auto ys = q.child().factors();
  if (xs.size() != ys.size()) return false;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (!match_pmap(xs[i], ys[i], m)) return false;
  return true;
}

}  // namespace

std::vector<ElemMap> singleton_pmaps(const TreeTerm& r1, const TreeTerm& r2) {
  // the root tokens (eps, r) and the eps-free children tuple pin the
  // image of r1 to r2 itself, so alignment propagates from the top
  Assign m;
  if (!match_pmap(r1, r2, m)) return {};
  return {ElemMap::from({m.begin(), m.end()})};
}

namespace {

bool align_tmap(const TreeTerm& p, const TreeTerm& q,
                std::map<Symbol, TreeTerm>& m) {
  if (p.kind() == TreeTerm::Kind::Leaf) {
    auto it = m.find(p.symbol());
    if (it != m.end()) return it->second == q;
    m.emplace(p.symbol(), q);
    return true;
  }
  if (!is_compound(p) || !is_compound(q)) return p == q;
  auto xs = p.child().factors();
  auto ys = q.child().factors();
  if (xs.size() != ys.size()) return false;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (!align_tmap(xs[i], ys[i], m)) return false;
  return true;
}

}  // namespace

std::optional<LeafMap> singleton_tmap(const TreeTerm& r1, const TreeTerm& r2) {
  std::map<Symbol, TreeTerm> m;
  if (!align_tmap(r1, r2, m)) return std::nullopt;
  return LeafMap::from({m.begin(), m.end()});
}

std::vector<LeafMap> enumerate_tmaps(const TreeClass& t1, const TreeClass& t2,
                                     std::size_t depth_bound) {
  std::vector<TreeTerm> pool;
  for (const auto& r : t2.heap)
    for (const auto& p : scatter_star(r))
      if (term_depth(p) <= depth_bound) pool.push_back(p);
  for (const auto& s : t2.alpha.base) pool.push_back(TreeTerm::leaf(s));
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  std::vector<LeafMap> out;
  const auto& dom = t1.alpha.base;
  if (pool.empty()) {
    if (dom.empty()) {
      LeafMap id = LeafMap::from({});
      bool ok = true;
      for (const auto& r : t1.heap)
        if (!std::binary_search(t2.heap.begin(), t2.heap.end(), tmorph_apply(id, r)))
          ok = false;
      if (ok) out.push_back(std::move(id));
    }
    return out;
  }
  std::vector<std::size_t> pick(dom.size(), 0);
  while (true) {
    std::vector<std::pair<Symbol, TreeTerm>> kv;
    for (std::size_t i = 0; i < dom.size(); ++i) kv.emplace_back(dom[i], pool[pick[i]]);
    LeafMap f = LeafMap::from(std::move(kv));
    bool ok = true;
    for (const auto& r : t1.heap)
      if (!std::binary_search(t2.heap.begin(), t2.heap.end(), tmorph_apply(f, r))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(f));

    if (dom.empty()) break;
    std::size_t i = dom.size();
    bool done = false;
    while (i > 0) {
      --i;
      if (++pick[i] < pool.size()) break;
      pick[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

HomCorrReport hom_correspondence(const TreeClass& t1, const TreeClass& t2,
                                 std::size_t depth_bound) {
  HomCorrReport rep;
  rep.tmaps = enumerate_tmaps(t1, t2, depth_bound);

  TokenClass r1 = reify_class(t1);
  TokenClass r2 = reify_class(t2);
  HomSet hom = hom_enumerate(r1, r2);
  rep.pmap_count = hom.maps.size();

  rep.every_tmap_reifies = true;
  for (const auto& f : rep.tmaps) {
    std::vector<std::pair<Symbol, Symbol>> kv;
    for (const auto& s : r1.alpha.base)
      kv.emplace_back(s, subtree_symbol(tmorph_apply(f, symbol_subtree(s))));
    if (!check_map(r1, r2, ElemMap::from(std::move(kv))).holds_p())
      rep.every_tmap_reifies = false;
  }

  rep.every_pmap_restricts = true;
  for (const auto& g : hom.maps) {
    std::vector<std::pair<Symbol, TreeTerm>> kv;
    for (const auto& s : t1.alpha.base)
      if (const Symbol* img = g.f0.find(s))
        kv.emplace_back(s, symbol_subtree(*img));
    LeafMap f = LeafMap::from(std::move(kv));
    bool ok = true;
    for (const auto& r : t1.heap)
      if (!std::binary_search(t2.heap.begin(), t2.heap.end(), tmorph_apply(f, r)))
        ok = false;
    for (const auto& s : r1.alpha.base) {
      const Symbol* img = g.f0.find(s);
      if (!img || !(*img == subtree_symbol(tmorph_apply(f, symbol_subtree(s)))))
        ok = false;
    }
    if (!ok) rep.every_pmap_restricts = false;
  }

  rep.counts_match = rep.tmaps.size() == rep.pmap_count;
  return rep;
}

}  // namespace tokspace
