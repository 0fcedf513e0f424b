#include "tokspace/class_ops.hpp"

#include <algorithm>

namespace tokspace {

namespace {

void require_same_core(const TokenClass& a, const TokenClass& b) {
  if (a.alpha.core != b.alpha.core)
    fail("CoreMismatch", a.name + " and " + b.name + " have different cores");
}

const NormalHeap& finite_norm(const TokenClass& t, const char* what) {
  if (!t.norm() || !t.norm()->is_finite())
    fail("SymbolicHeapUnsupported",
         std::string(what) + " needs an explicitly finite heap on " + t.name);
  return *t.norm();
}

}  // namespace

TokenClass merging(const TokenClass& t1, const TokenClass& t2) {
  require_same_core(t1, t2);
  return mk_class("(" + t1.name + " merge " + t2.name + ")",
                  set_union(t1.alpha.base, t2.alpha.base), t1.alpha.core,
                  HeapExpr::union_(t1.heap, t2.heap));
}

TokenClass meeting(const TokenClass& t1, const TokenClass& t2) {
  require_same_core(t1, t2);
  return mk_class("(" + t1.name + " meet " + t2.name + ")",
                  set_intersect(t1.alpha.base, t2.alpha.base), t1.alpha.core,
                  HeapExpr::intersect(t1.heap, t2.heap));
}

TokenClass forgetting(const TokenClass& t) {
  return mk_class("forget(" + t.name + ")", t.alpha.base, t.alpha.core,
                  HeapExpr::empty());
}

TokenClass deleting(const TokenClass& t, const TokenClass& minus) {
  require_same_core(t, minus);
  return mk_class("(" + t.name + " minus " + minus.name + ")", t.alpha.base,
                  t.alpha.core, HeapExpr::difference(t.heap, minus.heap));
}

Symbol fresh_marker(const std::string& name, const Alphabet& alpha) {
  int next = 0;
  for (const auto& s : alpha.universe())
    if (s.kind() == Symbol::Kind::Marker && s.text() == name)
      next = std::max(next, s.marker_index() + 1);
  return next == 0 ? Symbol::marker(name) : Symbol::marker(name, next);
}

TokenClass introduce_unknown(const TokenClass& t) {
  Symbol e = fresh_marker("e", t.alpha);
  Symbol eps = fresh_marker("eps", t.alpha);
  auto base = t.alpha.base;
  base.push_back(e);
  auto core = t.alpha.core;
  core.push_back(eps);
  HeapExpr heap =
      HeapExpr::union_(t.heap, HeapExpr::finite({Token{{eps, e}}}));
  return mk_class("unknown(" + t.name + ")", std::move(base), std::move(core),
                  std::move(heap));
}

TokenMap introduce_unknown_map(const TokenMap& f) {
  TokenClass src = introduce_unknown(f.src);
  TokenClass dst = introduce_unknown(f.dst);
  auto kv = f.f0.entries;
  kv.emplace_back(fresh_marker("e", f.src.alpha), fresh_marker("e", f.dst.alpha));
  return mk_map(std::move(src), std::move(dst), ElemMap::from(std::move(kv)));
}

namespace {

std::vector<Symbol> all_subsets(const std::vector<Symbol>& base) {
  std::vector<Symbol> out;
  const std::size_t n = base.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Symbol> members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) members.push_back(base[i]);
    out.push_back(Symbol::subset(std::move(members)));
  }
  sort_unique(out);
  return out;
}

bool subset_has(const Symbol& subset, const Symbol& x) {
  return subset.kind() == Symbol::Kind::Subset && contains(subset.members(), x);
}

}  // namespace

TokenClass powering(const TokenClass& t, std::size_t base_cap) {
  if (t.alpha.base.size() > base_cap)
    fail("BaseTooLarge", "powering caps the base at " + std::to_string(base_cap));
  const NormalHeap& norm = finite_norm(t, "powering");

  Symbol e = fresh_marker("e", t.alpha);
  Symbol eps = fresh_marker("eps", t.alpha);
  Symbol gamma = fresh_marker("gamma", t.alpha);

  std::vector<Symbol> subsets = all_subsets(t.alpha.base);
  std::vector<Symbol> base = t.alpha.base;
  base.push_back(e);
  base.insert(base.end(), subsets.begin(), subsets.end());
  std::vector<Symbol> core = t.alpha.core;
  core.push_back(eps);
  core.push_back(gamma);

  std::vector<Token> heap;
  for (const auto& s : subsets) {
    heap.push_back(Token{{gamma, s, e}});
    for (const auto& x : s.members()) heap.push_back(Token{{gamma, s, x}});
  }
  // Subset-lifted heap: each base position may stand for itself or for
  // any subset containing it.
  for (const auto& tok : norm.plus) {
    std::vector<std::vector<Symbol>> choices;
    for (const auto& x : tok.elems) {
      std::vector<Symbol> c{x};
      if (t.alpha.in_base(x))
        for (const auto& s : subsets)
          if (subset_has(s, x)) c.push_back(s);
      choices.push_back(std::move(c));
    }
    std::vector<std::size_t> pick(tok.size(), 0);
    while (true) {
      Token lifted;
      for (std::size_t i = 0; i < tok.size(); ++i)
        lifted.elems.push_back(choices[i][pick[i]]);
      heap.push_back(std::move(lifted));
      if (tok.size() == 0) break;
      std::size_t i = tok.size();
      bool done = false;
      while (i > 0) {
        --i;
        if (++pick[i] < choices[i].size()) break;
        pick[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
    }
  }
  return mk_class("power(" + t.name + ")", std::move(base), std::move(core),
                  HeapExpr::finite(std::move(heap)));
}

TokenMap powering_map(const TokenMap& f, std::size_t base_cap) {
  TokenClass src = powering(f.src, base_cap);
  TokenClass dst = powering(f.dst, base_cap);
  auto kv = f.f0.entries;
  kv.emplace_back(fresh_marker("e", f.src.alpha), fresh_marker("e", f.dst.alpha));
  for (const auto& s : all_subsets(f.src.alpha.base)) {
    std::vector<Symbol> image;
    for (const auto& x : s.members()) image.push_back(*f.f0.find(x));
    kv.emplace_back(s, Symbol::subset(std::move(image)));
  }
  return mk_map(std::move(src), std::move(dst), ElemMap::from(std::move(kv)));
}

TokenClass obscuring(const TokenClass& t) {
  return mk_class("obscure(" + t.name + ")", t.alpha.universe(), {}, t.heap);
}

TokenMap obscuring_map(const TokenMap& f) {
  TokenClass src = obscuring(f.src);
  TokenClass dst = obscuring(f.dst);
  ElemMap f0 = ElemMap::merge(f.f0, ElemMap::identity(f.src.alpha.core));
  return mk_map(std::move(src), std::move(dst), std::move(f0));
}

namespace {

std::optional<Token> pair_up(const Token& t1, const Token& t2,
                             const TokenClass& c1, const TokenClass& c2) {
  if (t1.size() != t2.size()) return std::nullopt;
  Token out;
  out.elems.reserve(t1.size());
  for (std::size_t i = 0; i < t1.size(); ++i) {
    bool core1 = c1.alpha.in_core(t1.elems[i]);
    bool core2 = c2.alpha.in_core(t2.elems[i]);
    if (core1 || core2) {
      if (!(t1.elems[i] == t2.elems[i])) return std::nullopt;
      out.elems.push_back(t1.elems[i]);
    } else {
      out.elems.push_back(Symbol::pair(t1.elems[i], t2.elems[i]));
    }
  }
  return out;
}

std::vector<Symbol> pair_base(const TokenClass& t1, const TokenClass& t2) {
  std::vector<Symbol> base;
  for (const auto& x : t1.alpha.base)
    for (const auto& y : t2.alpha.base) base.push_back(Symbol::pair(x, y));
  return base;
}

// All pair tokens whose projection to `side` (0 = left, 1 = right)
// equals tok, the other component running over the full other base.
void expand_side(const Token& tok, const TokenClass& own, const TokenClass& other,
                 int side, std::vector<Token>& out) {
  std::vector<std::vector<Symbol>> choices;
  for (const auto& x : tok.elems) {
    if (own.alpha.in_core(x)) {
      choices.push_back({x});
    } else {
      std::vector<Symbol> c;
      for (const auto& y : other.alpha.base)
        c.push_back(side == 0 ? Symbol::pair(x, y) : Symbol::pair(y, x));
      if (c.empty()) return;  // no completion exists
      choices.push_back(std::move(c));
    }
  }
  std::vector<std::size_t> pick(tok.size(), 0);
  while (true) {
    Token t;
    for (std::size_t i = 0; i < tok.size(); ++i) t.elems.push_back(choices[i][pick[i]]);
    out.push_back(std::move(t));
    if (tok.size() == 0) return;
    std::size_t i = tok.size();
    while (i > 0) {
      --i;
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace

TokenClass matchup(const TokenClass& t1, const TokenClass& t2) {
  require_same_core(t1, t2);
  const NormalHeap& n1 = finite_norm(t1, "matchup");
  const NormalHeap& n2 = finite_norm(t2, "matchup");
  std::vector<Token> heap;
  for (const auto& a : n1.plus)
    for (const auto& b : n2.plus)
      if (auto tok = pair_up(a, b, t1, t2)) heap.push_back(std::move(*tok));
  return mk_class("(" + t1.name + " matchup " + t2.name + ")", pair_base(t1, t2),
                  t1.alpha.core, HeapExpr::finite(std::move(heap)));
}

TokenClass blending(const TokenClass& t1, const TokenClass& t2) {
  require_same_core(t1, t2);
  const NormalHeap& n1 = finite_norm(t1, "blending");
  const NormalHeap& n2 = finite_norm(t2, "blending");
  std::vector<Token> heap;
  for (const auto& a : n1.plus) expand_side(a, t1, t2, 0, heap);
  for (const auto& b : n2.plus) expand_side(b, t2, t1, 1, heap);
  return mk_class("(" + t1.name + " blend " + t2.name + ")", pair_base(t1, t2),
                  t1.alpha.core, HeapExpr::finite(std::move(heap)));
}

TokenClass union_y(const TokenClass& t1, const TokenClass& t2) {
  return coproduct(t1, t2).cls;
}

TokenClass refering(const TokenClass& t1, const TokenClass& t2) {
  require_same_core(t1, t2);
  const NormalHeap& n2 = finite_norm(t2, "refering");
  const auto& core = t1.alpha.core;

  std::vector<Symbol> fns;
  {
    // Same function symbols as the exponent construction.
    const auto& dom = t2.alpha.base;
    const auto& cod = t1.alpha.base;
    if (dom.empty()) {
      fns.push_back(Symbol::fn({}));
    } else if (!cod.empty()) {
      std::vector<std::size_t> pick(dom.size(), 0);
      while (true) {
        std::vector<std::pair<Symbol, Symbol>> kv;
        for (std::size_t i = 0; i < dom.size(); ++i)
          kv.emplace_back(dom[i], cod[pick[i]]);
        fns.push_back(Symbol::fn(std::move(kv)));
        std::size_t i = dom.size();
        bool done = false;
        while (i > 0) {
          --i;
          if (++pick[i] < cod.size()) break;
          pick[i] = 0;
          if (i == 0) done = true;
        }
        if (done) break;
      }
      sort_unique(fns);
    }
  }

  std::vector<Symbol> zeta_pool = set_union(fns, core);
  std::vector<std::size_t> lengths;
  for (const auto& iota : n2.plus) lengths.push_back(iota.size());
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

  std::vector<Token> excluded;
  for (std::size_t m : lengths) {
    if (zeta_pool.empty()) break;
    std::vector<std::size_t> pick(m, 0);
    while (true) {
      Token zeta;
      for (std::size_t i = 0; i < m; ++i) zeta.elems.push_back(zeta_pool[pick[i]]);
      bool ok = true;
      for (const auto& iota : n2.plus) {
        if (iota.size() != m) continue;
        bool compatible = true;
        for (std::size_t j = 0; j < m && compatible; ++j) {
          bool zc = contains(core, zeta.elems[j]);
          bool ic = contains(core, iota.elems[j]);
          if ((zc || ic) && !(zeta.elems[j] == iota.elems[j])) compatible = false;
        }
        if (!compatible) continue;
        Token ev;
        for (std::size_t j = 0; j < m; ++j) {
          if (contains(core, iota.elems[j])) {
            ev.elems.push_back(zeta.elems[j]);
          } else {
            const Symbol* v = zeta.elems[j].fn_lookup(iota.elems[j]);
            if (!v) fail("BadInput", "function symbol misses an argument");
            ev.elems.push_back(*v);
          }
        }
        if (!heap_member(t1, ev)) {
          ok = false;
          break;
        }
      }
      if (!ok) excluded.push_back(std::move(zeta));

      if (m == 0) break;
      std::size_t i = m;
      bool done = false;
      while (i > 0) {
        --i;
        if (++pick[i] < zeta_pool.size()) break;
        pick[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
    }
  }
  sort_unique(excluded);

  HeapExpr heap = HeapExpr::difference(HeapExpr::full(set_union(fns, core)),
                                       HeapExpr::finite(std::move(excluded)));
  return mk_class("(" + t1.name + " refer " + t2.name + ")", std::move(fns), core,
                  std::move(heap));
}

TokenClass lifting(const TokenClass& t, std::vector<Symbol> s) {
  sort_unique(s);
  if (!is_subset(s, t.alpha.base))
    fail("NotASubset", "lifted symbols must lie in the base");
  return mk_class("lift(" + t.name + ")", set_difference(t.alpha.base, s),
                  set_union(t.alpha.core, s), t.heap);
}

TokenClass absolute_lifting(const TokenClass& t, std::vector<Symbol> s) {
  sort_unique(s);
  if (!is_subset(s, t.alpha.base))
    fail("NotASubset", "lifted symbols must lie in the base");
  std::vector<Symbol> copies;
  std::vector<Token> links;
  for (const auto& x : s) {
    Symbol inc = Symbol::tag("inc", x);
    links.push_back(Token{{inc, x}});
    copies.push_back(std::move(inc));
  }
  return mk_class("abslift(" + t.name + ")", t.alpha.base,
                  set_union(t.alpha.core, copies),
                  HeapExpr::union_(t.heap, HeapExpr::finite(std::move(links))));
}

TokenClass releasing(const TokenClass& t, std::vector<Symbol> eprime) {
  sort_unique(eprime);
  if (!is_subset(eprime, t.alpha.core))
    fail("NotASubset", "released symbols must lie in the core");
  return mk_class("release(" + t.name + ")", set_union(t.alpha.base, eprime),
                  set_difference(t.alpha.core, eprime), t.heap);
}

TokenClass renaming(const TokenClass& t, const ElemMap& alpha) {
  for (const auto& e : alpha.entries)
    if (!t.alpha.in_core(e.first))
      fail("NotASubset", e.first.str() + " is not a core symbol");
  if (!alpha.injective()) fail("NotInjective", "core renaming must be injective");
  std::vector<Symbol> kept = set_difference(t.alpha.core, alpha.domain());
  std::vector<Symbol> core = set_union(kept, alpha.range());
  ElemMap full = ElemMap::merge(
      alpha, ElemMap::identity(set_union(t.alpha.base, kept)));
  if (!full.injective())
    fail("NotInjective", "renamed symbols collide with existing ones");
  return mk_class("rename(" + t.name + ")", t.alpha.base, std::move(core),
                  HeapExpr::image_bij(std::move(full), t.heap));
}

TokenMap reversing(const TokenMap& f) {
  TokenClass p_dst = powering(forgetting(f.dst));
  TokenClass p_src = powering(forgetting(f.src));
  Symbol e_dst = fresh_marker("e", f.dst.alpha);
  Symbol e_src = fresh_marker("e", f.src.alpha);

  std::vector<std::pair<Symbol, Symbol>> kv;
  for (const auto& y : p_dst.alpha.base) {
    if (y.kind() == Symbol::Kind::Subset) {
      std::vector<Symbol> pre;
      for (const auto& entry : f.f0.entries)
        if (contains(y.members(), entry.second)) pre.push_back(entry.first);
      kv.emplace_back(y, Symbol::subset(std::move(pre)));
    } else {
      kv.emplace_back(y, e_src);
    }
  }
  (void)e_dst;
  return mk_map(std::move(p_dst), std::move(p_src), ElemMap::from(std::move(kv)));
}

TokenClass generalizing(const TokenMap& f, const TokenClass& tprime) {
  if (!is_subclass(tprime, f.src).holds_p())
    fail("NotASubclass", tprime.name + " is not a subclass of " + f.src.name);
  const NormalHeap& norm = finite_norm(tprime, "generalizing");

  bool guarded = true;
  for (const auto& x : f.src.alpha.base) {
    const Symbol* img = f.f0.find(x);
    if (!img || !(*img == x || subset_has(*img, x))) {
      guarded = false;
      break;
    }
  }

  ElemMap em = ElemMap::merge(f.f0, ElemMap::identity(f.src.alpha.core));
  std::vector<Symbol> base;
  for (const auto& x : tprime.alpha.base) base.push_back(*f.f0.find(x));
  sort_unique(base);

  std::vector<Token> heap;
  if (guarded) {
    for (const auto& tok : norm.plus) {
      auto img = em.apply(tok);
      if (!img) fail("ForeignSymbol", "heap token escapes the map", tok);
      heap.push_back(std::move(*img));
    }
  }
  // the core is fixed pointwise, so the image class keeps the source core
  return mk_class("gen(" + tprime.name + ")", std::move(base), f.src.alpha.core,
                  HeapExpr::finite(std::move(heap)));
}

}  // namespace tokspace
