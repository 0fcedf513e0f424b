#include "tokspace/structure.hpp"

#include <algorithm>

namespace tokspace {

TreeTerm token_to_term(const Token& t) {
  std::vector<TreeTerm> leaves;
  leaves.reserve(t.size());
  for (const auto& s : t.elems) leaves.push_back(TreeTerm::leaf(s));
  return TreeTerm::amp(TreeTerm::concat(std::move(leaves)));
}

const TokenClass& Diagram::object(const std::string& id) const {
  for (const auto& [oid, cls] : objects)
    if (oid == id) return cls;
  fail("BadInput", "diagram has no object " + id);
}

const TokenMap& LimitResult::leg(const std::string& id) const {
  for (const auto& [oid, m] : cone)
    if (oid == id) return m;
  fail("BadInput", "limit cone has no leg " + id);
}

static void require_same_core(const TokenClass& a, const TokenClass& b) {
  if (a.alpha.core != b.alpha.core)
    fail("CoreMismatch", a.name + " and " + b.name + " have different cores");
}

ProductResult product(const TokenClass& t1, const TokenClass& t2) {
  require_same_core(t1, t2);
  const auto& core = t1.alpha.core;

  std::vector<Symbol> base;
  std::vector<std::pair<Symbol, Symbol>> p1, p2;
  for (const auto& x : t1.alpha.base)
    for (const auto& y : t2.alpha.base) {
      Symbol pr = Symbol::pair(x, y);
      p1.emplace_back(pr, x);
      p2.emplace_back(pr, y);
      base.push_back(std::move(pr));
    }
  ElemMap pi1 = ElemMap::merge(ElemMap::from(p1), ElemMap::identity(core));
  ElemMap pi2 = ElemMap::merge(ElemMap::from(p2), ElemMap::identity(core));

  HeapExpr heap = HeapExpr::intersect(HeapExpr::preimage(pi1, t1.heap),
                                      HeapExpr::preimage(pi2, t2.heap));
  TokenClass cls = mk_class("(" + t1.name + "*" + t2.name + ")", base, core,
                            std::move(heap));
  TokenMap m1 = mk_map(cls, t1, ElemMap::from(std::move(p1)));
  TokenMap m2 = mk_map(cls, t2, ElemMap::from(std::move(p2)));
  return {std::move(cls), std::move(m1), std::move(m2)};
}

CoproductResult coproduct(const TokenClass& t1, const TokenClass& t2) {
  require_same_core(t1, t2);
  const auto& core = t1.alpha.core;

  std::vector<Symbol> base;
  std::vector<std::pair<Symbol, Symbol>> i1, i2;
  for (const auto& x : t1.alpha.base) {
    Symbol s = Symbol::tag("L", x);
    i1.emplace_back(x, s);
    base.push_back(std::move(s));
  }
  for (const auto& y : t2.alpha.base) {
    Symbol s = Symbol::tag("R", y);
    i2.emplace_back(y, s);
    base.push_back(std::move(s));
  }
  ElemMap in1 = ElemMap::merge(ElemMap::from(i1), ElemMap::identity(core));
  ElemMap in2 = ElemMap::merge(ElemMap::from(i2), ElemMap::identity(core));

  HeapExpr heap = HeapExpr::union_(HeapExpr::image_bij(in1, t1.heap),
                                   HeapExpr::image_bij(in2, t2.heap));
  TokenClass cls = mk_class("(" + t1.name + "+" + t2.name + ")", base, core,
                            std::move(heap));
  TokenMap m1 = mk_map(t1, cls, ElemMap::from(std::move(i1)));
  TokenMap m2 = mk_map(t2, cls, ElemMap::from(std::move(i2)));
  return {std::move(cls), std::move(m1), std::move(m2)};
}

// All functions from dom into cod, as function symbols.
static std::vector<Symbol> all_fns(const std::vector<Symbol>& dom,
                                   const std::vector<Symbol>& cod) {
  std::vector<Symbol> out;
  if (dom.empty()) {
    out.push_back(Symbol::fn({}));
    return out;
  }
  if (cod.empty()) return out;
  std::vector<std::size_t> pick(dom.size(), 0);
  while (true) {
    std::vector<std::pair<Symbol, Symbol>> kv;
    kv.reserve(dom.size());
    for (std::size_t i = 0; i < dom.size(); ++i) kv.emplace_back(dom[i], cod[pick[i]]);
    out.push_back(Symbol::fn(std::move(kv)));
    std::size_t i = dom.size();
    while (i > 0) {
      --i;
      if (++pick[i] < cod.size()) break;
      pick[i] = 0;
      if (i == 0) {
        sort_unique(out);
        return out;
      }
    }
  }
}

ExponentResult exponent(const TokenClass& t1, const TokenClass& t2) {
  require_same_core(t1, t2);
  const auto& core = t1.alpha.core;
  if (!t2.norm() || !t2.norm()->is_finite())
    fail("SymbolicHeapUnsupported",
         "exponent needs an explicitly finite heap on " + t2.name);

  std::vector<Symbol> base = all_fns(t2.alpha.base, t1.alpha.base);

  // A function tuple is cut out when some admitted argument tuple of t2
  // evaluates to a tuple outside the heap of t1.
  std::vector<Token> excluded;
  for (const auto& iota : t2.norm()->plus) {
    std::vector<std::size_t> slots;  // base positions of iota
    for (std::size_t j = 0; j < iota.size(); ++j)
      if (t2.alpha.in_base(iota.elems[j])) slots.push_back(j);
    if (!slots.empty() && base.empty()) continue;

    std::vector<std::size_t> pick(slots.size(), 0);
    while (true) {
      Token fn_tuple = iota, ev_tuple = iota;
      bool total = true;
      for (std::size_t k = 0; k < slots.size(); ++k) {
        const Symbol& phi = base[pick[k]];
        fn_tuple.elems[slots[k]] = phi;
        const Symbol* v = phi.fn_lookup(iota.elems[slots[k]]);
        if (!v) {
          total = false;
          break;
        }
        ev_tuple.elems[slots[k]] = *v;
      }
      if (total && !heap_member(t1, ev_tuple)) excluded.push_back(fn_tuple);

      if (slots.empty()) break;
      std::size_t k = slots.size();
      bool done = false;
      while (k > 0) {
        --k;
        if (++pick[k] < base.size()) break;
        pick[k] = 0;
        if (k == 0) done = true;
      }
      if (done) break;
    }
  }
  sort_unique(excluded);

  HeapExpr heap = HeapExpr::difference(HeapExpr::full(set_union(base, core)),
                                       HeapExpr::finite(excluded));
  TokenClass cls = mk_class("(" + t1.name + "^" + t2.name + ")", base, core,
                            std::move(heap));

  ProductResult pr = product(cls, t2);
  std::vector<std::pair<Symbol, Symbol>> ev_kv;
  for (const auto& p : pr.cls.alpha.base) {
    const Symbol* v = p.left().fn_lookup(p.right());
    if (!v) fail("BadInput", "function symbol misses an argument");
    ev_kv.emplace_back(p, *v);
  }
  TokenMap ev = mk_map(pr.cls, t1, ElemMap::from(std::move(ev_kv)));
  return {std::move(cls), std::move(pr.cls), std::move(ev), std::move(excluded),
          t1, t2};
}

TokenMap curry(const TokenMap& f, const TokenClass& s, const ExponentResult& exp) {
  ProductResult st2 = product(s, exp.t2);
  if (!class_equal(f.src, st2.cls) || !class_equal(f.dst, exp.t1))
    fail("EndpointMismatch", "map to transpose must run s x t2 -> t1");
  std::vector<std::pair<Symbol, Symbol>> kv;
  for (const auto& x : s.alpha.base) {
    std::vector<std::pair<Symbol, Symbol>> graph;
    for (const auto& b : exp.t2.alpha.base) {
      const Symbol* v = f.f0.find(Symbol::pair(x, b));
      if (!v) fail("NotTotal", "no image for " + Symbol::pair(x, b).str());
      graph.emplace_back(b, *v);
    }
    kv.emplace_back(x, Symbol::fn(std::move(graph)));
  }
  return mk_map(s, exp.cls, ElemMap::from(std::move(kv)));
}

TokenMap uncurry(const TokenMap& g, const TokenClass& s, const ExponentResult& exp) {
  if (!class_equal(g.src, s) || !class_equal(g.dst, exp.cls))
    fail("EndpointMismatch", "map to transpose must run s -> exponent");
  ProductResult st2 = product(s, exp.t2);
  std::vector<std::pair<Symbol, Symbol>> kv;
  for (const auto& p : st2.cls.alpha.base) {
    const Symbol* phi = g.f0.find(p.left());
    if (!phi) fail("NotTotal", "no image for " + p.left().str());
    const Symbol* v = phi->fn_lookup(p.right());
    if (!v) fail("BadInput", "function symbol misses an argument");
    kv.emplace_back(p, *v);
  }
  return mk_map(st2.cls, exp.t1, ElemMap::from(std::move(kv)));
}

LimitResult limit(const Diagram& d) {
  if (d.objects.empty()) fail("BadInput", "limit needs at least one object");
  const auto& core = d.objects.front().second.alpha.core;
  for (const auto& [id, cls] : d.objects)
    if (cls.alpha.core != core)
      fail("CoreMismatch", "diagram object " + id + " has a different core");
  for (const auto& a : d.arrows)
    (void)mk_map(d.object(a.src), d.object(a.dst), a.f0);

  // Commuting tuples over the object bases, one named slot per object.
  std::vector<Symbol> base;
  std::vector<Token> assignment_stack;
  std::vector<std::size_t> pick(d.objects.size(), 0);
  bool any_empty = false;
  for (const auto& [id, cls] : d.objects)
    if (cls.alpha.base.empty()) any_empty = true;
  if (!any_empty) {
    while (true) {
      std::vector<std::pair<Symbol, Symbol>> tuple;
      for (std::size_t i = 0; i < d.objects.size(); ++i)
        tuple.emplace_back(Symbol::atom(d.objects[i].first),
                           d.objects[i].second.alpha.base[pick[i]]);
      auto component = [&](const std::string& id) -> const Symbol& {
        for (const auto& [k, v] : tuple)
          if (k.text() == id) return v;
        fail("BadInput", "missing component");
      };
      bool commutes = true;
      for (const auto& a : d.arrows) {
        const Symbol* img = a.f0.find(component(a.src));
        if (!img || !(*img == component(a.dst))) {
          commutes = false;
          break;
        }
      }
      if (commutes) base.push_back(Symbol::fn(tuple));

      std::size_t i = d.objects.size();
      bool done = false;
      while (i > 0) {
        --i;
        if (++pick[i] < d.objects[i].second.alpha.base.size()) break;
        pick[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
    }
  }
  sort_unique(base);

  std::vector<std::pair<std::string, ElemMap>> legs;
  for (const auto& [id, cls] : d.objects) {
    std::vector<std::pair<Symbol, Symbol>> kv;
    for (const auto& tup : base) {
      const Symbol* v = tup.fn_lookup(Symbol::atom(id));
      kv.emplace_back(tup, *v);
    }
    legs.emplace_back(id, ElemMap::from(std::move(kv)));
  }

  HeapExpr heap = HeapExpr::full(set_union(base, core));
  bool first = true;
  for (std::size_t i = 0; i < d.objects.size(); ++i) {
    ElemMap v = ElemMap::merge(legs[i].second, ElemMap::identity(core));
    HeapExpr pre = HeapExpr::preimage(std::move(v), d.objects[i].second.heap);
    heap = first ? std::move(pre) : HeapExpr::intersect(std::move(heap), std::move(pre));
    first = false;
  }

  std::string nm = "lim(";
  for (std::size_t i = 0; i < d.objects.size(); ++i)
    nm += (i ? "," : "") + d.objects[i].first;
  nm += ")";
  TokenClass cls = mk_class(std::move(nm), base, core, std::move(heap));

  LimitResult out;
  out.cls = cls;
  for (auto& [id, f0] : legs)
    out.cone.emplace_back(id, mk_map(cls, d.object(id), std::move(f0)));
  return out;
}

TokenClass abstracting(const TokenClass& t) {
  if (!t.norm() || !t.norm()->is_finite())
    fail("SymbolicHeapUnsupported",
         "abstracting needs an explicitly finite heap on " + t.name);
  std::vector<Symbol> base;
  base.reserve(t.norm()->plus.size());
  for (const auto& tok : t.norm()->plus)
    base.push_back(Symbol::term(token_to_term(tok)));
  return mk_class("abs(" + t.name + ")", std::move(base), t.alpha.core,
                  HeapExpr::empty());
}

TokenClass stuffing(const TokenClass& t) {
  return mk_class("stuff(" + t.name + ")", t.alpha.base, t.alpha.core,
                  HeapExpr::full(t.alpha.universe()));
}

TokenMap product_map(const TokenMap& f, const TokenMap& g,
                     const ProductResult& src, const ProductResult& dst) {
  std::vector<std::pair<Symbol, Symbol>> kv;
  for (const auto& p : src.cls.alpha.base) {
    const Symbol* l = f.f0.find(p.left());
    const Symbol* r = g.f0.find(p.right());
    if (!l || !r) fail("NotTotal", "factor map misses " + p.str());
    kv.emplace_back(p, Symbol::pair(*l, *r));
  }
  return mk_map(src.cls, dst.cls, ElemMap::from(std::move(kv)));
}

namespace {

bool same_f0(const ElemMap& a, const ElemMap& b) { return a.entries == b.entries; }

// Mediating-iso test: c with legs (c1, c2) presents the pullback of
// (g1, g2) iff the unique comparison into the canonical limit is an iso.
Verdict pullback_check(const TokenMap& g1, const TokenMap& g2, const TokenClass& c,
                       const TokenMap& c1, const TokenMap& c2) {
  ElemMap gc1 = ElemMap::compose(
      ElemMap::merge(g1.f0, ElemMap::identity(g1.src.alpha.core)), c1.f0);
  ElemMap gc2 = ElemMap::compose(
      ElemMap::merge(g2.f0, ElemMap::identity(g2.src.alpha.core)), c2.f0);
  if (!same_f0(gc1, gc2)) return Verdict::fails("square does not commute");

  Diagram d;
  d.objects.emplace_back("X", g1.src);
  d.objects.emplace_back("Y", g2.src);
  d.objects.emplace_back("Z", g1.dst);
  d.arrows.push_back({"X", "Z", g1.f0});
  d.arrows.push_back({"Y", "Z", g2.f0});
  LimitResult lim = limit(d);

  std::vector<std::pair<Symbol, Symbol>> kv;
  for (const auto& x : c.alpha.base) {
    const Symbol* vx = c1.f0.find(x);
    const Symbol* vy = c2.f0.find(x);
    if (!vx || !vy) return Verdict::fails("cone legs are partial");
    const Symbol* vz = g1.f0.find(*vx);
    if (!vz) return Verdict::fails("cospan leg is partial");
    Symbol tup = Symbol::fn({{Symbol::atom("X"), *vx},
                             {Symbol::atom("Y"), *vy},
                             {Symbol::atom("Z"), *vz}});
    if (!lim.cls.alpha.in_base(tup))
      return Verdict::fails(Token{{x}}, "legs do not land in the limit");
    kv.emplace_back(x, tup);
  }
  ElemMap u = ElemMap::from(std::move(kv));
  if (!u.injective() || u.range().size() != lim.cls.alpha.base.size())
    return Verdict::fails("comparison with the limit is not a bijection");
  auto fwd = check_map(c, lim.cls, u);
  if (!fwd.holds_p()) return fwd;
  auto bwd = check_map(lim.cls, c, u.inverse());
  if (!bwd.holds_p()) return bwd;
  // Cone compatibility: the limit legs must reproduce c1 and c2.
  if (!same_f0(ElemMap::compose(lim.leg("X").f0, u), c1.f0) ||
      !same_f0(ElemMap::compose(lim.leg("Y").f0, u), c2.f0))
    return Verdict::fails("comparison breaks the cone");
  return Verdict::holds();
}

}  // namespace

Verdict is_pullback(const TokenMap& g1, const TokenMap& g2, const TokenClass& c,
                    const TokenMap& c1, const TokenMap& c2) {
  return pullback_check(g1, g2, c, c1, c2);
}

Verdict subclass_via_pullbacks(const TokenClass& sub, const TokenClass& super,
                               const ElemMap& f0) {
  if (!f0.injective())
    fail("NotInjective", "a subclass embedding must be injective on the base");
  auto valid = check_map(sub, super, f0);
  if (!valid.holds_p()) return valid;

  const auto& core = sub.alpha.core;
  TokenClass truth = constant_class(ConstantKind::Truth, core);
  TokenClass term = constant_class(ConstantKind::Terminal, core);
  Symbol zero = Symbol::marker("0"), one = Symbol::marker("1");

  auto square = [&](const TokenClass& small, const TokenClass& big,
                    const ElemMap& emb) -> Verdict {
    std::vector<Symbol> image;
    for (const auto& e : emb.entries) image.push_back(e.second);
    sort_unique(image);
    std::vector<std::pair<Symbol, Symbol>> chi, bang;
    for (const auto& x : big.alpha.base)
      chi.emplace_back(x, contains(image, x) ? one : zero);
    for (const auto& x : small.alpha.base) bang.emplace_back(x, zero);

    TokenClass s_small = stuffing(small);
    TokenClass s_big = stuffing(big);
    TokenMap psi = mk_map(s_big, truth, ElemMap::from(std::move(chi)));
    TokenMap tru = mk_map(term, truth, ElemMap::from({{zero, one}}));
    auto emb_ok = check_map(s_small, s_big, emb);
    if (!emb_ok.holds_p()) return emb_ok;
    TokenMap semb{s_small, s_big, emb};
    TokenMap sbang = mk_map(s_small, term, ElemMap::from(std::move(bang)));
    return pullback_check(psi, tru, s_small, semb, sbang);
  };

  Verdict first = square(sub, super, f0);
  if (!first.holds_p()) return first;

  if (!sub.norm() || !sub.norm()->is_finite() || !super.norm() ||
      !super.norm()->is_finite())
    return Verdict::undecided(0, "abstracted square needs finite heaps");

  TokenClass a_sub = abstracting(sub);
  TokenClass a_super = abstracting(super);
  ElemMap em = ElemMap::merge(f0, ElemMap::identity(core));
  std::vector<std::pair<Symbol, Symbol>> af;
  for (const auto& tok : sub.norm()->plus) {
    auto img = em.apply(tok);
    if (!img) return Verdict::fails(tok, "heap token escapes the embedding");
    af.emplace_back(Symbol::term(token_to_term(tok)),
                    Symbol::term(token_to_term(*img)));
  }
  Verdict second = square(a_sub, a_super, ElemMap::from(std::move(af)));
  if (!second.holds_p()) return second;
  return Verdict::holds();
}

}  // namespace tokspace
