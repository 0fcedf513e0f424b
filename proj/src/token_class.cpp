#include "tokspace/token_class.hpp"

#include <algorithm>

namespace tokspace {

const std::optional<NormalHeap>& TokenClass::norm() const {
  return *norm_cache;
}

TokenClass mk_class(std::string name, std::vector<Symbol> base,
                    std::vector<Symbol> core, HeapExpr heap) {
  sort_unique(base);
  sort_unique(core);
  auto overlap = set_intersect(base, core);
  if (!overlap.empty())
    fail("AlphabetOverlap",
         "base and core share symbol " + overlap.front().str() + " in " + name);

  TokenClass cls;
  cls.name = std::move(name);
  cls.alpha.base = std::move(base);
  cls.alpha.core = std::move(core);
  cls.heap = std::move(heap);
  cls.norm_cache =
      std::make_shared<const std::optional<NormalHeap>>(normalize(cls.heap));

  // Non-normal heaps get no eager check; membership stays exact either way.
  if (cls.norm()) {
    auto v = heap_subset(*cls.norm(), NormalHeap::full(cls.alpha.universe()));
    if (v.fails_p())
      fail("ForeignSymbol", "heap token outside the alphabet of " + cls.name,
           *v.witness);
  }
  return cls;
}

bool heap_member(const TokenClass& cls, const Token& t) {
  if (cls.norm()) return cls.norm()->member(t);
  return cls.heap.member(t);
}

Verdict heap_subset_in(const TokenClass& cls, const HeapExpr& a, const HeapExpr& b,
                       std::size_t bound) {
  return heap_subset(a, b, cls.alpha.universe(), bound);
}

std::vector<Token> heap_enumerate(const TokenClass& cls, std::size_t max_len) {
  if (cls.norm()) return enumerate_members(*cls.norm(), max_len);
  std::vector<Token> out;
  for (const auto& t : all_tokens(cls.alpha.universe(), max_len))
    if (cls.heap.member(t)) out.push_back(t);
  return out;
}

bool class_equal(const TokenClass& a, const TokenClass& b) {
  if (!(a.alpha == b.alpha)) return false;
  if (a.norm() && b.norm()) return heap_equal(*a.norm(), *b.norm());
  auto u = a.alpha.universe();
  return heap_subset(a.heap, b.heap, u).holds_p() &&
         heap_subset(b.heap, a.heap, u).holds_p();
}

ElemMap TokenMap::elem() const {
  return ElemMap::merge(f0, ElemMap::identity(src.alpha.core));
}

static Verdict containment(const TokenClass& src, const TokenClass& dst,
                           const ElemMap& em, std::size_t bound) {
  // failure witnesses are image tokens missing from the target heap
  auto escape = [&](const Token& t) {
    auto img = em.apply(t);
    return Verdict::fails(img ? *img : t, "image escapes the target heap");
  };
  if (src.norm() && dst.norm()) {
    auto pre = normalize(HeapExpr::preimage(em, to_expr(*dst.norm())));
    if (pre) {
      Verdict v = heap_subset(*src.norm(), *pre);
      if (v.fails_p() && v.witness) return escape(*v.witness);
      return v;
    }
  }
  if (src.norm() && src.norm()->is_finite()) {
    for (const auto& t : src.norm()->plus) {
      auto img = em.apply(t);
      if (!img || !heap_member(dst, *img)) return escape(t);
    }
    return Verdict::holds();
  }
  for (const auto& t : all_tokens(src.alpha.universe(), bound)) {
    if (!heap_member(src, t)) continue;
    auto img = em.apply(t);
    if (!img || !heap_member(dst, *img)) return escape(t);
  }
  return Verdict::undecided(bound, "containment unresolved symbolically");
}

Verdict check_map(const TokenClass& src, const TokenClass& dst, const ElemMap& f0,
                  std::size_t bound) {
  // the core is fixed pointwise; targets may carry extra core symbols
  if (!is_subset(src.alpha.core, dst.alpha.core))
    return Verdict::fails("CoreMismatch: maps keep the core fixed");
  for (const auto& b : src.alpha.base)
    if (!f0.find(b))
      return Verdict::fails("NotTotal: no image for " + b.str());
  for (const auto& e : f0.entries) {
    if (!src.alpha.in_base(e.first))
      return Verdict::fails("ForeignSymbol: " + e.first.str() +
                            " is not in the source base");
    if (!dst.alpha.in_base(e.second))
      return Verdict::fails("ForeignSymbol: " + e.second.str() +
                            " is not in the target base");
  }
  TokenMap probe{src, dst, f0};
  return containment(src, dst, probe.elem(), bound);
}

TokenMap mk_map(TokenClass src, TokenClass dst, ElemMap f0, std::size_t bound) {
  auto v = check_map(src, dst, f0, bound);
  if (v.fails_p()) {
    if (v.witness) fail("HeapViolation", "not a map of token classes", *v.witness);
    auto colon = v.detail.find(':');
    fail(v.detail.substr(0, colon), v.detail.substr(colon + 2));
  }
  if (v.state == Verdict::State::Undecided)
    fail("UndecidedContainment",
         "heap containment unresolved up to length " + std::to_string(v.bound));
  return TokenMap{std::move(src), std::move(dst), std::move(f0)};
}

Token apply_map(const TokenMap& f, const Token& t) {
  auto img = f.elem().apply(t);
  if (!img) fail("ForeignSymbol", "token uses symbols outside the source alphabet", t);
  return *img;
}

TokenMap compose_map(const TokenMap& g, const TokenMap& f) {
  if (!class_equal(f.dst, g.src))
    fail("EndpointMismatch", "inner target differs from outer source");
  // Validity is inherited from the factors; no re-check needed.
  ElemMap h = ElemMap::compose(ElemMap::merge(g.f0, ElemMap::identity(g.src.alpha.core)),
                               f.f0);
  return TokenMap{f.src, g.dst, std::move(h)};
}

TokenMap identity_map(const TokenClass& cls) {
  return TokenMap{cls, cls, ElemMap::identity(cls.alpha.base)};
}

bool map_equal(const TokenMap& a, const TokenMap& b) {
  return a.f0.entries == b.f0.entries && class_equal(a.src, b.src) &&
         class_equal(a.dst, b.dst);
}

TokenClass constant_class(ConstantKind kind, std::vector<Symbol> core) {
  sort_unique(core);
  switch (kind) {
    case ConstantKind::Initial:
      return mk_class("initial", {}, std::move(core), HeapExpr::empty());
    case ConstantKind::Terminal: {
      std::vector<Symbol> base{Symbol::marker("0")};
      auto full = HeapExpr::full(set_union(base, core));
      return mk_class("terminal", std::move(base), std::move(core), std::move(full));
    }
    case ConstantKind::Truth: {
      std::vector<Symbol> base{Symbol::marker("0"), Symbol::marker("1")};
      auto full = HeapExpr::full(set_union(base, core));
      return mk_class("truth", std::move(base), std::move(core), std::move(full));
    }
  }
  fail("BadInput", "unknown constant class kind");
}

Verdict is_subclass(const TokenClass& sub, const TokenClass& super, std::size_t bound) {
  if (sub.alpha.core != super.alpha.core)
    return Verdict::fails("cores differ");
  if (!is_subset(sub.alpha.base, super.alpha.base)) {
    auto extra = set_difference(sub.alpha.base, super.alpha.base);
    return Verdict::fails(Token{{extra.front()}}, "base symbol not in the superclass");
  }
  if (sub.norm() && super.norm()) return heap_subset(*sub.norm(), *super.norm());
  return heap_subset(sub.heap, super.heap, sub.alpha.universe(), bound);
}

HomSet hom_enumerate(const TokenClass& src, const TokenClass& dst, std::size_t bound) {
  HomSet out;
  const auto& b1 = src.alpha.base;
  const auto& b2 = dst.alpha.base;
  if (b1.empty()) {
    auto v = check_map(src, dst, ElemMap{}, bound);
    if (v.holds_p())
      out.maps.push_back(TokenMap{src, dst, ElemMap{}});
    else if (v.state == Verdict::State::Undecided)
      ++out.undecided;
    return out;
  }
  if (b2.empty()) return out;  // no total assignment exists

  std::vector<std::size_t> pick(b1.size(), 0);
  while (true) {
    std::vector<std::pair<Symbol, Symbol>> kv;
    kv.reserve(b1.size());
    for (std::size_t i = 0; i < b1.size(); ++i) kv.emplace_back(b1[i], b2[pick[i]]);
    ElemMap f0 = ElemMap::from(std::move(kv));
    auto v = check_map(src, dst, f0, bound);
    if (v.holds_p())
      out.maps.push_back(TokenMap{src, dst, std::move(f0)});
    else if (v.state == Verdict::State::Undecided)
      ++out.undecided;

    std::size_t i = b1.size();
    while (i > 0) {
      --i;
      if (++pick[i] < b2.size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace tokspace
