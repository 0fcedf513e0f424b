#include "tokspace/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace tokspace {

TestFamily default_family(std::vector<Symbol> core, std::size_t max_classes) {
  TestFamily fam;
  Symbol b1 = Symbol::atom("b1");
  Symbol b2 = Symbol::atom("b2");
  std::vector<Symbol> one{b1};
  std::vector<Symbol> two{b1, b2};

  auto add = [&](const char* name, const std::vector<Symbol>& base,
                 std::vector<Token> heap) {
    if (fam.classes.size() >= max_classes) return;
    if (heap.size() > fam.max_heap) heap.resize(fam.max_heap);
    fam.classes.push_back(
        mk_class(name, base, core, HeapExpr::finite(std::move(heap))));
  };

  std::vector<Token> all1 = all_tokens(set_union(one, core), fam.max_token_len);
  std::vector<Token> all2 = all_tokens(set_union(two, core), fam.max_token_len);

  add("f_empty1", one, {});
  add("f_unit1", one, {Token{{b1}}});
  add("f_all1", one, all1);
  add("f_empty2", two, {});
  add("f_unit2", two, {Token{{b1}}});
  add("f_pair2", two, {Token{{b1}}, Token{{b2}}});
  add("f_tuple2", two, {Token{{b1, b2}}});
  add("f_mixed2", two, {Token{{b1}}, Token{{b1, b1}}, Token{{b1, b2}}});
  add("f_eps2", two, {Token{}, Token{{b2, b1}}});
  add("f_all2", two, all2);
  return fam;
}

namespace {

Verdict count_mediators(const char* what, const std::string& probe,
                        std::size_t found) {
  if (found == 1) return Verdict::holds();
  if (found == 0)
    return Verdict::fails(std::string(what) + ": no mediating map for a cone over " +
                          probe);
  return Verdict::fails(std::string(what) + ": " + std::to_string(found) +
                        " mediating maps for a cone over " + probe);
}

Verdict settled(const HomSet& h, const std::string& probe) {
  if (h.undecided == 0) return Verdict::holds();
  return Verdict::undecided(0, "hom enumeration undecided over " + probe);
}

}  // namespace

Verdict verify_product(const TokenClass& t1, const TokenClass& t2,
                       const ProductResult& cand, const TestFamily& fam) {
  for (const auto& s : fam.classes) {
    HomSet hf = hom_enumerate(s, t1);
    HomSet hg = hom_enumerate(s, t2);
    HomSet hp = hom_enumerate(s, cand.cls);
    for (const auto* h : {&hf, &hg, &hp})
      if (!settled(*h, s.name).holds_p()) return settled(*h, s.name);
    for (const auto& f : hf.maps)
      for (const auto& g : hg.maps) {
        std::size_t found = 0;
        for (const auto& h : hp.maps)
          if (map_equal(compose_map(cand.pi1, h), f) &&
              map_equal(compose_map(cand.pi2, h), g))
            ++found;
        Verdict v = count_mediators("product", s.name, found);
        if (!v.holds_p()) return v;
      }
  }
  return Verdict::holds();
}

Verdict verify_coproduct(const TokenClass& t1, const TokenClass& t2,
                         const CoproductResult& cand, const TestFamily& fam) {
  for (const auto& s : fam.classes) {
    HomSet hf = hom_enumerate(t1, s);
    HomSet hg = hom_enumerate(t2, s);
    HomSet hm = hom_enumerate(cand.cls, s);
    for (const auto* h : {&hf, &hg, &hm})
      if (!settled(*h, s.name).holds_p()) return settled(*h, s.name);
    for (const auto& f : hf.maps)
      for (const auto& g : hg.maps) {
        std::size_t found = 0;
        for (const auto& h : hm.maps)
          if (map_equal(compose_map(h, cand.in1), f) &&
              map_equal(compose_map(h, cand.in2), g))
            ++found;
        Verdict v = count_mediators("coproduct", s.name, found);
        if (!v.holds_p()) return v;
      }
  }
  return Verdict::holds();
}

Verdict verify_terminal(const TokenClass& cand, const TestFamily& fam) {
  for (const auto& s : fam.classes) {
    HomSet h = hom_enumerate(s, cand);
    if (!settled(h, s.name).holds_p()) return settled(h, s.name);
    Verdict v = count_mediators("terminal", s.name, h.maps.size());
    if (!v.holds_p()) return v;
  }
  return Verdict::holds();
}

Verdict verify_initial(const TokenClass& cand, const TestFamily& fam) {
  for (const auto& s : fam.classes) {
    HomSet h = hom_enumerate(cand, s);
    if (!settled(h, s.name).holds_p()) return settled(h, s.name);
    Verdict v = count_mediators("initial", s.name, h.maps.size());
    if (!v.holds_p()) return v;
  }
  return Verdict::holds();
}

Verdict verify_limit(const Diagram& d, const LimitResult& cand,
                     const TestFamily& fam) {
  std::vector<TokenMap> arrows;
  for (const auto& a : d.arrows)
    arrows.push_back(mk_map(d.object(a.src), d.object(a.dst), a.f0));

  // the candidate must itself be a commuting cone
  for (std::size_t ai = 0; ai < d.arrows.size(); ++ai)
    if (!map_equal(compose_map(arrows[ai], cand.leg(d.arrows[ai].src)),
                   cand.leg(d.arrows[ai].dst)))
      return Verdict::fails("limit: candidate legs do not commute with arrow " +
                            d.arrows[ai].src + " -> " + d.arrows[ai].dst);

  for (const auto& s : fam.classes) {
    std::vector<HomSet> homs;
    for (const auto& obj : d.objects) {
      homs.push_back(hom_enumerate(s, obj.second));
      if (!settled(homs.back(), s.name).holds_p()) return settled(homs.back(), s.name);
    }
    HomSet hl = hom_enumerate(s, cand.cls);
    if (!settled(hl, s.name).holds_p()) return settled(hl, s.name);

    std::vector<std::size_t> pick(d.objects.size(), 0);
    bool any = !d.objects.empty();
    for (const auto& h : homs) any = any && !h.maps.empty();
    while (any) {
      bool commutes = true;
      for (std::size_t ai = 0; ai < d.arrows.size() && commutes; ++ai) {
        std::size_t si = 0, di = 0;
        for (std::size_t i = 0; i < d.objects.size(); ++i) {
          if (d.objects[i].first == d.arrows[ai].src) si = i;
          if (d.objects[i].first == d.arrows[ai].dst) di = i;
        }
        if (!map_equal(compose_map(arrows[ai], homs[si].maps[pick[si]]),
                       homs[di].maps[pick[di]]))
          commutes = false;
      }
      if (commutes) {
        std::size_t found = 0;
        for (const auto& h : hl.maps) {
          bool match = true;
          for (std::size_t i = 0; i < d.objects.size() && match; ++i)
            if (!map_equal(compose_map(cand.leg(d.objects[i].first), h),
                           homs[i].maps[pick[i]]))
              match = false;
          if (match) ++found;
        }
        Verdict v = count_mediators("limit", s.name, found);
        if (!v.holds_p()) return v;
      }
      std::size_t i = d.objects.size();
      bool done = false;
      while (i > 0) {
        --i;
        if (++pick[i] < homs[i].maps.size()) break;
        pick[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
    }
  }
  return Verdict::holds();
}

Verdict verify_exponent(const ExponentResult& cand, const TestFamily& fam) {
  ProductResult pd = product(cand.cls, cand.t2);
  for (const auto& s : fam.classes) {
    ProductResult ps = product(s, cand.t2);
    HomSet hu = hom_enumerate(ps.cls, cand.t1);
    HomSet hs = hom_enumerate(s, cand.cls);
    for (const auto* h : {&hu, &hs})
      if (!settled(*h, s.name).holds_p()) return settled(*h, s.name);
    for (const auto& u : hu.maps) {
      std::size_t found = 0;
      for (const auto& h : hs.maps) {
        TokenMap across = product_map(h, identity_map(cand.t2), ps, pd);
        if (map_equal(compose_map(cand.ev, across), u)) ++found;
      }
      Verdict v = count_mediators("exponent", s.name, found);
      if (!v.holds_p()) return v;
    }
  }
  return Verdict::holds();
}

std::optional<TokenMap> iso_witness(const TokenClass& t1, const TokenClass& t2,
                                    std::size_t bound) {
  if (t1.alpha.core != t2.alpha.core) return std::nullopt;
  if (t1.alpha.base.size() != t2.alpha.base.size()) return std::nullopt;
  const auto& a = t1.alpha.base;
  const auto& b = t2.alpha.base;
  std::vector<std::size_t> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::pair<Symbol, Symbol>> kv;
    for (std::size_t i = 0; i < a.size(); ++i) kv.emplace_back(a[i], b[perm[i]]);
    ElemMap f0 = ElemMap::from(kv);
    if (check_map(t1, t2, f0, bound).holds_p() &&
        check_map(t2, t1, f0.inverse(), bound).holds_p())
      return mk_map(t1, t2, f0, bound);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace tokspace
