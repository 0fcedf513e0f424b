#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tokspace/class_ops.hpp"

using namespace tokspace;

namespace {

Symbol S(const char* n) { return Symbol::atom(n); }
Token tk(std::vector<Symbol> v) { return Token{std::move(v)}; }

TokenClass poset() {
  Symbol ge = S("ge"), one = S("1"), two = S("2");
  return mk_class("p2", {one, two}, {ge},
                  HeapExpr::finite({tk({ge, one, one}), tk({ge, two, one}),
                                    tk({ge, two, two})}));
}

TokenClass unit(const char* name, const char* sym) {
  Symbol a = S(sym);
  return mk_class(name, {a}, {}, HeapExpr::finite({tk({a})}));
}

}  // namespace

TEST_CASE("set operations on classes") {
  TokenClass m = merging(unit("A", "a"), unit("B", "b"));
  CHECK(m.alpha.base == std::vector<Symbol>{S("a"), S("b")});
  CHECK(m.norm()->plus == std::vector<Token>{tk({S("a")}), tk({S("b")})});

  TokenClass p = poset();
  CHECK(forgetting(p).norm()->is_empty());
  CHECK(class_equal(deleting(p, forgetting(p)), p));
  CHECK(deleting(p, p).norm()->is_empty());

  CHECK(class_equal(merging(p, p), p));
  CHECK(class_equal(meeting(p, p), p));
  CHECK(class_equal(merging(p, forgetting(p)), p));
  CHECK(meeting(p, forgetting(p)).norm()->is_empty());

  CHECK_THROWS_WITH_AS(merging(p, unit("A", "a")),
                       doctest::Contains("CoreMismatch"), Error);
}

TEST_CASE("introducing an unknown element") {
  TokenClass t = mk_class("t", {S("a")}, {}, HeapExpr::empty());
  TokenClass u = introduce_unknown(t);
  Symbol e = Symbol::marker("e"), eps = Symbol::marker("eps");
  CHECK(u.alpha.base == std::vector<Symbol>{S("a"), e});
  CHECK(u.alpha.core == std::vector<Symbol>{eps});
  CHECK(u.norm()->plus == std::vector<Token>{tk({eps, e})});

  // repeated application picks indexed markers, no collision
  TokenClass uu = introduce_unknown(u);
  CHECK(contains(uu.alpha.base, Symbol::marker("e", 1)));
  CHECK(contains(uu.alpha.core, Symbol::marker("eps", 1)));

  TokenMap im = introduce_unknown_map(identity_map(t));
  CHECK(map_equal(im, identity_map(u)));
}

TEST_CASE("powering expands into the powerset extension") {
  TokenClass t = unit("T", "a");
  TokenClass pw = powering(t);
  Symbol e = Symbol::marker("e"), gamma = Symbol::marker("gamma");
  Symbol none = Symbol::subset({}), just_a = Symbol::subset({S("a")});
  std::vector<Symbol> base{S("a"), e, none, just_a};
  sort_unique(base);
  CHECK(pw.alpha.base == base);
  std::vector<Token> heap{tk({gamma, none, e}), tk({gamma, just_a, S("a")}),
                          tk({gamma, just_a, e}), tk({S("a")}), tk({just_a})};
  sort_unique(heap);
  CHECK(pw.norm()->plus == heap);

  TokenClass bare = mk_class("bare", {S("a")}, {}, HeapExpr::empty());
  TokenClass pb = powering(bare);
  for (const auto& tok : pb.norm()->plus) CHECK(tok.elems.front() == gamma);

  CHECK(map_equal(powering_map(identity_map(t)), identity_map(pw)));
  CHECK_THROWS_WITH_AS(powering(poset(), 1), doctest::Contains("BaseTooLarge"),
                       Error);
}

TEST_CASE("obscuring demotes the core") {
  TokenClass p = poset();
  TokenClass ob = obscuring(p);
  CHECK(ob.alpha.base == std::vector<Symbol>{S("1"), S("2"), S("ge")});
  CHECK(ob.alpha.core.empty());
  CHECK(ob.norm()->plus == p.norm()->plus);
  // maps into the obscured class may move the relation symbol
  CHECK(hom_enumerate(ob, ob).maps.size() >= hom_enumerate(p, p).maps.size());
}

TEST_CASE("matchup is the componentwise product comprehension") {
  TokenClass p = poset();
  TokenClass mu = matchup(p, p);
  Symbol ge = S("ge");
  auto pr = [](const char* x, const char* y) { return Symbol::pair(S(x), S(y)); };
  CHECK(heap_member(mu, tk({ge, pr("2", "2"), pr("1", "1")})));
  CHECK_FALSE(heap_member(mu, tk({ge, pr("2", "1"), pr("1", "2")})));

  ProductResult prd = product(p, p);
  for (const auto& t : all_tokens(mu.alpha.universe(), 3))
    CHECK(heap_member(mu, t) == heap_member(prd.cls, t));

  TokenClass empty = mk_class("E", {S("1"), S("2")}, {S("ge")}, HeapExpr::empty());
  CHECK(matchup(p, empty).norm()->is_empty());
}

TEST_CASE("blending admits a token when either projection does") {
  TokenClass p = poset();
  TokenClass bl = blending(p, forgetting(p));
  TokenClass mu = matchup(p, forgetting(p));
  // left projection alone decides: matchup is empty, blending is not
  CHECK(mu.norm()->is_empty());
  Symbol ge = S("ge");
  auto pr = [](const char* x, const char* y) { return Symbol::pair(S(x), S(y)); };
  CHECK(heap_member(bl, tk({ge, pr("2", "1"), pr("1", "2")})));
  CHECK_FALSE(heap_member(bl, tk({ge, pr("1", "1"), pr("2", "2")})));

  CHECK(blending(forgetting(p), forgetting(p)).norm()->is_empty());
}

TEST_CASE("tagged union agrees with the coproduct") {
  TokenClass p = poset();
  TokenClass uy = union_y(p, p);
  CoproductResult cp = coproduct(p, p);
  CHECK(uy.alpha.base == cp.cls.alpha.base);
  for (const auto& t : heap_enumerate(uy, 3)) CHECK(heap_member(cp.cls, t));
  CHECK(heap_enumerate(uy, 3).size() == heap_enumerate(cp.cls, 3).size());

  TokenClass init = constant_class(ConstantKind::Initial, {S("ge")});
  TokenClass ui = union_y(p, init);
  CHECK(ui.alpha.base.size() == p.alpha.base.size());
  CHECK(heap_enumerate(ui, 3).size() == heap_enumerate(p, 3).size());
}

TEST_CASE("refering matches the exponent membership") {
  TokenClass a = unit("A", "a");
  TokenClass b = unit("B", "b");
  Symbol phi = Symbol::fn({{S("b"), S("a")}});

  TokenClass full = refering(a, mk_class("B0", {S("b")}, {}, HeapExpr::empty()));
  CHECK(heap_member(full, tk({phi})));
  CHECK(heap_member(full, tk({phi, phi})));

  TokenClass cut = refering(mk_class("A0", {S("a")}, {}, HeapExpr::empty()), b);
  CHECK_FALSE(heap_member(cut, tk({phi})));
  CHECK(heap_member(cut, tk({phi, phi})));

  TokenClass p = poset();
  TokenClass rf = refering(p, p);
  ExponentResult ex = exponent(p, p);
  for (const auto& t : all_tokens(rf.alpha.universe(), 2))
    CHECK(heap_member(rf, t) == heap_member(ex.cls, t));
}

TEST_CASE("lifting and releasing are inverse retaggings") {
  TokenClass p = poset();
  TokenClass lifted = lifting(p, {S("1")});
  CHECK(contains(lifted.alpha.core, S("1")));
  CHECK(class_equal(releasing(lifted, {S("1")}), p));

  TokenClass t = mk_class("t", {S("a")}, {}, HeapExpr::empty());
  TokenClass al = absolute_lifting(t, {S("a")});
  Symbol inc = Symbol::tag("inc", S("a"));
  CHECK(contains(al.alpha.core, inc));
  CHECK(contains(al.alpha.base, S("a")));
  CHECK(heap_member(al, tk({inc, S("a")})));

  CHECK_THROWS_WITH_AS(lifting(p, {S("zz")}), doctest::Contains("NotASubset"),
                       Error);
  CHECK_THROWS_WITH_AS(releasing(p, {S("1")}), doctest::Contains("NotASubset"),
                       Error);
}

TEST_CASE("renaming applies an injective core substitution") {
  TokenClass p = poset();
  TokenClass rn = renaming(p, ElemMap::from({{S("ge"), S("succeq")}}));
  CHECK(contains(rn.alpha.core, S("succeq")));
  CHECK_FALSE(contains(rn.alpha.core, S("ge")));
  CHECK(heap_member(rn, tk({S("succeq"), S("2"), S("1")})));
  CHECK_FALSE(heap_member(rn, tk({S("ge"), S("2"), S("1")})));

  TokenClass two = mk_class("t", {S("a")}, {S("x"), S("y")}, HeapExpr::empty());
  CHECK_THROWS_WITH_AS(renaming(two, ElemMap::from({{S("x"), S("z")}, {S("y"), S("z")}})),
                       doctest::Contains("NotInjective"), Error);
}

TEST_CASE("reversing sends subsets to preimages") {
  TokenClass p = poset();
  TokenMap down = mk_map(p, p, ElemMap::from({{S("1"), S("1")}, {S("2"), S("1")}}));
  TokenMap rev = reversing(down);
  Symbol e = Symbol::marker("e");
  CHECK(*rev.f0.find(Symbol::subset({S("1")})) == Symbol::subset({S("1"), S("2")}));
  CHECK(*rev.f0.find(Symbol::subset({S("2")})) == Symbol::subset({}));
  CHECK(*rev.f0.find(S("1")) == e);
  CHECK(*rev.f0.find(e) == e);

  // distinct maps stay distinct under reversal
  HomSet h = hom_enumerate(p, p);
  for (std::size_t i = 0; i < h.maps.size(); ++i)
    for (std::size_t j = i + 1; j < h.maps.size(); ++j)
      CHECK_FALSE(reversing(h.maps[i]).f0.entries ==
                  reversing(h.maps[j]).f0.entries);
}

TEST_CASE("generalizing keeps the heap only under the collection guard") {
  TokenClass t = mk_class("t", {S("a"), S("b")}, {},
                          HeapExpr::finite({tk({S("a")}), tk({S("b")})}));
  TokenClass pw = powering(t);
  TokenMap singletons =
      mk_map(t, pw, ElemMap::from({{S("a"), Symbol::subset({S("a")})},
                                   {S("b"), Symbol::subset({S("b")})}}));
  TokenClass sub = mk_class("sub", {S("a"), S("b")}, {},
                            HeapExpr::finite({tk({S("a")})}));
  TokenClass g = generalizing(singletons, sub);
  CHECK(heap_member(g, tk({Symbol::subset({S("a")})})));
  CHECK_FALSE(heap_member(g, tk({Symbol::subset({S("b")})})));

  // an identity-style embedding returns the subclass itself
  TokenMap incl = mk_map(t, pw, ElemMap::identity({S("a"), S("b")}));
  CHECK(class_equal(generalizing(incl, sub), sub));

  // collapsing everything to the unknown fails the guard, heap dropped
  TokenClass bare = mk_class("bare", {S("a")}, {}, HeapExpr::empty());
  TokenClass pb = powering(bare);
  Symbol e = Symbol::marker("e");
  TokenMap to_e = mk_map(bare, pb, ElemMap::from({{S("a"), e}}));
  CHECK(generalizing(to_e, bare).norm()->is_empty());

  TokenClass escape = mk_class("x", {S("a"), S("b")}, {},
                               HeapExpr::finite({tk({S("a"), S("a")})}));
  CHECK_THROWS_WITH_AS(generalizing(singletons, escape),
                       doctest::Contains("NotASubclass"), Error);
}
