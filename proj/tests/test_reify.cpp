#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tokspace/reify.hpp"
#include "tokspace/term_io.hpp"

using namespace tokspace;

namespace {

Symbol S(const char* n) { return Symbol::atom(n); }
Token tk(std::vector<Symbol> v) { return Token{std::move(v)}; }
TreeTerm T(const char* text) { return parse_term(text); }

TreeClass singleton(const char* name, const char* text) {
  TreeTerm r = parse_term(text);
  return mk_tclass(name, base_of({r}), {}, {r});
}

}  // namespace

TEST_CASE("subtree symbols encode compounds and fix leaves") {
  CHECK(subtree_symbol(T("a")) == S("a"));
  Symbol c = subtree_symbol(T("(a,b)"));
  CHECK(c.kind() == Symbol::Kind::Term);
  CHECK(symbol_subtree(c) == T("(a,b)"));
  CHECK(symbol_subtree(S("a")) == T("a"));
}

TEST_CASE("self nesting marks the root") {
  Symbol eps = Symbol::marker("eps");
  CHECK(self_nesting(T("a")) == std::vector<Token>{tk({eps, S("a")})});
  // compounds get (eps, r) plus the bare children tuple
  CHECK(self_nesting(T("(a,b)")) ==
        std::vector<Token>{tk({eps, subtree_symbol(T("(a,b)"))}),
                           tk({S("a"), S("b")})});
  CHECK(self_nesting(T("(a,(b,c))")) ==
        std::vector<Token>{tk({eps, subtree_symbol(T("(a,(b,c))"))}),
                           tk({S("a"), subtree_symbol(T("(b,c)"))})});
}

TEST_CASE("reifying a single token") {
  TreeTerm r = T("(a,(b,c))");
  TokenClass f = reify_token(r, base_of({r}), {});
  std::vector<Symbol> base{S("a"), S("b"), S("c"), subtree_symbol(T("(b,c)")),
                           subtree_symbol(r)};
  sort_unique(base);
  CHECK(f.alpha.base == base);
  CHECK(contains(f.alpha.core, Symbol::marker("eps")));
  CHECK(contains(f.alpha.core, Symbol::marker("F")));

  Symbol eps = Symbol::marker("eps");
  std::vector<Token> heap{
      tk({eps, subtree_symbol(T("(b,c)")), S("b"), S("c")}),
      tk({eps, subtree_symbol(r), S("a"), subtree_symbol(T("(b,c)"))}),
      tk({eps, subtree_symbol(r)}),
      tk({S("a"), subtree_symbol(T("(b,c)"))})};
  sort_unique(heap);
  CHECK(f.norm()->plus == heap);

  TokenClass leaf = reify_token(T("a"), {S("a")}, {});
  CHECK(leaf.alpha.base == std::vector<Symbol>{S("a")});
  CHECK(leaf.norm()->plus == std::vector<Token>{tk({eps, S("a")})});

  CHECK_THROWS_WITH_AS(reify_token(r, base_of({r}), {Symbol::marker("F")}),
                       doctest::Contains("MarkerCollision"), Error);
}

TEST_CASE("reifying classes and maps") {
  TreeClass t1 = singleton("s", "(a,b)");
  TreeClass t2 = singleton("d", "(c,d)");
  TokenClass f1 = reify_class(t1);
  Symbol eps = Symbol::marker("eps");
  std::vector<Token> expect{tk({eps, subtree_symbol(T("(a,b)")), S("a"), S("b")}),
                            tk({eps, subtree_symbol(T("(a,b)"))}),
                            tk({S("a"), S("b")})};
  sort_unique(expect);
  CHECK(f1.norm()->plus == expect);

  TreeMap f = mk_tmap(t1, t2, LeafMap::from({{S("a"), T("c")}, {S("b"), T("d")}}));
  TokenMap rf = reify_map(f);
  CHECK(apply_map(rf, tk({eps, subtree_symbol(T("(a,b)")), S("a"), S("b")})) ==
        tk({eps, subtree_symbol(T("(c,d)")), S("c"), S("d")}));

  // the identity reifies to the identity
  TreeMap id = mk_tmap(t1, t1,
                       LeafMap::from({{S("a"), T("a")}, {S("b"), T("b")}}));
  CHECK(map_equal(reify_map(id), identity_map(f1)));
}

TEST_CASE("reified maps act like the tree morphism on heap terms") {
  TreeClass t1 = singleton("s", "(a,(b,b))");
  TreeClass t2 = singleton("d", "((c,c),(c,c))");
  for (const auto& f0 : enumerate_tmaps(t1, t2)) {
    TreeMap f = mk_tmap(t1, t2, f0);
    TokenMap rf = reify_map(f);
    for (const auto& r : t1.heap)
      CHECK(symbol_subtree(rf.elem().apply(Token{{subtree_symbol(r)}})->elems[0]) ==
            tmorph_apply(f0, r));
  }
}

TEST_CASE("singleton reifications admit at most one p-map") {
  auto cases = {std::pair<const char*, const char*>{"(a,b)", "(c,d)"},
                {"(a,(b,c))", "(d,(e,f))"},
                {"(a,b)", "(c)"},
                {"(a)", "(a,b)"},
                {"(a,(b,c))", "(d,e)"}};
  for (const auto& [s1, s2] : cases) {
    auto pm = singleton_pmaps(T(s1), T(s2));
    CHECK(pm.size() <= 1);
    auto tm = singleton_tmap(T(s1), T(s2));
    CHECK(pm.empty() == !tm.has_value());
  }
}

TEST_CASE("hom correspondence on matching singleton shapes") {
  HomCorrReport r = hom_correspondence(singleton("s", "(a,b)"),
                                       singleton("d", "(c,d)"));
  CHECK(r.tmaps.size() == 1);
  CHECK(r.pmap_count == 1);
  CHECK(*r.tmaps[0].find(S("a")) == T("c"));
  CHECK(*r.tmaps[0].find(S("b")) == T("d"));
  CHECK(r.ok());
}

TEST_CASE("hom correspondence on incompatible shapes") {
  HomCorrReport r = hom_correspondence(singleton("s", "(a,b)"),
                                       singleton("d", "(c)"));
  CHECK(r.tmaps.empty());
  CHECK(r.pmap_count == 0);
  CHECK(r.ok());
}

TEST_CASE("hom correspondence from a class to itself includes the identity") {
  TreeClass t = singleton("t", "(a,(b,c))");
  HomCorrReport r = hom_correspondence(t, t);
  CHECK(r.ok());
  bool has_identity = false;
  for (const auto& f0 : r.tmaps) {
    bool id = true;
    for (const auto& s : t.alpha.base)
      if (const TreeTerm* img = f0.find(s))
        if (!(*img == TreeTerm::leaf(s))) id = false;
    if (id) has_identity = true;
  }
  CHECK(has_identity);
  CHECK(r.tmaps.size() >= 1);
}

TEST_CASE("subtree images of a singleton t-map stay inside the target star") {
  TreeTerm r1 = T("(a,(b,b))"), r2 = T("((c,c),(c,c))");
  auto g = singleton_tmap(r1, r2);
  REQUIRE(g);
  auto star2 = scatter_star(r2);
  for (const auto& x : scatter_star(r1)) {
    TreeTerm img = tmorph_apply(*g, x);
    CHECK(std::find(star2.begin(), star2.end(), img) != star2.end());
  }
}
