#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tokspace/term_io.hpp"
#include "tokspace/tree.hpp"

using namespace tokspace;

namespace {

Symbol S(const char* n) { return Symbol::atom(n); }
TreeTerm T(const char* text) { return parse_term(text); }

bool contains(const std::vector<TreeTerm>& v, const TreeTerm& t) {
  return std::find(v.begin(), v.end(), t) != v.end();
}

// uniform random token over {a,b,c}, depth and length bounded
TreeTerm random_token(std::mt19937& rng, std::size_t depth, std::size_t len) {
  static const char* leaves[] = {"a", "b", "c"};
  if (depth == 0 || len <= 1 || rng() % 3 == 0)
    return TreeTerm::leaf(S(leaves[rng() % 3]));
  std::size_t n = 1 + rng() % std::min<std::size_t>(3, len);
  std::vector<TreeTerm> parts;
  std::size_t budget = len;
  for (std::size_t i = 0; i < n; ++i) {
    parts.push_back(random_token(rng, depth - 1, budget / n + 1));
    budget -= std::min(budget, term_length(parts.back()));
  }
  return TreeTerm::amp(TreeTerm::concat(std::move(parts)));
}

}  // namespace

TEST_CASE("normal form laws of the term algebra") {
  CHECK(TreeTerm::concat({TreeTerm::eps(), T("a")}) == T("a"));
  CHECK(TreeTerm::concat({T("a"), TreeTerm::eps()}) == T("a"));
  TreeTerm abc = TreeTerm::concat(
      {TreeTerm::concat({T("a"), T("b")}), T("c")});
  CHECK(abc.kind() == TreeTerm::Kind::Concat);
  CHECK(abc.parts().size() == 3);
  CHECK(T("()") == TreeTerm::amp(TreeTerm::eps()));
  CHECK(print_term(T("()")) == "()");
}

TEST_CASE("measures follow the inductive rules") {
  CHECK(term_length(TreeTerm::eps()) == 0);
  CHECK(term_depth(TreeTerm::eps()) == 0);
  CHECK(term_ary(TreeTerm::eps()) == 0);

  TreeTerm r = T("(x1,(x2,(x3,x4)),x5)");
  CHECK(term_length(r) == 5);
  CHECK(term_depth(r) == 4);
  CHECK(term_ary(r) == 1);

  CHECK(term_tary(T("(a,b)")) == 2);
  CHECK(term_tary(T("a")) == 0);
  CHECK_THROWS_WITH_AS(term_tary(TreeTerm::concat({T("a"), T("b")})),
                       doctest::Contains("TaryOnNonToken"), Error);
}

TEST_CASE("connect splices the factor lists") {
  CHECK(connect(T("(a,b)"), T("(c)")) == T("(a,b,c)"));
  CHECK(connect(T("()"), T("(a)")) == T("(a)"));
  CHECK(connect(connect(T("(a,b)"), T("(c)")), T("(d)")) ==
        connect(T("(a,b)"), connect(T("(c)"), T("(d)"))));
  CHECK_THROWS_WITH_AS(connect(T("a"), T("(b)")),
                       doctest::Contains("NotAToken"), Error);
}

TEST_CASE("flatten condenses to depth two") {
  CHECK(flatten(T("(a,(),b)")) == T("(a,b)"));
  CHECK(flatten(T("(a,(b,c))")) == T("(a,b,c)"));
  CHECK(flatten(T("(a,b)")) == T("(a,b)"));
  CHECK(flatten(T("a")) == T("(a)"));
  CHECK(term_depth(flatten(T("((a),((b)),c)"))) == 2);
}

TEST_CASE("tree morphisms extend leaf assignments homomorphically") {
  LeafMap f = LeafMap::from({{S("1"), T("a")}, {S("2"), T("(b,c)")}});
  CHECK(tmorph_apply(f, T("(1,2)")) == T("(a,(b,c))"));
  CHECK(tmorph_apply(LeafMap::from({}), T("(a,(b,c))")) == T("(a,(b,c))"));

  LeafMap dup = LeafMap::from({{S("a"), T("(a,a)")}});
  TreeTerm img = tmorph_apply(dup, T("(a,b)"));
  CHECK(img == T("((a,a),b)"));
  CHECK(term_tary(img) == term_tary(T("(a,b)")));
}

TEST_CASE("universal tokens relabel the shape by reading order") {
  CHECK(universal_of(T("(a,(b,c))")) == T("(1,(2,3))"));
  CHECK(index_token(0) == TreeTerm::eps());
  CHECK(index_token(1) == T("(1)"));
  CHECK(is_universal(T("(1,2,3)")));
  CHECK_FALSE(is_universal(T("(2,1)")));
  TreeTerm r = T("((a,b),c)");
  CHECK(universal_of(flatten(r)) == index_token(term_length(r)));
}

TEST_CASE("corr finds the unique carrying assignment") {
  auto g = corr(T("(1,2)"), T("(a,(b,c))"));
  REQUIRE(g);
  CHECK(*g->find(S("1")) == T("a"));
  CHECK(*g->find(S("2")) == T("(b,c)"));
  CHECK(tmorph_apply(*g, T("(1,2)")) == T("(a,(b,c))"));

  CHECK_FALSE(corr(T("(1,2)"), T("(a,b,c)")));

  auto id = corr(T("(a,(b,c))"), T("(a,(b,c))"));
  REQUIRE(id);
  CHECK(tmorph_apply(*id, T("(a,(b,c))")) == T("(a,(b,c))"));
}

TEST_CASE("scattering selects subterm sets") {
  LeafMap g = LeafMap::from({{S("1"), T("a")}, {S("2"), T("(b,c)")}});
  CHECK(scatter_by(g) == std::vector<TreeTerm>{T("a"), T("(b,c)")});
  CHECK(scatter_flat(T("(a,(b,c))")) ==
        std::vector<TreeTerm>{T("a"), T("b"), T("c")});
  auto star = scatter_star(T("(a,(b,c))"));
  std::vector<TreeTerm> expect{T("a"), T("b"), T("c"), T("(b,c)"),
                               T("(a,(b,c))")};
  std::sort(expect.begin(), expect.end());
  CHECK(star == expect);
}

TEST_CASE("flatten classes collect terms with one condensation") {
  auto fc = flatten_class(T("(a,b)"), 3);
  for (const auto& r : fc) CHECK(flatten(r) == T("(a,b)"));
  CHECK(contains(fc, T("(a,b)")));
  CHECK(contains(fc, T("((a),b)")));
  CHECK(contains(fc, T("(a,(b))")));
  CHECK(contains(fc, T("((a,b))")));
  CHECK_FALSE(contains(fc, T("(b,a)")));
}

TEST_CASE("t-class construction and minimum base") {
  CHECK_NOTHROW(mk_tclass("t", {S("a"), S("b")}, {}, {T("(a,(b,b))")}));
  CHECK(base_of({T("(a,(b,c))")}) ==
        std::vector<Symbol>{S("a"), S("b"), S("c")});
  CHECK_NOTHROW(mk_tclass("e", {S("a")}, {S("x")}, {}));
  CHECK_THROWS_WITH_AS(mk_tclass("t", {S("a")}, {}, {T("(a,b)")}),
                       doctest::Contains("ForeignSymbol"), Error);
}

TEST_CASE("t-map construction validates heap containment") {
  TreeClass src = mk_tclass("s", {S("a"), S("b")}, {}, {T("(a,b)")});
  TreeClass dst = mk_tclass("d", {S("c"), S("d")}, {}, {T("(c,d)")});
  TreeMap f = mk_tmap(src, dst, LeafMap::from({{S("a"), T("c")}, {S("b"), T("d")}}));
  CHECK(apply_tmap(f, T("(a,b)")) == T("(c,d)"));

  TreeClass src1 = mk_tclass("s1", {S("a")}, {}, {T("(a)")});
  TreeClass dst1 = mk_tclass("d1", {S("c")}, {}, {T("((c,c))")});
  CHECK_NOTHROW(mk_tmap(src1, dst1, LeafMap::from({{S("a"), T("(c,c)")}})));

  TreeClass bare = mk_tclass("d2", {S("c")}, {}, {T("(c,c)")});
  try {
    mk_tmap(src1, bare, LeafMap::from({{S("a"), T("c")}}));
    FAIL("expected HeapViolation");
  } catch (const Error& e) {
    CHECK(e.code() == "HeapViolation");
  }
}

TEST_CASE("t-class coproduct tags the two sides") {
  TreeClass t1 = mk_tclass("l", {S("a")}, {}, {T("(a)")});
  TreeClass t2 = mk_tclass("r", {S("b")}, {}, {T("(b)")});
  TreeMap in1, in2;
  TreeClass cp = tclass_coproduct(t1, t2, &in1, &in2);
  CHECK(cp.heap == std::vector<TreeTerm>{
                       TreeTerm::amp(TreeTerm::leaf(Symbol::tag("L", S("a")))),
                       TreeTerm::amp(TreeTerm::leaf(Symbol::tag("R", S("b"))))});
  CHECK(apply_tmap(in1, T("(a)")) == cp.heap[0]);
  CHECK(apply_tmap(in2, T("(b)")) == cp.heap[1]);

  TreeClass empty = mk_tclass("e", {}, {}, {});
  TreeClass cpe = tclass_coproduct(t1, empty);
  CHECK(cpe.heap.size() == t1.heap.size());
}

TEST_CASE("randomized metric and flattening laws") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    TreeTerm r1 = random_token(rng, 3, 4);
    TreeTerm r2 = random_token(rng, 3, 4);
    TreeTerm cat = TreeTerm::concat({r1, r2});
    CHECK(term_length(cat) == term_length(r1) + term_length(r2));
    CHECK(term_depth(cat) == std::max(term_depth(r1), term_depth(r2)));
    CHECK(term_ary(cat) == term_ary(r1) + term_ary(r2));

    TreeTerm f = flatten(r1);
    CHECK(term_depth(f) == 2);
    CHECK(term_length(f) == term_length(r1));
    CHECK(universal_of(f) == index_token(term_length(r1)));

    auto star = scatter_star(r1);
    CHECK(contains(star, r1));
    for (const auto& s : star) CHECK(term_depth(s) <= term_depth(r1));
    if (r1.kind() == TreeTerm::Kind::Amp)
      for (const auto& b : scatter_flat(r1))
        CHECK(contains(star, b));

    auto g = corr(universal_of(r1), r1);
    CHECK(g);
  }
}
