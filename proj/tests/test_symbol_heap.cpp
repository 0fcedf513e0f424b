#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tokspace/heap.hpp"
#include "tokspace/symbol.hpp"

using namespace tokspace;

namespace {
Symbol A() { return Symbol::atom("a"); }
Symbol B() { return Symbol::atom("b"); }
Token tk(std::vector<Symbol> v) { return Token{std::move(v)}; }
}  // namespace

TEST_CASE("symbol ordering is total and structural") {
  Symbol a = A(), b = B();
  CHECK(a == Symbol::atom("a"));
  CHECK(a < b);
  CHECK(a < Symbol::marker("a"));  // atoms before markers
  CHECK(Symbol::marker("e") < Symbol::marker("e", 1));
  CHECK(Symbol::pair(a, b) == Symbol::pair(a, b));
  CHECK(Symbol::tag("L", a) < Symbol::tag("R", a));
  CHECK(Symbol::subset({a, b}) == Symbol::subset({b, a, a}));
}

TEST_CASE("symbol printing") {
  CHECK(A().str() == "a");
  CHECK(Symbol::marker("eps").str() == "#eps");
  CHECK(Symbol::marker("e", 2).str() == "#e2");
  CHECK(Symbol::pair(A(), B()).str() == "<a,b>");
  CHECK(Symbol::tag("L", A()).str() == "L:a");
  CHECK(Symbol::fn({{B(), A()}}).str() == "fn:{b>a}");
  CHECK(Symbol::subset({B(), A()}).str() == "set:{a,b}");
}

TEST_CASE("token ordering is length then lexicographic") {
  CHECK(tk({}) < tk({A()}));
  CHECK(tk({B()}) < tk({A(), A()}));
  CHECK(tk({A(), B()}) < tk({B(), A()}));
  CHECK(tk({A(), B()}).str() == "(a,b)");
}

TEST_CASE("elem map basics") {
  ElemMap m = ElemMap::from({{A(), B()}, {B(), B()}});
  CHECK(*m.find(A()) == B());
  CHECK(m.apply(tk({A(), B()})) == tk({B(), B()}));
  CHECK_FALSE(m.apply(tk({Symbol::atom("c")})));
  CHECK_FALSE(m.injective());
  CHECK(m.preimage(B()) == std::vector<Symbol>{A(), B()});

  ElemMap id = ElemMap::identity({A(), B()});
  CHECK(id.injective());
  CHECK(ElemMap::compose(m, id).entries == m.entries);
}

TEST_CASE("heap expr membership is exact on every node kind") {
  HeapExpr fin = HeapExpr::finite({tk({A()}), tk({A(), B()})});
  CHECK(fin.member(tk({A()})));
  CHECK_FALSE(fin.member(tk({B()})));

  HeapExpr full = HeapExpr::full({A(), B()});
  CHECK(full.member(tk({})));  // empty token belongs to any full heap
  CHECK(full.member(tk({B(), B(), A()})));
  CHECK_FALSE(full.member(tk({Symbol::atom("c")})));

  CHECK(HeapExpr::union_(fin, full).member(tk({B()})));
  CHECK_FALSE(HeapExpr::intersect(fin, HeapExpr::finite({tk({A(), B()})}))
                  .member(tk({A()})));
  CHECK(HeapExpr::difference(full, fin).member(tk({B()})));
  CHECK_FALSE(HeapExpr::difference(full, fin).member(tk({A()})));

  ElemMap m = ElemMap::from({{A(), B()}, {B(), B()}});
  // preimage: t is in iff m(t) is in
  CHECK(HeapExpr::preimage(m, HeapExpr::finite({tk({B(), B()})})).member(tk({A(), B()})));
  ElemMap swap = ElemMap::from({{A(), B()}, {B(), A()}});
  CHECK(HeapExpr::image_bij(swap, fin).member(tk({B()})));
  CHECK_FALSE(HeapExpr::image_bij(swap, fin).member(tk({A()})));
}

TEST_CASE("normalization agrees with structural membership") {
  HeapExpr full = HeapExpr::full({A(), B()});
  HeapExpr fin = HeapExpr::finite({tk({A()}), tk({A(), B()})});
  HeapExpr e = HeapExpr::difference(HeapExpr::union_(fin, full),
                                    HeapExpr::finite({tk({A(), B()})}));
  auto n = normalize(e);
  REQUIRE(n);
  for (const auto& t : all_tokens({A(), B()}, 3)) CHECK(n->member(t) == e.member(t));
}

TEST_CASE("subset decisions on normal forms are exact with witnesses") {
  NormalHeap fin = NormalHeap::finite({tk({A()})});
  NormalHeap full = NormalHeap::full({A(), B()});
  CHECK(heap_subset(fin, full).holds_p());

  Verdict v = heap_subset(full, fin);
  REQUIRE(v.fails_p());
  REQUIRE(v.witness);
  CHECK(full.member(*v.witness));
  CHECK_FALSE(fin.member(*v.witness));

  // cofinite versus cofinite: the pumped witness escapes the finite cut
  NormalHeap c1 = NormalHeap::cofin({A(), B()}, {tk({A()})});
  NormalHeap c2 = NormalHeap::cofin({A(), B()}, {tk({A()}), tk({B()})});
  CHECK(heap_subset(c2, c1).holds_p());
  Verdict w = heap_subset(c1, c2);
  REQUIRE(w.fails_p());
  CHECK(*w.witness == tk({B()}));
}

TEST_CASE("cofinite blocks over different alphabets") {
  NormalHeap big = NormalHeap::full({A(), B()});
  NormalHeap small = NormalHeap::full({A()});
  CHECK(heap_subset(small, big).holds_p());
  CHECK(heap_subset(big, small).fails_p());
}

TEST_CASE("token enumeration is canonical and complete") {
  auto all = all_tokens({A(), B()}, 2);
  CHECK(all.size() == 1 + 2 + 4);
  CHECK(all.front() == tk({}));
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("find_member_not_in escapes any finite avoid set") {
  NormalHeap full = NormalHeap::full({A()});
  std::vector<Token> avoid = all_tokens({A()}, 3);
  auto t = find_member_not_in(full, avoid);
  REQUIRE(t);
  CHECK(full.member(*t));
  CHECK_FALSE(contains(avoid, *t));
}
