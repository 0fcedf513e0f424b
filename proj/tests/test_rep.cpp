#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tokspace/rep.hpp"

using namespace tokspace;

namespace {

Symbol S(const char* n) { return Symbol::atom(n); }
Token tk(std::vector<Symbol> v) { return Token{std::move(v)}; }

StructuredObject chain2() {
  return obj_ordered("p2", {S("1"), S("2")},
                     {{S("1"), S("1")}, {S("2"), S("1")}, {S("2"), S("2")}},
                     "ge");
}

}  // namespace

TEST_CASE("encoding a structured object as a token class") {
  TokenClass p = rep_structured(chain2());
  CHECK(p.alpha.base == std::vector<Symbol>{S("1"), S("2")});
  CHECK(p.alpha.core == std::vector<Symbol>{S("ge")});
  std::vector<Token> heap{tk({S("ge"), S("1"), S("1")}),
                          tk({S("ge"), S("2"), S("1")}),
                          tk({S("ge"), S("2"), S("2")})};
  sort_unique(heap);
  CHECK(p.norm()->plus == heap);

  TokenClass s = rep_structured(obj_set("s", {S("a"), S("b")}));
  CHECK(s.alpha.core.empty());
  CHECK(s.norm()->is_empty());

  TokenClass pt = rep_structured(obj_pointed("pt", {S("a"), S("b")}, S("a")));
  CHECK(pt.norm()->plus == std::vector<Token>{tk({S("amp"), S("a")})});

  TokenClass g = rep_structured(obj_graph("g", {S("u"), S("v")}, {{S("u"), S("v")}}));
  CHECK(g.norm()->plus == std::vector<Token>{tk({S("Edg"), S("u"), S("v")})});

  // heap size is the number of relation tuples plus the special elements
  StructuredObject c = chain2();
  std::size_t total = c.specials.size();
  for (const auto& r : c.rels) total += r.second.size();
  CHECK(rep_structured(c).norm()->plus.size() == total);
}

TEST_CASE("structured object validation") {
  StructureSig sig;
  sig.gamma.emplace_back(S("r"), 2);
  CHECK_THROWS_WITH_AS(
      mk_structured("x", sig, {S("a")}, {}, {{S("r"), {tk({S("a")})}}}),
      doctest::Contains("ArityViolation"), Error);
  CHECK_THROWS_WITH_AS(
      mk_structured("x", sig, {S("a")}, {}, {{S("r"), {tk({S("a"), S("b")})}}}),
      doctest::Contains("ForeignSymbol"), Error);
}

TEST_CASE("ring encodings carry the operation tables") {
  TokenClass z2 = rep_structured(obj_ring(ring_z2()));
  CHECK(heap_member(z2, tk({S("add"), S("1"), S("1"), S("0")})));
  CHECK(heap_member(z2, tk({S("zero"), S("0")})));
  CHECK(heap_member(z2, tk({S("mul"), S("1"), S("1"), S("1")})));
  CHECK(heap_member(z2, tk({S("neg"), S("1"), S("1")})));
  CHECK_FALSE(heap_member(z2, tk({S("add"), S("1"), S("1"), S("1")})));

  TokenClass z4 = rep_structured(obj_ring(ring_z4()));
  CHECK(heap_member(z4, tk({S("add"), S("2"), S("3"), S("1")})));
  CHECK(heap_member(z4, tk({S("neg"), S("1"), S("3")})));

  TokenClass kl = rep_structured(obj_ring(ring_z2xz2()));
  CHECK(heap_member(kl, tk({S("add"), S("01"), S("10"), S("11")})));
  CHECK(heap_member(kl, tk({S("mul"), S("01"), S("10"), S("00")})));

  RingSpec bad = ring_z2();
  bad.add = {{0, 1}};
  CHECK_THROWS_WITH_AS(obj_ring(bad), doctest::Contains("NotAStructure"), Error);
}

TEST_CASE("vector space encodings") {
  TokenClass v = rep_structured(obj_vct(vct_f2_dim1()));
  Symbol s0 = Symbol::tag("s", S("0")), s1 = Symbol::tag("s", S("1"));
  CHECK(heap_member(v, tk({s0, S("v1"), S("v0")})));
  CHECK(heap_member(v, tk({s1, S("v1"), S("v1")})));
  CHECK(heap_member(v, tk({S("add"), S("v1"), S("v1"), S("v0")})));
  CHECK(heap_member(v, tk({S("zero"), S("v0")})));

  TokenClass vp = rep_structured(obj_vct_prime(vct_f2_dim1()));
  CHECK(contains(vp.alpha.base, S("v0")));
  CHECK(contains(vp.alpha.base, S("1")));
  CHECK(heap_member(vp, tk({S("V"), S("v1")})));
  CHECK(heap_member(vp, tk({S("R"), S("1")})));
  CHECK(heap_member(vp, tk({S("zeroV"), S("v0")})));
  CHECK(heap_member(vp, tk({S("zeroR"), S("0")})));
  CHECK(heap_member(vp, tk({S("addR"), S("1"), S("1"), S("0")})));
}

TEST_CASE("structure preserving checks and the encoded map") {
  StructuredObject p = chain2();
  CHECK(check_preserving(ElemMap::identity({S("1"), S("2")}), p, p).holds_p());
  CHECK(check_preserving(ElemMap::from({{S("1"), S("1")}, {S("2"), S("1")}}), p, p)
            .holds_p());

  Verdict v = check_preserving(ElemMap::from({{S("1"), S("2")}, {S("2"), S("1")}}),
                               p, p);
  REQUIRE(v.fails_p());
  CHECK(*v.witness == tk({S("ge"), S("2"), S("1")}));

  TokenMap m = rep_map(ElemMap::from({{S("1"), S("1")}, {S("2"), S("1")}}), p, p);
  CHECK(apply_map(m, tk({S("ge"), S("2"), S("2")})) == tk({S("ge"), S("1"), S("1")}));
  CHECK_THROWS_WITH_AS(
      rep_map(ElemMap::from({{S("1"), S("2")}, {S("2"), S("1")}}), p, p),
      doctest::Contains("NotPreserving"), Error);

  StructuredObject z2 = obj_ring(ring_z2());
  CHECK(check_preserving(ElemMap::identity({S("0"), S("1")}), z2, z2).holds_p());
}

TEST_CASE("structure preservation agrees with the encoded map on all small maps") {
  StructuredObject p = chain2();
  StructuredObject g = obj_graph("g", {S("u"), S("v")}, {{S("u"), S("v")}});
  StructuredObject z2 = obj_ring(ring_z2());
  for (const StructuredObject& obj : {p, g, z2}) {
    const auto& c = obj.carrier;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) {
        ElemMap f = ElemMap::from({{c[0], c[i]}, {c[1], c[j]}});
        bool pres = check_preserving(f, obj, obj).holds_p();
        bool mapped = true;
        try {
          rep_map(f, obj, obj);
        } catch (const Error&) {
          mapped = false;
        }
        CHECK(pres == mapped);
      }
  }
}

TEST_CASE("topologies encode as powerset classes with open predicates") {
  TopSpec x{"X", {S("p"), S("q")}, {{}, {S("p")}, {S("p"), S("q")}}};
  TokenClass tx = rep_top(x);
  Symbol gO = Symbol::marker("gammaO");
  CHECK(heap_member(tx, tk({gO, Symbol::subset({S("p")})})));
  CHECK_FALSE(heap_member(tx, tk({gO, Symbol::subset({S("q")})})));
  CHECK(heap_member(tx, tk({gO, Symbol::subset({S("p"), S("q")})})));

  TopSpec bad{"B", {S("p"), S("q")}, {{}, {S("p")}, {S("q")}}};
  CHECK_THROWS_WITH_AS(rep_top(bad), doctest::Contains("NotATopology"), Error);
  TopSpec noempty{"N", {S("p")}, {{S("p")}}};
  CHECK_THROWS_WITH_AS(rep_top(noempty), doctest::Contains("NotATopology"), Error);
}

TEST_CASE("reversed continuous maps") {
  TopSpec x{"X", {S("a"), S("b")}, {{}, {S("a"), S("b")}}};        // indiscrete
  TopSpec y{"Y", {S("p"), S("q")}, {{}, {S("p")}, {S("p"), S("q")}}};  // Sierpinski

  // constant map to p: preimage of {p} is all of X
  ElemMap cp = ElemMap::from({{S("a"), S("p")}, {S("b"), S("p")}});
  CHECK(is_continuous(cp, x, y));
  TokenMap rev = top_reverse(cp, x, y);
  CHECK(*rev.f0.find(Symbol::subset({S("p")})) == Symbol::subset({S("a"), S("b")}));
  CHECK(*rev.f0.find(S("p")) == Symbol::marker("e"));

  // identity: reversal is preimage, here identity on subsets
  ElemMap idy = ElemMap::identity({S("p"), S("q")});
  TokenMap ridy = top_reverse(idy, y, y);
  CHECK(*ridy.f0.find(Symbol::subset({S("p")})) == Symbol::subset({S("p")}));

  // the identity from the indiscrete relabeling is not continuous into
  // Sierpinski: the preimage of {p} is a singleton, not open
  ElemMap ab = ElemMap::from({{S("a"), S("p")}, {S("b"), S("q")}});
  CHECK_FALSE(is_continuous(ab, x, y));
  try {
    top_reverse(ab, x, y);
    FAIL("expected NotContinuous");
  } catch (const Error& e) {
    CHECK(e.code() == "NotContinuous");
    REQUIRE(e.witness());
    CHECK(*e.witness() == tk({Symbol::subset({S("p")})}));
  }
}

TEST_CASE("reversal is injective on continuous maps") {
  TopSpec y{"Y", {S("p"), S("q")}, {{}, {S("p")}, {S("p"), S("q")}}};
  std::vector<ElemMap> cont;
  for (const Symbol& ip : {S("p"), S("q")})
    for (const Symbol& iq : {S("p"), S("q")}) {
      ElemMap f = ElemMap::from({{S("p"), ip}, {S("q"), iq}});
      if (is_continuous(f, y, y)) cont.push_back(f);
    }
  CHECK(cont.size() == 3);  // monotone self-maps of the Sierpinski order
  for (std::size_t i = 0; i < cont.size(); ++i)
    for (std::size_t j = i + 1; j < cont.size(); ++j)
      CHECK_FALSE(top_reverse(cont[i], y, y).f0.entries ==
                  top_reverse(cont[j], y, y).f0.entries);
}
