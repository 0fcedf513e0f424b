#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tokspace/codec.hpp"
#include "tokspace/term_io.hpp"

using namespace tokspace;

namespace {

Symbol S(const char* n) { return Symbol::atom(n); }
Token tk(std::vector<Symbol> v) { return Token{std::move(v)}; }

}  // namespace

TEST_CASE("term parsing and printing round trip") {
  for (const char* text :
       {"eps", "a", "()", "(a)", "(a,b)", "(a,(b,c))", "((a),((b)),c)",
        "(x1,(x2,(x3,x4)),x5)"})
    CHECK(print_term(parse_term(text)) == text);

  CHECK(parse_term("eps") == TreeTerm::eps());
  CHECK(parse_term("()") == TreeTerm::amp(TreeTerm::eps()));
  CHECK(parse_term(" ( a , b ) ") == parse_term("(a,b)"));
}

TEST_CASE("term syntax errors carry positions") {
  try {
    parse_term("(a,,b)");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code() == "SyntaxError");
    CHECK(e.what() == doctest::Contains("1:4"));  // offset 3
  }
  CHECK_THROWS_WITH_AS(parse_term("(a,b"), doctest::Contains("SyntaxError"), Error);
  CHECK_THROWS_WITH_AS(parse_term(""), doctest::Contains("SyntaxError"), Error);
  CHECK_THROWS_WITH_AS(parse_term("(a)b"), doctest::Contains("SyntaxError"), Error);
}

TEST_CASE("symbol grammar covers every variant") {
  for (const char* text :
       {"a", "#eps", "#e2", "#0", "L:a", "<a,b>", "fn:{b>a}", "set:{a,b}",
        "set:{}", "term:(a,(b,c))", "inc:<a,b>"})
    CHECK(print_symbol(parse_symbol(text)) == text);

  CHECK(parse_symbol("#e2") == Symbol::marker("e", 2));
  CHECK(parse_symbol("#1") == Symbol::marker("1"));
  CHECK(parse_symbol("set:{b,a,a}") == Symbol::subset({S("a"), S("b")}));
  CHECK_THROWS_WITH_AS(parse_symbol("fn:{b>a"), doctest::Contains("SyntaxError"),
                       Error);
}

TEST_CASE("class documents round trip through JSON") {
  TokenClass p = mk_class(
      "p2", {S("1"), S("2")}, {S("ge")},
      HeapExpr::finite({tk({S("ge"), S("1"), S("1")}), tk({S("ge"), S("2"), S("1")}),
                        tk({S("ge"), S("2"), S("2")})}));
  std::string doc = print_class_doc(p);
  TokenClass back = parse_class_doc(doc);
  CHECK(class_equal(back, p));
  CHECK(back.name == "p2");
  // canonical output is stable
  CHECK(print_class_doc(back) == doc);
}

TEST_CASE("expression heaps parse from the schema") {
  std::string doc = R"({
    "name": "x",
    "base": ["a"],
    "core": [],
    "heap": {"kind": "expr", "expr": {"full": {"alphabet": ["a"]}}}
  })";
  TokenClass full = parse_class_doc(doc);
  CHECK(heap_member(full, tk({S("a"), S("a"), S("a")})));

  std::string diff = R"({
    "name": "y",
    "base": ["a"],
    "core": [],
    "heap": {"kind": "expr", "expr": {"difference": {
      "lhs": {"full": {"alphabet": ["a"]}},
      "rhs": {"finite": {"tokens": [["a"]]}}}}}
  })";
  TokenClass cut = parse_class_doc(diff);
  CHECK_FALSE(heap_member(cut, tk({S("a")})));
  CHECK(heap_member(cut, tk({S("a"), S("a")})));
  // printing a cofinite class keeps the expression form
  CHECK(parse_class_doc(print_class_doc(cut)).norm()->blocks.size() == 1);

  std::string pre = R"({
    "name": "z",
    "base": ["a", "b"],
    "core": [],
    "heap": {"kind": "expr", "expr": {"preimage": {
      "map": {"a": "b", "b": "b"},
      "of": {"finite": {"tokens": [["b", "b"]]}}}}}
  })";
  TokenClass pz = parse_class_doc(pre);
  CHECK(heap_member(pz, tk({S("a"), S("b")})));
  CHECK_FALSE(heap_member(pz, tk({S("a")})));
}

TEST_CASE("schema violations are rejected") {
  CHECK_THROWS_WITH_AS(parse_class_doc("not json"), doctest::Contains("SchemaError"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_class_doc("{\"name\": \"x\"}"),
                       doctest::Contains("SchemaError"), Error);
  CHECK_THROWS_WITH_AS(
      parse_class_doc(R"({"name":"x","base":["a"],"core":[],"heap":{"kind":"bogus"}})"),
      doctest::Contains("SchemaError"), Error);
  CHECK_THROWS_WITH_AS(
      parse_class_doc(R"({"name":"x","base":["a"],"core":["a"],"heap":{"kind":"finite","tokens":[]}})"),
      doctest::Contains("AlphabetOverlap"), Error);
  CHECK_THROWS_WITH_AS(
      parse_class_doc(R"({"name":"x","base":["a"],"core":[],"heap":{"kind":"finite","tokens":[["b"]]}})"),
      doctest::Contains("ForeignSymbol"), Error);
}

TEST_CASE("structure documents build the corresponding objects") {
  StructureDoc poset = parse_structure_doc(R"({
    "kind": "poset", "name": "p2", "relsym": "ge",
    "carrier": ["1", "2"],
    "rel": [["1","1"], ["2","1"], ["2","2"]]
  })");
  CHECK_FALSE(poset.is_top);
  TokenClass p = rep_structured(poset.obj);
  CHECK(heap_member(p, tk({S("ge"), S("2"), S("1")})));

  StructureDoc ring = parse_structure_doc(R"({"kind": "ring", "ring": "z2"})");
  CHECK(heap_member(rep_structured(ring.obj),
                    tk({S("add"), S("1"), S("1"), S("0")})));

  StructureDoc graph = parse_structure_doc(R"({
    "kind": "graph", "vertices": ["u", "v"], "edges": [["u","v"]]
  })");
  CHECK(heap_member(rep_structured(graph.obj), tk({S("Edg"), S("u"), S("v")})));

  StructureDoc top = parse_structure_doc(R"({
    "kind": "top", "points": ["p", "q"],
    "opens": [[], ["p"], ["p", "q"]]
  })");
  REQUIRE(top.is_top);
  TokenClass tx = rep_top(top.top);
  CHECK(heap_member(tx, tk({Symbol::marker("gammaO"), Symbol::subset({S("p")})})));

  CHECK_THROWS_WITH_AS(parse_structure_doc(R"({"kind": "nope"})"),
                       doctest::Contains("SchemaError"), Error);
}

TEST_CASE("file round trip") {
  TokenClass p = mk_class("t", {S("a")}, {}, HeapExpr::finite({tk({S("a")})}));
  std::string path = "codec_roundtrip.json";
  write_class(path, p);
  TokenClass back = read_class(path);
  CHECK(class_equal(back, p));
  std::remove(path.c_str());
  CHECK_THROWS_WITH_AS(read_class("does_not_exist.json"),
                       doctest::Contains("BadInput"), Error);
}
