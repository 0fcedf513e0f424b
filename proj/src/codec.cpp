#include "tokspace/codec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tokspace/term_io.hpp"

namespace tokspace {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& field) {
  fail("SchemaError", "missing or malformed field '" + field + "'");
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) schema(name);
  return j.at(name);
}

std::vector<Symbol> symbols_of(const json& j, const char* name) {
  if (!j.is_array()) schema(name);
  std::vector<Symbol> out;
  for (const auto& s : j) {
    if (!s.is_string()) schema(name);
    out.push_back(parse_symbol(s.get<std::string>()));
  }
  return out;
}

Token token_of(const json& j, const char* name) {
  Token t;
  t.elems = symbols_of(j, name);
  return t;
}

std::vector<Token> tokens_of(const json& j, const char* name) {
  if (!j.is_array()) schema(name);
  std::vector<Token> out;
  for (const auto& row : j) out.push_back(token_of(row, name));
  return out;
}

ElemMap map_of(const json& j, const char* name) {
  if (!j.is_object()) schema(name);
  std::vector<std::pair<Symbol, Symbol>> kv;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string()) schema(name);
    kv.emplace_back(parse_symbol(it.key()),
                    parse_symbol(it.value().get<std::string>()));
  }
  return ElemMap::from(std::move(kv));
}

HeapExpr expr_of(const json& j) {
  if (!j.is_object() || j.size() != 1) schema("expr");
  const std::string tag = j.begin().key();
  const json& body = j.begin().value();
  if (tag == "full") return HeapExpr::full(symbols_of(field(body, "alphabet"), "alphabet"));
  if (tag == "finite") return HeapExpr::finite(tokens_of(field(body, "tokens"), "tokens"));
  if (tag == "union")
    return HeapExpr::union_(expr_of(field(body, "lhs")), expr_of(field(body, "rhs")));
  if (tag == "intersect")
    return HeapExpr::intersect(expr_of(field(body, "lhs")), expr_of(field(body, "rhs")));
  if (tag == "difference")
    return HeapExpr::difference(expr_of(field(body, "lhs")), expr_of(field(body, "rhs")));
  if (tag == "preimage")
    return HeapExpr::preimage(map_of(field(body, "map"), "map"), expr_of(field(body, "of")));
  if (tag == "imagebij")
    return HeapExpr::image_bij(map_of(field(body, "map"), "map"), expr_of(field(body, "of")));
  schema("expr");
}

json symbols_json(const std::vector<Symbol>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

json tokens_json(const std::vector<Token>& v) {
  json out = json::array();
  for (const auto& t : v) {
    json row = json::array();
    for (const auto& s : t.elems) row.push_back(s.str());
    out.push_back(std::move(row));
  }
  return out;
}

json map_json(const ElemMap& m) {
  json out = json::object();
  for (const auto& e : m.entries) out[e.first.str()] = e.second.str();
  return out;
}

json expr_json(const HeapExpr& e) {
  switch (e.kind()) {
    case HeapExpr::Kind::Finite:
      return {{"finite", {{"tokens", tokens_json(e.tokens())}}}};
    case HeapExpr::Kind::Full:
      return {{"full", {{"alphabet", symbols_json(e.alphabet())}}}};
    case HeapExpr::Kind::Union:
      return {{"union", {{"lhs", expr_json(e.lhs())}, {"rhs", expr_json(e.rhs())}}}};
    case HeapExpr::Kind::Intersect:
      return {{"intersect", {{"lhs", expr_json(e.lhs())}, {"rhs", expr_json(e.rhs())}}}};
    case HeapExpr::Kind::Difference:
      return {{"difference", {{"lhs", expr_json(e.lhs())}, {"rhs", expr_json(e.rhs())}}}};
    case HeapExpr::Kind::Preimage:
      return {{"preimage", {{"map", map_json(e.map())}, {"of", expr_json(e.lhs())}}}};
    case HeapExpr::Kind::ImageBij:
      return {{"imagebij", {{"map", map_json(e.map())}, {"of", expr_json(e.lhs())}}}};
  }
  schema("expr");
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("SchemaError", "input is not valid JSON");
  return j;
}

}  // namespace

TokenClass parse_class_doc(const std::string& text) {
  json j = parse_json(text);
  const json& name = field(j, "name");
  if (!name.is_string()) schema("name");
  std::vector<Symbol> base = symbols_of(field(j, "base"), "base");
  std::vector<Symbol> core = symbols_of(field(j, "core"), "core");
  const json& heap = field(j, "heap");
  const json& kind = field(heap, "kind");
  HeapExpr e;
  if (kind == "finite")
    e = HeapExpr::finite(tokens_of(field(heap, "tokens"), "tokens"));
  else if (kind == "expr")
    e = expr_of(field(heap, "expr"));
  else
    schema("heap.kind");
  return mk_class(name.get<std::string>(), std::move(base), std::move(core),
                  std::move(e));
}

std::string print_class_doc(const TokenClass& t) {
  json j;
  j["name"] = t.name;
  j["base"] = symbols_json(t.alpha.base);
  j["core"] = symbols_json(t.alpha.core);
  if (t.norm() && t.norm()->is_finite()) {
    j["heap"] = {{"kind", "finite"}, {"tokens", tokens_json(t.norm()->plus)}};
  } else {
    j["heap"] = {{"kind", "expr"}, {"expr", expr_json(t.heap)}};
  }
  return j.dump(2) + "\n";
}

TokenClass read_class(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("BadInput", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_class_doc(buf.str());
}

void write_class(const std::string& path, const TokenClass& t) {
  std::ofstream out(path);
  if (!out) fail("BadInput", "cannot write " + path);
  out << print_class_doc(t);
}

namespace {

std::vector<std::pair<Symbol, Symbol>> pairs_of(const json& j, const char* name) {
  if (!j.is_array()) schema(name);
  std::vector<std::pair<Symbol, Symbol>> out;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 2) schema(name);
    out.emplace_back(parse_symbol(row[0].get<std::string>()),
                     parse_symbol(row[1].get<std::string>()));
  }
  return out;
}

RingSpec ring_of(const json& j) {
  const json& r = field(j, "ring");
  if (r.is_string()) {
    std::string which = r.get<std::string>();
    if (which == "z2") return ring_z2();
    if (which == "z4") return ring_z4();
    if (which == "z2xz2") return ring_z2xz2();
    schema("ring");
  }
  RingSpec s;
  s.name = field(r, "name").get<std::string>();
  s.elems = symbols_of(field(r, "elems"), "elems");
  s.add = field(r, "add").get<std::vector<std::vector<std::size_t>>>();
  s.mul = field(r, "mul").get<std::vector<std::vector<std::size_t>>>();
  s.neg = field(r, "neg").get<std::vector<std::size_t>>();
  s.zero = field(r, "zero").get<std::size_t>();
  return s;
}

}  // namespace

StructureDoc parse_structure_doc(const std::string& text) {
  json j = parse_json(text);
  std::string kind = field(j, "kind").get<std::string>();
  std::string name = j.contains("name") ? j["name"].get<std::string>() : kind;
  StructureDoc doc;
  if (kind == "set") {
    doc.obj = obj_set(name, symbols_of(field(j, "carrier"), "carrier"));
  } else if (kind == "pointed") {
    doc.obj = obj_pointed(name, symbols_of(field(j, "carrier"), "carrier"),
                          parse_symbol(field(j, "point").get<std::string>()));
  } else if (kind == "poset") {
    std::string relsym = j.contains("relsym") ? j["relsym"].get<std::string>() : "le";
    doc.obj = obj_ordered(name, symbols_of(field(j, "carrier"), "carrier"),
                          pairs_of(field(j, "rel"), "rel"), relsym);
  } else if (kind == "graph") {
    doc.obj = obj_graph(name, symbols_of(field(j, "vertices"), "vertices"),
                        pairs_of(field(j, "edges"), "edges"));
  } else if (kind == "ring") {
    doc.obj = obj_ring(ring_of(j));
  } else if (kind == "vct") {
    doc.obj = obj_vct(vct_f2_dim1());
  } else if (kind == "vctprime") {
    doc.obj = obj_vct_prime(vct_f2_dim1());
  } else if (kind == "top") {
    doc.is_top = true;
    doc.top.name = name;
    doc.top.points = symbols_of(field(j, "points"), "points");
    const json& opens = field(j, "opens");
    if (!opens.is_array()) schema("opens");
    for (const auto& o : opens) doc.top.opens.push_back(symbols_of(o, "opens"));
  } else {
    schema("kind");
  }
  return doc;
}

StructureDoc read_structure(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("BadInput", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure_doc(buf.str());
}

}  // namespace tokspace
