#include "tokspace/rep.hpp"

#include <algorithm>

#include "tokspace/class_ops.hpp"

namespace tokspace {

const std::vector<Token>* StructuredObject::relation(const Symbol& g) const {
  for (const auto& r : rels)
    if (r.first == g) return &r.second;
  return nullptr;
}

StructuredObject mk_structured(std::string name, StructureSig sig,
                               std::vector<Symbol> carrier,
                               std::vector<std::pair<Symbol, Symbol>> specials,
                               std::vector<std::pair<Symbol, std::vector<Token>>> rels) {
  sort_unique(carrier);
  std::sort(sig.theta.begin(), sig.theta.end());
  std::sort(sig.gamma.begin(), sig.gamma.end());
  std::sort(specials.begin(), specials.end());
  std::sort(rels.begin(), rels.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Symbol> names = sig.theta;
  for (const auto& g : sig.gamma) names.push_back(g.first);
  std::size_t before = names.size();
  sort_unique(names);
  if (names.size() != before)
    fail("BadInput", "signature names must be distinct in " + name);

  for (const auto& th : sig.theta) {
    bool found = false;
    for (const auto& sp : specials)
      if (sp.first == th) {
        found = true;
        if (!contains(carrier, sp.second))
          fail("ForeignSymbol", sp.second.str() + " is not in the carrier of " + name);
      }
    if (!found) fail("BadInput", "missing special element " + th.str());
  }
  for (const auto& r : rels) {
    std::size_t arity = 0;
    bool known = false;
    for (const auto& g : sig.gamma)
      if (g.first == r.first) {
        known = true;
        arity = g.second;
      }
    if (!known) fail("BadInput", r.first.str() + " is not a relation symbol of " + name);
    for (const auto& tup : r.second) {
      if (arity != 0 && tup.size() != arity)
        fail("ArityViolation", r.first.str() + " expects arity " + std::to_string(arity),
             tup);
      for (const auto& x : tup.elems)
        if (!contains(carrier, x))
          fail("ForeignSymbol", x.str() + " is not in the carrier of " + name, tup);
    }
  }
  StructuredObject obj;
  obj.name = std::move(name);
  obj.sig = std::move(sig);
  obj.carrier = std::move(carrier);
  obj.specials = std::move(specials);
  obj.rels = std::move(rels);
  return obj;
}

TokenClass rep_structured(const StructuredObject& obj) {
  std::vector<Symbol> core = obj.sig.theta;
  for (const auto& g : obj.sig.gamma) core.push_back(g.first);
  sort_unique(core);

  std::vector<Token> heap;
  for (const auto& sp : obj.specials) heap.push_back(Token{{sp.first, sp.second}});
  for (const auto& r : obj.rels)
    for (const auto& tup : r.second) {
      Token t{{r.first}};
      t.elems.insert(t.elems.end(), tup.elems.begin(), tup.elems.end());
      heap.push_back(std::move(t));
    }
  return mk_class("rep(" + obj.name + ")", obj.carrier, std::move(core),
                  HeapExpr::finite(std::move(heap)));
}

Verdict check_preserving(const ElemMap& f, const StructuredObject& src,
                         const StructuredObject& dst) {
  if (!(src.sig == dst.sig)) return Verdict::fails("signatures differ");
  for (const auto& x : src.carrier) {
    const Symbol* y = f.find(x);
    if (!y) return Verdict::fails("not total at " + x.str());
    if (!contains(dst.carrier, *y))
      return Verdict::fails(y->str() + " is outside the target carrier");
  }
  for (const auto& sp : src.specials) {
    const Symbol* img = f.find(sp.second);
    for (const auto& dp : dst.specials)
      if (dp.first == sp.first && !(*img == dp.second))
        return Verdict::fails(Token{{sp.first, sp.second}},
                              "special element moves off its target");
  }
  for (const auto& r : src.rels) {
    const std::vector<Token>* target = dst.relation(r.first);
    for (const auto& tup : r.second) {
      Token img = *f.apply(tup);
      if (!target || !contains(*target, img)) {
        Token witness{{r.first}};
        witness.elems.insert(witness.elems.end(), tup.elems.begin(), tup.elems.end());
        return Verdict::fails(std::move(witness), "relation tuple not preserved");
      }
    }
  }
  return Verdict::holds();
}

TokenMap rep_map(const ElemMap& f, const StructuredObject& src,
                 const StructuredObject& dst) {
  Verdict v = check_preserving(f, src, dst);
  if (!v.holds_p()) {
    if (v.witness) fail("NotPreserving", v.detail, *v.witness);
    fail("NotPreserving", v.detail);
  }
  return mk_map(rep_structured(src), rep_structured(dst), f);
}

StructuredObject obj_set(std::string name, std::vector<Symbol> carrier) {
  return mk_structured(std::move(name), {}, std::move(carrier), {}, {});
}

StructuredObject obj_pointed(std::string name, std::vector<Symbol> carrier,
                             Symbol point) {
  Symbol amp = Symbol::atom("amp");
  StructureSig sig;
  sig.theta = {amp};
  return mk_structured(std::move(name), std::move(sig), std::move(carrier),
                       {{amp, std::move(point)}}, {});
}

StructuredObject obj_ordered(std::string name, std::vector<Symbol> carrier,
                             std::vector<std::pair<Symbol, Symbol>> rel,
                             std::string relsym) {
  Symbol le = Symbol::atom(std::move(relsym));
  StructureSig sig;
  sig.gamma = {{le, 2}};
  std::vector<Token> tuples;
  for (auto& p : rel) tuples.push_back(Token{{std::move(p.first), std::move(p.second)}});
  sort_unique(tuples);
  return mk_structured(std::move(name), std::move(sig), std::move(carrier), {},
                       {{le, std::move(tuples)}});
}

StructuredObject obj_graph(std::string name, std::vector<Symbol> vertices,
                           std::vector<std::pair<Symbol, Symbol>> edges) {
  Symbol edg = Symbol::atom("Edg");
  StructureSig sig;
  sig.gamma = {{edg, 2}};
  std::vector<Token> tuples;
  for (auto& p : edges) tuples.push_back(Token{{std::move(p.first), std::move(p.second)}});
  sort_unique(tuples);
  return mk_structured(std::move(name), std::move(sig), std::move(vertices), {},
                       {{edg, std::move(tuples)}});
}

namespace {

void check_table(const RingSpec& s) {
  const std::size_t n = s.elems.size();
  if (n == 0 || s.add.size() != n || s.mul.size() != n || s.neg.size() != n ||
      s.zero >= n)
    fail("NotAStructure", "malformed ring tables for " + s.name);
  for (std::size_t i = 0; i < n; ++i) {
    if (s.add[i].size() != n || s.mul[i].size() != n || s.neg[i] >= n)
      fail("NotAStructure", "malformed ring tables for " + s.name);
    for (std::size_t j = 0; j < n; ++j)
      if (s.add[i][j] >= n || s.mul[i][j] >= n)
        fail("NotAStructure", "ring tables are not closed for " + s.name);
  }
}

}  // namespace

StructuredObject obj_ring(const RingSpec& spec) {
  check_table(spec);
  Symbol add = Symbol::atom("add");
  Symbol mul = Symbol::atom("mul");
  Symbol neg = Symbol::atom("neg");
  Symbol zero = Symbol::atom("zero");
  StructureSig sig;
  sig.theta = {zero};
  sig.gamma = {{add, 3}, {mul, 3}, {neg, 2}};

  const auto& e = spec.elems;
  std::vector<Token> adds, muls, negs;
  for (std::size_t i = 0; i < e.size(); ++i) {
    negs.push_back(Token{{e[i], e[spec.neg[i]]}});
    for (std::size_t j = 0; j < e.size(); ++j) {
      adds.push_back(Token{{e[i], e[j], e[spec.add[i][j]]}});
      muls.push_back(Token{{e[i], e[j], e[spec.mul[i][j]]}});
    }
  }
  sort_unique(adds);
  sort_unique(muls);
  sort_unique(negs);
  return mk_structured(spec.name, std::move(sig), e, {{zero, e[spec.zero]}},
                       {{add, std::move(adds)}, {mul, std::move(muls)}, {neg, std::move(negs)}});
}

RingSpec ring_z2() {
  RingSpec s;
  s.name = "Z2";
  s.elems = {Symbol::atom("0"), Symbol::atom("1")};
  s.add = {{0, 1}, {1, 0}};
  s.mul = {{0, 0}, {0, 1}};
  s.neg = {0, 1};
  s.zero = 0;
  return s;
}

RingSpec ring_z4() {
  RingSpec s;
  s.name = "Z4";
  for (int i = 0; i < 4; ++i) s.elems.push_back(Symbol::atom(std::to_string(i)));
  s.add.assign(4, std::vector<std::size_t>(4));
  s.mul.assign(4, std::vector<std::size_t>(4));
  s.neg.assign(4, 0);
  for (std::size_t i = 0; i < 4; ++i) {
    s.neg[i] = (4 - i) % 4;
    for (std::size_t j = 0; j < 4; ++j) {
      s.add[i][j] = (i + j) % 4;
      s.mul[i][j] = (i * j) % 4;
    }
  }
  return s;
}

RingSpec ring_z2xz2() {
  RingSpec s;
  s.name = "Z2xZ2";
  s.elems = {Symbol::atom("00"), Symbol::atom("01"), Symbol::atom("10"),
             Symbol::atom("11")};
  s.add.assign(4, std::vector<std::size_t>(4));
  s.mul.assign(4, std::vector<std::size_t>(4));
  s.neg = {0, 1, 2, 3};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      s.add[i][j] = i ^ j;
      s.mul[i][j] = i & j;
    }
  s.zero = 0;
  return s;
}

StructuredObject obj_vct(const VctSpec& spec) {
  check_table(spec.field);
  const std::size_t n = spec.vecs.size();
  const std::size_t k = spec.field.elems.size();
  if (n == 0 || spec.add.size() != n || spec.scale.size() != k || spec.zero >= n)
    fail("NotAStructure", "malformed vector tables for " + spec.name);

  Symbol add = Symbol::atom("add");
  Symbol zero = Symbol::atom("zero");
  StructureSig sig;
  sig.theta = {zero};
  sig.gamma = {{add, 3}};
  std::vector<std::pair<Symbol, std::vector<Token>>> rels;

  std::vector<Token> adds;
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.add[i].size() != n) fail("NotAStructure", "malformed vector tables");
    for (std::size_t j = 0; j < n; ++j)
      adds.push_back(Token{{spec.vecs[i], spec.vecs[j], spec.vecs[spec.add[i][j]]}});
  }
  sort_unique(adds);
  rels.emplace_back(add, std::move(adds));

  // one binary relation per scalar, written sa: (sa, x, ax)
  for (std::size_t a = 0; a < k; ++a) {
    Symbol sa = Symbol::tag("s", spec.field.elems[a]);
    sig.gamma.emplace_back(sa, 2);
    std::vector<Token> acts;
    if (spec.scale[a].size() != n) fail("NotAStructure", "malformed scalar tables");
    for (std::size_t i = 0; i < n; ++i)
      acts.push_back(Token{{spec.vecs[i], spec.vecs[spec.scale[a][i]]}});
    sort_unique(acts);
    rels.emplace_back(std::move(sa), std::move(acts));
  }
  return mk_structured(spec.name, std::move(sig), spec.vecs,
                       {{zero, spec.vecs[spec.zero]}}, std::move(rels));
}

StructuredObject obj_vct_prime(const VctSpec& spec) {
  StructuredObject ring = obj_ring(spec.field);
  StructuredObject vct = obj_vct(spec);

  std::vector<Symbol> carrier = set_union(spec.vecs, spec.field.elems);
  if (carrier.size() != spec.vecs.size() + spec.field.elems.size())
    fail("BadInput", "vector and scalar names overlap in " + spec.name);

  Symbol zeroV = Symbol::atom("zeroV");
  Symbol zeroR = Symbol::atom("zeroR");
  Symbol sortV = Symbol::atom("V");
  Symbol sortR = Symbol::atom("R");
  StructureSig sig;
  sig.theta = {zeroV, zeroR};
  sig.gamma = {{Symbol::atom("add"), 3},  {Symbol::atom("addR"), 3},
               {Symbol::atom("mulR"), 3}, {Symbol::atom("negR"), 2},
               {sortV, 1},                {sortR, 1}};
  for (const auto& a : spec.field.elems) sig.gamma.emplace_back(Symbol::tag("s", a), 2);

  std::vector<std::pair<Symbol, std::vector<Token>>> rels;
  rels.emplace_back(Symbol::atom("add"), *vct.relation(Symbol::atom("add")));
  rels.emplace_back(Symbol::atom("addR"), *ring.relation(Symbol::atom("add")));
  rels.emplace_back(Symbol::atom("mulR"), *ring.relation(Symbol::atom("mul")));
  rels.emplace_back(Symbol::atom("negR"), *ring.relation(Symbol::atom("neg")));
  for (const auto& a : spec.field.elems) {
    Symbol sa = Symbol::tag("s", a);
    rels.emplace_back(sa, *vct.relation(sa));
  }
  std::vector<Token> vs, rs;
  for (const auto& v : spec.vecs) vs.push_back(Token{{v}});
  for (const auto& a : spec.field.elems) rs.push_back(Token{{a}});
  sort_unique(vs);
  sort_unique(rs);
  rels.emplace_back(sortV, std::move(vs));
  rels.emplace_back(sortR, std::move(rs));

  return mk_structured(spec.name + "'", std::move(sig), std::move(carrier),
                       {{zeroV, spec.vecs[spec.zero]},
                        {zeroR, spec.field.elems[spec.field.zero]}},
                       std::move(rels));
}

VctSpec vct_f2_dim1() {
  VctSpec s;
  s.name = "F2^1";
  s.field = ring_z2();
  s.vecs = {Symbol::atom("v0"), Symbol::atom("v1")};
  s.add = {{0, 1}, {1, 0}};
  s.scale = {{0, 0}, {0, 1}};  // 0*x = v0, 1*x = x
  s.zero = 0;
  return s;
}

namespace {

std::vector<Symbol> norm_open(std::vector<Symbol> s) {
  sort_unique(s);
  return s;
}

bool has_open(const std::vector<std::vector<Symbol>>& opens,
              const std::vector<Symbol>& s) {
  return std::find(opens.begin(), opens.end(), s) != opens.end();
}

std::vector<Symbol> preimage_set(const ElemMap& f, const std::vector<Symbol>& dom,
                                 const std::vector<Symbol>& s) {
  std::vector<Symbol> out;
  for (const auto& x : dom) {
    const Symbol* y = f.find(x);
    if (y && contains(s, *y)) out.push_back(x);
  }
  return out;
}

}  // namespace

void check_topology(const TopSpec& spec) {
  std::vector<std::vector<Symbol>> opens;
  for (const auto& o : spec.opens) opens.push_back(norm_open(o));
  std::vector<Symbol> all = spec.points;
  sort_unique(all);
  if (!has_open(opens, {}) || !has_open(opens, all))
    fail("NotATopology", spec.name + " misses the empty or full open");
  for (const auto& a : opens)
    for (const auto& b : opens) {
      if (!has_open(opens, set_union(a, b)))
        fail("NotATopology", spec.name + " is not closed under union");
      if (!has_open(opens, set_intersect(a, b)))
        fail("NotATopology", spec.name + " is not closed under intersection");
    }
}

TokenClass rep_top(const TopSpec& spec) {
  check_topology(spec);
  std::vector<Symbol> pts = spec.points;
  sort_unique(pts);
  TokenClass pow = powering(mk_class(spec.name, pts, {}, HeapExpr::empty()));

  Symbol gO = fresh_marker("gammaO", pow.alpha);
  std::vector<Symbol> core = pow.alpha.core;
  core.push_back(gO);
  std::vector<Token> heap = pow.norm()->plus;
  for (const auto& o : spec.opens)
    heap.push_back(Token{{gO, Symbol::subset(norm_open(o))}});
  sort_unique(heap);
  return mk_class("top(" + spec.name + ")", pow.alpha.base, std::move(core),
                  HeapExpr::finite(std::move(heap)));
}

bool is_continuous(const ElemMap& f, const TopSpec& x, const TopSpec& y) {
  std::vector<Symbol> xpts = x.points;
  sort_unique(xpts);
  std::vector<std::vector<Symbol>> xopens;
  for (const auto& o : x.opens) xopens.push_back(norm_open(o));
  for (const auto& o : y.opens)
    if (!has_open(xopens, preimage_set(f, xpts, norm_open(o)))) return false;
  return true;
}

TokenMap top_reverse(const ElemMap& f, const TopSpec& x, const TopSpec& y) {
  std::vector<Symbol> xpts = x.points;
  sort_unique(xpts);
  for (const auto& p : xpts) {
    const Symbol* img = f.find(p);
    if (!img || !contains(y.points, *img))
      fail("NotTotal", "map must send every point of " + x.name + " into " + y.name);
  }
  std::vector<std::vector<Symbol>> xopens;
  for (const auto& o : x.opens) xopens.push_back(norm_open(o));
  for (const auto& o : y.opens) {
    auto pre = preimage_set(f, xpts, norm_open(o));
    if (!has_open(xopens, pre))
      fail("NotContinuous", "preimage of an open set is not open",
           Token{{Symbol::subset(norm_open(o))}});
  }

  TokenClass rep_y = rep_top(y);
  TokenClass rep_x = rep_top(x);
  Symbol e_x = fresh_marker("e", Alphabet{xpts, {}});
  std::vector<std::pair<Symbol, Symbol>> kv;
  for (const auto& s : rep_y.alpha.base) {
    if (s.kind() == Symbol::Kind::Subset)
      kv.emplace_back(s, Symbol::subset(preimage_set(f, xpts, s.members())));
    else
      kv.emplace_back(s, e_x);
  }
  return mk_map(std::move(rep_y), std::move(rep_x), ElemMap::from(std::move(kv)));
}

}  // namespace tokspace
