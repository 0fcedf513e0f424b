#include "tokspace/tree.hpp"

#include <algorithm>
#include <map>

namespace tokspace {

std::size_t term_length(const TreeTerm& t) {
  switch (t.kind()) {
    case TreeTerm::Kind::Eps:
      return 0;
    case TreeTerm::Kind::Leaf:
      return 1;
    case TreeTerm::Kind::Concat: {
      std::size_t n = 0;
      for (const auto& p : t.parts()) n += term_length(p);
      return n;
    }
    case TreeTerm::Kind::Amp:
      return std::max<std::size_t>(term_length(t.child()), 1);
  }
  return 0;
}

std::size_t term_depth(const TreeTerm& t) {
  switch (t.kind()) {
    case TreeTerm::Kind::Eps:
      return 0;
    case TreeTerm::Kind::Leaf:
      return 1;
    case TreeTerm::Kind::Concat: {
      std::size_t n = 0;
      for (const auto& p : t.parts()) n = std::max(n, term_depth(p));
      return n;
    }
    case TreeTerm::Kind::Amp:
      return term_depth(t.child()) + 1;
  }
  return 0;
}

std::size_t term_ary(const TreeTerm& t) {
  switch (t.kind()) {
    case TreeTerm::Kind::Eps:
      return 0;
    case TreeTerm::Kind::Leaf:
      return 1;
    case TreeTerm::Kind::Concat: {
      std::size_t n = 0;
      for (const auto& p : t.parts()) n += term_ary(p);
      return n;
    }
    case TreeTerm::Kind::Amp:
      return 1;
  }
  return 0;
}

std::size_t term_tary(const TreeTerm& t) {
  if (t.kind() == TreeTerm::Kind::Leaf) return 0;
  if (t.kind() == TreeTerm::Kind::Amp) return term_ary(t.child());
  fail("TaryOnNonToken", "tuple arity is defined on leaves and tuples only");
}

bool is_token_term(const TreeTerm& t) {
  switch (t.kind()) {
    case TreeTerm::Kind::Eps:
    case TreeTerm::Kind::Leaf:
      return true;
    case TreeTerm::Kind::Concat:
      return false;
    case TreeTerm::Kind::Amp:
      for (const auto& f : t.child().factors())
        if (!is_token_term(f)) return false;
      return true;
  }
  return false;
}

TreeTerm connect(const TreeTerm& r1, const TreeTerm& r2) {
  if (r1.kind() != TreeTerm::Kind::Amp || r2.kind() != TreeTerm::Kind::Amp)
    fail("NotAToken", "connection splices tuples");
  return TreeTerm::amp(TreeTerm::concat({r1.child(), r2.child()}));
}

TreeTerm flatten(const TreeTerm& r) {
  switch (r.kind()) {
    case TreeTerm::Kind::Eps:
      return TreeTerm::amp(TreeTerm::eps());
    case TreeTerm::Kind::Leaf:
      return TreeTerm::amp(r);
    case TreeTerm::Kind::Concat:
      fail("NotAToken", "flattening is defined on tree tokens");
    case TreeTerm::Kind::Amp: {
      auto fs = r.child().factors();
      bool all_leaves = true;
      for (const auto& f : fs)
        if (f.kind() != TreeTerm::Kind::Leaf) all_leaves = false;
      if (all_leaves && !fs.empty()) return r;  // already flat
      TreeTerm acc = TreeTerm::amp(TreeTerm::eps());
      for (const auto& f : fs) acc = connect(acc, flatten(f));
      return acc;
    }
  }
  return r;
}

LeafMap LeafMap::from(std::vector<std::pair<Symbol, TreeTerm>> kv) {
  std::sort(kv.begin(), kv.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < kv.size(); ++i) {
    if (i && kv[i].first == kv[i - 1].first && !(kv[i].second == kv[i - 1].second))
      fail("BadInput", "leaf map has conflicting entries for " + kv[i].first.str());
    if (!is_token_term(kv[i].second))
      fail("NotAToken", "leaf image " + kv[i].second.str() + " is not a tree token");
  }
  kv.erase(std::unique(kv.begin(), kv.end(),
                       [](const auto& a, const auto& b) { return a.first == b.first; }),
           kv.end());
  LeafMap m;
  m.entries = std::move(kv);
  return m;
}

const TreeTerm* LeafMap::find(const Symbol& s) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), s,
                             [](const auto& e, const Symbol& k) { return e.first < k; });
  if (it != entries.end() && it->first == s) return &it->second;
  return nullptr;
}

TreeTerm tmorph_apply(const LeafMap& f, const TreeTerm& t) {
  switch (t.kind()) {
    case TreeTerm::Kind::Eps:
      return t;
    case TreeTerm::Kind::Leaf: {
      const TreeTerm* img = f.find(t.symbol());
      return img ? *img : t;
    }
    case TreeTerm::Kind::Concat: {
      std::vector<TreeTerm> parts;
      parts.reserve(t.parts().size());
      for (const auto& p : t.parts()) parts.push_back(tmorph_apply(f, p));
      return TreeTerm::concat(std::move(parts));
    }
    case TreeTerm::Kind::Amp:
      return TreeTerm::amp(tmorph_apply(f, t.child()));
  }
  return t;
}

Symbol index_symbol(std::size_t i) { return Symbol::atom(std::to_string(i)); }

TreeTerm index_token(std::size_t n) {
  if (n == 0) return TreeTerm::eps();  // 1:0 is the unit
  std::vector<TreeTerm> leaves;
  leaves.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) leaves.push_back(TreeTerm::leaf(index_symbol(i)));
  return TreeTerm::amp(TreeTerm::concat(std::move(leaves)));
}

static bool leafless(const TreeTerm& t) { return term_base(t).empty(); }

static TreeTerm universal_rec(const TreeTerm& t, std::size_t& next) {
  switch (t.kind()) {
    case TreeTerm::Kind::Eps:
      return t;
    case TreeTerm::Kind::Leaf:
      return TreeTerm::leaf(index_symbol(next++));
    case TreeTerm::Kind::Concat: {
      std::vector<TreeTerm> parts;
      for (const auto& p : t.parts()) parts.push_back(universal_rec(p, next));
      return TreeTerm::concat(std::move(parts));
    }
    case TreeTerm::Kind::Amp:
      // A tuple holding no leaves still counts toward the length; give it
      // an index of its own so flattening keeps every position.
      if (leafless(t) && term_length(t) == 1)
        return TreeTerm::leaf(index_symbol(next++));
      return TreeTerm::amp(universal_rec(t.child(), next));
  }
  return t;
}

TreeTerm universal_of(const TreeTerm& r) {
  if (!is_token_term(r)) fail("NotAToken", "universal form is defined on tree tokens");
  std::size_t next = 1;
  if (r.kind() == TreeTerm::Kind::Amp && leafless(r) && term_length(r) == 1)
    return index_token(1);
  return universal_rec(r, next);
}

bool is_universal(const TreeTerm& u) {
  if (u.kind() == TreeTerm::Kind::Eps) return true;  // 1:0
  if (!is_token_term(u) || u.kind() != TreeTerm::Kind::Amp) return false;
  return flatten(u) == index_token(term_length(u));
}

namespace {

using Assignment = std::map<Symbol, TreeTerm>;

bool unify(const TreeTerm& src, const TreeTerm& dst, Assignment& m);

bool match_lists(const std::vector<TreeTerm>& src, std::size_t si,
                 const std::vector<TreeTerm>& dst, std::size_t di, Assignment& m) {
  if (si == src.size()) return di == dst.size();
  const TreeTerm& s0 = src[si];
  // Align with the next factor of dst.
  if (di < dst.size()) {
    Assignment trial = m;
    if (unify(s0, dst[di], trial) && match_lists(src, si + 1, dst, di + 1, trial)) {
      m = trial;
      return true;
    }
  }
  // Leaves cannot vanish or split, which is what keeps corr unique.
  return false;
}

bool unify(const TreeTerm& src, const TreeTerm& dst, Assignment& m) {
  switch (src.kind()) {
    case TreeTerm::Kind::Eps:
      return dst.kind() == TreeTerm::Kind::Eps;
    case TreeTerm::Kind::Leaf: {
      if (!is_token_term(dst) || term_ary(dst) > 1) return false;
      auto it = m.find(src.symbol());
      if (it != m.end()) return it->second == dst;
      m.emplace(src.symbol(), dst);
      return true;
    }
    case TreeTerm::Kind::Concat:
      return false;  // not a token
    case TreeTerm::Kind::Amp: {
      if (dst.kind() != TreeTerm::Kind::Amp) return false;
      auto fs = src.child().factors();
      auto fd = dst.child().factors();
      return match_lists(fs, 0, fd, 0, m);
    }
  }
  return false;
}

}  // namespace

std::optional<LeafMap> corr(const TreeTerm& src, const TreeTerm& dst) {
  if (!is_token_term(src) || !is_token_term(dst)) return std::nullopt;
  Assignment m;
  if (!unify(src, dst, m)) return std::nullopt;
  std::vector<std::pair<Symbol, TreeTerm>> kv(m.begin(), m.end());
  return LeafMap::from(std::move(kv));
}

std::vector<TreeTerm> scatter_by(const LeafMap& g) {
  std::vector<TreeTerm> out;
  out.reserve(g.entries.size());
  for (const auto& e : g.entries) out.push_back(e.second);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<TreeTerm> scatter_flat(const TreeTerm& r) {
  auto flat = flatten(r);
  auto fs = flat.child().factors();
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

static void star_rec(const TreeTerm& t, std::vector<TreeTerm>& out) {
  out.push_back(t);
  if (t.kind() == TreeTerm::Kind::Amp)
    for (const auto& f : t.child().factors()) star_rec(f, out);
}

std::vector<TreeTerm> scatter_star(const TreeTerm& r) {
  std::vector<TreeTerm> out;
  star_rec(r, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Symbol> term_base(const TreeTerm& r) {
  std::vector<Symbol> out;
  switch (r.kind()) {
    case TreeTerm::Kind::Eps:
      break;
    case TreeTerm::Kind::Leaf:
      out.push_back(r.symbol());
      break;
    case TreeTerm::Kind::Concat:
      for (const auto& p : r.parts()) {
        auto sub = term_base(p);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      break;
    case TreeTerm::Kind::Amp:
      out = term_base(r.child());
      break;
  }
  sort_unique(out);
  return out;
}

namespace {

// Leafless tokens (pure padding) with bounded depth and length.
void gen_fillers(std::size_t depth, std::size_t max_len, std::vector<TreeTerm>& out);

// Tokens whose flattening lists exactly seq[lo..hi), with depth and
// extra-length budgets.
std::vector<TreeTerm> gen_tokens(const std::vector<TreeTerm>& seq, std::size_t lo,
                                 std::size_t hi, std::size_t depth,
                                 std::size_t extra);

void gen_fillers(std::size_t depth, std::size_t max_len, std::vector<TreeTerm>& out) {
  if (depth < 1 || max_len < 1) return;
  for (const auto& t : gen_tokens({}, 0, 0, depth, max_len)) out.push_back(t);
}

// Element sequences: walk the leaf segment left to right, at each step
// emitting a leaf, a nested token over a nonempty prefix, or a filler.
void gen_seqs(const std::vector<TreeTerm>& seq, std::size_t lo, std::size_t hi,
              std::size_t depth, std::size_t extra, std::vector<TreeTerm>& cur,
              std::vector<TreeTerm>& out) {
  if (lo == hi) {
    out.push_back(TreeTerm::amp(TreeTerm::concat(cur)));
    // May still append trailing fillers.
    if (extra >= 1 && depth >= 2) {
      std::vector<TreeTerm> fillers;
      gen_fillers(depth - 1, extra, fillers);
      for (const auto& f : fillers) {
        std::size_t cost = term_length(f);
        if (cost > extra) continue;
        cur.push_back(f);
        gen_seqs(seq, lo, hi, depth, extra - cost, cur, out);
        cur.pop_back();
      }
    }
    return;
  }
  // Leaf element.
  if (depth >= 2) {
    cur.push_back(seq[lo]);
    gen_seqs(seq, lo + 1, hi, depth, extra, cur, out);
    cur.pop_back();
  }
  // Nested token over seq[lo..mid).
  if (depth >= 3) {
    for (std::size_t mid = lo + 1; mid <= hi; ++mid)
      for (std::size_t e = 0; e <= extra; ++e)
        for (const auto& u : gen_tokens(seq, lo, mid, depth - 1, e)) {
          std::size_t cost = term_length(u) - (mid - lo);
          if (cost > extra) continue;
          cur.push_back(u);
          gen_seqs(seq, mid, hi, depth, extra - cost, cur, out);
          cur.pop_back();
        }
  }
  // Filler element.
  if (extra >= 1 && depth >= 2) {
    std::vector<TreeTerm> fillers;
    gen_fillers(depth - 1, extra, fillers);
    for (const auto& f : fillers) {
      std::size_t cost = term_length(f);
      if (cost > extra) continue;
      cur.push_back(f);
      gen_seqs(seq, lo, hi, depth, extra - cost, cur, out);
      cur.pop_back();
    }
  }
}

std::vector<TreeTerm> gen_tokens(const std::vector<TreeTerm>& seq, std::size_t lo,
                                 std::size_t hi, std::size_t depth,
                                 std::size_t extra) {
  std::vector<TreeTerm> out;
  if (depth < 1) return out;
  if (lo == hi && depth >= 1) out.push_back(TreeTerm::amp(TreeTerm::eps()));
  std::vector<TreeTerm> cur;
  gen_seqs(seq, lo, hi, depth, extra, cur, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<TreeTerm> flatten_class(const TreeTerm& r, std::size_t max_depth) {
  TreeTerm target = flatten(r);
  auto seq = target.child().factors();
  // Padding budget: two spare leaf positions beyond the flat form.
  std::vector<TreeTerm> out = gen_tokens(seq, 0, seq.size(), max_depth, 2);
  std::vector<TreeTerm> kept;
  for (auto& t : out)
    if (term_depth(t) <= max_depth && flatten(t) == target) kept.push_back(std::move(t));
  if (seq.size() == 1 && max_depth >= 1 &&
      seq[0].kind() == TreeTerm::Kind::Leaf)
    kept.push_back(seq[0]);  // the bare leaf flattens to the same token
  if (term_depth(r) <= max_depth)
    kept.push_back(r);  // r itself, even past the padding budget
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return kept;
}

TreeClass mk_tclass(std::string name, std::vector<Symbol> base,
                    std::vector<Symbol> core, std::vector<TreeTerm> heap) {
  sort_unique(base);
  sort_unique(core);
  auto overlap = set_intersect(base, core);
  if (!overlap.empty())
    fail("AlphabetOverlap",
         "base and core share symbol " + overlap.front().str() + " in " + name);
  auto universe = set_union(base, core);
  for (const auto& t : heap) {
    if (!is_token_term(t))
      fail("NotAToken", "heap entry " + t.str() + " is not a tree token");
    for (const auto& s : term_base(t))
      if (!contains(universe, s))
        fail("ForeignSymbol", "heap entry uses " + s.str() + " outside the alphabet");
  }
  std::sort(heap.begin(), heap.end());
  heap.erase(std::unique(heap.begin(), heap.end()), heap.end());
  TreeClass cls;
  cls.name = std::move(name);
  cls.alpha.base = std::move(base);
  cls.alpha.core = std::move(core);
  cls.heap = std::move(heap);
  return cls;
}

std::vector<Symbol> base_of(const std::vector<TreeTerm>& heap) {
  std::vector<Symbol> out;
  for (const auto& t : heap) {
    auto b = term_base(t);
    out.insert(out.end(), b.begin(), b.end());
  }
  sort_unique(out);
  return out;
}

TreeMap mk_tmap(TreeClass src, TreeClass dst, LeafMap f0) {
  if (src.alpha.core != dst.alpha.core)
    fail("CoreMismatch", "tree maps keep the core fixed");
  auto universe = dst.alpha.universe();
  for (const auto& b : src.alpha.base) {
    const TreeTerm* img = f0.find(b);
    if (!img) fail("NotTotal", "no image for " + b.str());
    if (img->kind() == TreeTerm::Kind::Leaf && dst.alpha.in_core(img->symbol()))
      fail("BadInput", "leaf image may not be a bare core symbol");
    for (const auto& s : term_base(*img))
      if (!contains(universe, s))
        fail("ForeignSymbol", "leaf image uses " + s.str() + " outside the target");
  }
  for (const auto& e : f0.entries)
    if (!contains(src.alpha.base, e.first))
      fail("ForeignSymbol", e.first.str() + " is not in the source base");
  for (const auto& t : src.heap) {
    TreeTerm img = tmorph_apply(f0, t);
    if (!std::binary_search(dst.heap.begin(), dst.heap.end(), img))
      fail("HeapViolation", "image " + img.str() + " of " + t.str() +
                                " is outside the target heap");
  }
  return TreeMap{std::move(src), std::move(dst), std::move(f0)};
}

TreeTerm apply_tmap(const TreeMap& f, const TreeTerm& t) {
  return tmorph_apply(f.f0, t);
}

TreeClass tclass_coproduct(const TreeClass& t1, const TreeClass& t2, TreeMap* out_in1,
                           TreeMap* out_in2) {
  if (t1.alpha.core != t2.alpha.core)
    fail("CoreMismatch", "coproduct needs a shared core");
  std::vector<Symbol> base;
  std::vector<std::pair<Symbol, TreeTerm>> k1, k2;
  for (const auto& x : t1.alpha.base) {
    Symbol s = Symbol::tag("L", x);
    k1.emplace_back(x, TreeTerm::leaf(s));
    base.push_back(std::move(s));
  }
  for (const auto& y : t2.alpha.base) {
    Symbol s = Symbol::tag("R", y);
    k2.emplace_back(y, TreeTerm::leaf(s));
    base.push_back(std::move(s));
  }
  LeafMap m1 = LeafMap::from(std::move(k1));
  LeafMap m2 = LeafMap::from(std::move(k2));
  std::vector<TreeTerm> heap;
  for (const auto& t : t1.heap) heap.push_back(tmorph_apply(m1, t));
  for (const auto& t : t2.heap) heap.push_back(tmorph_apply(m2, t));
  TreeClass cls = mk_tclass("(" + t1.name + "+" + t2.name + ")", base,
                            t1.alpha.core, std::move(heap));
  if (out_in1) *out_in1 = mk_tmap(t1, cls, m1);
  if (out_in2) *out_in2 = mk_tmap(t2, cls, m2);
  return cls;
}

TreeClass tclass_setop(TSetOp op, const TreeClass& t1, const TreeClass& t2) {
  if (!(t1.alpha == t2.alpha))
    fail("CoreMismatch", "set operations need identical alphabets");
  std::vector<TreeTerm> heap;
  switch (op) {
    case TSetOp::Merge:
      std::set_union(t1.heap.begin(), t1.heap.end(), t2.heap.begin(), t2.heap.end(),
                     std::back_inserter(heap));
      break;
    case TSetOp::Meet:
      std::set_intersection(t1.heap.begin(), t1.heap.end(), t2.heap.begin(),
                            t2.heap.end(), std::back_inserter(heap));
      break;
    case TSetOp::Delete:
      std::set_difference(t1.heap.begin(), t1.heap.end(), t2.heap.begin(),
                          t2.heap.end(), std::back_inserter(heap));
      break;
  }
  TreeClass cls = t1;
  cls.heap = std::move(heap);
  return cls;
}

TreeClass tclass_forget(const TreeClass& t) {
  TreeClass cls = t;
  cls.heap.clear();
  return cls;
}

}  // namespace tokspace
