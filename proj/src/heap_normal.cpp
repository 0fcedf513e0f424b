#include <algorithm>

#include "tokspace/heap.hpp"

namespace tokspace {

namespace {

bool over(const Token& t, const std::vector<Symbol>& sigma) {
  for (const auto& s : t.elems)
    if (!contains(sigma, s)) return false;
  return true;
}

// Append a block, folding away degenerate shapes (empty sigma means the
// full part is just {eps}).
void add_block(NormalHeap& n, std::vector<Symbol> sigma, std::vector<Token> minus) {
  sort_unique(sigma);
  sort_unique(minus);
  std::vector<Token> kept;
  for (auto& t : minus)
    if (over(t, sigma)) kept.push_back(std::move(t));
  if (sigma.empty()) {
    Token eps;
    if (!contains(kept, eps)) n.plus.push_back(eps);
    return;
  }
  n.blocks.push_back({std::move(sigma), std::move(kept)});
}

void tidy(NormalHeap& n) {
  sort_unique(n.plus);
  // Drop plus tokens already covered by a block, and identical blocks.
  std::vector<Token> plus;
  for (auto& t : n.plus) {
    bool covered = false;
    for (const auto& b : n.blocks)
      if (over(t, b.sigma) && !contains(b.minus, t)) {
        covered = true;
        break;
      }
    if (!covered) plus.push_back(std::move(t));
  }
  n.plus = std::move(plus);
  std::sort(n.blocks.begin(), n.blocks.end(), [](const auto& a, const auto& b) {
    if (a.sigma != b.sigma) return a.sigma < b.sigma;
    return a.minus < b.minus;
  });
  n.blocks.erase(std::unique(n.blocks.begin(), n.blocks.end(),
                             [](const auto& a, const auto& b) {
                               return a.sigma == b.sigma && a.minus == b.minus;
                             }),
                 n.blocks.end());
}

std::optional<NormalHeap> norm_union(NormalHeap a, NormalHeap b) {
  NormalHeap n;
  n.plus = set_union(a.plus, b.plus);
  n.blocks = std::move(a.blocks);
  for (auto& blk : b.blocks) n.blocks.push_back(std::move(blk));
  tidy(n);
  return n;
}

std::optional<NormalHeap> norm_intersect(const NormalHeap& a, const NormalHeap& b) {
  NormalHeap n;
  for (const auto& t : a.plus)
    if (b.member(t)) n.plus.push_back(t);
  for (const auto& t : b.plus)
    if (a.member(t)) n.plus.push_back(t);
  for (const auto& ba : a.blocks)
    for (const auto& bb : b.blocks) {
      auto sigma = set_intersect(ba.sigma, bb.sigma);
      add_block(n, sigma, set_union(ba.minus, bb.minus));
    }
  tidy(n);
  return n;
}

std::optional<NormalHeap> norm_difference(const NormalHeap& a, const NormalHeap& b) {
  NormalHeap n;
  for (const auto& t : a.plus)
    if (!b.member(t)) n.plus.push_back(t);
  for (const auto& ba : a.blocks) {
    // Subtract each block of b in turn; start from Full(sigma) - minus.
    // Only two shapes stay representable: the subtracted block covers the
    // whole alphabet (finitely many survivors), or overlaps it in nothing
    // but possibly eps.
    std::vector<std::vector<Symbol>> covering;  // b-block sigmas with ba.sigma subset
    std::vector<Token> extra_minus;             // tokens knocked out individually
    bool finite_result = false;
    std::vector<const NormalHeap::Block*> finite_vs;
    for (const auto& bb : b.blocks) {
      auto overlap = set_intersect(ba.sigma, bb.sigma);
      if (overlap.size() == ba.sigma.size()) {
        finite_result = true;  // survivors live inside bb.minus
        finite_vs.push_back(&bb);
      } else if (overlap.empty()) {
        Token eps;
        if (!contains(bb.minus, eps)) extra_minus.push_back(eps);
      } else {
        return std::nullopt;  // infinite, non-cofinite remainder
      }
    }
    if (finite_result) {
      // Survivors of Full(sigma)-minus must lie in every covering block's
      // minus list; intersect those lists, then re-check full membership.
      std::vector<Token> cand = finite_vs[0]->minus;
      for (std::size_t i = 1; i < finite_vs.size(); ++i)
        cand = set_intersect(cand, finite_vs[i]->minus);
      for (const auto& t : cand)
        if (over(t, ba.sigma) && !contains(ba.minus, t) && !b.member(t))
          n.plus.push_back(t);
    } else {
      auto minus = ba.minus;
      for (const auto& t : b.plus)
        if (over(t, ba.sigma)) minus.push_back(t);
      minus.insert(minus.end(), extra_minus.begin(), extra_minus.end());
      add_block(n, ba.sigma, std::move(minus));
    }
  }
  tidy(n);
  return n;
}

std::optional<NormalHeap> norm_preimage(const ElemMap& m, const NormalHeap& of) {
  NormalHeap n;
  for (const auto& t : of.plus) {
    auto pre = m.preimage(t);
    n.plus.insert(n.plus.end(), pre.begin(), pre.end());
  }
  for (const auto& b : of.blocks) {
    std::vector<Symbol> sigma;
    for (const auto& e : m.entries)
      if (contains(b.sigma, e.second)) sigma.push_back(e.first);
    std::vector<Token> minus;
    for (const auto& t : b.minus) {
      auto pre = m.preimage(t);
      minus.insert(minus.end(), pre.begin(), pre.end());
    }
    add_block(n, std::move(sigma), std::move(minus));
  }
  tidy(n);
  return n;
}

std::optional<NormalHeap> norm_image(const ElemMap& m, const NormalHeap& of) {
  NormalHeap n;
  for (const auto& t : of.plus) {
    auto img = m.apply(t);
    if (!img) return std::nullopt;  // map does not cover the heap's symbols
    n.plus.push_back(std::move(*img));
  }
  for (const auto& b : of.blocks) {
    std::vector<Symbol> sigma;
    sigma.reserve(b.sigma.size());
    for (const auto& s : b.sigma) {
      const Symbol* v = m.find(s);
      if (!v) return std::nullopt;
      sigma.push_back(*v);
    }
    std::vector<Token> minus;
    for (const auto& t : b.minus) {
      auto img = m.apply(t);
      if (!img) return std::nullopt;
      minus.push_back(std::move(*img));
    }
    add_block(n, std::move(sigma), std::move(minus));
  }
  tidy(n);
  return n;
}

}  // namespace

NormalHeap NormalHeap::finite(std::vector<Token> tokens) {
  NormalHeap n;
  n.plus = std::move(tokens);
  sort_unique(n.plus);
  return n;
}

NormalHeap NormalHeap::full(std::vector<Symbol> sigma) {
  return cofin(std::move(sigma), {});
}

NormalHeap NormalHeap::cofin(std::vector<Symbol> sigma, std::vector<Token> excluded) {
  NormalHeap n;
  add_block(n, std::move(sigma), std::move(excluded));
  tidy(n);
  return n;
}

bool NormalHeap::member(const Token& t) const {
  if (contains(plus, t)) return true;
  for (const auto& b : blocks)
    if (over(t, b.sigma) && !contains(b.minus, t)) return true;
  return false;
}

std::optional<NormalHeap> normalize(const HeapExpr& e) {
  switch (e.kind()) {
    case HeapExpr::Kind::Finite:
      return NormalHeap::finite(e.tokens());
    case HeapExpr::Kind::Full:
      return NormalHeap::full(e.alphabet());
    case HeapExpr::Kind::Union: {
      auto l = normalize(e.lhs());
      auto r = normalize(e.rhs());
      if (!l || !r) return std::nullopt;
      return norm_union(std::move(*l), std::move(*r));
    }
    case HeapExpr::Kind::Intersect: {
      auto l = normalize(e.lhs());
      auto r = normalize(e.rhs());
      if (!l || !r) return std::nullopt;
      return norm_intersect(*l, *r);
    }
    case HeapExpr::Kind::Difference: {
      auto l = normalize(e.lhs());
      auto r = normalize(e.rhs());
      if (!l || !r) return std::nullopt;
      return norm_difference(*l, *r);
    }
    case HeapExpr::Kind::Preimage: {
      auto l = normalize(e.lhs());
      if (!l) return std::nullopt;
      return norm_preimage(e.map(), *l);
    }
    case HeapExpr::Kind::ImageBij: {
      auto l = normalize(e.lhs());
      if (!l) return std::nullopt;
      return norm_image(e.map(), *l);
    }
  }
  return std::nullopt;
}

HeapExpr to_expr(const NormalHeap& n) {
  HeapExpr e = HeapExpr::finite(n.plus);
  bool first = n.plus.empty();
  for (const auto& b : n.blocks) {
    HeapExpr blk = HeapExpr::full(b.sigma);
    if (!b.minus.empty())
      blk = HeapExpr::difference(std::move(blk), HeapExpr::finite(b.minus));
    e = first ? std::move(blk) : HeapExpr::union_(std::move(e), std::move(blk));
    first = false;
  }
  return e;
}

Verdict heap_subset(const NormalHeap& a, const NormalHeap& b) {
  for (const auto& t : a.plus)
    if (!b.member(t)) return Verdict::fails(t, "token in left heap only");
  for (const auto& ba : a.blocks) {
    bool covered = false;
    std::vector<Token> candidates;
    for (const auto& bb : b.blocks)
      if (is_subset(ba.sigma, bb.sigma)) {
        covered = true;
        for (const auto& t : bb.minus)
          if (over(t, ba.sigma) && !contains(ba.minus, t)) candidates.push_back(t);
      }
    if (!covered) {
      // The block has infinitely many members and b covers only finitely
      // many of them; pump a witness past every finite list.
      Token probe;
      for (std::size_t reps = 1;; ++reps) {
        probe.elems.clear();
        for (std::size_t i = 0; i < reps; ++i)
          probe.elems.insert(probe.elems.end(), ba.sigma.begin(), ba.sigma.end());
        if (!contains(ba.minus, probe) && !b.member(probe))
          return Verdict::fails(probe, "left heap is not finitely coverable here");
      }
    }
    for (const auto& t : candidates)
      if (!b.member(t)) return Verdict::fails(t, "token in left heap only");
  }
  return Verdict::holds();
}

bool heap_equal(const NormalHeap& a, const NormalHeap& b) {
  return heap_subset(a, b).holds_p() && heap_subset(b, a).holds_p();
}

Verdict heap_subset(const HeapExpr& a, const HeapExpr& b,
                    const std::vector<Symbol>& alphabet, std::size_t bound) {
  auto na = normalize(a);
  auto nb = normalize(b);
  if (na && nb) return heap_subset(*na, *nb);
  if (na && na->is_finite()) {
    for (const auto& t : na->plus)
      if (!b.member(t)) return Verdict::fails(t, "token in left heap only");
    return Verdict::holds();
  }
  for (const auto& t : all_tokens(alphabet, bound))
    if (a.member(t) && !b.member(t))
      return Verdict::fails(t, "token in left heap only");
  return Verdict::undecided(bound, "no counterexample up to the length bound");
}

std::vector<Token> all_tokens(const std::vector<Symbol>& alphabet, std::size_t max_len) {
  std::vector<Token> out;
  out.emplace_back();
  std::size_t lo = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t hi = out.size();
    for (std::size_t i = lo; i < hi; ++i)
      for (const auto& s : alphabet) {
        Token t = out[i];
        t.elems.push_back(s);
        out.push_back(std::move(t));
      }
    lo = hi;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Token> enumerate_members(const NormalHeap& n, std::size_t max_len) {
  std::vector<Token> out;
  for (const auto& t : n.plus)
    if (t.size() <= max_len) out.push_back(t);
  for (const auto& b : n.blocks)
    for (const auto& t : all_tokens(b.sigma, max_len))
      if (!contains(b.minus, t)) out.push_back(t);
  sort_unique(out);
  return out;
}

std::optional<Token> find_member_not_in(const NormalHeap& n,
                                        const std::vector<Token>& avoid) {
  for (const auto& t : n.plus)
    if (!contains(avoid, t)) return t;
  for (const auto& b : n.blocks) {
    std::size_t len = 0;
    while (true) {
      for (const auto& t : all_tokens(b.sigma, len))
        if (t.size() == len && !contains(b.minus, t) && !contains(avoid, t)) return t;
      ++len;
      if (len > b.minus.size() + avoid.size() + 2) break;  // unreachable in practice
    }
  }
  return std::nullopt;
}

}  // namespace tokspace
