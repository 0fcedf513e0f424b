#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tokspace/structure.hpp"

namespace tokspace {

/// Finite battery of test objects sharing a core. Used as the quantifier
/// domain when checking universal properties.
struct TestFamily {
  std::vector<TokenClass> classes;
  std::size_t max_base = 2;
  std::size_t max_token_len = 2;
  std::size_t max_heap = 8;
};

// Deterministic default battery: classes over the bases {b1} and {b1,b2}
// with finite heaps drawn from tokens of length <= 2 in canonical order.
TestFamily default_family(std::vector<Symbol> core = {},
                          std::size_t max_classes = 10);

// Mediating-map existence and uniqueness against every (co)cone the
// family can form. Fails carry the offending test class in the detail.
Verdict verify_product(const TokenClass& t1, const TokenClass& t2,
                       const ProductResult& cand, const TestFamily& fam);
Verdict verify_coproduct(const TokenClass& t1, const TokenClass& t2,
                         const CoproductResult& cand, const TestFamily& fam);
Verdict verify_terminal(const TokenClass& cand, const TestFamily& fam);
Verdict verify_initial(const TokenClass& cand, const TestFamily& fam);
Verdict verify_limit(const Diagram& d, const LimitResult& cand,
                     const TestFamily& fam);
// Checks that every map s (x) t2 -> t1 has curry(f) as its unique mediator
// through the evaluation map.
Verdict verify_exponent(const ExponentResult& cand, const TestFamily& fam);

// An invertible map t1 -> t2 (heap containment both ways), if one exists.
std::optional<TokenMap> iso_witness(const TokenClass& t1, const TokenClass& t2,
                                    std::size_t bound = 6);

}  // namespace tokspace
