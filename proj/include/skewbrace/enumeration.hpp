#ifndef SKEWBRACE_ENUMERATION_HPP_
#define SKEWBRACE_ENUMERATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "brace.hpp"
#include "group.hpp"
#include "limits.hpp"

namespace skewbrace {

  // All skew braces with additive group G, found as the maps
  // lambda: G -> Aut(G) with lambda_0 = id and
  //
  //   lambda_{a + lambda_a(b)} = lambda_a lambda_b,
  //
  // each turned into a o b = a + lambda_a(b) and validated as a brace.
  // Branching follows `branch_order` (a permutation of the elements) when
  // given, otherwise a generating set of G first. Sorted by the o table; no
  // isomorphism reduction. Throws bound_exceeded when
  // |G| > limits.enumeration_order.
  std::vector<SkewBrace> enumerate_on_additive(FiniteGroup const&                G,
                                               Limits const&                     limits = {},
                                               std::optional<std::vector<int>> branch_order = {});

  struct IsoCertificate {
    bool                            isomorphic = false;
    // B1 index -> B2 index, preserving both tables
    std::optional<std::vector<int>> bijection;
    // name of the first invariant that differed
    std::string                     refutation;
  };

  IsoCertificate are_isomorphic(SkewBrace const& B1, SkewBrace const& B2);

  struct TypeCount {
    std::size_t add_index = 0;  // catalog indices
    std::size_t mul_index = 0;
    std::string add_name;
    std::string mul_name;
    std::size_t classes = 0;  // isomorphism classes
    std::size_t braces  = 0;  // braces before reduction
  };

  struct Enumeration {
    std::size_t            order = 0;
    // one per isomorphism class: the least (add, mul) table pair found
    std::vector<SkewBrace> representatives;
    // classes per (additive, multiplicative) catalog type, sorted
    std::vector<TypeCount> counts;
    std::size_t            total_braces = 0;
  };

  // Throws out_of_catalog for orders outside the group catalog.
  Enumeration enumerate_all(std::size_t order, Limits const& limits = {});

  // Restrict to one additive catalog group.
  Enumeration enumerate_catalog_group(std::size_t order,
                                      std::size_t add_index,
                                      Limits const& limits = {});

}  // namespace skewbrace

#endif  // SKEWBRACE_ENUMERATION_HPP_
