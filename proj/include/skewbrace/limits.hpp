#ifndef SKEWBRACE_LIMITS_HPP_
#define SKEWBRACE_LIMITS_HPP_

#include <cstddef>

namespace skewbrace {

  // Size bounds for the exhaustive routines.
  struct Limits {
    // automorphisms, sub-skew brace lattices, isomorphism search
    std::size_t structure_order = 64;
    // groups built on pairs, e.g. the lambda semidirect product (n^2)
    std::size_t product_order = 4096;
    // enumeration of skew braces on a fixed additive group
    std::size_t enumeration_order = 15;

    // Defaults, with enumeration_order (and structure_order when larger)
    // taken from BRACE_MAX_ORDER when set.
    static Limits from_env();
  };

}  // namespace skewbrace

#endif  // SKEWBRACE_LIMITS_HPP_
