#ifndef SKEWBRACE_CONSTRUCTIONS_HPP_
#define SKEWBRACE_CONSTRUCTIONS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "brace.hpp"
#include "group.hpp"
#include "limits.hpp"

namespace skewbrace {

  enum class Family { two_power, odd_p_cyclic, odd_p_nonabelian, trivial, almost_trivial };

  std::string           to_string(Family f);
  std::optional<Family> parse_family(std::string const& tag);

  struct FamilyParams {
    Family                     family = Family::trivial;
    int                        p      = 2;
    int                        n      = 1;
    std::optional<FiniteGroup> base;  // trivial / almost_trivial only
  };

  // Z_{2^n} with a o b = a + (-1)^a b; n >= 2.
  SkewBrace two_power_brace(int n, Limits const& limits = {});

  // Z_{p^n} with a o b = a + b + p a b, so lambda_a is multiplication by
  // 1 + p a and the powers of 1 are ((1 + p)^l - 1) / p; p odd prime.
  // Bi-skew only for n <= 2.
  SkewBrace odd_p_cyclic_brace(int p, int n, Limits const& limits = {});

  // Order p^{n+1}: (B,+) = <y> x| <x> with -y + x + y = (1 + p^{n-1}) x,
  // lambda_{jy+ix} = (conjugation by x)^j, a o b = a + lambda_a(b).
  // The element j y + i x sits at index j p^n + i. p odd prime, n >= 2.
  SkewBrace odd_p_nonabelian_brace(int p, int n, Limits const& limits = {});

  SkewBrace trivial_brace(FiniteGroup const& G);
  SkewBrace almost_trivial_brace(FiniteGroup const& G);

  // Dispatch on params; throws bad_params.
  SkewBrace construct(FamilyParams const& params, Limits const& limits = {});

  // Human-readable element names for the family (empty when the indices
  // are the natural labels).
  std::vector<std::string> family_labels(FamilyParams const& params);

}  // namespace skewbrace

#endif  // SKEWBRACE_CONSTRUCTIONS_HPP_
