#ifndef SKEWBRACE_SERIES_HPP_
#define SKEWBRACE_SERIES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "brace.hpp"
#include "limits.hpp"

namespace skewbrace {

  // Strictly ascending chain of ideals starting at {0}.
  struct IdealChain {
    std::vector<SubStructure> chain;
    // the last term is the whole brace
    bool terminal = false;

    std::size_t length() const noexcept {
      return chain.empty() ? 0 : chain.size() - 1;
    }
  };

  struct UpperSeries {
    IdealChain         series;
    // class (central series) or level (socle series), when terminal
    std::optional<int> length;
  };

  // Z_{k+1}/Z_k = Z(B/Z_k), computed through quotients and preimages.
  UpperSeries upper_central_series(SkewBrace const& B);
  // Soc_{k+1}/Soc_k = Soc(B/Soc_k).
  UpperSeries upper_socle_series(SkewBrace const& B);

  enum class StarSide { left, right };

  struct StarSeries {
    // A_1 = B, then B * A_k (left) or A_k * B (right), until it stabilises
    std::vector<ElementSet> terms;
    bool                    nilpotent = false;
  };

  StarSeries star_series(SkewBrace const& B, StarSide side);

  struct DerivedSeries {
    // B = D_0 > D_1 > ..., D_{k+1} the ideal of B generated by
    // D_k * D_k together with the additive commutators of D_k
    std::vector<ElementSet> terms;
    bool                    soluble = false;
  };

  DerivedSeries derived_series(SkewBrace const& B);

  struct Supersolubility {
    bool supersoluble = false;
    // {0} = I_0 < I_1 < ... < I_m = B, ideals of B with prime-order factors
    std::vector<ElementSet> chain;
  };

  Supersolubility is_supersoluble(SkewBrace const& B);

  struct DedekindResult {
    bool                        dedekind = false;
    std::optional<SubStructure> witness;
  };

  DedekindResult is_dedekind(SkewBrace const& B, Limits const& limits = {});

  struct AnalysisReport {
    std::size_t order = 0;
    BracePredicates predicates;
    bool additive_abelian       = false;
    bool additive_cyclic        = false;
    bool multiplicative_abelian = false;
    bool multiplicative_cyclic  = false;
    ElementSet ker_lambda;
    ElementSet socle;
    ElementSet centre;
    std::vector<std::size_t> central_series;  // term sizes
    std::optional<int>       central_class;
    std::vector<std::size_t> socle_series;
    std::optional<int>       multipermutation_level;
    std::vector<std::size_t> left_star_series;
    bool                     left_nilpotent = false;
    std::vector<std::size_t> right_star_series;
    bool                     right_nilpotent = false;
    std::vector<std::size_t> derived_series;
    bool                     soluble      = false;
    bool                     supersoluble = false;
    bool                     dedekind     = false;
    std::size_t              sub_brace_count = 0;
    std::size_t              ideal_count     = 0;
  };

  AnalysisReport analyze(SkewBrace const& B, Limits const& limits = {});

}  // namespace skewbrace

#endif  // SKEWBRACE_SERIES_HPP_
