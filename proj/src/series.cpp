#include "skewbrace/series.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace skewbrace {

  namespace {
    template <typename Layer>
    UpperSeries upper_series(SkewBrace const& B, Layer layer) {
      std::size_t const n = B.order();
      UpperSeries       result;
      ElementSet        current{0};
      result.series.chain.push_back(classify_substructure(B, current));
      // A finite brace needs at most n strict steps.
      for (std::size_t step = 0; step <= n; ++step) {
        if (current.size() == n) {
          break;
        }
        auto const       q    = quotient_brace(B, current);
        ElementSet const next = preimage(q.projection, layer(q.brace));
        if (next == current) {
          break;
        }
        if (!current.is_subset_of(next)) {
          throw std::logic_error("upper series is not ascending");
        }
        current   = next;
        auto term = classify_substructure(B, current);
        if (!term.is_ideal) {
          throw std::logic_error("upper series term is not an ideal");
        }
        result.series.chain.push_back(std::move(term));
      }
      result.series.terminal = current.size() == n;
      if (result.series.terminal) {
        result.length = static_cast<int>(result.series.length());
      }
      return result;
    }
  }  // namespace

  UpperSeries upper_central_series(SkewBrace const& B) {
    return upper_series(
        B, [](SkewBrace const& Q) { return socle_and_centre(Q).centre.elements; });
  }

  UpperSeries upper_socle_series(SkewBrace const& B) {
    return upper_series(
        B, [](SkewBrace const& Q) { return socle_and_centre(Q).socle.elements; });
  }

  StarSeries star_series(SkewBrace const& B, StarSide side) {
    ElementSet const whole = ElementSet::full(B.order());
    StarSeries       result;
    result.terms.push_back(whole);
    for (std::size_t step = 0; step <= B.order(); ++step) {
      ElementSet const& last = result.terms.back();
      if (last.size() == 1) {
        break;
      }
      ElementSet next = side == StarSide::left ? star_span(B, whole, last)
                                               : star_span(B, last, whole);
      if (next == last) {
        break;
      }
      result.terms.push_back(std::move(next));
    }
    result.nilpotent = result.terms.back().size() == 1;
    return result;
  }

  DerivedSeries derived_series(SkewBrace const& B) {
    DerivedSeries result;
    result.terms.push_back(ElementSet::full(B.order()));
    for (std::size_t step = 0; step <= B.order(); ++step) {
      ElementSet const& D = result.terms.back();
      if (D.size() == 1) {
        break;
      }
      std::vector<int> gens;
      for (int x : D) {
        for (int y : D) {
          gens.push_back(B.star(x, y));
          gens.push_back(B.additive().commutator(x, y));
        }
      }
      ElementSet next = ideal_generated(B, ElementSet(std::move(gens))).elements;
      // D / next is abelian: trivial with abelian addition.
      for (int x : D) {
        for (int y : D) {
          if (!next.contains(B.star(x, y))
              || !next.contains(B.additive().commutator(x, y))) {
            throw std::logic_error("derived series factor is not abelian");
          }
        }
      }
      if (next == D) {
        break;
      }
      result.terms.push_back(std::move(next));
    }
    result.soluble = result.terms.back().size() == 1;
    return result;
  }

  namespace {
    bool is_prime(std::size_t m) {
      if (m < 2) {
        return false;
      }
      for (std::size_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
          return false;
        }
      }
      return true;
    }

    using BraceKey = std::pair<std::vector<int>, std::vector<int>>;

    // Returns the chain in B (from {0} to B) or nullopt.
    std::optional<std::vector<ElementSet>> supersoluble_chain(
        SkewBrace const&                                       B,
        std::map<BraceKey, std::optional<std::vector<ElementSet>>>& memo) {
      std::size_t const n = B.order();
      if (n == 1) {
        return std::vector<ElementSet>{ElementSet{0}};
      }
      BraceKey key{B.additive().flat(), B.multiplicative().flat()};
      if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
      }
      // Candidate prime-order ideals, each generated by any of its
      // non-zero elements.
      std::vector<ElementSet> candidates;
      for (std::size_t b = 1; b < n; ++b) {
        if (!is_prime(B.additive().element_order(b))) {
          continue;
        }
        auto I = ideal_generated(B, ElementSet{static_cast<int>(b)}).elements;
        if (is_prime(I.size())
            && std::find(candidates.begin(), candidates.end(), I)
                   == candidates.end()) {
          candidates.push_back(std::move(I));
        }
      }
      std::sort(candidates.begin(), candidates.end());
      std::optional<std::vector<ElementSet>> result;
      for (auto const& I : candidates) {
        auto const q   = quotient_brace(B, I);
        auto       sub = supersoluble_chain(q.brace, memo);
        if (sub) {
          std::vector<ElementSet> chain{ElementSet{0}};
          for (auto const& term : *sub) {
            chain.push_back(preimage(q.projection, term));
          }
          // sub starts at {0} whose preimage is I itself
          result = std::move(chain);
          break;
        }
      }
      memo.emplace(std::move(key), result);
      return result;
    }
  }  // namespace

  Supersolubility is_supersoluble(SkewBrace const& B) {
    std::map<BraceKey, std::optional<std::vector<ElementSet>>> memo;
    auto            chain = supersoluble_chain(B, memo);
    Supersolubility result;
    if (chain) {
      result.supersoluble = true;
      result.chain        = std::move(*chain);
    }
    return result;
  }

  DedekindResult is_dedekind(SkewBrace const& B, Limits const& limits) {
    DedekindResult result{true, std::nullopt};
    for (auto& S : sub_skew_braces(B, limits)) {
      if (!S.is_ideal) {
        result.dedekind = false;
        result.witness  = std::move(S);
        break;
      }
    }
    return result;
  }

  namespace {
    std::vector<std::size_t> sizes(std::vector<ElementSet> const& terms) {
      std::vector<std::size_t> out;
      for (auto const& t : terms) {
        out.push_back(t.size());
      }
      return out;
    }

    std::vector<std::size_t> sizes(IdealChain const& chain) {
      std::vector<std::size_t> out;
      for (auto const& t : chain.chain) {
        out.push_back(t.elements.size());
      }
      return out;
    }
  }  // namespace

  AnalysisReport analyze(SkewBrace const& B, Limits const& limits) {
    AnalysisReport r;
    r.order                  = B.order();
    r.predicates             = predicates(B);
    r.additive_abelian       = B.additive().is_abelian();
    r.additive_cyclic        = B.additive().is_cyclic();
    r.multiplicative_abelian = B.multiplicative().is_abelian();
    r.multiplicative_cyclic  = B.multiplicative().is_cyclic();

    auto const sc = socle_and_centre(B);
    r.ker_lambda  = sc.ker_lambda.elements;
    r.socle       = sc.socle.elements;
    r.centre      = sc.centre.elements;

    auto const central       = upper_central_series(B);
    r.central_series         = sizes(central.series);
    r.central_class          = central.length;
    auto const socle         = upper_socle_series(B);
    r.socle_series           = sizes(socle.series);
    r.multipermutation_level = socle.length;

    auto const left     = star_series(B, StarSide::left);
    r.left_star_series  = sizes(left.terms);
    r.left_nilpotent    = left.nilpotent;
    auto const right    = star_series(B, StarSide::right);
    r.right_star_series = sizes(right.terms);
    r.right_nilpotent   = right.nilpotent;

    auto const derived = derived_series(B);
    r.derived_series   = sizes(derived.terms);
    r.soluble          = derived.soluble;
    r.supersoluble     = is_supersoluble(B).supersoluble;

    auto const lattice = sub_skew_braces(B, limits);
    r.sub_brace_count  = lattice.size();
    r.dedekind         = true;
    for (auto const& S : lattice) {
      if (S.is_ideal) {
        ++r.ideal_count;
      } else {
        r.dedekind = false;
      }
    }
    return r;
  }

}  // namespace skewbrace
