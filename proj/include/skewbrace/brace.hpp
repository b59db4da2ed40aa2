#ifndef SKEWBRACE_BRACE_HPP_
#define SKEWBRACE_BRACE_HPP_

#include <array>
#include <cstddef>
#include <vector>

#include "element_set.hpp"
#include "group.hpp"
#include "limits.hpp"

namespace skewbrace {

  // A finite skew (left) brace (B, +, o): two groups on the same index set
  // sharing the identity 0 and satisfying
  //
  //   a o (b + c) = a o b - a + a o c.
  //
  // The lambda table lambda(a, b) = -a + a o b is computed once on
  // construction. Instances are immutable.
  class SkewBrace {
   public:
    // Validates the pair of groups: skew distributivity, each lambda_a an
    // automorphism of (B,+), lambda a homomorphism, and the identities
    // a + b = a o lambda_a^-1(b), a o b = a + lambda_a(b), -a = lambda_a(a^-1).
    // Throws distributivity_failure with witness {a, b, c}.
    static SkewBrace from_groups(FiniteGroup add, FiniteGroup mul);

    std::size_t order() const noexcept {
      return _add.order();
    }

    FiniteGroup const& additive() const noexcept {
      return _add;
    }

    FiniteGroup const& multiplicative() const noexcept {
      return _mul;
    }

    int add(int a, int b) const noexcept {
      return _add.op(a, b);
    }

    int mul(int a, int b) const noexcept {
      return _mul.op(a, b);
    }

    int neg(int a) const noexcept {
      return _add.inverse(a);
    }

    int inv(int a) const noexcept {
      return _mul.inverse(a);
    }

    // a - b
    int sub(int a, int b) const noexcept {
      return add(a, neg(b));
    }

    int lambda(int a, int b) const noexcept {
      return _lambda[static_cast<std::size_t>(a) * order() + b];
    }

    int lambda_inverse(int a, int b) const noexcept {
      return lambda(inv(a), b);
    }

    Automorphism lambda_map(int a) const;

    // a * b = lambda_a(b) - b
    int star(int a, int b) const noexcept {
      return sub(lambda(a, b), b);
    }

    // m b and b^m for any integer m.
    int add_power(int b, long m) const {
      return _add.power(b, m);
    }

    int mul_power(int b, long m) const {
      return _mul.power(b, m);
    }

    bool operator==(SkewBrace const& other) const noexcept {
      return _add == other._add && _mul == other._mul;
    }

   private:
    SkewBrace(FiniteGroup add, FiniteGroup mul)
        : _add(std::move(add)), _mul(std::move(mul)) {}

    FiniteGroup      _add;
    FiniteGroup      _mul;
    std::vector<int> _lambda;
  };

  // Checks the identity labelling of both tables first (identity_mismatch
  // when the two tables have different identities), then validates each as a
  // group and the pair as a skew brace.
  SkewBrace build_brace(Table const& add_table, Table const& mul_table);
  SkewBrace build_brace(FiniteGroup add, FiniteGroup mul);

  // True iff (G1, G2) satisfies left skew distributivity, i.e. the pair
  // forms a skew brace with G1 as additive group.
  bool satisfies_skew_distributivity(FiniteGroup const& add,
                                     FiniteGroup const& mul);

  // X * Y, the additive subgroup generated by all x * y.
  Subgroup star_span(SkewBrace const& B, ElementSet const& X, ElementSet const& Y);

  struct SubStructure {
    ElementSet elements;
    bool       is_sub_brace          = false;
    bool       is_left_ideal         = false;
    bool       is_strong_left_ideal  = false;
    bool       is_ideal              = false;

    bool operator==(SubStructure const&) const = default;
  };

  // Flags straight from the definitions. Sets that are not closed get all
  // flags false.
  SubStructure classify_substructure(SkewBrace const& B, ElementSet const& S);

  // Closure of a set under both operations (the sub-skew brace it generates).
  ElementSet sub_brace_closure(SkewBrace const& B, ElementSet const& seed);

  // The full lattice of sub-skew braces in canonical order. Throws
  // bound_exceeded when |B| > limits.structure_order.
  std::vector<SubStructure> sub_skew_braces(SkewBrace const& B,
                                            Limits const&    limits = {});

  // The four conditions of the "three out of four" ideal criterion for an
  // additive or multiplicative subgroup S:
  //   [0] S is normal in (B,+)
  //   [1] S is lambda-invariant
  //   [2] S is normal in (B,o)
  //   [3] S * B is contained in S
  struct IdealCriterion {
    bool                holds = false;
    std::array<bool, 4> conditions{};
  };

  // Throws not_a_subgroup when S is neither an additive nor a multiplicative
  // subgroup, and std::logic_error if the criterion holds for a set that
  // classify_substructure does not recognise as an ideal.
  IdealCriterion three_of_four_ideal(SkewBrace const& B, ElementSet const& S);

  // Smallest ideal containing X.
  SubStructure ideal_generated(SkewBrace const& B, ElementSet const& X);

  struct QuotientBrace {
    SkewBrace        brace;
    std::vector<int> projection;
  };

  // Throws not_an_ideal, or coset_mismatch if additive and multiplicative
  // cosets differ (unreachable for genuine ideals).
  QuotientBrace quotient_brace(SkewBrace const& B, ElementSet const& I);

  // {x : projection[x] in S}
  ElementSet preimage(std::vector<int> const& projection, ElementSet const& S);

  struct SocleAndCentre {
    SubStructure ker_lambda;
    SubStructure socle;
    SubStructure centre;
  };

  SocleAndCentre socle_and_centre(SkewBrace const& B);

  struct BracePredicates {
    bool is_trivial        = false;
    bool is_almost_trivial = false;
    bool is_bi_skew        = false;
    bool is_abelian_type   = false;
  };

  // (B, +op, o) with a +op b = b + a.
  SkewBrace       opposite(SkewBrace const& B);
  BracePredicates predicates(SkewBrace const& B);

  struct LambdaSemidirect {
    // (a, b) at index b * n + a, (a,b)(c,d) = (a + lambda_b(c), b o d)
    FiniteGroup group;
    // [(0, a), (b, 0)] == (a * b, 0) for every pair
    bool commutator_identity = false;
  };

  // Throws bound_exceeded when n^2 > limits.product_order.
  LambdaSemidirect lambda_semidirect(SkewBrace const& B, Limits const& limits = {});

}  // namespace skewbrace

#endif  // SKEWBRACE_BRACE_HPP_
