#ifndef SKEWBRACE_GROUP_HPP_
#define SKEWBRACE_GROUP_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "element_set.hpp"
#include "limits.hpp"

namespace skewbrace {

  using Table = std::vector<std::vector<int>>;

  // A finite group on the indices 0..n-1, given by its Cayley table, with
  // the identity pinned to index 0. Instances are only produced by
  // FiniteGroup::from_table (or helpers calling it) and are immutable.
  class FiniteGroup {
   public:
    // Validates the table; throws Error(not_a_group) naming the first
    // violated axiom and a witness.
    static FiniteGroup from_table(Table const& table);
    static FiniteGroup from_flat(std::size_t n, std::vector<int> flat);

    std::size_t order() const noexcept {
      return _n;
    }

    int op(int a, int b) const noexcept {
      return _table[static_cast<std::size_t>(a) * _n + b];
    }

    int inverse(int a) const noexcept {
      return _inverse[a];
    }

    // Smallest k > 0 with a^k = 0.
    int element_order(int a) const noexcept {
      return _element_order[a];
    }

    // a^m for any integer m (negative exponents via inverses).
    int power(int a, long m) const;

    // a b a^-1 b^-1
    int commutator(int a, int b) const noexcept {
      return op(op(a, b), op(inverse(a), inverse(b)));
    }

    // Sorted list of the primes dividing the order.
    std::vector<int> const& primes() const noexcept {
      return _primes;
    }

    bool is_abelian() const noexcept {
      return _abelian;
    }

    bool is_cyclic() const noexcept {
      return _n == 1 || std::find(_element_order.begin(),
                                  _element_order.end(),
                                  static_cast<int>(_n))
                            != _element_order.end();
    }

    // Elements of order n (empty unless cyclic; {0} for the trivial group).
    ElementSet cyclic_generators() const;

    // Z(G)
    ElementSet centre() const;

    // Greedy small generating set: repeatedly add an element of maximal order
    // outside the subgroup generated so far.
    std::vector<int> generating_set() const;

    std::vector<int> const& flat() const noexcept {
      return _table;
    }

    Table table() const;

    // The group with reversed multiplication a.b := b a.
    FiniteGroup opposite() const;

    bool operator==(FiniteGroup const& other) const noexcept {
      return _n == other._n && _table == other._table;
    }

   private:
    FiniteGroup() = default;
    void derive();

    std::size_t      _n = 0;
    std::vector<int> _table;
    std::vector<int> _inverse;
    std::vector<int> _element_order;
    std::vector<int> _primes;
    bool             _abelian = true;
  };

  inline FiniteGroup build_group(Table const& table) {
    return FiniteGroup::from_table(table);
  }

  // A bijection of 0..n-1 fixing 0 and preserving the group operation.
  struct Automorphism {
    std::vector<int> perm;

    int operator()(int x) const {
      return perm[x];
    }

    bool operator==(Automorphism const&) const = default;
    auto operator<=>(Automorphism const&) const = default;
  };

  Automorphism identity_automorphism(std::size_t n);
  // (f * g)(x) = f(g(x))
  Automorphism compose(Automorphism const& f, Automorphism const& g);
  Automorphism inverse(Automorphism const& f);
  bool         is_automorphism(FiniteGroup const& G, Automorphism const& f);

  // Full automorphism group, sorted. Throws bound_exceeded when
  // |G| > limits.structure_order.
  std::vector<Automorphism> automorphisms(FiniteGroup const& G,
                                          Limits const& limits = {});

  // An isomorphism G -> H as an index map, if one exists.
  std::optional<std::vector<int>> find_isomorphism(FiniteGroup const& G,
                                                   FiniteGroup const& H);

  // Calls `found` with every isomorphism G -> H (index maps) until it
  // returns false.
  void for_each_isomorphism(FiniteGroup const&                           G,
                            FiniteGroup const&                           H,
                            std::function<bool(std::vector<int> const&)> found);

  // Subgroups are plain element sets containing 0.
  using Subgroup = ElementSet;

  Subgroup subgroup_closure(FiniteGroup const& G, std::span<int const> seed);
  Subgroup subgroup_closure(FiniteGroup const& G, ElementSet const& seed);

  bool is_subgroup(FiniteGroup const& G, ElementSet const& S);
  bool is_normal(FiniteGroup const& G, ElementSet const& S);

  // Every subgroup of G in canonical order (size, then lexicographic).
  std::vector<Subgroup> all_subgroups(FiniteGroup const& G);

  struct QuotientGroup {
    FiniteGroup      group;
    // element -> coset index; the coset of 0 has index 0
    std::vector<int> projection;
  };

  // Throws not_normal with witness {g, x} when g x g^-1 leaves N.
  QuotientGroup quotient_group(FiniteGroup const& G, Subgroup const& N);

  // N x| H on pairs (a, b) stored at index b * |N| + a, with
  // (a, b)(c, d) = (a action[b](c), b d). Throws not_an_action.
  FiniteGroup semidirect_product(FiniteGroup const&               N,
                                 FiniteGroup const&               H,
                                 std::vector<Automorphism> const& action);
  FiniteGroup direct_product(FiniteGroup const& N, FiniteGroup const& H);

  // Explicit constructors.
  FiniteGroup cyclic_group(std::size_t n);
  FiniteGroup elementary_abelian_group(std::size_t p, std::size_t k);
  FiniteGroup dihedral_group(std::size_t m);   // order 2m
  FiniteGroup dicyclic_group(std::size_t m);   // order 4m
  FiniteGroup quaternion_group();              // order 8
  FiniteGroup alternating_group_4();           // order 12

  // Every isomorphism class of order <= 15, cyclic group first, then the
  // remaining abelian groups, then the non-abelian ones.
  std::size_t catalog_size(std::size_t order);
  FiniteGroup catalog_group(std::size_t order, std::size_t index);
  std::string catalog_name(std::size_t order, std::size_t index);
  // Index of the catalog group isomorphic to G; throws out_of_catalog.
  std::size_t catalog_index(FiniteGroup const& G);

}  // namespace skewbrace

#endif  // SKEWBRACE_GROUP_HPP_
