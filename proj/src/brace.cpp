#include "skewbrace/brace.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "skewbrace/errors.hpp"

namespace skewbrace {

  namespace {
    std::string triple(int a, int b, int c) {
      return "(" + std::to_string(a) + ", " + std::to_string(b) + ", "
             + std::to_string(c) + ")";
    }

    // The element e with e x = x = x e for all x, or -1.
    int find_identity(Table const& t) {
      std::size_t const n = t.size();
      for (std::size_t e = 0; e < n; ++e) {
        if (t[e].size() != n) {
          return -1;
        }
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
          ok = t[x].size() == n && t[e][x] == static_cast<int>(x)
               && t[x][e] == static_cast<int>(x);
        }
        if (ok) {
          return static_cast<int>(e);
        }
      }
      return -1;
    }
  }  // namespace

  SkewBrace SkewBrace::from_groups(FiniteGroup add, FiniteGroup mul) {
    std::size_t const n = add.order();
    if (mul.order() != n) {
      throw Error(ErrorKind::distributivity_failure,
                  "additive and multiplicative groups have different orders");
    }
    SkewBrace B(std::move(add), std::move(mul));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          int const lhs = B.mul(a, B.add(b, c));
          int const rhs = B.add(B.add(B.mul(a, b), B.neg(a)), B.mul(a, c));
          if (lhs != rhs) {
            throw Error(ErrorKind::distributivity_failure,
                        "a o (b + c) != a o b - a + a o c at " + triple(a, b, c),
                        {static_cast<int>(a), static_cast<int>(b),
                         static_cast<int>(c)});
          }
        }
      }
    }
    B._lambda.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        B._lambda[a * n + b] = B.add(B.neg(a), B.mul(a, b));
      }
    }
    // Consequences of distributivity, checked rather than assumed.
    for (std::size_t a = 0; a < n; ++a) {
      if (!is_automorphism(B._add, B.lambda_map(a))) {
        throw Error(ErrorKind::distributivity_failure,
                    "lambda_" + std::to_string(a) + " is not an automorphism",
                    {static_cast<int>(a)});
      }
      if (B.neg(a) != B.lambda(a, B.inv(a))) {
        throw Error(ErrorKind::distributivity_failure,
                    "-a != lambda_a(a^-1) at a = " + std::to_string(a),
                    {static_cast<int>(a)});
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (B.add(a, b) != B.mul(a, B.lambda_inverse(a, b))) {
          throw Error(ErrorKind::distributivity_failure,
                      "a + b != a o lambda_a^-1(b)",
                      {static_cast<int>(a), static_cast<int>(b)});
        }
        int const ab = B.mul(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (B.lambda(ab, c) != B.lambda(a, B.lambda(b, c))) {
            throw Error(ErrorKind::distributivity_failure,
                        "lambda is not a homomorphism at " + triple(a, b, c),
                        {static_cast<int>(a), static_cast<int>(b),
                         static_cast<int>(c)});
          }
        }
      }
    }
    return B;
  }

  Automorphism SkewBrace::lambda_map(int a) const {
    Automorphism f;
    f.perm.assign(_lambda.begin() + static_cast<std::ptrdiff_t>(a * order()),
                  _lambda.begin() + static_cast<std::ptrdiff_t>((a + 1) * order()));
    return f;
  }

  SkewBrace build_brace(Table const& add_table, Table const& mul_table) {
    if (add_table.size() != mul_table.size()) {
      throw Error(ErrorKind::not_a_group, "tables have different orders");
    }
    int const e_add = find_identity(add_table);
    int const e_mul = find_identity(mul_table);
    if (e_add >= 0 && e_mul >= 0 && e_add != e_mul) {
      throw Error(ErrorKind::identity_mismatch,
                  "additive identity " + std::to_string(e_add)
                      + " differs from multiplicative identity "
                      + std::to_string(e_mul),
                  {e_add, e_mul});
    }
    return SkewBrace::from_groups(FiniteGroup::from_table(add_table),
                                  FiniteGroup::from_table(mul_table));
  }

  SkewBrace build_brace(FiniteGroup add, FiniteGroup mul) {
    return SkewBrace::from_groups(std::move(add), std::move(mul));
  }

  bool satisfies_skew_distributivity(FiniteGroup const& add,
                                     FiniteGroup const& mul) {
    std::size_t const n = add.order();
    if (mul.order() != n) {
      return false;
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        int const ab = mul.op(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (mul.op(a, add.op(b, c))
              != add.op(add.op(ab, add.inverse(a)), mul.op(a, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  Subgroup star_span(SkewBrace const& B, ElementSet const& X, ElementSet const& Y) {
    std::vector<int> gens;
    for (int x : X) {
      for (int y : Y) {
        gens.push_back(B.star(x, y));
      }
    }
    return subgroup_closure(B.additive(), ElementSet(std::move(gens)));
  }

  namespace {
    bool lambda_invariant(SkewBrace const& B, ElementSet const& S) {
      for (std::size_t b = 0; b < B.order(); ++b) {
        for (int x : S) {
          if (!S.contains(B.lambda(b, x))) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  SubStructure classify_substructure(SkewBrace const& B, ElementSet const& S) {
    SubStructure result;
    result.elements   = S;
    bool const add_sub = is_subgroup(B.additive(), S);
    bool const mul_sub = is_subgroup(B.multiplicative(), S);
    if (!add_sub) {
      return result;
    }
    result.is_sub_brace  = mul_sub;
    result.is_left_ideal = lambda_invariant(B, S);
    if (result.is_left_ideal && !mul_sub) {
      throw std::logic_error("left ideal that is not multiplicatively closed");
    }
    result.is_strong_left_ideal
        = result.is_left_ideal && is_normal(B.additive(), S);
    result.is_ideal
        = result.is_strong_left_ideal && is_normal(B.multiplicative(), S);
    return result;
  }

  ElementSet sub_brace_closure(SkewBrace const& B, ElementSet const& seed) {
    std::size_t const n = B.order();
    std::vector<char> in(n, 0);
    std::vector<int>  elts{0};
    in[0] = 1;
    for (int s : seed) {
      if (!in[s]) {
        in[s] = 1;
        elts.push_back(s);
      }
    }
    for (std::size_t k = 0; k < elts.size(); ++k) {
      int const x = elts[k];
      for (std::size_t m = 0; m <= k; ++m) {
        int const y = elts[m];
        for (int z : {B.add(x, y), B.add(y, x), B.mul(x, y), B.mul(y, x)}) {
          if (!in[z]) {
            in[z] = 1;
            elts.push_back(z);
          }
        }
      }
    }
    return ElementSet(std::move(elts));
  }

  std::vector<SubStructure> sub_skew_braces(SkewBrace const& B,
                                            Limits const&    limits) {
    if (B.order() > limits.structure_order) {
      throw Error(ErrorKind::bound_exceeded,
                  "sub-skew brace lattice limited to order "
                      + std::to_string(limits.structure_order));
    }
    std::set<ElementSet>    found;
    std::vector<ElementSet> atoms;
    for (std::size_t a = 0; a < B.order(); ++a) {
      auto S = sub_brace_closure(B, ElementSet{static_cast<int>(a)});
      if (found.insert(S).second) {
        atoms.push_back(S);
      }
    }
    std::vector<ElementSet> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
      std::vector<ElementSet> next;
      for (auto const& S : frontier) {
        for (auto const& A : atoms) {
          if (A.is_subset_of(S)) {
            continue;
          }
          auto J = sub_brace_closure(B, S.unite(A));
          if (found.insert(J).second) {
            next.push_back(J);
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<ElementSet> sets(found.begin(), found.end());
    std::sort(sets.begin(), sets.end(), canonical_less);
    std::vector<SubStructure> result;
    result.reserve(sets.size());
    for (auto const& S : sets) {
      result.push_back(classify_substructure(B, S));
    }
    return result;
  }

  IdealCriterion three_of_four_ideal(SkewBrace const& B, ElementSet const& S) {
    if (!is_subgroup(B.additive(), S) && !is_subgroup(B.multiplicative(), S)) {
      throw Error(ErrorKind::not_a_subgroup,
                  "set is neither an additive nor a multiplicative subgroup");
    }
    IdealCriterion crit;
    crit.conditions[0] = is_normal(B.additive(), S);
    crit.conditions[1] = lambda_invariant(B, S);
    crit.conditions[2] = is_normal(B.multiplicative(), S);
    crit.conditions[3] = star_span(B, S, ElementSet::full(B.order())).is_subset_of(S);
    int count          = 0;
    for (bool c : crit.conditions) {
      count += c ? 1 : 0;
    }
    crit.holds = count >= 3;
    if (crit.holds && !classify_substructure(B, S).is_ideal) {
      throw std::logic_error("three of four conditions hold but set is no ideal");
    }
    return crit;
  }

  SubStructure ideal_generated(SkewBrace const& B, ElementSet const& X) {
    std::size_t const n = B.order();
    std::vector<char> in(n, 0);
    std::vector<int>  elts;
    auto              push = [&](int z) {
      if (!in[z]) {
        in[z] = 1;
        elts.push_back(z);
      }
    };
    push(0);
    for (int x : X) {
      push(x);
    }
    for (std::size_t k = 0; k < elts.size(); ++k) {
      int const x = elts[k];
      for (std::size_t m = 0; m <= k; ++m) {
        int const y = elts[m];
        push(B.add(x, y));
        push(B.add(y, x));
        push(B.mul(x, y));
        push(B.mul(y, x));
      }
      push(B.neg(x));
      push(B.inv(x));
      for (std::size_t b = 0; b < n; ++b) {
        push(B.lambda(b, x));
        push(B.sub(B.add(b, x), b));
        push(B.mul(B.mul(b, x), B.inv(b)));
      }
    }
    auto result = classify_substructure(B, ElementSet(std::move(elts)));
    if (!result.is_ideal) {
      throw std::logic_error("ideal closure is not an ideal");
    }
    return result;
  }

  namespace {
    // Coset label per element, cosets numbered by first occurrence.
    template <typename Op>
    std::vector<int> coset_labels(std::size_t n, ElementSet const& I, Op op) {
      std::vector<int> label(n, -1);
      int              next = 0;
      for (std::size_t g = 0; g < n; ++g) {
        if (label[g] != -1) {
          continue;
        }
        for (int x : I) {
          label[op(static_cast<int>(g), x)] = next;
        }
        ++next;
      }
      return label;
    }
  }  // namespace

  QuotientBrace quotient_brace(SkewBrace const& B, ElementSet const& I) {
    if (!classify_substructure(B, I).is_ideal) {
      throw Error(ErrorKind::not_an_ideal, "quotient by a set that is not an ideal");
    }
    std::size_t const n = B.order();
    auto const add_cosets
        = coset_labels(n, I, [&](int g, int x) { return B.add(g, x); });
    auto const mul_cosets
        = coset_labels(n, I, [&](int g, int x) { return B.mul(g, x); });
    if (add_cosets != mul_cosets) {
      throw Error(ErrorKind::coset_mismatch,
                  "additive and multiplicative cosets differ");
    }
    auto qa = quotient_group(B.additive(), I);
    auto qm = quotient_group(B.multiplicative(), I);
    if (qa.projection != add_cosets || qm.projection != add_cosets) {
      throw Error(ErrorKind::coset_mismatch, "coset numbering differs");
    }
    return {SkewBrace::from_groups(std::move(qa.group), std::move(qm.group)),
            std::move(qa.projection)};
  }

  ElementSet preimage(std::vector<int> const& projection, ElementSet const& S) {
    std::vector<int> result;
    for (std::size_t x = 0; x < projection.size(); ++x) {
      if (S.contains(projection[x])) {
        result.push_back(static_cast<int>(x));
      }
    }
    return ElementSet(std::move(result));
  }

  SocleAndCentre socle_and_centre(SkewBrace const& B) {
    std::size_t const n = B.order();
    std::vector<int>  ker;
    for (std::size_t a = 0; a < n; ++a) {
      bool id = true;
      for (std::size_t b = 0; b < n && id; ++b) {
        id = B.lambda(a, b) == static_cast<int>(b);
      }
      if (id) {
        ker.push_back(static_cast<int>(a));
      }
    }
    ElementSet const kernel(std::move(ker));
    ElementSet const soc = kernel.intersect(B.additive().centre());
    ElementSet const z   = soc.intersect(B.multiplicative().centre());
    SocleAndCentre   result{classify_substructure(B, kernel),
                          classify_substructure(B, soc),
                          classify_substructure(B, z)};
    if (!result.socle.is_ideal || !result.centre.is_ideal) {
      throw std::logic_error("socle or centre is not an ideal");
    }
    return result;
  }

  SkewBrace opposite(SkewBrace const& B) {
    return SkewBrace::from_groups(B.additive().opposite(), B.multiplicative());
  }

  BracePredicates predicates(SkewBrace const& B) {
    BracePredicates p;
    p.is_trivial        = B.additive() == B.multiplicative();
    p.is_almost_trivial = B.additive().opposite() == B.multiplicative();
    p.is_bi_skew = satisfies_skew_distributivity(B.multiplicative(), B.additive());
    p.is_abelian_type = B.additive().is_abelian();
    return p;
  }

  LambdaSemidirect lambda_semidirect(SkewBrace const& B, Limits const& limits) {
    std::size_t const n = B.order();
    if (n * n > limits.product_order) {
      throw Error(ErrorKind::bound_exceeded,
                  "semidirect product limited to order "
                      + std::to_string(limits.product_order));
    }
    std::vector<Automorphism> action;
    action.reserve(n);
    for (std::size_t b = 0; b < n; ++b) {
      action.push_back(B.lambda_map(b));
    }
    LambdaSemidirect result{
        semidirect_product(B.additive(), B.multiplicative(), action), true};
    FiniteGroup const& G = result.group;
    for (std::size_t a = 0; a < n && result.commutator_identity; ++a) {
      int const x = static_cast<int>(a * n);  // (0, a)
      for (std::size_t b = 0; b < n; ++b) {
        int const y = static_cast<int>(b);  // (b, 0)
        if (G.commutator(x, y) != B.star(a, b)) {
          result.commutator_identity = false;
          break;
        }
      }
    }
    return result;
  }

}  // namespace skewbrace
