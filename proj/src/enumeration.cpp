#include "skewbrace/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "skewbrace/errors.hpp"

namespace skewbrace {

  namespace {
    // Backtracking state for the lambda functional equation.
    class LambdaSearch {
     public:
      LambdaSearch(FiniteGroup const& G, std::vector<Automorphism> auts)
          : _G(G), _n(G.order()), _auts(std::move(auts)) {
        std::map<std::vector<int>, int> index;
        for (std::size_t i = 0; i < _auts.size(); ++i) {
          index.emplace(_auts[i].perm, static_cast<int>(i));
        }
        _identity = index.at(identity_automorphism(_n).perm);
        std::size_t const m = _auts.size();
        _compose.resize(m * m);
        for (std::size_t f = 0; f < m; ++f) {
          for (std::size_t g = 0; g < m; ++g) {
            _compose[f * m + g] = index.at(compose(_auts[f], _auts[g]).perm);
          }
        }
      }

      std::vector<std::vector<int>> run(std::vector<int> const& order) {
        std::vector<int> lambda(_n, -1);
        lambda[0] = _identity;
        std::vector<std::vector<int>> found;
        if (propagate(lambda)) {
          recurse(lambda, order, found);
        }
        return found;
      }

      // lambda_a(b) for a completed assignment
      int image(std::vector<int> const& lambda, int a, int b) const {
        return apply(lambda[a], b);
      }

     private:
      int apply(int f, int x) const {
        return _auts[f].perm[x];
      }

      // Forces lambda_{a + lambda_a(b)} = lambda_a lambda_b over all assigned
      // pairs until nothing changes; false on the first contradiction.
      bool propagate(std::vector<int>& lambda) const {
        std::size_t const m = _auts.size();
        for (bool changed = true; changed;) {
          changed = false;
          for (std::size_t a = 0; a < _n; ++a) {
            if (lambda[a] < 0) {
              continue;
            }
            for (std::size_t b = 0; b < _n; ++b) {
              if (lambda[b] < 0) {
                continue;
              }
              int const c    = _G.op(a, apply(lambda[a], b));
              int const want = _compose[lambda[a] * m + lambda[b]];
              if (lambda[c] < 0) {
                lambda[c] = want;
                changed   = true;
              } else if (lambda[c] != want) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void recurse(std::vector<int> const&        lambda,
                   std::vector<int> const&        order,
                   std::vector<std::vector<int>>& found) const {
        auto const next = std::find_if(
            order.begin(), order.end(), [&](int x) { return lambda[x] < 0; });
        if (next == order.end()) {
          found.push_back(lambda);
          return;
        }
        for (std::size_t f = 0; f < _auts.size(); ++f) {
          std::vector<int> trial = lambda;
          trial[*next]           = static_cast<int>(f);
          if (propagate(trial)) {
            recurse(trial, order, found);
          }
        }
      }

      FiniteGroup const&        _G;
      std::size_t               _n;
      std::vector<Automorphism> _auts;
      std::vector<int>          _compose;
      int                       _identity = 0;
    };
  }  // namespace

  std::vector<SkewBrace> enumerate_on_additive(FiniteGroup const&              G,
                                               Limits const&                   limits,
                                               std::optional<std::vector<int>> branch_order) {
    std::size_t const n = G.order();
    if (n > limits.enumeration_order) {
      throw Error(ErrorKind::bound_exceeded,
                  "enumeration limited to order " + std::to_string(limits.enumeration_order));
    }
    std::vector<int> order;
    if (branch_order) {
      order = *branch_order;
      std::vector<int> check = order;
      std::sort(check.begin(), check.end());
      std::vector<int> expected(n);
      std::iota(expected.begin(), expected.end(), 0);
      if (check != expected) {
        throw Error(ErrorKind::bad_params, "branch order is not a permutation of the elements");
      }
    } else {
      order = G.generating_set();
      for (std::size_t x = 0; x < n; ++x) {
        if (std::find(order.begin(), order.end(), static_cast<int>(x)) == order.end()) {
          order.push_back(static_cast<int>(x));
        }
      }
    }

    Limits aut_limits          = limits;
    aut_limits.structure_order = std::max(limits.structure_order, n);
    LambdaSearch search(G, automorphisms(G, aut_limits));

    std::vector<SkewBrace> braces;
    for (auto const& lambda : search.run(order)) {
      std::vector<int> flat(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          flat[a * n + b] = G.op(a, search.image(lambda, a, b));
        }
      }
      // full validation of (G, o), not derived from the functional equation
      braces.push_back(build_brace(G, FiniteGroup::from_flat(n, std::move(flat))));
    }
    std::sort(braces.begin(), braces.end(), [](SkewBrace const& x, SkewBrace const& y) {
      return x.multiplicative().flat() < y.multiplicative().flat();
    });
    return braces;
  }

  namespace {
    struct Signature {
      std::string                   name;
      std::vector<std::size_t> value;
    };

    std::vector<std::size_t> sorted_element_orders(FiniteGroup const& G) {
      std::vector<std::size_t> v;
      for (std::size_t a = 0; a < G.order(); ++a) {
        v.push_back(G.element_order(a));
      }
      std::sort(v.begin(), v.end());
      return v;
    }

    // Invariants compared before any search, in order.
    std::vector<Signature> signatures(SkewBrace const& B) {
      std::size_t const n  = B.order();
      auto const        sc = socle_and_centre(B);
      std::vector<Signature> out;
      out.push_back({"order", {n}});
      out.push_back({"additive element orders", sorted_element_orders(B.additive())});
      out.push_back(
          {"multiplicative element orders", sorted_element_orders(B.multiplicative())});
      out.push_back({"Ker lambda size", {sc.ker_lambda.elements.size()}});
      out.push_back({"socle size", {sc.socle.elements.size()}});
      out.push_back({"centre size", {sc.centre.elements.size()}});
      // orbit sizes of the lambda action
      std::vector<std::size_t> orbits;
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<int> orbit;
        for (std::size_t a = 0; a < n; ++a) {
          orbit.push_back(B.lambda(a, b));
        }
        orbits.push_back(ElementSet(std::move(orbit)).size());
      }
      std::sort(orbits.begin(), orbits.end());
      out.push_back({"lambda orbit sizes", orbits});
      // per row, the number of b with a * b = 0
      std::vector<std::size_t> star_zeros;
      for (std::size_t a = 0; a < n; ++a) {
        std::size_t z = 0;
        for (std::size_t b = 0; b < n; ++b) {
          z += B.star(a, b) == 0;
        }
        star_zeros.push_back(z);
      }
      std::sort(star_zeros.begin(), star_zeros.end());
      out.push_back({"star table signature", star_zeros});
      return out;
    }
  }  // namespace

  IsoCertificate are_isomorphic(SkewBrace const& B1, SkewBrace const& B2) {
    IsoCertificate cert;
    auto const     s1 = signatures(B1);
    auto const     s2 = signatures(B2);
    for (std::size_t i = 0; i < s1.size(); ++i) {
      if (s1[i].value != s2[i].value) {
        cert.refutation = s1[i].name;
        return cert;
      }
    }
    if (!find_isomorphism(B1.additive(), B2.additive())) {
      cert.refutation = "additive group";
      return cert;
    }
    if (!find_isomorphism(B1.multiplicative(), B2.multiplicative())) {
      cert.refutation = "multiplicative group";
      return cert;
    }
    std::size_t const n = B1.order();
    // an isomorphism of braces is an additive isomorphism preserving o
    for_each_isomorphism(B1.additive(), B2.additive(), [&](std::vector<int> const& f) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (f[B1.mul(a, b)] != B2.mul(f[a], f[b])) {
            return true;
          }
        }
      }
      cert.bijection = f;
      return false;
    });
    if (!cert.bijection) {
      cert.refutation = "no additive isomorphism preserves o";
      return cert;
    }
    auto const& f = *cert.bijection;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (f[B1.add(a, b)] != B2.add(f[a], f[b]) || f[B1.mul(a, b)] != B2.mul(f[a], f[b])) {
          throw std::logic_error("isomorphism certificate does not preserve the tables");
        }
      }
    }
    if (ElementSet(f).size() != n) {
      throw std::logic_error("isomorphism certificate is not a bijection");
    }
    cert.isomorphic = true;
    return cert;
  }

  namespace {
    bool table_less(SkewBrace const& x, SkewBrace const& y) {
      if (x.additive().flat() != y.additive().flat()) {
        return x.additive().flat() < y.additive().flat();
      }
      return x.multiplicative().flat() < y.multiplicative().flat();
    }

    void collect(Enumeration& out, std::size_t add_index, Limits const& limits) {
      struct Class {
        std::size_t mul_index;
        SkewBrace   representative;
      };
      std::vector<Class>                       classes;
      std::map<std::size_t, std::size_t>       raw;
      FiniteGroup const G = catalog_group(out.order, add_index);
      for (auto& B : enumerate_on_additive(G, limits)) {
        std::size_t const mul_index = catalog_index(B.multiplicative());
        ++raw[mul_index];
        ++out.total_braces;
        auto it = std::find_if(classes.begin(), classes.end(), [&](Class const& c) {
          return c.mul_index == mul_index && are_isomorphic(c.representative, B).isomorphic;
        });
        if (it == classes.end()) {
          classes.push_back({mul_index, std::move(B)});
        } else if (table_less(B, it->representative)) {
          it->representative = std::move(B);
        }
      }
      std::map<std::size_t, std::size_t> per_mul;
      for (auto& c : classes) {
        ++per_mul[c.mul_index];
        out.representatives.push_back(std::move(c.representative));
      }
      for (auto const& [mul_index, braces] : raw) {
        out.counts.push_back({add_index,
                              mul_index,
                              catalog_name(out.order, add_index),
                              catalog_name(out.order, mul_index),
                              per_mul[mul_index],
                              braces});
      }
    }

    void finish(Enumeration& out) {
      std::sort(out.representatives.begin(), out.representatives.end(), table_less);
      std::sort(out.counts.begin(), out.counts.end(), [](TypeCount const& x, TypeCount const& y) {
        return std::pair{x.add_index, x.mul_index} < std::pair{y.add_index, y.mul_index};
      });
    }
  }  // namespace

  Enumeration enumerate_all(std::size_t order, Limits const& limits) {
    Enumeration out;
    out.order             = order;
    std::size_t const num = catalog_size(order);
    if (num == 0) {
      throw Error(ErrorKind::out_of_catalog,
                  "no catalog groups of order " + std::to_string(order));
    }
    for (std::size_t i = 0; i < num; ++i) {
      collect(out, i, limits);
    }
    finish(out);
    return out;
  }

  Enumeration enumerate_catalog_group(std::size_t   order,
                                      std::size_t   add_index,
                                      Limits const& limits) {
    Enumeration out;
    out.order = order;
    catalog_group(order, add_index);
    collect(out, add_index, limits);
    finish(out);
    return out;
  }

}  // namespace skewbrace
