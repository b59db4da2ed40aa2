#include "skewbrace/group.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "skewbrace/errors.hpp"

namespace skewbrace {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::not_a_group: return "NotAGroup";
      case ErrorKind::out_of_catalog: return "OutOfCatalog";
      case ErrorKind::bound_exceeded: return "BoundExceeded";
      case ErrorKind::not_normal: return "NotNormal";
      case ErrorKind::not_an_action: return "NotAnAction";
      case ErrorKind::distributivity_failure: return "DistributivityFailure";
      case ErrorKind::identity_mismatch: return "IdentityMismatch";
      case ErrorKind::not_a_subgroup: return "NotASubgroup";
      case ErrorKind::not_an_ideal: return "NotAnIdeal";
      case ErrorKind::coset_mismatch: return "CosetMismatch";
      case ErrorKind::bad_params: return "BadParams";
      case ErrorKind::domain_violation: return "DomainViolation";
      case ErrorKind::invalid_spec: return "InvalidSpec";
      case ErrorKind::bad_prime: return "BadPrime";
      case ErrorKind::degenerate: return "Degenerate";
      case ErrorKind::braid_failure: return "BraidFailure";
      case ErrorKind::ill_defined_retraction: return "IllDefinedRetraction";
      case ErrorKind::schema_error: return "SchemaError";
      case ErrorKind::io_error: return "IoError";
    }
    return "Error";
  }

  namespace {
    [[noreturn]] void not_a_group(std::string const& reason,
                                  std::vector<int>   witness) {
      std::ostringstream os;
      os << reason;
      if (!witness.empty()) {
        os << " (witness";
        for (int w : witness) {
          os << ' ' << w;
        }
        os << ')';
      }
      throw Error(ErrorKind::not_a_group, os.str(), std::move(witness));
    }

    std::vector<int> prime_factors(int m) {
      std::vector<int> result;
      for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
          result.push_back(p);
          while (m % p == 0) {
            m /= p;
          }
        }
      }
      if (m > 1) {
        result.push_back(m);
      }
      return result;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteGroup
  ////////////////////////////////////////////////////////////////////////

  FiniteGroup FiniteGroup::from_table(Table const& table) {
    std::size_t const n = table.size();
    std::vector<int>  flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        not_a_group("table is not square", {static_cast<int>(i)});
      }
      flat.insert(flat.end(), table[i].begin(), table[i].end());
    }
    return from_flat(n, std::move(flat));
  }

  FiniteGroup FiniteGroup::from_flat(std::size_t n, std::vector<int> flat) {
    if (n == 0) {
      not_a_group("empty table", {});
    }
    if (flat.size() != n * n) {
      not_a_group("table is not square", {});
    }
    auto at = [&](std::size_t i, std::size_t j) { return flat[i * n + j]; };
    for (std::size_t i = 0; i < n * n; ++i) {
      if (flat[i] < 0 || static_cast<std::size_t>(flat[i]) >= n) {
        not_a_group("entry out of range",
                    {static_cast<int>(i / n), static_cast<int>(i % n)});
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (at(0, i) != static_cast<int>(i) || at(i, 0) != static_cast<int>(i)) {
        not_a_group("index 0 is not a two-sided identity",
                    {static_cast<int>(i)});
      }
    }
    std::vector<char> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        if (seen[at(i, j)]++) {
          not_a_group("row is not a permutation", {static_cast<int>(i)});
        }
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        if (seen[at(j, i)]++) {
          not_a_group("column is not a permutation", {static_cast<int>(i)});
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        int const ab = at(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (at(ab, c) != at(a, at(b, c))) {
            not_a_group("associativity fails",
                        {static_cast<int>(a),
                         static_cast<int>(b),
                         static_cast<int>(c)});
          }
        }
      }
    }
    FiniteGroup G;
    G._n     = n;
    G._table = std::move(flat);
    G._inverse.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (G.op(i, j) == 0) {
          if (G.op(j, i) != 0) {
            not_a_group("left and right inverses differ",
                        {static_cast<int>(i), static_cast<int>(j)});
          }
          G._inverse[i] = static_cast<int>(j);
        }
      }
    }
    G.derive();
    return G;
  }

  void FiniteGroup::derive() {
    _element_order.assign(_n, 0);
    std::set<int> primes;
    for (std::size_t a = 0; a < _n; ++a) {
      int k = 1;
      int x = static_cast<int>(a);
      while (x != 0) {
        x = op(x, a);
        ++k;
      }
      _element_order[a] = k;
      for (int p : prime_factors(k)) {
        primes.insert(p);
      }
    }
    _primes.assign(primes.begin(), primes.end());
    _abelian = true;
    for (std::size_t a = 0; a < _n && _abelian; ++a) {
      for (std::size_t b = a + 1; b < _n; ++b) {
        if (op(a, b) != op(b, a)) {
          _abelian = false;
          break;
        }
      }
    }
  }

  int FiniteGroup::power(int a, long m) const {
    if (m < 0) {
      return inverse(power(a, -m));
    }
    m %= _element_order[a];
    int x = 0;
    for (long i = 0; i < m; ++i) {
      x = op(x, a);
    }
    return x;
  }

  ElementSet FiniteGroup::cyclic_generators() const {
    std::vector<int> gens;
    for (std::size_t a = 0; a < _n; ++a) {
      if (static_cast<std::size_t>(_element_order[a]) == _n) {
        gens.push_back(static_cast<int>(a));
      }
    }
    return ElementSet(std::move(gens));
  }

  ElementSet FiniteGroup::centre() const {
    std::vector<int> z;
    for (std::size_t a = 0; a < _n; ++a) {
      bool central = true;
      for (std::size_t b = 0; b < _n && central; ++b) {
        central = op(a, b) == op(b, a);
      }
      if (central) {
        z.push_back(static_cast<int>(a));
      }
    }
    return ElementSet(std::move(z));
  }

  std::vector<int> FiniteGroup::generating_set() const {
    std::vector<int> by_order(_n);
    std::iota(by_order.begin(), by_order.end(), 0);
    std::stable_sort(by_order.begin(), by_order.end(), [this](int a, int b) {
      return _element_order[a] > _element_order[b];
    });
    std::vector<int> gens;
    Subgroup         current{0};
    for (int x : by_order) {
      if (current.size() == _n) {
        break;
      }
      if (!current.contains(x)) {
        gens.push_back(x);
        current = subgroup_closure(*this, current.unite(ElementSet{x}));
      }
    }
    return gens;
  }

  Table FiniteGroup::table() const {
    Table t(_n, std::vector<int>(_n));
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        t[i][j] = op(i, j);
      }
    }
    return t;
  }

  FiniteGroup FiniteGroup::opposite() const {
    FiniteGroup G = *this;
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        G._table[i * _n + j] = op(j, i);
      }
    }
    return G;
  }

  ////////////////////////////////////////////////////////////////////////
  // Automorphisms and isomorphisms
  ////////////////////////////////////////////////////////////////////////

  Automorphism identity_automorphism(std::size_t n) {
    Automorphism id;
    id.perm.resize(n);
    std::iota(id.perm.begin(), id.perm.end(), 0);
    return id;
  }

  Automorphism compose(Automorphism const& f, Automorphism const& g) {
    Automorphism h;
    h.perm.resize(g.perm.size());
    for (std::size_t x = 0; x < g.perm.size(); ++x) {
      h.perm[x] = f.perm[g.perm[x]];
    }
    return h;
  }

  Automorphism inverse(Automorphism const& f) {
    Automorphism h;
    h.perm.resize(f.perm.size());
    for (std::size_t x = 0; x < f.perm.size(); ++x) {
      h.perm[f.perm[x]] = static_cast<int>(x);
    }
    return h;
  }

  bool is_automorphism(FiniteGroup const& G, Automorphism const& f) {
    std::size_t const n = G.order();
    if (f.perm.size() != n || f.perm[0] != 0) {
      return false;
    }
    std::vector<char> seen(n, 0);
    for (int y : f.perm) {
      if (y < 0 || static_cast<std::size_t>(y) >= n || seen[y]++) {
        return false;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (f.perm[G.op(i, j)] != G.op(f.perm[i], f.perm[j])) {
          return false;
        }
      }
    }
    return true;
  }

  // Backtracking over the images of a generating set of G in H; each
  // partial assignment is extended to the subgroup generated so far and
  // must stay a well-defined injective homomorphism.
  void for_each_isomorphism(FiniteGroup const&                             G,
                            FiniteGroup const&                             H,
                            std::function<bool(std::vector<int> const&)> found) {
      std::size_t const n = G.order();
      if (H.order() != n) {
        return;
      }
      std::vector<int> const gens = G.generating_set();
      std::vector<int>       f(n, -1);
      std::vector<char>      used(n, 0);
      f[0]    = 0;
      used[0] = 1;
      std::vector<int> known{0};
      bool             stop = false;

      std::function<void(std::size_t)> recurse = [&](std::size_t level) {
        if (level == gens.size()) {
          if (known.size() == n) {
            stop = !found(f);
          }
          return;
        }
        int const g = gens[level];
        for (std::size_t c = 1; c < n && !stop; ++c) {
          if (used[c] || H.element_order(c) != G.element_order(g)) {
            continue;
          }
          std::size_t const mark = known.size();
          f[g]                   = static_cast<int>(c);
          used[c]                = 1;
          known.push_back(g);
          bool ok = true;
          // Close under right multiplication by the assigned generators.
          for (std::size_t k = 0; k < known.size() && ok; ++k) {
            int const x = known[k];
            for (std::size_t j = 0; j <= level && ok; ++j) {
              int const y  = G.op(x, gens[j]);
              int const fy = H.op(f[x], f[gens[j]]);
              if (f[y] == -1) {
                if (used[fy]) {
                  ok = false;
                } else {
                  f[y]     = fy;
                  used[fy] = 1;
                  known.push_back(y);
                }
              } else if (f[y] != fy) {
                ok = false;
              }
            }
          }
          if (ok) {
            recurse(level + 1);
          }
          for (std::size_t k = mark; k < known.size(); ++k) {
            used[f[known[k]]] = 0;
            f[known[k]]       = -1;
          }
          known.resize(mark);
        }
      };
      recurse(0);
  }

  namespace {
    std::vector<int> sorted_orders(FiniteGroup const& G) {
      std::vector<int> orders(G.order());
      for (std::size_t a = 0; a < G.order(); ++a) {
        orders[a] = G.element_order(a);
      }
      std::sort(orders.begin(), orders.end());
      return orders;
    }
  }  // namespace

  std::vector<Automorphism> automorphisms(FiniteGroup const& G,
                                          Limits const&      limits) {
    if (G.order() > limits.structure_order) {
      throw Error(ErrorKind::bound_exceeded,
                  "automorphism search limited to order "
                      + std::to_string(limits.structure_order));
    }
    std::vector<Automorphism> result;
    for_each_isomorphism(G, G, [&](std::vector<int> const& f) {
      Automorphism phi{f};
      if (!is_automorphism(G, phi)) {
        throw std::logic_error("automorphism search produced a non-automorphism");
      }
      result.push_back(std::move(phi));
      return true;
    });
    std::sort(result.begin(), result.end());
    // The search is exhaustive, so closure is a consistency check only;
    // skipped when quadratic cost would dominate.
    if (result.size() <= 2000) {
      for (auto const& f : result) {
        for (auto const& g : result) {
          if (!std::binary_search(result.begin(), result.end(), compose(f, g))) {
            throw std::logic_error("automorphism set not closed");
          }
        }
      }
    }
    return result;
  }

  std::optional<std::vector<int>> find_isomorphism(FiniteGroup const& G,
                                                   FiniteGroup const& H) {
    if (G.order() != H.order() || G.is_abelian() != H.is_abelian()
        || sorted_orders(G) != sorted_orders(H)) {
      return std::nullopt;
    }
    std::optional<std::vector<int>> result;
    for_each_isomorphism(G, H, [&](std::vector<int> const& f) {
      result = f;
      return false;
    });
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroups
  ////////////////////////////////////////////////////////////////////////

  Subgroup subgroup_closure(FiniteGroup const& G, std::span<int const> seed) {
    std::size_t const n = G.order();
    std::vector<char> in(n, 0);
    std::vector<int>  elts{0};
    in[0] = 1;
    for (int s : seed) {
      if (!in[s]) {
        in[s] = 1;
        elts.push_back(s);
      }
    }
    // Every product of a new element with a known one, both sides.
    for (std::size_t k = 0; k < elts.size(); ++k) {
      int const x = elts[k];
      for (std::size_t m = 0; m <= k; ++m) {
        int const y = elts[m];
        for (int z : {G.op(x, y), G.op(y, x)}) {
          if (!in[z]) {
            in[z] = 1;
            elts.push_back(z);
          }
        }
      }
    }
    return ElementSet(std::move(elts));
  }

  Subgroup subgroup_closure(FiniteGroup const& G, ElementSet const& seed) {
    return subgroup_closure(G, std::span<int const>(seed.elements()));
  }

  bool is_subgroup(FiniteGroup const& G, ElementSet const& S) {
    if (!S.contains(0)) {
      return false;
    }
    for (int a : S) {
      for (int b : S) {
        if (!S.contains(G.op(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_normal(FiniteGroup const& G, ElementSet const& S) {
    for (std::size_t g = 0; g < G.order(); ++g) {
      for (int x : S) {
        if (!S.contains(G.op(G.op(g, x), G.inverse(g)))) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Subgroup> all_subgroups(FiniteGroup const& G) {
    std::set<Subgroup> found;
    std::vector<Subgroup> cyclic;
    for (std::size_t a = 0; a < G.order(); ++a) {
      int const seed[] = {static_cast<int>(a)};
      auto      C      = subgroup_closure(G, std::span<int const>(seed));
      if (found.insert(C).second) {
        cyclic.push_back(C);
      }
    }
    // Every subgroup is a join of cyclic ones.
    std::vector<Subgroup> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
      std::vector<Subgroup> next;
      for (auto const& S : frontier) {
        for (auto const& C : cyclic) {
          if (C.is_subset_of(S)) {
            continue;
          }
          auto J = subgroup_closure(G, S.unite(C));
          if (found.insert(J).second) {
            next.push_back(J);
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<Subgroup> result(found.begin(), found.end());
    std::sort(result.begin(), result.end(), canonical_less);
    return result;
  }

  QuotientGroup quotient_group(FiniteGroup const& G, Subgroup const& N) {
    std::size_t const n = G.order();
    if (!is_subgroup(G, N)) {
      throw Error(ErrorKind::not_a_subgroup, "quotient by a non-subgroup");
    }
    for (std::size_t g = 0; g < n; ++g) {
      for (int x : N) {
        if (!N.contains(G.op(G.op(g, x), G.inverse(g)))) {
          throw Error(ErrorKind::not_normal,
                      "g x g^-1 leaves the subgroup for g = " + std::to_string(g)
                          + ", x = " + std::to_string(x),
                      {static_cast<int>(g), x});
        }
      }
    }
    std::vector<int> projection(n, -1);
    std::vector<int> reps;
    for (std::size_t g = 0; g < n; ++g) {
      if (projection[g] != -1) {
        continue;
      }
      int const idx = static_cast<int>(reps.size());
      reps.push_back(static_cast<int>(g));
      for (int x : N) {
        projection[G.op(g, x)] = idx;
      }
    }
    std::size_t const m = reps.size();
    std::vector<int>  flat(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        flat[i * m + j] = projection[G.op(reps[i], reps[j])];
      }
    }
    return {FiniteGroup::from_flat(m, std::move(flat)), std::move(projection)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Products
  ////////////////////////////////////////////////////////////////////////

  FiniteGroup semidirect_product(FiniteGroup const&               N,
                                 FiniteGroup const&               H,
                                 std::vector<Automorphism> const& action) {
    std::size_t const nn = N.order();
    std::size_t const nh = H.order();
    if (action.size() != nh) {
      throw Error(ErrorKind::not_an_action,
                  "action must list one automorphism per element of H");
    }
    for (std::size_t b = 0; b < nh; ++b) {
      if (!is_automorphism(N, action[b])) {
        throw Error(ErrorKind::not_an_action,
                    "image of " + std::to_string(b) + " is not an automorphism",
                    {static_cast<int>(b)});
      }
    }
    for (std::size_t b = 0; b < nh; ++b) {
      for (std::size_t d = 0; d < nh; ++d) {
        if (action[H.op(b, d)] != compose(action[b], action[d])) {
          throw Error(ErrorKind::not_an_action,
                      "action is not a homomorphism at (" + std::to_string(b)
                          + ", " + std::to_string(d) + ")",
                      {static_cast<int>(b), static_cast<int>(d)});
        }
      }
    }
    std::size_t const n = nn * nh;
    std::vector<int>  flat(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t const a = x % nn, b = x / nn;
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t const c = y % nn, d = y / nn;
        int const first  = N.op(a, action[b](c));
        int const second = H.op(b, d);
        flat[x * n + y]  = second * static_cast<int>(nn) + first;
      }
    }
    return FiniteGroup::from_flat(n, std::move(flat));
  }

  FiniteGroup direct_product(FiniteGroup const& N, FiniteGroup const& H) {
    return semidirect_product(
        N,
        H,
        std::vector<Automorphism>(H.order(), identity_automorphism(N.order())));
  }

  FiniteGroup cyclic_group(std::size_t n) {
    std::vector<int> flat(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        flat[i * n + j] = static_cast<int>((i + j) % n);
      }
    }
    return FiniteGroup::from_flat(n, std::move(flat));
  }

  FiniteGroup elementary_abelian_group(std::size_t p, std::size_t k) {
    FiniteGroup G = cyclic_group(1);
    for (std::size_t i = 0; i < k; ++i) {
      G = direct_product(G, cyclic_group(p));
    }
    return G;
  }

  FiniteGroup dihedral_group(std::size_t m) {
    FiniteGroup const N   = cyclic_group(m);
    Automorphism      neg = identity_automorphism(m);
    for (std::size_t i = 0; i < m; ++i) {
      neg.perm[i] = N.inverse(i);
    }
    return semidirect_product(N, cyclic_group(2), {identity_automorphism(m), neg});
  }

  FiniteGroup dicyclic_group(std::size_t m) {
    // a^k x^j at index j * 2m + k, with x^2 = a^m and x a x^-1 = a^-1
    std::size_t const h = 2 * m;
    std::size_t const n = 2 * h;
    std::vector<int>  flat(n * n);
    for (std::size_t u = 0; u < n; ++u) {
      long const k = u % h, j = u / h;
      for (std::size_t v = 0; v < n; ++v) {
        long const l  = v % h, i = v / h;
        long       kk = k + (j ? -l : l) + ((j && i) ? static_cast<long>(m) : 0);
        kk            = ((kk % static_cast<long>(h)) + h) % h;
        flat[u * n + v] = static_cast<int>((j ^ i) * h + kk);
      }
    }
    return FiniteGroup::from_flat(n, std::move(flat));
  }

  FiniteGroup quaternion_group() {
    return dicyclic_group(2);
  }

  FiniteGroup alternating_group_4() {
    // (Z_2 x Z_2) x| Z_3, the generator cycling the three involutions
    FiniteGroup const V   = elementary_abelian_group(2, 2);
    Automorphism      rot = {{0, 2, 3, 1}};
    return semidirect_product(
        V, cyclic_group(3), {identity_automorphism(4), rot, compose(rot, rot)});
  }

  ////////////////////////////////////////////////////////////////////////
  // Catalog
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct CatalogEntry {
      std::string                  name;
      std::function<FiniteGroup()> make;
    };

    std::vector<CatalogEntry> catalog_entries(std::size_t order) {
      auto cyc = [order] {
        return CatalogEntry{"Z" + std::to_string(order),
                            [order] { return cyclic_group(order); }};
      };
      switch (order) {
        case 4:
          return {cyc(), {"Z2xZ2", [] { return elementary_abelian_group(2, 2); }}};
        case 6: return {cyc(), {"S3", [] { return dihedral_group(3); }}};
        case 8:
          return {cyc(),
                  {"Z4xZ2",
                   [] { return direct_product(cyclic_group(4), cyclic_group(2)); }},
                  {"Z2xZ2xZ2", [] { return elementary_abelian_group(2, 3); }},
                  {"D8", [] { return dihedral_group(4); }},
                  {"Q8", [] { return quaternion_group(); }}};
        case 9:
          return {cyc(), {"Z3xZ3", [] { return elementary_abelian_group(3, 2); }}};
        case 10: return {cyc(), {"D10", [] { return dihedral_group(5); }}};
        case 12:
          return {cyc(),
                  {"Z6xZ2",
                   [] { return direct_product(cyclic_group(6), cyclic_group(2)); }},
                  {"A4", [] { return alternating_group_4(); }},
                  {"D12", [] { return dihedral_group(6); }},
                  {"Dic12", [] { return dicyclic_group(3); }}};
        case 14: return {cyc(), {"D14", [] { return dihedral_group(7); }}};
        default:
          if (order >= 1 && order <= 15) {
            return {cyc()};
          }
          return {};
      }
    }
  }  // namespace

  std::size_t catalog_size(std::size_t order) {
    return catalog_entries(order).size();
  }

  FiniteGroup catalog_group(std::size_t order, std::size_t index) {
    auto entries = catalog_entries(order);
    if (index >= entries.size()) {
      throw Error(ErrorKind::out_of_catalog,
                  "no catalog group (" + std::to_string(order) + ", "
                      + std::to_string(index) + ")");
    }
    return entries[index].make();
  }

  std::string catalog_name(std::size_t order, std::size_t index) {
    auto entries = catalog_entries(order);
    if (index >= entries.size()) {
      throw Error(ErrorKind::out_of_catalog,
                  "no catalog group (" + std::to_string(order) + ", "
                      + std::to_string(index) + ")");
    }
    return entries[index].name;
  }

  std::size_t catalog_index(FiniteGroup const& G) {
    auto entries = catalog_entries(G.order());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (find_isomorphism(G, entries[i].make())) {
        return i;
      }
    }
    throw Error(ErrorKind::out_of_catalog,
                "group of order " + std::to_string(G.order())
                    + " not in the catalog");
  }

}  // namespace skewbrace
