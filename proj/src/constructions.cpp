#include "skewbrace/constructions.hpp"

#include <stdexcept>

#include "skewbrace/errors.hpp"
#include "skewbrace/series.hpp"

namespace skewbrace {

  std::string to_string(Family f) {
    switch (f) {
      case Family::two_power: return "two_power";
      case Family::odd_p_cyclic: return "odd_p_cyclic";
      case Family::odd_p_nonabelian: return "odd_p_nonabelian";
      case Family::trivial: return "trivial";
      case Family::almost_trivial: return "almost_trivial";
    }
    return "unknown";
  }

  std::optional<Family> parse_family(std::string const& tag) {
    for (auto f : {Family::two_power,
                   Family::odd_p_cyclic,
                   Family::odd_p_nonabelian,
                   Family::trivial,
                   Family::almost_trivial}) {
      if (to_string(f) == tag) {
        return f;
      }
    }
    return std::nullopt;
  }

  namespace {
    bool is_prime(int m) {
      if (m < 2) {
        return false;
      }
      for (int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
          return false;
        }
      }
      return true;
    }

    // p^e, or 0 once it exceeds `cap`.
    std::size_t bounded_power(int p, int e, std::size_t cap) {
      std::size_t r = 1;
      for (int i = 0; i < e; ++i) {
        r *= static_cast<std::size_t>(p);
        if (r > cap) {
          return 0;
        }
      }
      return r;
    }

    void check_bound(std::size_t order, Limits const& limits) {
      if (order == 0) {
        throw Error(ErrorKind::bound_exceeded,
                    "construction limited to order "
                        + std::to_string(limits.structure_order));
      }
    }

    FiniteGroup from_rule(std::size_t n, auto rule) {
      std::vector<int> flat(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          flat[a * n + b] = static_cast<int>(rule(a, b));
        }
      }
      return FiniteGroup::from_flat(n, std::move(flat));
    }

    void require_bi_skew(SkewBrace const& B, char const* what) {
      if (!satisfies_skew_distributivity(B.multiplicative(), B.additive())) {
        throw std::logic_error(std::string(what) + " is not bi-skew");
      }
    }
  }  // namespace

  SkewBrace two_power_brace(int n, Limits const& limits) {
    if (n < 2) {
      throw Error(ErrorKind::bad_params, "two_power requires n >= 2");
    }
    std::size_t const N = bounded_power(2, n, limits.structure_order);
    check_bound(N, limits);
    auto mul = from_rule(N, [N](std::size_t a, std::size_t b) {
      return (a % 2 == 0 ? a + b : a + N - b) % N;
    });
    auto B = SkewBrace::from_groups(cyclic_group(N), std::move(mul));
    require_bi_skew(B, "two_power brace");
    return B;
  }

  SkewBrace odd_p_cyclic_brace(int p, int n, Limits const& limits) {
    if (!is_prime(p) || p == 2 || n < 1) {
      throw Error(ErrorKind::bad_params,
                  "odd_p_cyclic requires an odd prime p and n >= 1");
    }
    std::size_t const N = bounded_power(p, n, limits.structure_order);
    check_bound(N, limits);
    std::size_t const P   = static_cast<std::size_t>(p);
    auto              mul = from_rule(N, [N, P](std::size_t a, std::size_t b) {
      return (a + b + (P * a % N) * b) % N;
    });
    auto B = SkewBrace::from_groups(cyclic_group(N), std::move(mul));
    // lambda_a is multiplication by 1 + p a
    for (std::size_t a = 0; a < N; ++a) {
      for (std::size_t b = 0; b < N; ++b) {
        if (static_cast<std::size_t>(B.lambda(a, b)) != (1 + P * a) % N * b % N) {
          throw std::logic_error("odd_p_cyclic: lambda is not 1 + p a");
        }
      }
    }
    // 1^l = 1 + (1 + p) + ... + (1 + p)^{l-1}, and 1 generates (B, o)
    std::size_t sum = 0, term = 1;
    int         x   = 0;
    for (std::size_t l = 0; l <= N; ++l) {
      if (static_cast<std::size_t>(x) != sum) {
        throw std::logic_error("odd_p_cyclic: powers of 1 do not match");
      }
      x    = B.mul(x, 1);
      sum  = (sum + term) % N;
      term = term * (1 + P) % N;
    }
    if (static_cast<std::size_t>(B.multiplicative().element_order(1)) != N) {
      throw std::logic_error("odd_p_cyclic: 1 does not generate (B, o)");
    }
    // bi-skew only while p^2 a b vanishes, i.e. n <= 2
    return B;
  }

  SkewBrace odd_p_nonabelian_brace(int p, int n, Limits const& limits) {
    if (!is_prime(p) || p == 2 || n < 2) {
      throw Error(ErrorKind::bad_params,
                  "odd_p_nonabelian requires an odd prime p and n >= 2");
    }
    std::size_t const order = bounded_power(p, n + 1, limits.structure_order);
    check_bound(order, limits);
    std::size_t const P  = static_cast<std::size_t>(p);
    std::size_t const pn = order / P;       // p^n, the order of x
    std::size_t const K  = 1 + pn / P;      // 1 + p^{n-1}

    // K^l mod p^n for l < p
    std::vector<std::size_t> Kpow(P, 1);
    for (std::size_t l = 1; l < P; ++l) {
      Kpow[l] = Kpow[l - 1] * K % pn;
    }
    // (jy + ix) + (ly + kx) = (j + l) y + (i K^l + k) x
    auto add = from_rule(order, [&](std::size_t u, std::size_t v) {
      std::size_t const j = u / pn, i = u % pn;
      std::size_t const l = v / pn, k = v % pn;
      return ((j + l) % P) * pn + (i * Kpow[l] + k) % pn;
    });
    int const x = 1;
    int const y = static_cast<int>(pn);
    if (add.op(add.op(add.inverse(y), x), y) != static_cast<int>(K % pn)) {
      throw std::logic_error("odd_p_nonabelian: -y + x + y != (1 + p^{n-1}) x");
    }
    // conjugation by x, u -> -x + u + x, and its powers
    std::vector<Automorphism> conj{identity_automorphism(order)};
    Automorphism              iota = identity_automorphism(order);
    for (std::size_t u = 0; u < order; ++u) {
      iota.perm[u] = add.op(add.op(add.inverse(x), u), x);
    }
    for (std::size_t j = 1; j < P; ++j) {
      conj.push_back(compose(iota, conj.back()));
    }
    auto mul = from_rule(order, [&](std::size_t a, std::size_t b) {
      return add.op(a, conj[a / pn](b));
    });
    auto B = SkewBrace::from_groups(add, std::move(mul));

    // y^k = k y - C(k, 2) p^{n-1} x
    for (std::size_t k = 0; k <= P; ++k) {
      int const lhs  = B.mul_power(y, static_cast<long>(k));
      int const ky   = B.add_power(y, static_cast<long>(k));
      std::size_t const binom = k == 0 ? 0 : k * (k - 1) / 2;
      std::size_t const c     = binom % pn * (pn / P) % pn;
      int const         rhs   = B.sub(ky, static_cast<int>(c));
      if (lhs != rhs) {
        throw std::logic_error("odd_p_nonabelian: power formula for y fails");
      }
    }
    if (B.additive().is_abelian() || B.multiplicative().is_abelian()
        || !find_isomorphism(B.additive(), B.multiplicative())) {
      throw std::logic_error(
          "odd_p_nonabelian: groups are not isomorphic non-abelian groups");
    }
    if (upper_central_series(B).length != 2) {
      throw std::logic_error("odd_p_nonabelian: central class is not 2");
    }
    require_bi_skew(B, "odd_p_nonabelian brace");
    return B;
  }

  SkewBrace trivial_brace(FiniteGroup const& G) {
    return SkewBrace::from_groups(G, G);
  }

  SkewBrace almost_trivial_brace(FiniteGroup const& G) {
    return SkewBrace::from_groups(G, G.opposite());
  }

  SkewBrace construct(FamilyParams const& params, Limits const& limits) {
    switch (params.family) {
      case Family::two_power:
        if (params.p != 2) {
          throw Error(ErrorKind::bad_params, "two_power requires p = 2");
        }
        return two_power_brace(params.n, limits);
      case Family::odd_p_cyclic: return odd_p_cyclic_brace(params.p, params.n, limits);
      case Family::odd_p_nonabelian:
        return odd_p_nonabelian_brace(params.p, params.n, limits);
      case Family::trivial:
      case Family::almost_trivial:
        if (!params.base) {
          throw Error(ErrorKind::bad_params, "family requires a base group");
        }
        return params.family == Family::trivial ? trivial_brace(*params.base)
                                                : almost_trivial_brace(*params.base);
    }
    throw Error(ErrorKind::bad_params, "unknown family");
  }

  std::vector<std::string> family_labels(FamilyParams const& params) {
    if (params.family != Family::odd_p_nonabelian) {
      return {};
    }
    std::size_t const order = bounded_power(params.p, params.n + 1, 1u << 30);
    std::size_t const pn    = order / static_cast<std::size_t>(params.p);
    std::vector<std::string> labels;
    for (std::size_t u = 0; u < order; ++u) {
      labels.push_back(std::to_string(u / pn) + "y+" + std::to_string(u % pn) + "x");
    }
    return labels;
  }

}  // namespace skewbrace
