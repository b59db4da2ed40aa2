// Independent reference computations used by the tests. They work from raw
// tables and definitions and avoid the library routines they check.
#ifndef SKEWBRACE_TESTS_ORACLES_HPP_
#define SKEWBRACE_TESTS_ORACLES_HPP_

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/group.hpp"
#include "skewbrace/ybe.hpp"

namespace oracle {

  using Flat = std::vector<int>;

  inline int op(Flat const& t, int n, int a, int b) {
    return t[a * n + b];
  }

  inline int inv(Flat const& t, int n, int a) {
    for (int b = 0; b < n; ++b) {
      if (op(t, n, a, b) == 0) {
        return b;
      }
    }
    return -1;
  }

  // a o (b + c) == a o b - a + a o c on every triple
  inline bool distributive(Flat const& add, Flat const& mul, int n) {
    for (int a = 0; a < n; ++a) {
      int const na = inv(add, n, a);
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          int const lhs = op(mul, n, a, op(add, n, b, c));
          int const rhs = op(add, n, op(add, n, op(mul, n, a, b), na), op(mul, n, a, c));
          if (lhs != rhs) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // sigma(H): the table of H transported along a bijection fixing 0
  inline Flat relabel(Flat const& t, int n, std::vector<int> const& sigma) {
    std::vector<int> back(n);
    for (int i = 0; i < n; ++i) {
      back[sigma[i]] = i;
    }
    Flat out(n * n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        out[a * n + b] = sigma[op(t, n, back[a], back[b])];
      }
    }
    return out;
  }

  struct BruteForceCount {
    std::size_t labelled = 0;  // (add, mul) table pairs over all catalog adds
    std::size_t classes  = 0;
  };

  // Every relabelling of every catalog group as the o table against every
  // catalog group as the + table; distributivity tested directly; classes
  // by trying all bijections.
  inline BruteForceCount brute_force_braces(std::size_t order) {
    int const n = static_cast<int>(order);
    std::vector<Flat> groups;
    for (std::size_t i = 0; i < skewbrace::catalog_size(order); ++i) {
      groups.push_back(skewbrace::catalog_group(order, i).flat());
    }
    std::vector<std::pair<Flat, Flat>> found;
    std::vector<int>                   sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    for (auto const& add : groups) {
      std::set<Flat> muls;
      for (auto const& H : groups) {
        std::vector<int> s = sigma;
        do {
          muls.insert(relabel(H, n, s));
        } while (std::next_permutation(s.begin() + 1, s.end()));
      }
      for (auto const& mul : muls) {
        if (distributive(add, mul, n)) {
          found.emplace_back(add, mul);
        }
      }
    }
    BruteForceCount                    out;
    out.labelled = found.size();
    std::vector<std::pair<Flat, Flat>> reps;
    for (auto const& [add, mul] : found) {
      bool seen = false;
      for (auto const& [radd, rmul] : reps) {
        std::vector<int> s = sigma;
        do {
          if (relabel(add, n, s) == radd && relabel(mul, n, s) == rmul) {
            seen = true;
            break;
          }
        } while (std::next_permutation(s.begin() + 1, s.end()));
        if (seen) {
          break;
        }
      }
      if (!seen) {
        reps.emplace_back(add, mul);
      }
    }
    out.classes = reps.size();
    return out;
  }

  inline std::vector<int> range(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
  }

  // lambda_a(b) = -a + a o b from the raw tables
  inline int lam(skewbrace::SkewBrace const& B, int a, int b) {
    auto const& add = B.additive().flat();
    auto const& mul = B.multiplicative().flat();
    int const   n   = static_cast<int>(B.order());
    return op(add, n, inv(add, n, a), op(mul, n, a, b));
  }

  inline int star(skewbrace::SkewBrace const& B, int a, int b) {
    auto const& add = B.additive().flat();
    int const   n   = static_cast<int>(B.order());
    return op(add, n, lam(B, a, b), inv(add, n, b));
  }

  inline int comm(Flat const& t, int n, int a, int b) {
    return op(t, n, op(t, n, a, b), op(t, n, inv(t, n, a), inv(t, n, b)));
  }

  // Z_{k+1} = {a : a * b, [a, b]_+, [a, b]_o in Z_k for all b}; with
  // `with_mul` false this is the socle series instead.
  inline std::vector<std::vector<int>> iterated_series(skewbrace::SkewBrace const& B,
                                                       bool                        with_mul) {
    int const   n   = static_cast<int>(B.order());
    auto const& add = B.additive().flat();
    auto const& mul = B.multiplicative().flat();
    std::vector<std::vector<int>> series{{0}};
    while (true) {
      auto const&   Z = series.back();
      auto          in = [&](int x) { return std::binary_search(Z.begin(), Z.end(), x); };
      std::vector<int> next;
      for (int a = 0; a < n; ++a) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) {
          ok = in(star(B, a, b)) && in(comm(add, n, a, b))
               && (!with_mul || in(comm(mul, n, a, b)));
        }
        if (ok) {
          next.push_back(a);
        }
      }
      if (next == Z) {
        return series;
      }
      series.push_back(next);
    }
  }

  inline bool closed(Flat const& t, int n, std::vector<int> const& S) {
    for (int a : S) {
      for (int b : S) {
        if (!std::binary_search(S.begin(), S.end(), op(t, n, a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  // All subsets containing 0 closed under both operations (finite, so
  // closure under products suffices).
  inline std::vector<std::vector<int>> sub_braces_by_subsets(skewbrace::SkewBrace const& B) {
    int const n = static_cast<int>(B.order());
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> S{0};
      for (int i = 1; i < n; ++i) {
        if (mask & (1u << (i - 1))) {
          S.push_back(i);
        }
      }
      if (closed(B.additive().flat(), n, S) && closed(B.multiplicative().flat(), n, S)) {
        out.push_back(S);
      }
    }
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
  }

  // All bijections fixing 0 that preserve the table.
  inline std::size_t automorphism_count(Flat const& t, int n) {
    std::vector<int> s = range(n);
    std::size_t      count = 0;
    do {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) {
        for (int b = 0; b < n && ok; ++b) {
          ok = s[op(t, n, a, b)] == op(t, n, s[a], s[b]);
        }
      }
      count += ok;
    } while (std::next_permutation(s.begin() + 1, s.end()));
    return count;
  }

  // Units of Z_n, i.e. the automorphisms x -> u x of the cyclic group.
  inline std::size_t unit_count(int n) {
    std::size_t c = 0;
    for (int u = 1; u < n; ++u) {
      c += std::gcd(u, n) == 1;
    }
    return n == 1 ? 1 : c;
  }

  // Direct iteration: merge points with equal (lambda_x, rho_x) and rebuild
  // the induced maps on class representatives, without the library.
  inline std::vector<std::size_t> retraction_sizes_direct(skewbrace::SetSolution const& S) {
    std::vector<skewbrace::Permutation> L = S.lambda_perms(), R = S.rho_perms();
    std::vector<std::size_t> sizes{L.size()};
    while (L.size() > 1) {
      std::size_t const n = L.size();
      std::vector<int>  cls(n, -1), rep;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t r = 0; r < rep.size(); ++r) {
          if (L[rep[r]] == L[x] && R[rep[r]] == R[x]) {
            cls[x] = static_cast<int>(r);
            break;
          }
        }
        if (cls[x] < 0) {
          cls[x] = static_cast<int>(rep.size());
          rep.push_back(static_cast<int>(x));
        }
      }
      if (rep.size() == n) {
        break;
      }
      std::size_t const        m = rep.size();
      std::vector<skewbrace::Permutation> L2(m, skewbrace::Permutation(m)), R2(m, skewbrace::Permutation(m));
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          L2[i][j] = cls[L[rep[i]][rep[j]]];
          R2[i][j] = cls[R[rep[i]][rep[j]]];
        }
      }
      L = std::move(L2);
      R = std::move(R2);
      sizes.push_back(m);
    }
    return sizes;
  }

}  // namespace oracle

#endif  // SKEWBRACE_TESTS_ORACLES_HPP_
