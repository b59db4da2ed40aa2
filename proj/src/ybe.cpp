#include "skewbrace/ybe.hpp"

#include <array>
#include <map>
#include <numeric>

#include "skewbrace/errors.hpp"

namespace skewbrace {

  namespace {
    bool is_permutation_of_range(Permutation const& p, std::size_t n) {
      if (p.size() != n) {
        return false;
      }
      std::vector<char> seen(n, 0);
      for (int v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]) {
          return false;
        }
        seen[v] = 1;
      }
      return true;
    }
  }  // namespace

  SetSolution SetSolution::build(std::vector<Permutation> lambda, std::vector<Permutation> rho) {
    std::size_t const n = lambda.size();
    if (n == 0) {
      throw Error(ErrorKind::degenerate, "a solution needs at least one point");
    }
    if (rho.size() != n) {
      throw Error(ErrorKind::degenerate, "lambda and rho have different sizes");
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (!is_permutation_of_range(lambda[x], n)) {
        throw Error(ErrorKind::degenerate,
                    "lambda_" + std::to_string(x) + " is not a bijection",
                    {static_cast<int>(x)});
      }
      if (!is_permutation_of_range(rho[x], n)) {
        throw Error(ErrorKind::degenerate,
                    "rho_" + std::to_string(x) + " is not a bijection",
                    {static_cast<int>(x)});
      }
    }
    SetSolution S(std::move(lambda), std::move(rho));
    int const   m = static_cast<int>(n);
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        auto const [a, b] = S(x, y);
        for (int z = 0; z < m; ++z) {
          // r12 r23 r12
          auto const [c, d] = S(b, z);
          auto const [l1, l2] = S(a, c);
          std::array<int, 3> const lhs{l1, l2, d};
          // r23 r12 r23
          auto const [e, f] = S(y, z);
          auto const [g, h] = S(x, e);
          auto const [r2, r3] = S(h, f);
          std::array<int, 3> const rhs{g, r2, r3};
          if (lhs != rhs) {
            throw Error(ErrorKind::braid_failure, "braid relation fails", {x, y, z});
          }
        }
      }
    }
    return S;
  }

  SetSolution from_brace(SkewBrace const& B) {
    std::size_t const        n = B.order();
    std::vector<Permutation> lambda(n, Permutation(n));
    std::vector<Permutation> rho(n, Permutation(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        int const l  = B.lambda(a, b);
        lambda[a][b] = l;
        rho[b][a]    = B.mul(B.mul(B.inv(l), a), b);
      }
    }
    return SetSolution::build(std::move(lambda), std::move(rho));
  }

  SetSolution twist_solution(std::size_t n) {
    Permutation id(n);
    std::iota(id.begin(), id.end(), 0);
    return SetSolution::build(std::vector<Permutation>(n, id), std::vector<Permutation>(n, id));
  }

  SolutionPredicates solution_predicates(SetSolution const& S) {
    SolutionPredicates p{true, true};
    int const          n = static_cast<int>(S.size());
    for (int x = 0; x < n; ++x) {
      if (S(x, x) != std::pair{x, x}) {
        p.diagonal_fixing = false;
      }
      for (int y = 0; y < n; ++y) {
        auto const [u, v] = S(x, y);
        if (S(u, v) != std::pair{x, y}) {
          p.involutive = false;
        }
      }
    }
    return p;
  }

  Retraction retract(SetSolution const& S) {
    std::size_t const n = S.size();
    std::map<std::pair<Permutation, Permutation>, int> classes;
    std::vector<int>                                   class_of(n);
    std::vector<int>                                   representative;
    for (std::size_t x = 0; x < n; ++x) {
      auto key     = std::pair{S.lambda_perms()[x], S.rho_perms()[x]};
      auto [it, fresh] = classes.emplace(std::move(key), static_cast<int>(representative.size()));
      if (fresh) {
        representative.push_back(static_cast<int>(x));
      }
      class_of[x] = it->second;
    }
    std::size_t const        m = representative.size();
    std::vector<Permutation> lambda(m, Permutation(m, -1));
    std::vector<Permutation> rho(m, Permutation(m, -1));
    auto set = [](int& slot, int value, int x, int y) {
      if (slot != -1 && slot != value) {
        throw Error(ErrorKind::ill_defined_retraction,
                    "induced map depends on representatives",
                    {x, y});
      }
      slot = value;
    };
    // every pair of representatives, so that well-definedness is checked
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto const [u, v] = S(static_cast<int>(x), static_cast<int>(y));
        int const cx = class_of[x], cy = class_of[y];
        set(lambda[cx][cy], class_of[u], static_cast<int>(x), static_cast<int>(y));
        set(rho[cy][cx], class_of[v], static_cast<int>(x), static_cast<int>(y));
      }
    }
    return {SetSolution::build(std::move(lambda), std::move(rho)), std::move(class_of)};
  }

  std::vector<std::size_t> retraction_sizes(SetSolution const& S, std::size_t max_steps) {
    std::vector<std::size_t> sizes{S.size()};
    SetSolution              current = S;
    for (std::size_t step = 0; step < max_steps && current.size() > 1; ++step) {
      SetSolution next = retract(current).solution;
      if (next.size() == current.size()) {
        break;
      }
      sizes.push_back(next.size());
      current = std::move(next);
    }
    return sizes;
  }

  std::optional<int> multipermutation_level(SetSolution const& S, std::size_t max_steps) {
    if (max_steps == 0) {
      max_steps = S.size();
    }
    auto const sizes = retraction_sizes(S, max_steps);
    if (sizes.back() != 1) {
      return std::nullopt;
    }
    return static_cast<int>(sizes.size() - 1);
  }

}  // namespace skewbrace
