#ifndef SKEWBRACE_YBE_HPP_
#define SKEWBRACE_YBE_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "brace.hpp"

namespace skewbrace {

  using Permutation = std::vector<int>;

  // Finite set-theoretic solution of the Yang-Baxter equation on
  // {0, ..., n-1}: r(x, y) = (lambda_x(y), rho_y(x)).
  class SetSolution {
   public:
    // Checks that every lambda_x and rho_x is a bijection (degenerate, with
    // witness {x}) and the braid relation r12 r23 r12 = r23 r12 r23 on all
    // triples (braid_failure, witness {x, y, z}).
    static SetSolution build(std::vector<Permutation> lambda, std::vector<Permutation> rho);

    std::size_t size() const noexcept {
      return _lambda.size();
    }

    int lambda(int x, int y) const noexcept {
      return _lambda[x][y];
    }

    int rho(int y, int x) const noexcept {
      return _rho[y][x];
    }

    std::pair<int, int> operator()(int x, int y) const noexcept {
      return {lambda(x, y), rho(y, x)};
    }

    std::vector<Permutation> const& lambda_perms() const noexcept {
      return _lambda;
    }

    std::vector<Permutation> const& rho_perms() const noexcept {
      return _rho;
    }

    bool operator==(SetSolution const&) const = default;

   private:
    SetSolution(std::vector<Permutation> lambda, std::vector<Permutation> rho)
        : _lambda(std::move(lambda)), _rho(std::move(rho)) {}

    std::vector<Permutation> _lambda;
    std::vector<Permutation> _rho;
  };

  inline SetSolution build_solution(std::vector<Permutation> lambda,
                                    std::vector<Permutation> rho) {
    return SetSolution::build(std::move(lambda), std::move(rho));
  }

  // r_B(a, b) = (lambda_a(b), lambda_a(b)^-1 o a o b)
  SetSolution from_brace(SkewBrace const& B);

  // r(x, y) = (y, x)
  SetSolution twist_solution(std::size_t n);

  struct SolutionPredicates {
    bool involutive      = false;  // r^2 = id
    bool diagonal_fixing = false;  // r(x, x) = (x, x)
  };

  SolutionPredicates solution_predicates(SetSolution const& S);

  struct Retraction {
    SetSolution      solution;
    // x -> index of its class [x]
    std::vector<int> class_of;
  };

  // Identifies x and y when lambda_x = lambda_y and rho_x = rho_y; classes
  // are numbered by first occurrence. Throws ill_defined_retraction if the
  // induced map depends on representatives.
  Retraction retract(SetSolution const& S);

  // |X|, |Ret(X)|, |Ret^2(X)|, ... for at most max_steps retractions,
  // stopping early at size 1 or when the size stops changing.
  std::vector<std::size_t> retraction_sizes(SetSolution const& S, std::size_t max_steps);

  // Smallest m with |Ret^m(X)| = 1, or nullopt if the sizes stabilise above
  // 1 within max_steps (0 means |X|).
  std::optional<int> multipermutation_level(SetSolution const& S, std::size_t max_steps = 0);

}  // namespace skewbrace

#endif  // SKEWBRACE_YBE_HPP_
