#ifndef SKEWBRACE_RATIONAL_HPP_
#define SKEWBRACE_RATIONAL_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace skewbrace {

  using BigInt   = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  // "n" or "n/d"; throws domain_violation on malformed input.
  Rational    parse_rational(std::string const& text);
  std::string to_string(Rational const& q);

  // Z_P: the rationals whose reduced denominator avoids a finite set S of
  // forbidden primes.
  class LocalizedDomain {
   public:
    LocalizedDomain() = default;
    // Throws invalid_spec if some entry is not a prime.
    explicit LocalizedDomain(std::vector<int> forbidden);

    std::vector<int> const& forbidden() const noexcept {
      return _forbidden;
    }

    bool forbids(int p) const;
    bool contains(Rational const& q) const;

    // q in 2 Z_P, i.e. reduced numerator even; meaningful when 2 is forbidden.
    static bool is_even(Rational const& q);

   private:
    std::vector<int> _forbidden;
  };

  enum class RationalVariant { a2a, a2b, c1, c2 };

  std::string                    to_string(RationalVariant v);
  std::optional<RationalVariant> parse_variant(std::string const& tag);

  // One of four skew brace structures on a localized domain X:
  //   a2a  x o y = x + (-1)^{phi(x)} y, phi(x) the parity of x modulo 2X
  //   a2b  x o y = x + y - xy + (m1/m2) xy
  //   c1   o is rational addition, u + v = u o lambda_u(v) where lambda
  //        has kernel 2X and sends elements outside 2X to inversion
  //   c2   the opposite of c1
  struct RationalBraceSpec {
    RationalVariant variant = RationalVariant::a2a;
    LocalizedDomain domain;
    BigInt          m1 = 1;
    BigInt          m2 = 4;
    // distinguished element outside 2X (c1 / c2)
    Rational        x = 1;

    // Throws invalid_spec naming the violated constraint.
    void validate() const;
  };

  bool membership(RationalBraceSpec const& spec, Rational const& q);

  // Every operation checks that inputs and results lie in the domain and
  // throws domain_violation otherwise.
  Rational add(RationalBraceSpec const& spec, Rational const& a, Rational const& b);
  Rational neg(RationalBraceSpec const& spec, Rational const& a);
  Rational circ(RationalBraceSpec const& spec, Rational const& a, Rational const& b);
  Rational circ_inverse(RationalBraceSpec const& spec, Rational const& a);
  // lambda_a(b) = -a + a o b
  Rational lambda_apply(RationalBraceSpec const& spec,
                        Rational const&          a,
                        Rational const&          b);
  // a * b = lambda_a(b) - b
  Rational star_rat(RationalBraceSpec const& spec, Rational const& a, Rational const& b);

  struct AxiomReport {
    bool                  passed  = true;
    std::size_t           samples = 0;
    std::string           failed_check;
    std::vector<Rational> counterexample;
    // lambda_a = id was compared with the expected kernel for every sample
    std::size_t           kernel_checks = 0;

    std::string summary() const;
  };

  // Draws `count` triples of domain elements deterministically from `seed`
  // and checks the group axioms of o (and of + for c1/c2), skew
  // distributivity, that each lambda_a is additive, that lambda is a
  // homomorphism, closure, and the expected kernel of lambda.
  AxiomReport axiom_sample_check(RationalBraceSpec const& spec,
                                 std::uint64_t            seed,
                                 std::size_t              count);

  // Sampled element of the domain: numerator uniform in [-bound, bound],
  // denominator a product of at most three allowed primes below 50.
  class DomainSampler {
   public:
    DomainSampler(LocalizedDomain const& domain,
                  std::uint64_t          seed,
                  std::vector<int> const& also_excluded = {},
                  long                   bound         = 60);
    Rational next();

   private:
    std::mt19937_64  _rng;
    std::vector<int> _allowed;
    long             _bound;
  };

  struct DedekindWitness {
    int         prime = 0;
    // Y = {a/b in X : p | a, p does not divide b}
    std::string y_rule;
    Rational    lambda_argument;  // 1/p^2
    Rational    point;            // p
    Rational    violating;        // lambda_{1/p^2}(p)
    bool        violating_in_y = true;
    std::size_t samples        = 0;
    bool        additive_subgroup   = false;
    bool        multiplicatively_closed = false;
    bool        inverse_closed      = false;

    // Y is a sub-skew brace and lambda moves an element of Y outside Y.
    bool certifies_non_dedekind() const noexcept {
      return additive_subgroup && multiplicatively_closed && inverse_closed
             && !violating_in_y;
    }
  };

  bool in_witness_subgroup(RationalBraceSpec const& spec, int p, Rational const& q);

  // For a2b only; throws bad_prime unless p is a prime outside S dividing
  // neither m2 nor m1 - m2.
  DedekindWitness dedekind_witness(RationalBraceSpec const& spec,
                                   int                      p,
                                   std::uint64_t            seed    = 42,
                                   std::size_t              samples = 1000);

}  // namespace skewbrace

#endif  // SKEWBRACE_RATIONAL_HPP_
