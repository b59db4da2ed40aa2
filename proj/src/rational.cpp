#include "skewbrace/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "skewbrace/errors.hpp"

namespace skewbrace {

  namespace mp = boost::multiprecision;

  namespace {
    bool is_prime(long m) {
      if (m < 2) {
        return false;
      }
      for (long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
          return false;
        }
      }
      return true;
    }

    bool divides(int p, BigInt const& v) {
      return v % p == 0;
    }

    [[noreturn]] void invalid(std::string const& what) {
      throw Error(ErrorKind::invalid_spec, what);
    }
  }  // namespace

  Rational parse_rational(std::string const& text) {
    auto const slash = text.find('/');
    try {
      auto const num_text = text.substr(0, slash);
      auto const den_text = slash == std::string::npos ? "1" : text.substr(slash + 1);
      auto       valid    = [](std::string const& s) {
        std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
        return s.size() > start
               && std::all_of(s.begin() + start, s.end(), [](unsigned char c) {
                    return std::isdigit(c) != 0;
                  });
      };
      if (!valid(num_text) || !valid(den_text)) {
        throw std::invalid_argument("not a fraction");
      }
      BigInt const num(num_text);
      BigInt const den(den_text);
      if (den == 0) {
        throw std::invalid_argument("zero denominator");
      }
      return Rational(num, den);
    } catch (std::exception const& e) {
      throw Error(ErrorKind::domain_violation,
                  "cannot parse '" + text + "' as a fraction (" + e.what() + ")");
    }
  }

  std::string to_string(Rational const& q) {
    return q.str();
  }

  LocalizedDomain::LocalizedDomain(std::vector<int> forbidden)
      : _forbidden(std::move(forbidden)) {
    std::sort(_forbidden.begin(), _forbidden.end());
    _forbidden.erase(std::unique(_forbidden.begin(), _forbidden.end()), _forbidden.end());
    for (int p : _forbidden) {
      if (!is_prime(p)) {
        invalid("forbidden entry " + std::to_string(p) + " is not a prime");
      }
    }
  }

  bool LocalizedDomain::forbids(int p) const {
    return std::binary_search(_forbidden.begin(), _forbidden.end(), p);
  }

  bool LocalizedDomain::contains(Rational const& q) const {
    BigInt const den = mp::denominator(q);
    return std::none_of(
        _forbidden.begin(), _forbidden.end(), [&](int p) { return divides(p, den); });
  }

  bool LocalizedDomain::is_even(Rational const& q) {
    return divides(2, mp::numerator(q));
  }

  std::string to_string(RationalVariant v) {
    switch (v) {
      case RationalVariant::a2a: return "a2a";
      case RationalVariant::a2b: return "a2b";
      case RationalVariant::c1: return "c1";
      case RationalVariant::c2: return "c2";
    }
    return "unknown";
  }

  std::optional<RationalVariant> parse_variant(std::string const& tag) {
    std::string lower = tag;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) {
      return static_cast<char>(std::tolower(c));
    });
    for (auto v :
         {RationalVariant::a2a, RationalVariant::a2b, RationalVariant::c1, RationalVariant::c2}) {
      if (to_string(v) == lower) {
        return v;
      }
    }
    return std::nullopt;
  }

  void RationalBraceSpec::validate() const {
    if (variant == RationalVariant::a2b) {
      if (m2 <= 0) {
        invalid("m2 > 0 required");
      }
      if (mp::gcd(m1, m2) != 1) {
        invalid("m1 and m2 must be coprime");
      }
      BigInt const diff = m2 - m1;
      if (diff == 0 || diff == 1 || diff == -1) {
        invalid("m2 - m1 must not be 0, 1 or -1");
      }
      if (domain.forbidden().empty()) {
        invalid("forbidden set must be non-empty (domain not (m2 - m1)-divisible)");
      }
      for (int p : domain.forbidden()) {
        if (!divides(p, diff)) {
          invalid("forbidden prime " + std::to_string(p) + " does not divide m2 - m1");
        }
      }
      if (!domain.contains(Rational(m1, m2))) {
        invalid("m1/m2 is not in the domain");
      }
      return;
    }
    if (!domain.forbids(2)) {
      invalid("2 must be forbidden (domain not 2-divisible)");
    }
    if (variant == RationalVariant::c1 || variant == RationalVariant::c2) {
      if (!domain.contains(x)) {
        invalid("x = " + to_string(x) + " is not in the domain");
      }
      if (LocalizedDomain::is_even(x)) {
        invalid("x = " + to_string(x) + " lies in 2X");
      }
    }
  }

  bool membership(RationalBraceSpec const& spec, Rational const& q) {
    return spec.domain.contains(q);
  }

  namespace {
    Rational const& checked(RationalBraceSpec const& spec, Rational const& q) {
      if (!spec.domain.contains(q)) {
        throw Error(ErrorKind::domain_violation, to_string(q) + " is not in the domain");
      }
      return q;
    }

    bool even(Rational const& q) {
      return LocalizedDomain::is_even(q);
    }

    // c1 addition: u + v = u + v over Q for u in 2X, u - v otherwise.
    Rational c1_add(Rational const& u, Rational const& v) {
      return even(u) ? Rational(u + v) : Rational(u - v);
    }
  }  // namespace

  Rational add(RationalBraceSpec const& spec, Rational const& a, Rational const& b) {
    checked(spec, a);
    checked(spec, b);
    Rational r;
    switch (spec.variant) {
      case RationalVariant::a2a:
      case RationalVariant::a2b: r = a + b; break;
      case RationalVariant::c1: r = c1_add(a, b); break;
      case RationalVariant::c2: r = c1_add(b, a); break;
    }
    return checked(spec, r);
  }

  Rational neg(RationalBraceSpec const& spec, Rational const& a) {
    checked(spec, a);
    Rational r = -a;
    // elements outside 2X have order 2 in c1 and c2
    if ((spec.variant == RationalVariant::c1 || spec.variant == RationalVariant::c2)
        && !even(a)) {
      r = a;
    }
    return checked(spec, r);
  }

  Rational circ(RationalBraceSpec const& spec, Rational const& a, Rational const& b) {
    checked(spec, a);
    checked(spec, b);
    Rational r;
    switch (spec.variant) {
      case RationalVariant::a2a: r = even(a) ? Rational(a + b) : Rational(a - b); break;
      case RationalVariant::a2b:
        r = a + b - a * b + Rational(spec.m1, spec.m2) * a * b;
        break;
      case RationalVariant::c1:
      case RationalVariant::c2: r = a + b; break;
    }
    return checked(spec, r);
  }

  Rational circ_inverse(RationalBraceSpec const& spec, Rational const& a) {
    checked(spec, a);
    Rational r;
    switch (spec.variant) {
      case RationalVariant::a2a: r = even(a) ? Rational(-a) : a; break;
      case RationalVariant::a2b: {
        Rational const den = 1 - a + Rational(spec.m1, spec.m2) * a;
        if (den == 0) {
          throw Error(ErrorKind::domain_violation,
                      to_string(a) + " has no inverse (1 - a + (m1/m2) a = 0)");
        }
        r = -a / den;
        break;
      }
      case RationalVariant::c1:
      case RationalVariant::c2: r = -a; break;
    }
    return checked(spec, r);
  }

  Rational lambda_apply(RationalBraceSpec const& spec,
                        Rational const&          a,
                        Rational const&          b) {
    return add(spec, neg(spec, a), circ(spec, a, b));
  }

  Rational star_rat(RationalBraceSpec const& spec, Rational const& a, Rational const& b) {
    return add(spec, lambda_apply(spec, a, b), neg(spec, b));
  }

  DomainSampler::DomainSampler(LocalizedDomain const& domain,
                               std::uint64_t          seed,
                               std::vector<int> const& also_excluded,
                               long                   bound)
      : _rng(seed), _bound(bound) {
    for (int p = 2; p < 50; ++p) {
      if (is_prime(p) && !domain.forbids(p)
          && std::find(also_excluded.begin(), also_excluded.end(), p)
                 == also_excluded.end()) {
        _allowed.push_back(p);
      }
    }
  }

  Rational DomainSampler::next() {
    std::uniform_int_distribution<long> numerator(-_bound, _bound);
    std::uniform_int_distribution<int>  factors(0, 3);
    long const                          num = numerator(_rng);
    BigInt                              den = 1;
    if (!_allowed.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, _allowed.size() - 1);
      for (int k = factors(_rng); k > 0; --k) {
        den *= _allowed[pick(_rng)];
      }
    }
    return Rational(BigInt(num), den);
  }

  std::string AxiomReport::summary() const {
    if (!passed) {
      std::string s = "fail: " + failed_check + " at (";
      for (std::size_t i = 0; i < counterexample.size(); ++i) {
        s += (i ? ", " : "") + to_string(counterexample[i]);
      }
      return s + ")";
    }
    return "pass at confidence of " + std::to_string(samples) + " samples";
  }

  AxiomReport axiom_sample_check(RationalBraceSpec const& spec,
                                 std::uint64_t            seed,
                                 std::size_t              count) {
    spec.validate();
    DomainSampler sampler(spec.domain, seed);
    AxiomReport   report;

    bool const kernel_is_2x =
        spec.variant == RationalVariant::a2a || spec.variant == RationalVariant::c1;
    Rational const zero = 0;
    Rational const one  = 1;

    for (std::size_t i = 0; i < count; ++i) {
      Rational const a = sampler.next();
      Rational const b = sampler.next();
      Rational const c = sampler.next();
      auto fail = [&](std::string const& check) {
        report.passed         = false;
        report.failed_check   = check;
        report.counterexample = {a, b, c};
      };
      auto plus  = [&](Rational const& u, Rational const& v) { return add(spec, u, v); };
      auto minus = [&](Rational const& u) { return neg(spec, u); };
      auto o     = [&](Rational const& u, Rational const& v) { return circ(spec, u, v); };
      auto lam   = [&](Rational const& u, Rational const& v) {
        return lambda_apply(spec, u, v);
      };

      try {
        if (o(o(a, b), c) != o(a, o(b, c))) {
          fail("o associativity");
        } else if (o(a, zero) != a || o(zero, a) != a) {
          fail("o identity");
        } else if (auto const ia = circ_inverse(spec, a);
                   o(a, ia) != zero || o(ia, a) != zero) {
          fail("o inverse");
        } else if (plus(plus(a, b), c) != plus(a, plus(b, c))) {
          fail("+ associativity");
        } else if (plus(a, zero) != a || plus(zero, a) != a) {
          fail("+ identity");
        } else if (plus(a, minus(a)) != zero || plus(minus(a), a) != zero) {
          fail("+ inverse");
        } else if (o(a, plus(b, c)) != plus(plus(o(a, b), minus(a)), o(a, c))) {
          fail("skew distributivity");
        } else if (lam(o(a, b), c) != lam(a, lam(b, c))) {
          fail("lambda homomorphism");
        } else if (lam(a, plus(b, c)) != plus(lam(a, b), lam(a, c))) {
          fail("lambda additivity");
        }
        if (!report.passed) {
          return report;
        }

        // kernel: lambda_a = id exactly on 2X (a2a, c1) or at 0 (a2b, c2)
        bool const fixes     = lam(a, one) == one && lam(a, b) == b;
        bool const expected  = kernel_is_2x ? even(a) : a == 0;
        if (fixes != expected) {
          fail("kernel of lambda");
          return report;
        }
        // a2a and c1: elements outside 2X act as rational negation, which
        // is the inversion of the subgroup 2X
        if (kernel_is_2x && !even(a) && lam(a, b) != Rational(-b)) {
          fail("lambda_a is not negation");
          return report;
        }
        ++report.kernel_checks;
      } catch (Error const& e) {
        fail(std::string("closure: ") + e.what());
        return report;
      }
      ++report.samples;
    }
    return report;
  }

  bool in_witness_subgroup(RationalBraceSpec const& spec, int p, Rational const& q) {
    return spec.domain.contains(q) && divides(p, mp::numerator(q))
           && !divides(p, mp::denominator(q));
  }

  DedekindWitness dedekind_witness(RationalBraceSpec const& spec,
                                   int                      p,
                                   std::uint64_t            seed,
                                   std::size_t              samples) {
    if (spec.variant != RationalVariant::a2b) {
      invalid("the witness construction applies to a2b only");
    }
    spec.validate();
    if (!is_prime(p)) {
      throw Error(ErrorKind::bad_prime, std::to_string(p) + " is not a prime");
    }
    if (spec.domain.forbids(p)) {
      throw Error(ErrorKind::bad_prime, std::to_string(p) + " is a forbidden prime");
    }
    if (divides(p, spec.m2 * (spec.m1 - spec.m2))) {
      throw Error(ErrorKind::bad_prime, std::to_string(p) + " divides m2 (m1 - m2)");
    }

    DedekindWitness w;
    w.prime  = p;
    w.y_rule = "a/b in lowest terms with " + std::to_string(p) + " | a and "
               + std::to_string(p) + " not dividing b";

    // Elements p q with q free of p in the denominator span Y.
    DomainSampler sampler(spec.domain, seed, {p});
    auto          in_y = [&](Rational const& q) { return in_witness_subgroup(spec, p, q); };
    w.additive_subgroup       = true;
    w.multiplicatively_closed = true;
    w.inverse_closed          = true;
    for (std::size_t i = 0; i < samples; ++i) {
      Rational const u = p * sampler.next();
      Rational const v = p * sampler.next();
      if (!in_y(u) || !in_y(v)) {
        throw std::logic_error("witness sampler left Y");
      }
      w.additive_subgroup       = w.additive_subgroup && in_y(add(spec, u, neg(spec, v)));
      w.multiplicatively_closed = w.multiplicatively_closed && in_y(circ(spec, u, v));
      w.inverse_closed          = w.inverse_closed && in_y(circ_inverse(spec, u));
      ++w.samples;
    }

    w.lambda_argument = Rational(BigInt(1), BigInt(p) * p);
    w.point           = p;
    w.violating       = lambda_apply(spec, w.lambda_argument, w.point);
    Rational const closed_form =
        Rational(BigInt(p) * p * spec.m2 - spec.m2 + spec.m1, spec.m2 * p);
    if (w.violating != closed_form) {
      throw std::logic_error("lambda_{1/p^2}(p) disagrees with its closed form");
    }
    w.violating_in_y = in_y(w.violating);
    return w;
  }

}  // namespace skewbrace
