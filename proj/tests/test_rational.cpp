#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewbrace/errors.hpp"
#include "skewbrace/rational.hpp"

using namespace skewbrace;

namespace {
  ErrorKind kind_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::io_error;
  }

  Rational q(std::string const& s) {
    return parse_rational(s);
  }

  RationalBraceSpec a2a() {
    return {RationalVariant::a2a, LocalizedDomain({2}), 1, 4, 1};
  }

  RationalBraceSpec a2b() {
    return {RationalVariant::a2b, LocalizedDomain({3}), 1, 4, 1};
  }

  RationalBraceSpec c1() {
    return {RationalVariant::c1, LocalizedDomain({2}), 1, 4, 1};
  }

  RationalBraceSpec c2() {
    return {RationalVariant::c2, LocalizedDomain({2}), 1, 4, 1};
  }
}  // namespace

TEST_CASE("parsing fractions") {
  CHECK(q("97/20") == Rational(97, 20));
  CHECK(q("-6/4") == Rational(-3, 2));
  CHECK(q("5") == 5);
  CHECK(to_string(q("10/4")) == "5/2");
  for (char const* bad : {"", "1/0", "x", "1/", "1.5", "/3"}) {
    CHECK(kind_of([&] { q(bad); }) == ErrorKind::domain_violation);
  }
}

TEST_CASE("membership") {
  LocalizedDomain const d3({3});
  CHECK(d3.contains(q("1/2")));
  CHECK(!d3.contains(q("1/3")));
  CHECK(!d3.contains(q("5/6")));
  LocalizedDomain const d2({2});
  CHECK(d2.contains(q("7/5")));
  CHECK(!d2.contains(q("1/2")));
  CHECK(d2.contains(q("6/2")));
  CHECK(kind_of([] { LocalizedDomain({4}); }) == ErrorKind::invalid_spec);
}

TEST_CASE("circ and its inverse") {
  auto const s = a2b();
  CHECK(circ(s, 1, 1) == q("5/4"));
  CHECK(circ(s, 1, -4) == 0);
  for (auto const& a : {q("0"), q("1"), q("2/5"), q("-7/2")}) {
    CHECK(circ(s, 0, a) == a);
    auto const inv = circ_inverse(s, a);
    CHECK(circ(s, a, inv) == 0);
    // -a / (1 - a + (m1/m2) a)
    CHECK(inv == -a / (1 - a + Rational(1, 4) * a));
  }
  CHECK(circ_inverse(s, 1) == -4);
  CHECK(circ_inverse(a2a(), 1) == 1);
  CHECK(circ(a2a(), 1, 1) == 0);
  for (auto const& spec : {a2a(), a2b(), c1(), c2()}) {
    CHECK(circ_inverse(spec, 0) == 0);
  }
  CHECK(kind_of([&] { circ(s, q("1/3"), 1); }) == ErrorKind::domain_violation);
}

TEST_CASE("c1 and c2 additions") {
  auto const s = c1();
  CHECK(add(s, 1, 1) == 0);
  CHECK(add(s, 2, 4) == 6);
  CHECK(add(s, add(s, 1, 2), q("1")) == -2);
  // x - d = x o d on the even part
  CHECK(add(s, 1, neg(s, 2)) == circ(s, 1, 2));
  auto const t = c2();
  for (auto const& a : {q("1"), q("2"), q("3/5"), q("-4/7")}) {
    for (auto const& b : {q("1"), q("6"), q("-1/3"), q("8/5")}) {
      CHECK(add(t, a, b) == add(s, b, a));
    }
  }
}

TEST_CASE("lambda and star") {
  auto const s = a2a();
  for (auto const& y : {q("1"), q("2/3"), q("-5")}) {
    CHECK(lambda_apply(s, 2, y) == y);
    CHECK(lambda_apply(s, 1, y) == -y);
  }
  for (auto const& spec : {a2a(), a2b(), c1(), c2()}) {
    CHECK(lambda_apply(spec, 0, q("3/5")) == q("3/5"));
  }
  auto const b = a2b();
  CHECK(lambda_apply(b, 1, 1) == q("1/4"));
  CHECK(star_rat(b, 1, 1) == q("-3/4"));
  // x acts on 2X as inversion in c1
  for (auto const& d : {q("2"), q("-4/3"), q("6/5")}) {
    CHECK(lambda_apply(c1(), 1, d) == neg(c1(), d));
  }
}

TEST_CASE("parameter validation") {
  RationalBraceSpec s = a2b();
  s.m2                = 2;
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::invalid_spec);  // m2 - m1 = 1
  s = a2b();
  s.domain = LocalizedDomain(std::vector<int>{});
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::invalid_spec);
  s        = a2b();
  s.domain = LocalizedDomain({5});
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::invalid_spec);  // 5 does not divide 3
  s    = a2b();
  s.m1 = 2;
  s.m2 = 4;
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::invalid_spec);  // not coprime
  s    = a2b();
  s.m2 = -4;
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::invalid_spec);
  s        = a2a();
  s.domain = LocalizedDomain({3});
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::invalid_spec);
  s   = c1();
  s.x = 2;
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::invalid_spec);
  s   = c1();
  s.x = q("1/2");
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::invalid_spec);
  CHECK(kind_of([] {
          RationalBraceSpec bad{RationalVariant::a2b, LocalizedDomain({3}), 1, 2, 1};
          axiom_sample_check(bad, 1, 10);
        })
        == ErrorKind::invalid_spec);
  CHECK_NOTHROW(a2b().validate());
  // m1/m2 = -1/2 with S = {3}
  CHECK_NOTHROW(RationalBraceSpec({RationalVariant::a2b, LocalizedDomain({3}), -1, 2, 1}).validate());
}

TEST_CASE("sampled axioms") {
  for (auto const& spec : {a2a(), a2b(), c1(), c2()}) {
    auto const r = axiom_sample_check(spec, 42, 1000);
    CHECK_MESSAGE(r.passed, to_string(spec.variant) << ": " << r.summary());
    CHECK(r.samples == 1000);
    CHECK(r.kernel_checks == 1000);
    CHECK(r.summary() == "pass at confidence of 1000 samples");
  }
  // another admissible parameter set: m1/m2 = 3/8, m2 - m1 = 5
  RationalBraceSpec other{RationalVariant::a2b, LocalizedDomain({5}), 3, 8, 1};
  CHECK(axiom_sample_check(other, 7, 500).passed);
  // same seed, same draws
  DomainSampler s1(LocalizedDomain({3}), 9), s2(LocalizedDomain({3}), 9);
  for (int i = 0; i < 100; ++i) {
    auto const v = s1.next();
    CHECK(v == s2.next());
    CHECK(LocalizedDomain({3}).contains(v));
  }
}

TEST_CASE("non-Dedekind witness") {
  auto const w = dedekind_witness(a2b(), 5);
  CHECK(w.violating == q("97/20"));
  CHECK(!w.violating_in_y);
  CHECK(w.additive_subgroup);
  CHECK(w.multiplicatively_closed);
  CHECK(w.inverse_closed);
  CHECK(w.certifies_non_dedekind());
  CHECK(w.lambda_argument == q("1/25"));
  CHECK(in_witness_subgroup(a2b(), 5, q("5/2")));
  CHECK(!in_witness_subgroup(a2b(), 5, q("1/5")));
  CHECK(!in_witness_subgroup(a2b(), 5, q("2")));

  CHECK(kind_of([] { dedekind_witness(a2b(), 3); }) == ErrorKind::bad_prime);
  CHECK(kind_of([] { dedekind_witness(a2b(), 2); }) == ErrorKind::bad_prime);
  CHECK(kind_of([] { dedekind_witness(a2b(), 9); }) == ErrorKind::bad_prime);
  CHECK(kind_of([] { dedekind_witness(a2a(), 5); }) == ErrorKind::invalid_spec);
  for (int p : {5, 7, 11, 13}) {
    CHECK(dedekind_witness(a2b(), p, 3, 200).certifies_non_dedekind());
  }
}
