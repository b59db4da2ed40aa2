#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "skewbrace/errors.hpp"
#include "skewbrace/series.hpp"

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
}  // namespace

TEST_CASE("two_power family") {
  auto const B4 = two_power_brace(2);
  CHECK(B4.order() == 4);
  for (int a = 1; a < 4; ++a) {
    CHECK(B4.mul(a, a) == 0);
  }
  CHECK(!B4.multiplicative().is_cyclic());

  auto const B8 = two_power_brace(3);
  CHECK(upper_socle_series(B8).length == 2);
  CHECK(kind_of([] { two_power_brace(1); }) == ErrorKind::bad_params);

  for (int n = 2; n <= 5; ++n) {
    auto const B = two_power_brace(n);
    CHECK(predicates(B).is_bi_skew);
    CHECK(is_dedekind(B).dedekind);
  }
  Limits tight;
  tight.structure_order = 16;
  CHECK(kind_of([&] { two_power_brace(5, tight); }) == ErrorKind::bound_exceeded);
}

TEST_CASE("odd_p_cyclic family") {
  auto const B9 = odd_p_cyclic_brace(3, 2);
  CHECK(B9.mul(1, 1) == 5);
  CHECK(socle_and_centre(B9).ker_lambda.elements == ElementSet{0, 3, 6});
  CHECK(predicates(odd_p_cyclic_brace(3, 1)).is_trivial);
  CHECK(upper_socle_series(odd_p_cyclic_brace(3, 3)).length == 3);
  CHECK(kind_of([] { odd_p_cyclic_brace(2, 3); }) == ErrorKind::bad_params);
  CHECK(kind_of([] { odd_p_cyclic_brace(9, 1); }) == ErrorKind::bad_params);

  // powers of 1 follow the geometric sum 1 + (1 + p) + ... + (1 + p)^{l-1}
  for (auto [p, n] : {std::pair{3, 1}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    auto const B = odd_p_cyclic_brace(p, n);
    int const  N = static_cast<int>(B.order());
    int        x = 0;
    for (int l = 0; l <= N; ++l) {
      long sum = 0, term = 1;
      for (int k = 0; k < l; ++k) {
        sum  = (sum + term) % N;
        term = term * (1 + p) % N;
      }
      CHECK(x == sum);
      x = B.mul(x, 1);
    }
    // (B, o, +) checked straight from the tables; fails from n = 3 on
    bool const swapped = oracle::distributive(B.multiplicative().flat(), B.additive().flat(), N);
    CHECK(predicates(B).is_bi_skew == swapped);
    CHECK(swapped == (n <= 2));
    CHECK(is_dedekind(B).dedekind);
    CHECK(B.multiplicative().is_cyclic());
  }
}

TEST_CASE("odd_p_nonabelian family") {
  auto const B = odd_p_nonabelian_brace(3, 2);
  CHECK(B.order() == 27);
  CHECK(upper_central_series(B).length == 2);
  CHECK(is_dedekind(B).dedekind);
  auto const Z = socle_and_centre(B).centre.elements;
  // U generated by p^{n-1} x = 3x, at index 3
  CHECK(Z == subgroup_closure(B.additive(), ElementSet{3}));
  CHECK(Z.size() == 3);
  CHECK(kind_of([] { odd_p_nonabelian_brace(2, 2); }) == ErrorKind::bad_params);
  CHECK(kind_of([] { odd_p_nonabelian_brace(3, 1); }) == ErrorKind::bad_params);

  // additive group is Z9 x| Z3 with the generator acting by 4 = 1 + 3
  Automorphism times4{{0, 4, 8, 3, 7, 2, 6, 1, 5}};
  auto const   G = semidirect_product(
      cyclic_group(9), cyclic_group(3), {identity_automorphism(9), times4, compose(times4, times4)});
  CHECK(find_isomorphism(B.additive(), G));
  CHECK(find_isomorphism(B.multiplicative(), G));
  // -y + x + y = (1 + p^{n-1}) x with y = 9, x = 1
  CHECK(B.add(B.add(B.neg(9), 1), 9) == 4);
  // lambda_x = id, lambda_y = conjugation by x
  for (int u = 0; u < 27; ++u) {
    CHECK(B.lambda(1, u) == u);
    CHECK(B.lambda(9, u) == B.add(B.add(B.neg(1), u), 1));
  }

  auto const labels = family_labels({Family::odd_p_nonabelian, 3, 2, std::nullopt});
  REQUIRE(labels.size() == 27);
  CHECK(labels[10] == "1y+1x");

  Limits big;
  big.structure_order = 125;
  auto const B5       = odd_p_nonabelian_brace(5, 2, big);
  CHECK(B5.order() == 125);
  CHECK(predicates(B5).is_bi_skew);
}

TEST_CASE("trivial and almost trivial braces") {
  auto const T = trivial_brace(cyclic_group(6));
  CHECK(T.additive().is_abelian());
  auto const sc = socle_and_centre(T);
  CHECK(sc.socle.elements.size() == 6);
  CHECK(sc.centre.elements.size() == 6);

  auto const S3 = catalog_group(6, 1);
  auto const AT = almost_trivial_brace(S3);
  CHECK(star_span(AT, ElementSet::full(6), ElementSet::full(6)).size() == 3);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      // a * b = a^-1 b a b^-1 in S3
      CHECK(AT.star(a, b) == S3.op(S3.op(S3.inverse(a), b), S3.op(a, S3.inverse(b))));
    }
  }
  CHECK(almost_trivial_brace(cyclic_group(5)) == trivial_brace(cyclic_group(5)));
}

TEST_CASE("construct dispatch") {
  CHECK(construct({Family::two_power, 2, 3, std::nullopt}) == two_power_brace(3));
  CHECK(kind_of([] { construct({Family::two_power, 3, 3, std::nullopt}); })
        == ErrorKind::bad_params);
  CHECK(kind_of([] { construct({Family::trivial, 2, 1, std::nullopt}); })
        == ErrorKind::bad_params);
  CHECK(construct({Family::almost_trivial, 2, 1, catalog_group(8, 4)}).order() == 8);
  CHECK(parse_family("odd_p_cyclic") == Family::odd_p_cyclic);
  CHECK(!parse_family("bogus"));
}
