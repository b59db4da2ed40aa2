#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "skewbrace/series.hpp"

using namespace skewbrace;

namespace {
  std::vector<std::vector<int>> chain_sets(UpperSeries const& s) {
    std::vector<std::vector<int>> out;
    for (auto const& t : s.series.chain) {
      out.push_back(t.elements.elements());
    }
    return out;
  }

  std::vector<SkewBrace> const& corpus12() {
    static auto const c = corpus::enumerated(1, 12);
    return c;
  }
}  // namespace

TEST_CASE("upper central series") {
  auto const T = trivial_brace(cyclic_group(5));
  CHECK(upper_central_series(T).length == 1);

  auto const s9 = upper_central_series(corpus::b9());
  CHECK(chain_sets(s9) == std::vector<std::vector<int>>{{0}, {0, 3, 6}, oracle::range(9)});
  CHECK(s9.length == 2);

  auto const s8 = upper_central_series(corpus::b8());
  CHECK(chain_sets(s8)
        == std::vector<std::vector<int>>{{0}, {0, 4}, {0, 2, 4, 6}, oracle::range(8)});
  CHECK(chain_sets(s8) == oracle::iterated_series(corpus::b8(), true));

  CHECK(upper_central_series(trivial_brace(catalog_group(6, 1))).length == std::nullopt);
  CHECK(!upper_central_series(trivial_brace(catalog_group(6, 1))).series.terminal);
}

TEST_CASE("upper socle series") {
  CHECK(upper_socle_series(trivial_brace(cyclic_group(4))).length == 1);
  CHECK(upper_socle_series(corpus::b8()).length == 2);
  CHECK(upper_socle_series(corpus::b9()).length == 2);
  // Soc(B) is trivial in the almost trivial brace on S3
  CHECK(upper_socle_series(corpus::almost_trivial_s3()).length == std::nullopt);
}

TEST_CASE("both upper series agree with the iterated-definition oracle") {
  for (auto const& B : corpus12()) {
    CHECK(chain_sets(upper_central_series(B)) == oracle::iterated_series(B, true));
    CHECK(chain_sets(upper_socle_series(B)) == oracle::iterated_series(B, false));
  }
}

TEST_CASE("star series") {
  auto const T = trivial_brace(cyclic_group(6));
  CHECK(star_series(T, StarSide::left).terms.size() == 2);
  CHECK(star_series(T, StarSide::right).nilpotent);

  auto const l9 = star_series(corpus::b9(), StarSide::left);
  auto const r9 = star_series(corpus::b9(), StarSide::right);
  CHECK(l9.terms == std::vector<ElementSet>{ElementSet::full(9), ElementSet{0, 3, 6}, ElementSet{0}});
  CHECK(r9.terms == l9.terms);
  CHECK(l9.nilpotent);

  auto const r8 = star_series(corpus::b8(), StarSide::right);
  CHECK(r8.nilpotent);
  CHECK(r8.terms.size() <= 4);

  CHECK(!star_series(corpus::almost_trivial_s3(), StarSide::left).nilpotent);
}

TEST_CASE("derived series") {
  auto const d1 = derived_series(trivial_brace(cyclic_group(4)));
  CHECK(d1.soluble);
  CHECK(d1.terms == std::vector<ElementSet>{ElementSet::full(4), ElementSet{0}});

  auto const S3 = catalog_group(6, 1);
  auto const d2 = derived_series(trivial_brace(S3));
  CHECK(d2.soluble);
  REQUIRE(d2.terms.size() == 3);
  CHECK(d2.terms[1].size() == 3);

  CHECK(derived_series(corpus::b8()).soluble);
}

TEST_CASE("supersolubility") {
  for (auto const& B : corpus::enumerated(6, 6)) {
    CHECK(is_supersoluble(B).supersoluble);
  }
  CHECK(!is_supersoluble(trivial_brace(alternating_group_4())).supersoluble);
  auto const s8 = is_supersoluble(corpus::b8());
  CHECK(s8.supersoluble);
  REQUIRE(s8.chain.size() >= 2);
  CHECK(s8.chain[1] == ElementSet{0, 4});

  // certificate: ascending ideals with prime-order factors
  for (auto const& B : corpus12()) {
    auto const r = is_supersoluble(B);
    if (!r.supersoluble) {
      continue;
    }
    CHECK(r.chain.front() == ElementSet{0});
    CHECK(r.chain.back().size() == B.order());
    for (std::size_t i = 1; i < r.chain.size(); ++i) {
      CHECK(classify_substructure(B, r.chain[i]).is_ideal);
      CHECK(r.chain[i - 1].is_subset_of(r.chain[i]));
      std::size_t const f = r.chain[i].size() / r.chain[i - 1].size();
      CHECK((f == 2 || f == 3 || f == 5 || f == 7 || f == 11 || f == 13));
    }
  }
}

TEST_CASE("Dedekind test") {
  CHECK(is_dedekind(corpus::b8()).dedekind);
  CHECK(is_dedekind(trivial_brace(cyclic_group(12))).dedekind);
  auto const r = is_dedekind(trivial_brace(catalog_group(6, 1)));
  CHECK(!r.dedekind);
  REQUIRE(r.witness);
  CHECK(r.witness->elements.size() == 2);
}

TEST_CASE("analysis reports") {
  auto const r9 = analyze(corpus::b9());
  CHECK(r9.central_class == 2);
  CHECK(r9.multipermutation_level == 2);
  CHECK(r9.dedekind);
  CHECK(r9.predicates.is_bi_skew);

  auto const r4 = analyze(corpus::b4());
  CHECK(r4.central_class == 2);
  CHECK(r4.multipermutation_level == 2);
  CHECK(r4.dedekind);

  auto const r1 = analyze(trivial_brace(cyclic_group(1)));
  CHECK(r1.order == 1);
  CHECK(r1.central_class == 0);
  CHECK(r1.multipermutation_level == 0);
  CHECK(r1.soluble);
  CHECK(r1.supersoluble);
  CHECK(r1.dedekind);
  CHECK(r1.sub_brace_count == 1);
}

TEST_CASE("series properties over the corpus") {
  for (auto const& B : corpus12()) {
    auto const Z   = upper_central_series(B);
    auto const Soc = upper_socle_series(B);
    // Z_k within Soc_k at every stage
    for (std::size_t k = 0; k < Z.series.chain.size(); ++k) {
      auto const& soc_k = k < Soc.series.chain.size() ? Soc.series.chain[k]
                                                      : Soc.series.chain.back();
      CHECK(Z.series.chain[k].elements.is_subset_of(soc_k.elements));
    }
    if (Z.length) {
      CHECK(derived_series(B).soluble);
      CHECK(Soc.length);
      CHECK(star_series(B, StarSide::left).nilpotent);
      CHECK(star_series(B, StarSide::right).nilpotent);
    }
  }
}
