// Shared brace corpus for the property tests.
#ifndef SKEWBRACE_TESTS_CORPUS_HPP_
#define SKEWBRACE_TESTS_CORPUS_HPP_

#include <vector>

#include "skewbrace/constructions.hpp"
#include "skewbrace/enumeration.hpp"

namespace corpus {

  // One representative per isomorphism class, orders lo..hi.
  inline std::vector<skewbrace::SkewBrace> enumerated(std::size_t lo, std::size_t hi) {
    std::vector<skewbrace::SkewBrace> out;
    for (std::size_t n = lo; n <= hi; ++n) {
      for (auto& B : skewbrace::enumerate_all(n).representatives) {
        out.push_back(std::move(B));
      }
    }
    return out;
  }

  inline skewbrace::SkewBrace b4() {
    return skewbrace::two_power_brace(2);
  }

  inline skewbrace::SkewBrace b8() {
    return skewbrace::two_power_brace(3);
  }

  inline skewbrace::SkewBrace b9() {
    return skewbrace::odd_p_cyclic_brace(3, 2);
  }

  inline skewbrace::SkewBrace b27() {
    return skewbrace::odd_p_nonabelian_brace(3, 2);
  }

  inline skewbrace::SkewBrace almost_trivial_s3() {
    return skewbrace::almost_trivial_brace(skewbrace::catalog_group(6, 1));
  }

  inline skewbrace::SkewBrace trivial_s3() {
    return skewbrace::trivial_brace(skewbrace::catalog_group(6, 1));
  }

}  // namespace corpus

#endif  // SKEWBRACE_TESTS_CORPUS_HPP_
