#ifndef SKEWBRACE_ELEMENT_SET_HPP_
#define SKEWBRACE_ELEMENT_SET_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace skewbrace {

  // A sorted, duplicate-free set of element indices.
  class ElementSet {
   public:
    ElementSet() = default;

    ElementSet(std::initializer_list<int> elts) : _elts(elts) {
      normalize();
    }

    explicit ElementSet(std::vector<int> elts) : _elts(std::move(elts)) {
      normalize();
    }

    // Elements i with mask[i] != 0.
    static ElementSet from_mask(std::vector<char> const& mask) {
      ElementSet result;
      for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask[i]) {
          result._elts.push_back(static_cast<int>(i));
        }
      }
      return result;
    }

    // All of 0..n-1.
    static ElementSet full(std::size_t n) {
      ElementSet result;
      result._elts.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        result._elts[i] = static_cast<int>(i);
      }
      return result;
    }

    std::vector<char> mask(std::size_t n) const {
      std::vector<char> m(n, 0);
      for (int x : _elts) {
        m[x] = 1;
      }
      return m;
    }

    bool contains(int x) const {
      return std::binary_search(_elts.begin(), _elts.end(), x);
    }

    bool is_subset_of(ElementSet const& other) const {
      return std::includes(
          other._elts.begin(), other._elts.end(), _elts.begin(), _elts.end());
    }

    ElementSet unite(ElementSet const& other) const {
      std::vector<int> out;
      std::set_union(_elts.begin(),
                     _elts.end(),
                     other._elts.begin(),
                     other._elts.end(),
                     std::back_inserter(out));
      ElementSet result;
      result._elts = std::move(out);
      return result;
    }

    ElementSet intersect(ElementSet const& other) const {
      std::vector<int> out;
      std::set_intersection(_elts.begin(),
                            _elts.end(),
                            other._elts.begin(),
                            other._elts.end(),
                            std::back_inserter(out));
      ElementSet result;
      result._elts = std::move(out);
      return result;
    }

    std::size_t size() const noexcept {
      return _elts.size();
    }

    bool empty() const noexcept {
      return _elts.empty();
    }

    auto begin() const noexcept {
      return _elts.begin();
    }

    auto end() const noexcept {
      return _elts.end();
    }

    int operator[](std::size_t i) const {
      return _elts[i];
    }

    std::vector<int> const& elements() const noexcept {
      return _elts;
    }

    bool operator==(ElementSet const&) const = default;
    auto operator<=>(ElementSet const&) const = default;

   private:
    void normalize() {
      std::sort(_elts.begin(), _elts.end());
      _elts.erase(std::unique(_elts.begin(), _elts.end()), _elts.end());
    }

    std::vector<int> _elts;
  };

  // Canonical order used by every routine returning a list of sets:
  // by size, then lexicographically.
  inline bool canonical_less(ElementSet const& a, ElementSet const& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }

}  // namespace skewbrace

#endif  // SKEWBRACE_ELEMENT_SET_HPP_
