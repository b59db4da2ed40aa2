#ifndef SKEWBRACE_ERRORS_HPP_
#define SKEWBRACE_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewbrace {

  enum class ErrorKind {
    not_a_group,
    out_of_catalog,
    bound_exceeded,
    not_normal,
    not_an_action,
    distributivity_failure,
    identity_mismatch,
    not_a_subgroup,
    not_an_ideal,
    coset_mismatch,
    bad_params,
    domain_violation,
    invalid_spec,
    bad_prime,
    degenerate,
    braid_failure,
    ill_defined_retraction,
    schema_error,
    io_error
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  // Every failure raised by the library. `witness` carries the offending
  // element indices (a triple for axiom failures, a pair for normality, ...).
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what, std::vector<int> witness = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind),
          _witness(std::move(witness)) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

    std::vector<int> const& witness() const noexcept {
      return _witness;
    }

   private:
    ErrorKind        _kind;
    std::vector<int> _witness;
  };

}  // namespace skewbrace

#endif  // SKEWBRACE_ERRORS_HPP_
