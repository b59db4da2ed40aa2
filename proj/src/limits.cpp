#include "skewbrace/limits.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace skewbrace {

  Limits Limits::from_env() {
    Limits limits;
    if (char const* env = std::getenv("BRACE_MAX_ORDER")) {
      try {
        auto const value = static_cast<std::size_t>(std::stoul(env));
        if (value > 0) {
          limits.enumeration_order = value;
          limits.structure_order   = std::max(limits.structure_order, value);
        }
      } catch (std::exception const&) {
        // unparsable values leave the defaults in place
      }
    }
    return limits;
  }

}  // namespace skewbrace
