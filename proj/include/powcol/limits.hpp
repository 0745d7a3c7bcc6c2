// Size limits for the exact oracles and default window bounds, overridable
// from the environment.

#ifndef POWCOL_LIMITS_HPP_
#define POWCOL_LIMITS_HPP_

#include <cstdint>
#include <cstdlib>
#include <string>

#include "error.hpp"
#include "oracle.hpp"

namespace powcol {

  struct Limits {
    std::size_t  chromatic = default_chromatic_limit;  // POWCOL_CHI_LIMIT
    std::size_t  clique    = default_clique_limit;     // POWCOL_CLIQUE_LIMIT
    std::int64_t window_W  = 50;                       // POWCOL_WINDOW_W
    std::int64_t window_E  = 24;                       // POWCOL_WINDOW_E

    static Limits from_environment() {
      Limits l;
      read("POWCOL_CHI_LIMIT", l.chromatic);
      read("POWCOL_CLIQUE_LIMIT", l.clique);
      read("POWCOL_WINDOW_W", l.window_W);
      read("POWCOL_WINDOW_E", l.window_E);
      return l;
    }

   private:
    template <typename T>
    static void read(char const* var, T& into) {
      char const* raw = std::getenv(var);
      if (raw == nullptr || *raw == '\0') {
        return;
      }
      char* end   = nullptr;
      auto  value = std::strtoll(raw, &end, 10);
      if (*end != '\0' || value < 0) {
        throw ParameterOutOfRange(std::string(var)
                                  + " must be a non-negative integer");
      }
      into = static_cast<T>(value);
    }
  };

}  // namespace powcol

#endif  // POWCOL_LIMITS_HPP_
