#pragma once

#include <string>
#include <vector>

#include "gpval/error.hpp"
#include "gpval/hopf.hpp"
#include "gpval/matroid_invariants.hpp"
#include "gpval/poset_invariants.hpp"

namespace gpval {

/// 1 on matroids with a single basis.
inline Character bjr_matroid_character() {
  return {"bjr", [](const HopfObject& x) -> Rational {
            const auto* m = std::get_if<Matroid>(&x);
            if (!m) throw InputError("the bjr character is defined on matroids");
            return bjr_character(*m);
          }};
}

/// Scalar characters by name. "norm" is ring-valued and handled by
/// universal_norm instead.
inline Character find_character(const std::string& name) {
  if (name == "antichain") return antichain_character();
  if (name == "preantichain") return preantichain_character();
  if (name == "bjr") return bjr_matroid_character();
  if (name == "one") return one_character();
  if (name == "norm") throw InputError("the norm character is polynomial-valued; use universal-tutte");
  throw InputError("unknown character '" + name + "'");
}

inline std::vector<std::string> character_names() { return {"antichain", "bjr", "norm", "one", "preantichain"}; }

}  // namespace gpval
