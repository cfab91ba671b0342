#pragma once

#include <array>

#include "potsum/characters.hpp"
#include "potsum/error.hpp"
#include "potsum/field.hpp"

namespace potsum::detail {

/// C_4 = {0, 1, z, y} in that order; requires 3 | q-1.
inline std::array<Element, 4> c4_points(const Field& field) {
  const auto roots = field.cube_roots_of_unity();
  if (!roots) throw Error(ErrorKind::CaseInapplicable, "needs 3 | q-1");
  return {field.zero(), field.one(), roots->z, roots->y};
}

inline void require_quadratic_case(const Field& field) {
  if (field.characteristic() == 2 || (field.order() - 1) % 3 != 0)
    throw Error(ErrorKind::CaseInapplicable, "needs q odd and 3 | q-1");
}

/// c0 + c1 * z as a field element.
inline Element z_linear(const Field& field, Element z, std::int64_t c0, std::int64_t c1) {
  return field.add(field.from_integer(c0), field.mul(field.from_integer(c1), z));
}

inline bool nonresidue(const DenseBitset& residues, Element x) {
  return x.index != 0 && !residues.test(x.index);
}

}  // namespace potsum::detail
