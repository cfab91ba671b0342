#pragma once

#include <cstdint>

#include "potsum/bitset.hpp"
#include "potsum/eisenstein.hpp"
#include "potsum/field.hpp"

namespace potsum {

/// Value of the quadratic character: -1, 0 or +1.
using QuadCharValue = int;

/// lambda(a): 0 at zero, +1 on nonzero squares, -1 on non-squares. Odd q only.
QuadCharValue quadratic_character(const Field& field, Element a);

/// eta^exponent(a) for the cubic character with eta(generator) = w.
/// Requires 3 | q-1 and exponent in {1, 2}.
EisensteinInt cubic_character(const Field& field, Element a, int exponent);

/// Indicator of non-cubes, evaluated as (2 - eta(a) - eta^2(a)) / 3.
int nu(const Field& field, Element a);

/// A multiplicative character of order 2 or 3, raised to `power`.
struct Character {
  int order = 2;
  int power = 1;

  static constexpr Character quadratic() { return {2, 1}; }
  static constexpr Character cubic(int power) { return {3, power}; }
  friend bool operator==(const Character&, const Character&) = default;
};

/// chi(a) for a character of order 2 or 3 (zero maps to zero).
EisensteinInt character_value(const Field& field, Character chi, Element a);

/// J(chi1, chi2) = sum over x of chi1(x) * chi2(1 - x).
EisensteinInt jacobi_sum(const Field& field, Character first, Character second);

/// Membership bitsets for nonzero squares and nonzero cubes, built by
/// squaring and cubing every element. These are the direct-count oracles and
/// do not go through the discrete-log tables.
struct PowerResidues {
  DenseBitset squares;
  DenseBitset cubes;
};

PowerResidues power_residues(const Field& field);

}  // namespace potsum
