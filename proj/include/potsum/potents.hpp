#pragma once

#include <cstdint>
#include <vector>

#include "potsum/bitset.hpp"
#include "potsum/field.hpp"

namespace potsum {

/// C_n = {a : a^n = a} in one field model, as sorted indices plus a bitset.
struct PotentSet {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::vector<Element> members;
  DenseBitset bits;
  FieldSpec model;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Element a) const noexcept { return bits.test(a.index); }
};

/// Closed form: {0} together with the subgroup of order gcd(n-1, q-1).
PotentSet n_potents(const Field& field, std::uint64_t n);

/// The defining scan {a : a^n = a} by square-and-multiply; the oracle for
/// n_potents.
PotentSet n_potents_by_definition(const Field& field, std::uint64_t n);

/// gcd(n-1, q-1) + 1, the smallest exponent with the same potent set.
std::uint64_t reduce_exponent(std::uint64_t q, std::uint64_t n);

std::uint64_t potent_cardinality(std::uint64_t q, std::uint64_t n);

}  // namespace potsum
