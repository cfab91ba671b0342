#include "potsum/characters.hpp"

#include "potsum/error.hpp"

namespace potsum {

namespace {

void require_odd(const Field& field) {
  if (field.characteristic() == 2)
    throw Error(ErrorKind::CharacterUndefined, "quadratic character needs odd q");
}

void require_cubic(const Field& field) {
  if ((field.order() - 1) % 3 != 0)
    throw Error(ErrorKind::CharacterUndefined, "cubic character needs 3 | q-1");
}

// log(a) mod 3, without needing the log tables.
int log_mod3(const Field& field, Element a) {
  if (field.has_log_tables()) return static_cast<int>(field.log(a) % 3);
  const Element t = field.pow(a, (field.order() - 1) / 3);
  if (t == field.one()) return 0;
  return t == field.pow(field.generator(), (field.order() - 1) / 3) ? 1 : 2;
}

}  // namespace

QuadCharValue quadratic_character(const Field& field, Element a) {
  require_odd(field);
  if (a.index == 0) return 0;
  if (field.has_log_tables()) return field.log(a) % 2 == 0 ? 1 : -1;
  return field.pow(a, (field.order() - 1) / 2) == field.one() ? 1 : -1;
}

EisensteinInt cubic_character(const Field& field, Element a, int exponent) {
  require_cubic(field);
  if (exponent != 1 && exponent != 2)
    throw Error(ErrorKind::InvalidCharacter, "cubic character exponent must be 1 or 2");
  if (a.index == 0) return {};
  return EisensteinInt::omega_power(exponent * log_mod3(field, a));
}

int nu(const Field& field, Element a) {
  require_cubic(field);
  if (a.index == 0) throw Error(ErrorKind::UndefinedAtZero, "nu is defined on nonzero elements");
  const EisensteinInt x =
      EisensteinInt(2) - cubic_character(field, a, 1) - cubic_character(field, a, 2);
  if (!x.is_rational() || !x.divisible_by(3))
    throw std::logic_error("nu: (2 - eta - eta^2) not divisible by 3");
  return static_cast<int>(x.a() / 3);
}

EisensteinInt character_value(const Field& field, Character chi, Element a) {
  if (chi.order == 2) {
    if (chi.power % 2 == 0) throw Error(ErrorKind::InvalidCharacter, "trivial character");
    return quadratic_character(field, a);
  }
  if (chi.order == 3) {
    const int e = ((chi.power % 3) + 3) % 3;
    if (e == 0) throw Error(ErrorKind::InvalidCharacter, "trivial character");
    return cubic_character(field, a, e);
  }
  throw Error(ErrorKind::InvalidCharacter, "only orders 2 and 3 are supported");
}

EisensteinInt jacobi_sum(const Field& field, Character first, Character second) {
  character_value(field, first, field.one());
  character_value(field, second, field.one());
  EisensteinInt sum;
  for (std::uint32_t i = 0; i < field.order(); ++i) {
    const Element x{i};
    sum += character_value(field, first, x) *
           character_value(field, second, field.sub(field.one(), x));
  }
  return sum;
}

PowerResidues power_residues(const Field& field) {
  PowerResidues out{DenseBitset(field.order()), DenseBitset(field.order())};
  for (std::uint32_t i = 1; i < field.order(); ++i) {
    const Element b{i};
    const Element sq = field.mul(b, b);
    out.squares.set(sq.index);
    out.cubes.set(field.mul(sq, b).index);
  }
  return out;
}

}  // namespace potsum
