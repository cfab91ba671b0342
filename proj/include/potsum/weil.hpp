#pragma once

#include <cstdint>
#include <vector>

#include "potsum/field.hpp"
#include "potsum/polynomial.hpp"

namespace potsum {

/// GF(q) as a coefficient ring for the poly:: templates.
struct FieldRing {
  using value_type = Element;

  const Field* field;

  value_type zero() const { return field->zero(); }
  value_type one() const { return field->one(); }
  value_type add(value_type a, value_type b) const { return field->add(a, b); }
  value_type sub(value_type a, value_type b) const { return field->sub(a, b); }
  value_type neg(value_type a) const { return field->neg(a); }
  value_type mul(value_type a, value_type b) const { return field->mul(a, b); }
  value_type inv(value_type a) const { return field->inv(a); }
  value_type from_integer(std::int64_t k) const { return field->from_integer(k); }
  std::uint64_t characteristic() const { return field->characteristic(); }
  value_type frobenius_inverse(value_type a) const { return field->frobenius_inverse(a); }
};

/// Coefficients in GF(q), constant term first.
using FieldPoly = poly::Poly<FieldRing>;

/// Product of the distinct monic irreducible factors of f (f nonzero).
FieldPoly radical(const Field& field, const FieldPoly& f);

/// Number of distinct roots of f in an algebraic closure: deg rad(f).
int distinct_root_count(const Field& field, const FieldPoly& f);

/// f = c * h^d for some constant c and polynomial h (constants included).
bool is_constant_times_power(const Field& field, const FieldPoly& f, int d);

/// Every irreducible factor of f has multiplicity < d.
bool is_power_free(const Field& field, const FieldPoly& f, int d);

struct WeilCheck {
  std::int64_t sum_norm = 0;  // |sum chi(f(x))|^2
  int distinct_roots = 0;
  bool holds = false;         // |sum|^2 <= (m-1)^2 q
};

/// Evaluates sum over x in GF(q) of chi(f(x)) for chi of order d in {2, 3}
/// and compares it with (m-1) sqrt(q). Throws BoundInapplicable when f is a
/// constant multiple of a d-th power, CharacterUndefined when no character of
/// order d exists.
WeilCheck weil_bound_check(const Field& field, const FieldPoly& f, int d);

struct WeilSweep {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
};

/// Every d-th-power-free polynomial of degree 1..max_degree (all leading
/// coefficients) checked against the bound.
WeilSweep weil_exhaustive(const Field& field, int d, int max_degree);

}  // namespace potsum
