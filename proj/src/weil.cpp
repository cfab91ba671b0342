#include "potsum/weil.hpp"

#include "potsum/characters.hpp"
#include "potsum/error.hpp"

namespace potsum {

namespace {

bool is_constant(const FieldPoly& f) { return poly::degree(f) <= 0; }

FieldPoly exact_quotient(const FieldRing& ring, const FieldPoly& a, const FieldPoly& b) {
  return poly::divmod(ring, a, b).first;
}

bool divides(const FieldRing& ring, const FieldPoly& a, const FieldPoly& b) {
  return poly::mod(ring, b, a).empty();
}

void require_character(const Field& field, int d) {
  if (d == 2 && field.characteristic() == 2)
    throw Error(ErrorKind::CharacterUndefined, "no quadratic character in characteristic 2");
  if (d == 3 && (field.order() - 1) % 3 != 0)
    throw Error(ErrorKind::CharacterUndefined, "no cubic character unless 3 | q-1");
  if (d != 2 && d != 3) throw Error(ErrorKind::InvalidCharacter, "character order must be 2 or 3");
}

// chi(a)^k summed into a complex value; for d = 2 the result is rational.
EisensteinInt chi(const Field& field, int d, Element a) {
  return d == 2 ? EisensteinInt(quadratic_character(field, a)) : cubic_character(field, a, 1);
}

}  // namespace

FieldPoly radical(const Field& field, const FieldPoly& f_in) {
  const FieldRing ring{&field};
  FieldPoly f = poly::monic(ring, f_in);
  if (f.empty()) throw Error(ErrorKind::InvalidArgument, "radical of the zero polynomial");
  if (is_constant(f)) return f;
  const FieldPoly df = poly::derivative(ring, f);
  if (df.empty()) return radical(field, poly::pth_root(ring, f));

  // w collects the factors whose multiplicity is prime to p; what remains of
  // g after stripping them is a p-th power.
  FieldPoly g = poly::gcd(ring, f, df);
  const FieldPoly w = exact_quotient(ring, f, g);
  for (;;) {
    const FieldPoly c = poly::gcd(ring, g, w);
    if (is_constant(c)) break;
    g = exact_quotient(ring, g, c);
  }
  if (is_constant(g)) return w;
  return poly::mul(ring, w, radical(field, poly::pth_root(ring, g)));
}

int distinct_root_count(const Field& field, const FieldPoly& f) {
  return poly::degree(radical(field, f));
}

bool is_constant_times_power(const Field& field, const FieldPoly& f_in, int d) {
  const FieldRing ring{&field};
  FieldPoly f = poly::monic(ring, f_in);
  while (!is_constant(f)) {
    const FieldPoly r = radical(field, f);
    FieldPoly rd = poly::constant(ring, field.one());
    for (int i = 0; i < d; ++i) rd = poly::mul(ring, rd, r);
    if (!divides(ring, rd, f)) return false;
    f = exact_quotient(ring, f, rd);
  }
  return true;
}

bool is_power_free(const Field& field, const FieldPoly& f_in, int d) {
  const FieldRing ring{&field};
  FieldPoly f = poly::monic(ring, f_in);
  for (int k = 1; k < d && !is_constant(f); ++k) f = exact_quotient(ring, f, radical(field, f));
  return is_constant(f);
}

WeilCheck weil_bound_check(const Field& field, const FieldPoly& f_in, int d) {
  require_character(field, d);
  const FieldRing ring{&field};
  FieldPoly f = f_in;
  poly::trim(ring, f);
  if (f.empty() || is_constant_times_power(field, f, d))
    throw Error(ErrorKind::BoundInapplicable, "polynomial is a constant times a d-th power");

  EisensteinInt sum;
  for (std::uint32_t i = 0; i < field.order(); ++i)
    sum += chi(field, d, poly::eval(ring, f, Element{i}));

  WeilCheck out;
  out.sum_norm = sum.norm();
  out.distinct_roots = distinct_root_count(field, f);
  const std::int64_t m1 = out.distinct_roots - 1;
  out.holds = out.sum_norm <= m1 * m1 * static_cast<std::int64_t>(field.order());
  return out;
}

WeilSweep weil_exhaustive(const Field& field, int d, int max_degree) {
  require_character(field, d);
  const FieldRing ring{&field};
  const auto q = static_cast<std::uint32_t>(field.order());
  WeilSweep out;
  std::vector<Element> values(q);
  for (int deg = 1; deg <= max_degree; ++deg) {
    FieldPoly f(static_cast<std::size_t>(deg) + 1, field.zero());
    f.back() = field.one();
    for (;;) {
      // Square-free polynomials (gcd(f, f') = 1) skip the radical computation.
      const bool separable = poly::degree(poly::gcd(ring, f, poly::derivative(ring, f))) == 0;
      if (separable || is_power_free(field, f, d)) {
        const std::int64_t m1 = (separable ? deg : distinct_root_count(field, f)) - 1;
        const std::int64_t bound = m1 * m1 * static_cast<std::int64_t>(q);
        for (std::uint32_t x = 0; x < q; ++x) values[x] = poly::eval(ring, f, Element{x});
        for (std::uint32_t c = 1; c < q; ++c) {
          EisensteinInt sum;
          for (auto v : values) sum += chi(field, d, field.mul(Element{c}, v));
          ++out.checked;
          if (sum.norm() > bound) ++out.violations;
        }
      }
      // Next monic polynomial of this degree: odometer over the lower coefficients.
      int i = 0;
      while (i < deg && f[i].index + 1 == q) f[i++] = field.zero();
      if (i == deg) break;
      f[i] = Element{f[i].index + 1};
    }
  }
  return out;
}

}  // namespace potsum
