#include <cmath>
#include <numeric>

#include "charsums_common.hpp"
#include "potsum/charsums.hpp"
#include "potsum/potents.hpp"
#include "potsum/sumset.hpp"

namespace potsum {

UnionDeficiency union_deficiency_check(const Field& field) {
  const std::uint64_t q = field.order();
  if (q % 12 != 1) throw Error(ErrorKind::CaseInapplicable, "needs q = 1 (mod 12)");
  UnionDeficiency out;
  out.q = q;
  out.n = (q + 3) / 4;
  const PotentSet c4 = n_potents(field, 4);
  const PotentSet cn = n_potents(field, out.n);

  out.c4_subset = true;
  for (auto a : c4.members) out.c4_subset = out.c4_subset && cn.contains(a);

  const auto k = detail::c4_points(field);
  const Element one = k[1], z = k[2], y = k[3];
  // x is in C_n + t exactly when x - t is in C_n.
  const auto in_translate = [&](Element x, Element t) { return cn.contains(field.sub(x, t)); };
  const Element minus_one = field.neg(one);
  out.witnesses = cn.contains(one) && in_translate(one, one) && cn.contains(z) &&
                  in_translate(z, z) && cn.contains(y) && in_translate(y, y) &&
                  in_translate(minus_one, z) && in_translate(minus_one, y);

  out.union_size = sumset(field, c4, cn).count();
  return out;
}

int SurdBound::sign() const {
  const std::int64_t den = std::lcm(constant.denominator(), sqrt_coeff.denominator());
  const __int128 a = static_cast<__int128>(constant.numerator()) * (den / constant.denominator());
  const __int128 b = static_cast<__int128>(sqrt_coeff.numerator()) * (den / sqrt_coeff.denominator());
  const auto sgn = [](__int128 x) { return (x > 0) - (x < 0); };
  if (b == 0 || radicand == 0) return sgn(a);
  if (a >= 0 && b > 0) return 1;
  if (a <= 0 && b < 0) return -1;
  const __int128 lhs = a * a;
  const __int128 rhs = b * b * static_cast<__int128>(radicand);
  return a > 0 ? sgn(lhs - rhs) : sgn(rhs - lhs);
}

double SurdBound::approx() const {
  return boost::rational_cast<double>(constant) +
         boost::rational_cast<double>(sqrt_coeff) * std::sqrt(static_cast<double>(radicand));
}

SurdBound lower_bound_Nq(std::uint64_t q) {
  const auto n = static_cast<std::int64_t>(q);
  return {Rational(n - 16, 16), Rational(-29, 48), q};
}

SurdBound lower_bound_Mq(std::uint64_t q) {
  const auto n = static_cast<std::int64_t>(q);
  return {Rational(16 * n - 560, 81), Rational(-224, 81), q};
}

std::uint64_t uncovered_count(const Field& field, std::uint64_t n) {
  const PotentSet c4 = n_potents(field, 4);
  const PotentSet cn = n_potents(field, n);
  return field.order() - sumset(field, c4, cn).count();
}

CharSumReport char_sum_report(const Field& field) {
  if ((field.order() - 1) % 3 != 0) throw Error(ErrorKind::CaseInapplicable, "needs 3 | q-1");
  CharSumReport out;
  out.q = field.order();
  if (field.characteristic() != 2) {
    out.quadratic = quadratic_sums(field);
    out.nq = compute_Nq(field, *out.quadratic);
    out.jacobi = std::pair{jacobi_sum(field, Character::quadratic(), Character::cubic(1)),
                           jacobi_sum(field, Character::quadratic(), Character::cubic(2))};
  }
  out.mq = compute_Mq(field);
  return out;
}

}  // namespace potsum
