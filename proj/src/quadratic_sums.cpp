#include <cstdlib>

#include "charsums_common.hpp"
#include "potsum/charsums.hpp"
#include "potsum/summation.hpp"

namespace potsum {

using detail::c4_points;
using detail::z_linear;

namespace {

constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
constexpr std::array<std::array<int, 3>, 4> kTriples{{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

bool within_two_sqrt_plus_one(std::int64_t value, std::uint64_t q, std::int64_t scale) {
  // scale * |value| <= 1 + 2 sqrt(q)
  const std::int64_t m = scale * std::llabs(value);
  if (m <= 1) return true;
  return (m - 1) * (m - 1) <= 4 * static_cast<std::int64_t>(q);
}

}  // namespace

QuadraticSums quadratic_sums(const Field& field) {
  detail::require_quadratic_case(field);
  const auto k = c4_points(field);
  const auto lam = [&](Element x) { return quadratic_character(field, x); };
  const auto prod = [&](Element a, std::initializer_list<int> idx) {
    Element r = field.one();
    for (int i : idx) r = field.mul(r, field.sub(a, k[i]));
    return r;
  };

  QuadraticSums out;
  out.q = field.order();
  out.lambda_minus1 = lam(field.neg(field.one()));
  for (int i = 0; i < 4; ++i)
    out.S[i] = sum_excluding(field, k, [&](Element a) { return lam(field.sub(a, k[i])); });
  for (std::size_t t = 0; t < kPairs.size(); ++t) {
    const auto [i, j] = kPairs[t];
    out.T[t] = sum_excluding(field, k, [&](Element a) { return lam(prod(a, {i, j})); });
  }
  for (std::size_t u = 0; u < kTriples.size(); ++u) {
    const auto [i, j, l] = kTriples[u];
    out.U[u] = sum_excluding(field, k, [&](Element a) { return lam(prod(a, {i, j, l})); });
  }
  out.V = sum_excluding(field, k, [&](Element a) { return lam(prod(a, {0, 1, 2, 3})); });
  return out;
}

NqValues compute_Nq(const Field& field) { return compute_Nq(field, quadratic_sums(field)); }

NqValues compute_Nq(const Field& field, const QuadraticSums& s) {
  detail::require_quadratic_case(field);
  const auto k = c4_points(field);
  const auto residues = power_residues(field);
  NqValues out;
  out.direct = sum_excluding(field, k, [&](Element a) {
    for (auto c : k)
      if (!detail::nonresidue(residues.squares, field.sub(a, c))) return 0;
    return 1;
  });

  std::int64_t sum_s = 0, sum_t = 0, sum_u = 0;
  for (auto x : s.S) sum_s += x;
  for (auto x : s.T) sum_t += x;
  for (auto x : s.U) sum_u += x;
  const auto q = static_cast<std::int64_t>(s.q);
  out.via_neq = Rational(q - 4 - sum_s + sum_t - sum_u + s.V, 16);
  out.via_stterms = Rational(q - 10 - sum_u + s.V, 16);
  out.printed_stterms = Rational(q - 10 + s.lambda_minus1 - sum_u + s.V, 16);
  return out;
}

bool ClosedFormCheck::derived_holds() const {
  for (const auto& t : terms)
    if (t.direct != t.derived) return false;
  return true;
}

bool ClosedFormCheck::printed_holds() const { return printed_mismatches().empty(); }

std::vector<std::string> ClosedFormCheck::printed_mismatches() const {
  std::vector<std::string> out;
  for (const auto& t : terms)
    if (t.direct != t.printed) out.push_back(t.name);
  return out;
}

ClosedFormCheck closed_form_ST_check(const Field& field) {
  const QuadraticSums s = quadratic_sums(field);
  const auto k = c4_points(field);
  const Element z = k[2];
  const auto lam = [&](Element x) -> std::int64_t { return quadratic_character(field, x); };
  const auto L = [&](std::int64_t c0, std::int64_t c1) { return lam(z_linear(field, z, c0, c1)); };

  ClosedFormCheck out;
  // Full-field sums: sum lambda(x - r) = 0, and sum lambda((x - r1)(x - r2)) = -1
  // for r1 != r2. Subtract the terms at the four excluded points.
  for (int i = 0; i < 4; ++i) {
    std::int64_t derived = 0;
    for (auto c : k) derived -= lam(field.sub(c, k[i]));
    out.terms.push_back({"S" + std::to_string(i + 1), s.S[i], derived, 0});
  }
  for (std::size_t t = 0; t < kPairs.size(); ++t) {
    const auto [i, j] = kPairs[t];
    std::int64_t derived = -1;
    for (auto c : k) derived -= lam(field.mul(field.sub(c, k[i]), field.sub(c, k[j])));
    out.terms.push_back({"T" + std::to_string(t + 1), s.T[t], derived, 0});
  }

  auto& tm = out.terms;
  tm[0].printed = -3;
  tm[1].printed = -L(-1, 0) - L(-1, 1) - L(-2, -1);
  tm[2].printed = -L(0, -1) - L(1, -1) - L(-1, -2);
  tm[3].printed = -L(1, 1) - L(2, 1) - L(1, 2);
  tm[4].printed = -1 - L(-1, -2) - L(1, 2);
  tm[5].printed = -1 - L(1, -1) - L(-1, 1);
  tm[6].printed = -1 - L(2, 1) - L(-2, -1);
  tm[7].printed = -1 - 2 * L(0, 1);
  tm[8].printed = -2 - L(1, 1);
  tm[9].printed = -2 - L(-1, 0);
  return out;
}

bool U4JacobiCheck::norms_hold() const {
  const auto n = static_cast<std::int64_t>(q);
  return j_eta.norm() == n && j_eta2.norm() == n;
}

bool U4JacobiCheck::identity_holds() const { return combination == EisensteinInt(u4); }

bool U4JacobiCheck::bound_holds() const { return within_two_sqrt_plus_one(u4, q, 1); }

bool U4JacobiCheck::printed_identity_holds() const {
  return combination == EisensteinInt(3 * u4);
}

bool U4JacobiCheck::printed_bound_holds() const { return within_two_sqrt_plus_one(u4, q, 3); }

U4JacobiCheck u4_jacobi_identity(const Field& field) {
  const QuadraticSums s = quadratic_sums(field);
  U4JacobiCheck out;
  out.q = field.order();
  out.u4 = s.U[3];
  out.lambda_minus1 = s.lambda_minus1;
  out.j_eta = jacobi_sum(field, Character::quadratic(), Character::cubic(1));
  out.j_eta2 = jacobi_sum(field, Character::quadratic(), Character::cubic(2));
  out.combination = EisensteinInt(s.lambda_minus1) * (EisensteinInt(-1) + out.j_eta + out.j_eta2);
  return out;
}

ConsecutiveNonsquares consecutive_nonsquare_pairs(const Field& field) {
  if (field.characteristic() == 2)
    throw Error(ErrorKind::CharacterUndefined, "quadratic character needs odd q");
  const auto residues = power_residues(field);
  const Element minus_one = field.neg(field.one());
  const std::array<Element, 2> excluded{field.zero(), minus_one};
  ConsecutiveNonsquares out;
  out.direct = sum_excluding(field, excluded, [&](Element a) {
    return detail::nonresidue(residues.squares, a) &&
                   detail::nonresidue(residues.squares, field.add(a, field.one()))
               ? 1
               : 0;
  });
  const std::int64_t numerator =
      static_cast<std::int64_t>(field.order()) - 2 + quadratic_character(field, minus_one);
  out.formula_integral = numerator % 4 == 0;
  out.formula = numerator / 4;
  return out;
}

}  // namespace potsum
