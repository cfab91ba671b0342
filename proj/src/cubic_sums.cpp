#include "charsums_common.hpp"
#include "potsum/charsums.hpp"
#include "potsum/summation.hpp"

namespace potsum {

using detail::c4_points;

std::optional<std::int64_t> MqValues::via_meq() const {
  if (!meq_numerator.is_rational() || meq_numerator.a() % 81 != 0) return std::nullopt;
  return meq_numerator.a() / 81;
}

MqValues compute_Mq(const Field& field) {
  const auto k = c4_points(field);
  const auto residues = power_residues(field);

  MqValues out;
  out.direct = sum_excluding(field, k, [&](Element a) {
    for (auto c : k)
      if (!detail::nonresidue(residues.cubes, field.sub(a, c))) return 0;
    return 1;
  });

  // Each factor 2 - eta(x) - eta^2(x) contributes coefficient 2 for exponent 0
  // and -1 for exponents 1 and 2; walk all 3^4 exponent tuples.
  for (int tuple = 0; tuple < 81; ++tuple) {
    std::array<int, 4> e{};
    int nonconstant = 0;
    std::int64_t coefficient = 1;
    for (int i = 0, t = tuple; i < 4; ++i, t /= 3) {
      e[i] = t % 3;
      nonconstant += e[i] != 0;
      coefficient *= e[i] == 0 ? 2 : -1;
    }
    const EisensteinInt sum = sum_excluding(field, k, [&](Element a) {
      EisensteinInt r(1);
      for (int i = 0; i < 4; ++i)
        if (e[i] != 0) r = r * cubic_character(field, field.sub(a, k[i]), e[i]);
      return r;
    });
    out.meq_numerator += EisensteinInt(coefficient) * sum;
    ++out.group_sizes[nonconstant];
    out.group_sums[nonconstant] += sum;
  }
  return out;
}

bool MixedTCheck::bounded() const {
  for (const auto& s : sums)
    if (s.norm() > 9) return false;
  return true;
}

MixedTCheck mixed_T_cancellation_check(const Field& field) {
  const auto k = c4_points(field);
  const Element z = k[2];
  const auto eta = [&](Element x, int e) { return cubic_character(field, x, e); };

  MixedTCheck out;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (auto [ei, ej] : {std::pair{1, 2}, std::pair{2, 1}})
        out.sums.push_back(sum_excluding(field, k, [&](Element a) {
          return eta(field.sub(a, k[i]), ei) * eta(field.sub(a, k[j]), ej);
        }));
  out.displayed_sum = out.sums.front();

  const Element three = field.from_integer(3);
  const Element three_z_plus_one = field.mul(three, field.add(z, field.one()));
  out.displayed_closed_form =
      -eta(three_z_plus_one, 1) - eta(field.mul(three, z), 1) - EisensteinInt(1);
  return out;
}

}  // namespace potsum
