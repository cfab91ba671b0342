#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "potsum/eisenstein.hpp"
#include "potsum/field.hpp"

// Exact evaluation of the character sums that decide coverage of GF(q) by
// C_4 + C_n for n - 1 = (q-1)/2 (squares) and n - 1 = (q-1)/3 (cubes).
//
// Throughout, C_4 = {0, 1, z, y} with z a primitive cube root of unity and
// y = z^2 = -1 - z, and "sum over alpha" means over alpha outside C_4.
namespace potsum {

using Rational = boost::rational<std::int64_t>;

/// r == n. Boost 1.74's mixed rational/integer operator== recurses forever
/// under C++20 rewritten comparisons, so compare the parts directly.
inline bool equals(const Rational& r, std::int64_t n) {
  return r.denominator() == 1 && r.numerator() == n;
}

// ---------------------------------------------------------------------------
// Quadratic-character sums (odd q, 3 | q-1)

/// S_1..S_4 are sums of lambda(alpha - k); T_1..T_6 of lambda over the six
/// pairwise products; U_1..U_4 over the four triple products; V over
/// alpha(alpha^3 - 1). Factor order is (alpha, alpha-1, alpha-z, alpha-y).
struct QuadraticSums {
  std::uint64_t q = 0;
  int lambda_minus1 = 0;
  std::array<std::int64_t, 4> S{};
  std::array<std::int64_t, 6> T{};
  std::array<std::int64_t, 4> U{};
  std::int64_t V = 0;
};

QuadraticSums quadratic_sums(const Field& field);

/// N_q: the number of alpha outside C_4 with alpha, alpha-1, alpha-z, alpha-y
/// all non-squares, counted directly and through the two sum identities.
struct NqValues {
  std::int64_t direct = 0;
  Rational via_neq;          // (q - 4 - sum S + sum T - sum U + V) / 16
  Rational via_stterms;      // (q - 10 - sum U + V) / 16
  Rational printed_stterms;  // (q - 10 + lambda(-1) - sum U + V) / 16

  bool consistent() const { return equals(via_neq, direct) && equals(via_stterms, direct); }
  bool printed_consistent() const {
    return equals(via_neq, direct) && equals(printed_stterms, direct);
  }
};

NqValues compute_Nq(const Field& field);
NqValues compute_Nq(const Field& field, const QuadraticSums& sums);

/// One S_i or T_i: the summed value, the excluded-point evaluation
/// (full-field sum minus the C_4 terms), and the simplified closed form in
/// its published shape.
struct ClosedFormTerm {
  std::string name;
  std::int64_t direct = 0;
  std::int64_t derived = 0;
  std::int64_t printed = 0;
};

struct ClosedFormCheck {
  std::vector<ClosedFormTerm> terms;

  bool derived_holds() const;
  bool printed_holds() const;
  /// Names of the terms whose published closed form disagrees with the sum.
  std::vector<std::string> printed_mismatches() const;
};

ClosedFormCheck closed_form_ST_check(const Field& field);

/// U_4 against the Jacobi sums J(lambda, eta) and J(lambda, eta^2).
struct U4JacobiCheck {
  std::uint64_t q = 0;
  std::int64_t u4 = 0;
  int lambda_minus1 = 0;
  EisensteinInt j_eta;
  EisensteinInt j_eta2;
  /// lambda(-1) * (-1 + J(lambda, eta) + J(lambda, eta^2)).
  EisensteinInt combination;

  bool norms_hold() const;
  /// U_4 == combination.
  bool identity_holds() const;
  /// |U_4| <= 1 + 2 sqrt(q).
  bool bound_holds() const;
  /// Published form with an extra factor 1/3: 3 U_4 == combination.
  bool printed_identity_holds() const;
  /// Published bound |U_4| <= (1 + 2 sqrt(q)) / 3.
  bool printed_bound_holds() const;
};

U4JacobiCheck u4_jacobi_identity(const Field& field);

/// Count of alpha not in {0, -1} with alpha and alpha+1 both non-squares,
/// against (q - 2 + lambda(-1)) / 4. Odd q only.
struct ConsecutiveNonsquares {
  std::int64_t direct = 0;
  std::int64_t formula = 0;
  bool formula_integral = true;
  bool holds() const { return formula_integral && direct == formula; }
};

ConsecutiveNonsquares consecutive_nonsquare_pairs(const Field& field);

// ---------------------------------------------------------------------------
// Cubic-character sums (3 | q-1, q odd or even)

/// M_q: the number of alpha outside C_4 with alpha, alpha-1, alpha-z, alpha-y
/// all non-cubes, directly and through the 81-term expansion of
/// prod_k (2 - eta(alpha-k) - eta^2(alpha-k)).
struct MqValues {
  std::int64_t direct = 0;
  /// 16(q-4) - 8 sum S + 4 sum T - 2 sum U + sum V, exactly in Z[w].
  EisensteinInt meq_numerator;
  /// Expansion terms grouped by how many of the four factors are non-constant.
  std::array<int, 5> group_sizes{};
  std::array<EisensteinInt, 5> group_sums{};

  std::optional<std::int64_t> via_meq() const;
  bool consistent() const { return via_meq() == direct; }
};

MqValues compute_Mq(const Field& field);

/// The twelve sums of eta^j(alpha - k1) eta^k(alpha - k2) with j != k over
/// pairs k1 < k2 of C_4, and the worked instance
/// sum eta(alpha) eta^2(alpha - 1) = -eta(3(z+1)) - eta(3z) - 1.
struct MixedTCheck {
  std::vector<EisensteinInt> sums;
  EisensteinInt displayed_sum;
  EisensteinInt displayed_closed_form;

  bool bounded() const;  // every |sum| <= 3
  bool holds() const { return bounded() && displayed_sum == displayed_closed_form; }
};

MixedTCheck mixed_T_cancellation_check(const Field& field);

// ---------------------------------------------------------------------------
// Counting arguments and thresholds

/// For q = 1 (mod 12) and n = (q+3)/4: C_4 is inside C_n, the four witnesses
/// lie in the stated pairwise intersections, and the union of the translates
/// C_n + k (k in C_4) misses at least one element.
struct UnionDeficiency {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  bool c4_subset = false;
  bool witnesses = false;
  std::uint64_t union_size = 0;

  bool holds() const { return c4_subset && witnesses && union_size + 1 <= q; }
};

UnionDeficiency union_deficiency_check(const Field& field);

/// constant + sqrt_coeff * sqrt(radicand), compared exactly.
struct SurdBound {
  Rational constant;
  Rational sqrt_coeff;
  std::uint64_t radicand = 0;

  int sign() const;
  bool positive() const { return sign() > 0; }
  double approx() const;
};

/// (1/16)(q - (29/3) sqrt(q) - 16).
SurdBound lower_bound_Nq(std::uint64_t q);
/// (1/81)(16 q - 224 sqrt(q) - 560).
SurdBound lower_bound_Mq(std::uint64_t q);

/// q - |A + B| for A = C_4 and B = C_n; equals N_q (n = (q+1)/2) or M_q
/// (n = (q+2)/3).
std::uint64_t uncovered_count(const Field& field, std::uint64_t n);

// ---------------------------------------------------------------------------

/// Everything above for one field with 3 | q-1.
struct CharSumReport {
  std::uint64_t q = 0;
  std::optional<QuadraticSums> quadratic;  // odd q only
  std::optional<NqValues> nq;              // odd q only
  MqValues mq;
  std::optional<std::pair<EisensteinInt, EisensteinInt>> jacobi;  // odd q only
};

CharSumReport char_sum_report(const Field& field);

}  // namespace potsum
