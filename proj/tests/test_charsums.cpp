#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "potsum/charsums.hpp"
#include "potsum/error.hpp"
#include "potsum/numtheory.hpp"

using namespace potsum;

namespace {

bool quadratic_case(std::uint64_t q) { return q % 2 == 1 && q % 3 == 1; }

// N_q and M_q for a prime p by plain modular arithmetic.
struct PrimeOracle {
  std::int64_t nq = 0;
  std::int64_t mq = 0;
};

PrimeOracle prime_oracle(std::uint64_t p) {
  std::vector<bool> sq(p, false), cu(p, false);
  for (std::uint64_t a = 1; a < p; ++a) {
    sq[a * a % p] = true;
    cu[a * a % p * a % p] = true;
  }
  std::vector<std::uint64_t> c4;
  for (std::uint64_t a = 0; a < p; ++a)
    if (a * a % p * a % p * a % p == a) c4.push_back(a);
  PrimeOracle out;
  for (std::uint64_t a = 0; a < p; ++a) {
    if (std::find(c4.begin(), c4.end(), a) != c4.end()) continue;
    bool all_ns = true, all_nc = true;
    for (auto k : c4) {
      const std::uint64_t d = (a + p - k) % p;
      all_ns = all_ns && d != 0 && !sq[d];
      all_nc = all_nc && d != 0 && !cu[d];
    }
    out.nq += all_ns;
    out.mq += all_nc;
  }
  return out;
}

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Nq, SmallFieldsVanish) {
  for (std::uint64_t q : {7, 13}) {
    const NqValues v = compute_Nq(Field::of_order(q));
    EXPECT_EQ(v.direct, 0);
    EXPECT_TRUE(equals(v.via_neq, 0));
    EXPECT_TRUE(equals(v.via_stterms, 0));
    EXPECT_TRUE(v.consistent());
  }
  EXPECT_GT(compute_Nq(Field::of_order(127)).direct, 0);
}

TEST(Nq, MatchesPrimeOracleAndKnownValues) {
  const std::map<std::uint64_t, std::int64_t> known{{7, 0},  {13, 0}, {19, 0},  {31, 0},  {37, 3},
                                                    {43, 0}, {61, 3}, {67, 6},  {73, 6},  {79, 6},
                                                    {97, 6}, {103, 0}, {109, 6}, {127, 6}};
  for (auto p : primes_up_to(400)) {
    if (!quadratic_case(p)) continue;
    const NqValues v = compute_Nq(Field::of_order(p));
    EXPECT_EQ(v.direct, prime_oracle(p).nq) << p;
    if (known.count(p)) EXPECT_EQ(v.direct, known.at(p)) << p;
  }
}

TEST(Nq, IdentityChainHolds) {
  for (auto q : prime_powers_up_to(500)) {
    if (!quadratic_case(q)) continue;
    const Field f = Field::of_order(q);
    const QuadraticSums s = quadratic_sums(f);
    const NqValues v = compute_Nq(f, s);
    EXPECT_TRUE(v.consistent()) << q;
    // The S and T sums cancel to a constant: sum T - sum S = -6.
    const auto sum_s = std::accumulate(s.S.begin(), s.S.end(), std::int64_t{0});
    const auto sum_t = std::accumulate(s.T.begin(), s.T.end(), std::int64_t{0});
    EXPECT_EQ(sum_t - sum_s, -6) << q;
    // The variant with an extra lambda(-1) in the numerator is never integral.
    EXPECT_NE(v.printed_stterms.denominator(), 1) << q;
    EXPECT_FALSE(v.printed_consistent());
  }
}

TEST(Nq, CaseInapplicable) {
  EXPECT_EQ(kind_of([] { compute_Nq(Field::of_order(5)); }), ErrorKind::CaseInapplicable);
  EXPECT_EQ(kind_of([] { compute_Nq(Field::of_order(16)); }), ErrorKind::CaseInapplicable);
  EXPECT_EQ(kind_of([] { compute_Mq(Field::of_order(11)); }), ErrorKind::CaseInapplicable);
  EXPECT_EQ(kind_of([] { closed_form_ST_check(Field::of_order(17)); }), ErrorKind::CaseInapplicable);
}

TEST(ClosedForms, ExcludedPointEvaluationAlwaysHolds) {
  for (auto q : prime_powers_up_to(300)) {
    if (!quadratic_case(q)) continue;
    const auto c = closed_form_ST_check(Field::of_order(q));
    ASSERT_EQ(c.terms.size(), 10u);
    EXPECT_TRUE(c.derived_holds()) << q;
    for (const auto& t : c.terms) {
      EXPECT_LE(std::llabs(t.direct), 3 + static_cast<std::int64_t>(isqrt(q)) + 2);
      if (t.name[0] == 'S') EXPECT_LE(std::llabs(t.direct), 3);
    }
  }
}

// The published T_4 = -1 - 2 lambda(z) silently takes lambda(3) = 1, which
// fails exactly when q = 7 (mod 12); all other published forms hold.
TEST(ClosedForms, PublishedFormsDifferOnlyInT4) {
  for (auto q : prime_powers_up_to(300)) {
    if (!quadratic_case(q)) continue;
    const auto c = closed_form_ST_check(Field::of_order(q));
    const auto bad = c.printed_mismatches();
    if (q % 12 == 7) {
      EXPECT_EQ(bad, std::vector<std::string>{"T4"}) << q;
      EXPECT_EQ(c.terms[7].direct, -1) << q;  // -2 - lambda(-1) with lambda(-1) = -1
    } else {
      EXPECT_TRUE(bad.empty()) << q;
    }
  }
}

TEST(ClosedForms, T1CancelsAt31) {
  const auto c = closed_form_ST_check(Field::of_order(31));
  EXPECT_EQ(c.terms[4].name, "T1");
  EXPECT_EQ(c.terms[4].direct, -1);
  EXPECT_EQ(c.terms[0].direct, -3);
}

TEST(U4, JacobiIdentityAndBound) {
  const std::map<std::uint64_t, std::int64_t> known{{7, -3},   {13, -3}, {19, 9},   {37, 9},
                                                    {61, -15}, {103, 21}, {127, 21}, {199, -27}};
  for (auto q : prime_powers_up_to(200)) {
    if (!quadratic_case(q)) continue;
    const U4JacobiCheck u = u4_jacobi_identity(Field::of_order(q));
    EXPECT_TRUE(u.norms_hold()) << q;
    EXPECT_TRUE(u.identity_holds()) << q;
    EXPECT_TRUE(u.bound_holds()) << q;
    EXPECT_TRUE(u.combination.is_rational());
    if (known.count(q)) EXPECT_EQ(u.u4, known.at(q)) << q;
  }
  // The one-third scaled form is off by exactly that factor.
  const U4JacobiCheck u13 = u4_jacobi_identity(Field::of_order(13));
  EXPECT_FALSE(u13.printed_identity_holds());
  EXPECT_FALSE(u13.printed_bound_holds());
  EXPECT_FALSE(u4_jacobi_identity(Field::of_order(7)).printed_bound_holds());
}

TEST(ConsecutiveNonsquares, Formula) {
  for (std::uint64_t q : {5, 7}) {
    const auto c = consecutive_nonsquare_pairs(Field::of_order(q));
    EXPECT_EQ(c.direct, 1);
    EXPECT_EQ(c.formula, 1);
  }
  const auto c3 = consecutive_nonsquare_pairs(Field::of_order(3));
  EXPECT_EQ(c3.direct, 0);
  EXPECT_EQ(c3.formula, 0);
  for (auto q : prime_powers_up_to(500))
    if (q % 2 == 1) EXPECT_TRUE(consecutive_nonsquare_pairs(Field::of_order(q)).holds()) << q;
  EXPECT_THROW(consecutive_nonsquare_pairs(Field::of_order(8)), Error);
}

TEST(Mq, ExpansionMatchesDirectCount) {
  EXPECT_EQ(compute_Mq(Field::of_order(7)).direct, 0);
  EXPECT_EQ(compute_Mq(Field::of_order(7)).via_meq(), 0);
  for (auto q : prime_powers_up_to(300)) {
    if (q % 3 != 1) continue;
    const MqValues m = compute_Mq(Field::of_order(q));
    EXPECT_TRUE(m.consistent()) << q;
    EXPECT_TRUE(m.meq_numerator.is_rational()) << q;
    EXPECT_GE(m.direct, 0);
    EXPECT_EQ(m.group_sizes, (std::array<int, 5>{1, 8, 24, 32, 16}));
    EXPECT_EQ(m.group_sums[0], EisensteinInt(static_cast<std::int64_t>(q) - 4));
    if (is_prime(q)) EXPECT_EQ(m.direct, prime_oracle(q).mq) << q;
  }
  EXPECT_TRUE(compute_Mq(Field::of_order(16)).consistent());
  EXPECT_GT(compute_Mq(Field::of_order(271)).direct, 0);
}

TEST(MixedT, CancellationBound) {
  for (std::uint64_t q : {7, 13, 25, 16, 64, 103, 289}) {
    const MixedTCheck m = mixed_T_cancellation_check(Field::of_order(q));
    EXPECT_EQ(m.sums.size(), 12u);
    EXPECT_TRUE(m.holds()) << q;
  }
}

TEST(UnionDeficiency, Examples) {
  const UnionDeficiency u13 = union_deficiency_check(Field::of_order(13));
  EXPECT_EQ(u13.n, 4u);
  // {0,1,3,9} + {0,1,3,9} = {0,1,2,3,4,5,6,9,10,12}
  EXPECT_EQ(u13.union_size, 10u);
  EXPECT_LE(u13.union_size, 12u);
  EXPECT_TRUE(u13.holds());
  EXPECT_TRUE(union_deficiency_check(Field::of_order(25)).holds());
  EXPECT_TRUE(union_deficiency_check(Field::of_order(37)).holds());
  for (auto q : prime_powers_up_to(500))
    if (q % 12 == 1) EXPECT_TRUE(union_deficiency_check(Field::of_order(q)).holds()) << q;
  EXPECT_THROW(union_deficiency_check(Field::of_order(7)), Error);
}

TEST(LowerBounds, ExactThresholds) {
  EXPECT_TRUE(lower_bound_Nq(125).positive());
  EXPECT_FALSE(lower_bound_Nq(123).positive());
  // At the integer 124 the bound is already (barely) positive:
  // (3*124 - 48)^2 = 104976 > 841 * 124 = 104284.
  EXPECT_TRUE(lower_bound_Nq(124).positive());
  EXPECT_LT(lower_bound_Nq(4).sign(), 0);
  EXPECT_TRUE(lower_bound_Mq(262).positive());
  EXPECT_FALSE(lower_bound_Mq(261).positive());
  for (std::uint64_t q = 2; q <= 2000; ++q) {
    EXPECT_EQ(lower_bound_Nq(q).positive(), q >= 124) << q;
    EXPECT_EQ(lower_bound_Mq(q).positive(), q >= 262) << q;
    EXPECT_EQ(lower_bound_Nq(q).sign() > 0, lower_bound_Nq(q).approx() > 0);
  }
}

TEST(SurdBound, SignCases) {
  EXPECT_EQ((SurdBound{Rational(3), Rational(-1), 9}).sign(), 0);
  EXPECT_EQ((SurdBound{Rational(-3), Rational(1), 9}).sign(), 0);
  EXPECT_EQ((SurdBound{Rational(1, 2), Rational(1, 3), 2}).sign(), 1);
  EXPECT_EQ((SurdBound{Rational(-1, 2), Rational(-1, 3), 2}).sign(), -1);
  EXPECT_EQ((SurdBound{Rational(0), Rational(0), 7}).sign(), 0);
  EXPECT_EQ((SurdBound{Rational(-5), Rational(2), 7}).sign(), 1);  // 2 sqrt 7 = 5.29
}

TEST(Uncovered, MatchesCounts) {
  for (auto q : prime_powers_up_to(200)) {
    if (q % 3 != 1) continue;
    const Field f = Field::of_order(q);
    if (q % 2 == 1)
      EXPECT_EQ(uncovered_count(f, (q + 1) / 2), static_cast<std::uint64_t>(compute_Nq(f).direct)) << q;
    EXPECT_EQ(uncovered_count(f, (q + 2) / 3), static_cast<std::uint64_t>(compute_Mq(f).direct)) << q;
  }
}

TEST(Report, EvenFieldHasNoQuadraticPart) {
  const CharSumReport r = char_sum_report(Field::of_order(16));
  EXPECT_FALSE(r.quadratic);
  EXPECT_FALSE(r.nq);
  EXPECT_TRUE(r.mq.consistent());
  const CharSumReport r13 = char_sum_report(Field::of_order(13));
  ASSERT_TRUE(r13.nq);
  EXPECT_EQ(r13.quadratic->lambda_minus1, 1);
  EXPECT_THROW(char_sum_report(Field::of_order(5)), Error);
}
