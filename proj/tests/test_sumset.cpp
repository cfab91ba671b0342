#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "potsum/error.hpp"
#include "potsum/numtheory.hpp"
#include "potsum/sumset.hpp"

using namespace potsum;

namespace {

std::vector<SearchHit> hits(std::initializer_list<std::array<std::uint64_t, 3>> rows) {
  std::vector<SearchHit> out;
  for (auto [q, m, n] : rows) out.push_back({q, m, n, false});
  return out;
}

const std::vector<SearchHit> kM4Limit1000 = hits({{4, 4, 2}, {25, 4, 13}, {7, 4, 3}, {7, 4, 4},
                                                  {49, 4, 25}, {13, 4, 7}, {19, 4, 10},
                                                  {31, 4, 16}, {43, 4, 22}, {103, 4, 52}});

}  // namespace

TEST(Sumset, CoversExamples) {
  const Field f7 = Field::build(7, 1);
  EXPECT_TRUE(covers(f7, n_potents(f7, 4), n_potents(f7, 3)));
  const Field f5 = Field::build(5, 1);
  EXPECT_FALSE(covers(f5, n_potents(f5, 4), n_potents(f5, 2)));
  const Field f4 = Field::of_order(4);
  EXPECT_TRUE(covers(f4, n_potents(f4, 4), n_potents(f4, 2)));
}

TEST(Sumset, MismatchedContexts) {
  const Field a = Field::of_order(25);
  const auto mods = irreducibles(5, 2, 2);
  const Field b = Field::with_modulus(5, mods[1]);
  try {
    covers(a, n_potents(a, 4), n_potents(b, 13));
    FAIL() << "expected ContextMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ContextMismatch);
  }
  const Field c = Field::of_order(7);
  EXPECT_THROW(covers(a, n_potents(a, 4), n_potents(c, 3)), Error);
}

TEST(Sumset, CheckOneExamples) {
  using V = std::vector<std::uint64_t>;
  EXPECT_EQ(check_one(7, 4, BoundaryRule::AppendixExact), (V{3, 4}));
  EXPECT_EQ(check_one(103, 4, BoundaryRule::AppendixExact), (V{52}));
  for (std::uint64_t m : {2, 4}) {
    EXPECT_EQ(check_one(3, m, BoundaryRule::TheoremBound), (V{2}));
    EXPECT_EQ(check_one(3, m, BoundaryRule::AppendixExact), V{});
  }
  EXPECT_THROW(check_one(6, 4, BoundaryRule::AppendixExact), Error);
}

TEST(Sumset, AdmittedExponents) {
  EXPECT_TRUE(admitted(BoundaryRule::AppendixExact, 7, 4));
  EXPECT_FALSE(admitted(BoundaryRule::AppendixExact, 3, 2));
  EXPECT_TRUE(admitted(BoundaryRule::TheoremBound, 3, 2));
  EXPECT_FALSE(admitted(BoundaryRule::TheoremBound, 7, 7));
}

TEST(Sumset, SweepReproducesPublishedTable) {
  EXPECT_EQ(check_all({4, 1000, BoundaryRule::AppendixExact, 0}), kM4Limit1000);
  EXPECT_EQ(check_all({4, 3, BoundaryRule::AppendixExact, 0}), std::vector<SearchHit>{});
}

TEST(Sumset, TheoremBoundAddsThreeAsBoundaryOnly) {
  const auto got = check_all({4, 1000, BoundaryRule::TheoremBound, 0});
  std::vector<SearchHit> expected = kM4Limit1000;
  expected.insert(expected.begin() + 1, SearchHit{3, 4, 2, true});
  EXPECT_EQ(got, expected);
}

TEST(Sumset, ParallelMatchesSerialForAnyThreadCount) {
  for (std::uint64_t m : {3, 4, 5, 7}) {
    const SearchConfig base{m, 2000, BoundaryRule::TheoremBound, 1};
    const auto serial = check_all_serial(base);
    for (int jobs : {1, 2, 4, 0}) {
      SearchConfig c = base;
      c.parallelism = jobs;
      EXPECT_EQ(check_all(c), serial) << "m=" << m << " jobs=" << jobs;
    }
  }
}

TEST(Sumset, InvalidConfig) {
  EXPECT_THROW((SearchConfig{1, 100}.validate()), Error);
  EXPECT_THROW((SearchConfig{4, 1}.validate()), Error);
}

// Kernel against pairwise enumeration for every pair of potent sets, q <= 128.
TEST(Sumset, KernelMatchesReferenceAndPruningIsSound) {
  for (auto q : prime_powers_up_to(128)) {
    const Field f = Field::of_order(q);
    std::vector<PotentSet> sets;
    for (auto d : divisors(q - 1)) sets.push_back(n_potents(f, d + 1));
    for (const auto& a : sets)
      for (const auto& b : sets) {
        const auto ref = sumset_reference(f, a, b);
        ASSERT_EQ(sumset(f, a, b), ref) << q << " " << a.n << " " << b.n;
        ASSERT_EQ(covers(f, a, b), ref.all());
        ASSERT_EQ(covers_reference(f, a, b), ref.all());
        if (a.size() * b.size() < q) ASSERT_FALSE(ref.all());
        ASSERT_EQ(covers(f, a, b), covers(f, b, a));
        for (auto x : a.members) ASSERT_TRUE(ref.test(x.index));
        for (auto x : b.members) ASSERT_TRUE(ref.test(x.index));
      }
  }
}

TEST(Sumset, KernelOnArbitrarySubsets) {
  std::mt19937 rng(20240611);
  for (auto q : {31u, 64u, 81u, 125u, 127u, 128u}) {
    const Field f = Field::of_order(q);
    for (int trial = 0; trial < 20; ++trial) {
      PotentSet a, b;
      a.q = b.q = q;
      a.model = b.model = f.spec();
      a.bits = b.bits = DenseBitset(q);
      for (std::uint32_t x = 0; x < q; ++x) {
        if (rng() % 7 == 0) a.members.push_back(Element{x}), a.bits.set(x);
        if (rng() % 5 == 0) b.members.push_back(Element{x}), b.bits.set(x);
      }
      ASSERT_EQ(sumset(f, a, b), sumset_reference(f, a, b)) << q;
    }
  }
}

TEST(Sumset, HitsForFourHaveSquareOrCubeExponent) {
  for (const auto& h : check_all({4, 1000, BoundaryRule::AppendixExact, 0}))
    if ((h.q - 1) % 3 == 0)
      EXPECT_TRUE(h.n - 1 == (h.q - 1) / 2 || h.n - 1 == (h.q - 1) / 3) << h.q;
}

TEST(Sumset, HitsDoNotDependOnTheModulus) {
  for (auto [p, v] : {std::pair{5u, 2u}, std::pair{7u, 2u}, std::pair{3u, 4u}}) {
    const auto mods = irreducibles(p, v, 3);
    ASSERT_GE(mods.size(), 2u);
    const Field base = Field::build(p, v);
    for (std::size_t i = 1; i < mods.size(); ++i) {
      const Field alt = Field::with_modulus(p, mods[i]);
      for (std::uint64_t m : {3, 4, 5}) {
        auto lhs = check_one(base, m, BoundaryRule::TheoremBound);
        auto rhs = check_one(alt, m, BoundaryRule::TheoremBound);
        EXPECT_EQ(lhs, rhs) << base.order() << " m=" << m;
      }
    }
  }
}
