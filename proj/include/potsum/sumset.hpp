#pragma once

#include <cstdint>
#include <vector>

#include "potsum/bitset.hpp"
#include "potsum/field.hpp"
#include "potsum/potents.hpp"

namespace potsum {

/// Which exponents n = d + 1 (d | q-1) a sweep admits.
enum class BoundaryRule {
  AppendixExact,  // n < q - 1, the guard of the published search
  TheoremBound,   // n < q
};

struct SearchHit {
  std::uint64_t q = 0;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  /// Admitted by TheoremBound but not by AppendixExact.
  bool boundary_only = false;

  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

struct SearchConfig {
  std::uint64_t m = 4;
  std::uint64_t limit = 1000;
  BoundaryRule boundary_rule = BoundaryRule::AppendixExact;
  /// Worker threads for the sweep; 0 means all available.
  int parallelism = 0;

  void validate() const;
};

/// {a + b : a in A, b in B} as a bitset. Prime fields translate whole words
/// by rotation, characteristic-2 fields by an XOR word permutation, and other
/// extension fields element by element.
DenseBitset sumset(const Field& field, const PotentSet& a, const PotentSet& b);

/// Pairwise enumeration of A + B; the serial reference for sumset().
DenseBitset sumset_reference(const Field& field, const PotentSet& a, const PotentSet& b);

/// True iff A + B is the whole field. Returns false without enumerating when
/// |A| * |B| < q.
bool covers(const Field& field, const PotentSet& a, const PotentSet& b);

/// Same answer as covers() by exhaustive pair enumeration, no pruning.
bool covers_reference(const Field& field, const PotentSet& a, const PotentSet& b);

bool admitted(BoundaryRule rule, std::uint64_t q, std::uint64_t n);

/// Every admitted n with C_m + C_n = GF(q), in increasing divisor order.
std::vector<SearchHit> check_one(const Field& field, std::uint64_t m, BoundaryRule rule);
std::vector<std::uint64_t> check_one(std::uint64_t q, std::uint64_t m, BoundaryRule rule);

/// Sweep over prime powers q <= limit, ascending p then ascending exponent.
/// Fields are checked in parallel; the result order does not depend on the
/// thread count.
std::vector<SearchHit> check_all(const SearchConfig& config);

/// Single-threaded sweep, kept as the reference for check_all().
std::vector<SearchHit> check_all_serial(const SearchConfig& config);

}  // namespace potsum
