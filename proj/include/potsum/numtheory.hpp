#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Small-integer number theory used by field construction and the sweeps.
// Everything here is exact and works on 64-bit unsigned integers.
namespace potsum {

struct PrimePower {
  std::uint64_t p = 0;
  std::uint32_t v = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Deterministic primality by trial division (inputs here stay below 2^32).
bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// All positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// p^v, or nullopt when it would exceed `limit`.
std::optional<std::uint64_t> checked_power(std::uint64_t p, std::uint32_t v, std::uint64_t limit);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Prime powers q <= limit (q >= 2) in increasing numeric order.
std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit);

/// Prime powers in sweep order: ascending p, then ascending exponent.
std::vector<std::uint64_t> prime_powers_in_sweep_order(std::uint64_t limit);

std::uint64_t isqrt(std::uint64_t n);

}  // namespace potsum
