#include "potsum/potents.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "potsum/error.hpp"

namespace potsum {

namespace {

void require_exponent(std::uint64_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidExponent, "potent exponent must be at least 2");
}

PotentSet make_set(const Field& field, std::uint64_t n, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  PotentSet out{field.order(), n, std::move(members), DenseBitset(field.order()), field.spec()};
  for (auto a : out.members) out.bits.set(a.index);
  return out;
}

}  // namespace

std::uint64_t reduce_exponent(std::uint64_t q, std::uint64_t n) {
  require_exponent(n);
  return std::gcd(n - 1, q - 1) + 1;
}

std::uint64_t potent_cardinality(std::uint64_t q, std::uint64_t n) {
  require_exponent(n);
  return std::gcd(n - 1, q - 1) + 1;
}

PotentSet n_potents(const Field& field, std::uint64_t n) {
  require_exponent(n);
  const std::uint64_t q = field.order();
  const std::uint64_t d = std::gcd(n - 1, q - 1);
  const Element h = field.antilog((q - 1) / d);
  std::vector<Element> members{field.zero()};
  members.reserve(d + 1);
  Element x = field.one();
  for (std::uint64_t k = 0; k < d; ++k) {
    members.push_back(x);
    x = field.mul(x, h);
  }
  auto out = make_set(field, n, std::move(members));
#ifndef NDEBUG
  if (q <= 4096) assert(out.members == n_potents_by_definition(field, n).members);
#endif
  return out;
}

PotentSet n_potents_by_definition(const Field& field, std::uint64_t n) {
  require_exponent(n);
  std::vector<Element> members;
  for (std::uint32_t i = 0; i < field.order(); ++i) {
    const Element a{i};
    if (field.pow(a, n) == a) members.push_back(a);
  }
  return make_set(field, n, std::move(members));
}

}  // namespace potsum
