#include "potsum/field.hpp"

#include <algorithm>
#include <numeric>

#include "potsum/error.hpp"
#include "potsum/numtheory.hpp"
#include "potsum/polynomial.hpp"

namespace potsum {

namespace {

using PrimePoly = poly::Poly<poly::PrimeRing>;

std::vector<std::uint32_t> candidate(std::uint32_t p, std::uint32_t v, std::uint64_t r) {
  std::vector<std::uint32_t> f(v + 1, 0);
  for (std::uint32_t i = 0; i < v; ++i) {
    f[i] = static_cast<std::uint32_t>(r % p);
    r /= p;
  }
  f[v] = 1;
  return f;
}

}  // namespace

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> f_in) {
  const poly::PrimeRing ring{p};
  PrimePoly f(f_in.begin(), f_in.end());
  poly::trim(ring, f);
  const int n = poly::degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  const PrimePoly x = poly::x(ring);
  PrimePoly h = x;
  for (int i = 1; i <= n / 2; ++i) {
    h = poly::powmod(ring, h, p, f);
    if (poly::degree(poly::gcd(ring, f, poly::sub(ring, h, x))) > 0) return false;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> irreducibles(std::uint32_t p, std::uint32_t v,
                                                     std::size_t count) {
  std::vector<std::vector<std::uint32_t>> out;
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < v; ++i) total *= p;
  for (std::uint64_t r = 0; r < total && out.size() < count; ++r) {
    auto f = candidate(p, v, r);
    if (is_irreducible(p, f)) out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t v) {
  auto found = irreducibles(p, v, 1);
  if (found.empty()) throw Error(ErrorKind::InvalidModulus, "no irreducible polynomial found");
  return found.front();
}

std::string format_polynomial(std::span<const std::uint32_t> c) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool show_coeff = c[i] != 1 || i == 0;
    if (show_coeff) out += std::to_string(c[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Field build_field(std::uint64_t p, std::uint32_t v, const FieldLimits& limits) {
  return Field::build(p, v, limits);
}

Field Field::build(std::uint64_t p, std::uint32_t v, const FieldLimits& limits) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidPrime, std::to_string(p) + " is not prime");
  if (v < 1) throw Error(ErrorKind::InvalidArgument, "field degree must be positive");
  if (!checked_power(p, v, limits.max_order))
    throw Error(ErrorKind::LimitExceeded, "field order exceeds configured limit");
  const auto p32 = static_cast<std::uint32_t>(p);
  return with_modulus(p, smallest_irreducible(p32, v), limits);
}

Field Field::of_order(std::uint64_t q, const FieldLimits& limits) {
  const auto pp = as_prime_power(q);
  if (!pp) throw Error(ErrorKind::InvalidOrder, std::to_string(q) + " is not a prime power");
  return build(pp->p, pp->v, limits);
}

Field Field::with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus,
                          const FieldLimits& limits) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidPrime, std::to_string(p) + " is not prime");
  if (modulus.size() < 2 || modulus.back() != 1)
    throw Error(ErrorKind::InvalidModulus, "modulus must be monic of positive degree");
  const auto v = static_cast<std::uint32_t>(modulus.size() - 1);
  const auto q = checked_power(p, v, limits.max_order);
  if (!q) throw Error(ErrorKind::LimitExceeded, "field order exceeds configured limit");
  const auto p32 = static_cast<std::uint32_t>(p);
  for (auto c : modulus)
    if (c >= p32) throw Error(ErrorKind::InvalidModulus, "coefficient out of range");
  if (!is_irreducible(p32, modulus))
    throw Error(ErrorKind::InvalidModulus, format_polynomial(modulus) + " is reducible");

  Field f;
  f.spec_ = FieldSpec{p32, v, *q, std::move(modulus)};
  f.init(limits);
  return f;
}

void Field::init(const FieldLimits& limits) {
  const std::uint64_t q = spec_.q;
  factors_ = prime_factors(q - 1);
  std::uint32_t g = 1;
  while (g < q && !is_primitive(Element{g})) ++g;
  generator_ = Element{g};

  if (q > limits.table_limit) return;
  const auto n = static_cast<std::uint32_t>(q - 1);
  log_.assign(q, 0);
  exp_.assign(2 * std::size_t{n}, 0);
  Element x = one();
  for (std::uint32_t k = 0; k < n; ++k) {
    exp_[k] = x.index;
    exp_[k + n] = x.index;
    log_[x.index] = k;
    x = raw_mul(x, generator_);
  }
}

bool Field::is_primitive(Element a) const noexcept {
  if (a.index == 0) return false;
  const std::uint64_t n = spec_.q - 1;
  if (raw_pow(a, n) != one()) return false;
  for (auto r : factors_)
    if (raw_pow(a, n / r) == one()) return false;
  return true;
}

Element Field::from_integer(std::int64_t k) const noexcept {
  const auto p = static_cast<std::int64_t>(spec_.p);
  const std::int64_t m = k % p;
  return Element{static_cast<std::uint32_t>(m < 0 ? m + p : m)};
}

Element Field::add(Element a, Element b) const noexcept {
  const std::uint32_t p = spec_.p;
  if (spec_.v == 1) {
    const std::uint32_t s = a.index + b.index;
    return Element{s >= p ? s - p : s};
  }
  if (p == 2) return Element{a.index ^ b.index};
  std::uint32_t x = a.index, y = b.index, out = 0, place = 1;
  while (x != 0 || y != 0) {
    std::uint32_t d = x % p + y % p;
    if (d >= p) d -= p;
    out += d * place;
    place *= p;
    x /= p;
    y /= p;
  }
  return Element{out};
}

Element Field::neg(Element a) const noexcept {
  const std::uint32_t p = spec_.p;
  if (a.index == 0 || p == 2) return a;
  if (spec_.v == 1) return Element{p - a.index};
  std::uint32_t x = a.index, out = 0, place = 1;
  while (x != 0) {
    const std::uint32_t d = x % p;
    out += (d == 0 ? 0 : p - d) * place;
    place *= p;
    x /= p;
  }
  return Element{out};
}

Element Field::sub(Element a, Element b) const noexcept {
  const std::uint32_t p = spec_.p;
  if (spec_.v == 1) return Element{a.index >= b.index ? a.index - b.index : a.index + p - b.index};
  if (p == 2) return Element{a.index ^ b.index};
  return add(a, neg(b));
}

Element Field::raw_mul(Element a, Element b) const noexcept {
  const std::uint64_t p = spec_.p;
  if (spec_.v == 1) return Element{static_cast<std::uint32_t>(std::uint64_t{a.index} * b.index % p)};
  const std::uint32_t v = spec_.v;
  std::vector<std::uint64_t> da(v), db(v), prod(2 * v - 1, 0);
  for (std::uint32_t i = 0, x = a.index, y = b.index; i < v; ++i, x /= spec_.p, y /= spec_.p) {
    da[i] = x % p;
    db[i] = y % p;
  }
  for (std::uint32_t i = 0; i < v; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < v; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  for (std::uint32_t k = 2 * v - 1; k-- > v;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i < v; ++i)
      prod[k - v + i] = (prod[k - v + i] + (p - c) * spec_.modulus[i]) % p;
  }
  std::uint32_t out = 0;
  for (std::uint32_t i = v; i-- > 0;) out = out * spec_.p + static_cast<std::uint32_t>(prod[i]);
  return Element{out};
}

Element Field::raw_pow(Element a, std::uint64_t e) const noexcept {
  Element r = one();
  while (e > 0) {
    if (e & 1) r = raw_mul(r, a);
    e >>= 1;
    if (e > 0) a = raw_mul(a, a);
  }
  return r;
}

Element Field::mul(Element a, Element b) const noexcept {
  if (a.index == 0 || b.index == 0) return zero();
  if (log_.empty()) return raw_mul(a, b);
  return Element{exp_[std::size_t{log_[a.index]} + log_[b.index]]};
}

Element Field::pow(Element a, std::uint64_t e) const noexcept {
  Element r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e > 0) a = mul(a, a);
  }
  return r;
}

Element Field::inv(Element a) const {
  if (a.index == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint64_t n = spec_.q - 1;
  if (log_.empty()) return pow(a, n - 1);
  return Element{exp_[(n - log_[a.index]) % n]};
}

std::uint64_t Field::log(Element a) const {
  if (a.index == 0) throw Error(ErrorKind::DivisionByZero, "logarithm of zero");
  if (!log_.empty()) return log_[a.index];
  // TODO: baby-step giant-step so log() also works on table-free fields.
  throw Error(ErrorKind::LimitExceeded, "discrete log tables not built for this field");
}

Element Field::antilog(std::uint64_t k) const noexcept {
  const std::uint64_t n = spec_.q - 1;
  if (!exp_.empty()) return Element{exp_[k % n]};
  return pow(generator_, k % n);
}

std::uint64_t Field::multiplicative_order(Element a) const {
  if (a.index == 0) throw Error(ErrorKind::DivisionByZero, "order of zero");
  std::uint64_t e = spec_.q - 1;
  for (auto r : factors_)
    while (e % r == 0 && pow(a, e / r) == one()) e /= r;
  return e;
}

std::optional<CubeRoots> Field::cube_roots_of_unity() const {
  if ((spec_.q - 1) % 3 != 0) return std::nullopt;
  const Element z = pow(generator_, (spec_.q - 1) / 3);
  return CubeRoots{one(), z, mul(z, z)};
}

Element Field::frobenius_inverse(Element a) const noexcept {
  // a^(q/p) is the inverse of the Frobenius map x -> x^p.
  return pow(a, spec_.q / spec_.p);
}

std::vector<std::uint32_t> Field::digits(Element a) const {
  std::vector<std::uint32_t> out(spec_.v);
  std::uint32_t x = a.index;
  for (auto& d : out) {
    d = x % spec_.p;
    x /= spec_.p;
  }
  return out;
}

Element Field::from_digits(std::span<const std::uint32_t> d) const {
  std::uint32_t out = 0;
  for (std::size_t i = d.size(); i-- > 0;) out = out * spec_.p + d[i] % spec_.p;
  return Element{out};
}

}  // namespace potsum
