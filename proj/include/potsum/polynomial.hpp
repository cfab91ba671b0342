#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Dense univariate polynomials over a coefficient ring supplied as a value.
//
// The ring type R must provide:
//   value_type, zero(), one(), add, sub, neg, mul, inv, from_integer(int64),
//   characteristic(), frobenius_inverse(x)   (the unique y with y^p = x)
//
// Coefficients are stored constant term first; a normalized polynomial has no
// trailing zero coefficients, so the zero polynomial is the empty vector.
namespace potsum::poly {

template <class R>
using Poly = std::vector<typename R::value_type>;

template <class R>
void trim(const R& ring, Poly<R>& a) {
  while (!a.empty() && a.back() == ring.zero()) a.pop_back();
}

template <class T>
int degree(const std::vector<T>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <class R>
Poly<R> x(const R& ring) {
  return {ring.zero(), ring.one()};
}

template <class R>
Poly<R> constant(const R& ring, typename R::value_type c) {
  Poly<R> out;
  if (!(c == ring.zero())) out.push_back(c);
  return out;
}

template <class R>
Poly<R> add(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  Poly<R> out(std::max(a.size(), b.size()), ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = ring.add(out[i], b[i]);
  trim(ring, out);
  return out;
}

template <class R>
Poly<R> sub(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  Poly<R> out(std::max(a.size(), b.size()), ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = ring.sub(out[i], b[i]);
  trim(ring, out);
  return out;
}

template <class R>
Poly<R> scale(const R& ring, const Poly<R>& a, typename R::value_type c) {
  Poly<R> out(a.size(), ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.mul(a[i], c);
  trim(ring, out);
  return out;
}

template <class R>
Poly<R> mul(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<R> out(a.size() + b.size() - 1, ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == ring.zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = ring.add(out[i + j], ring.mul(a[i], b[j]));
  }
  trim(ring, out);
  return out;
}

/// Quotient and remainder; `b` must be nonzero.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  Poly<R> rem = a;
  trim(ring, rem);
  if (rem.size() < b.size()) return {Poly<R>{}, rem};
  Poly<R> quot(rem.size() - b.size() + 1, ring.zero());
  const auto lead_inv = ring.inv(b.back());
  for (std::size_t k = quot.size(); k-- > 0;) {
    const auto c = ring.mul(rem[k + b.size() - 1], lead_inv);
    quot[k] = c;
    if (c == ring.zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      rem[k + j] = ring.sub(rem[k + j], ring.mul(c, b[j]));
  }
  rem.resize(b.size() - 1);
  trim(ring, rem);
  trim(ring, quot);
  return {quot, rem};
}

template <class R>
Poly<R> mod(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  return divmod(ring, a, b).second;
}

template <class R>
Poly<R> monic(const R& ring, const Poly<R>& a) {
  if (a.empty()) return a;
  return scale(ring, a, ring.inv(a.back()));
}

/// Monic greatest common divisor (zero only when both inputs are zero).
template <class R>
Poly<R> gcd(const R& ring, Poly<R> a, Poly<R> b) {
  trim(ring, a);
  trim(ring, b);
  while (!b.empty()) {
    auto r = mod(ring, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(ring, a);
}

template <class R>
Poly<R> derivative(const R& ring, const Poly<R>& a) {
  if (a.size() <= 1) return {};
  Poly<R> out(a.size() - 1, ring.zero());
  for (std::size_t i = 1; i < a.size(); ++i)
    out[i - 1] = ring.mul(ring.from_integer(static_cast<std::int64_t>(i)), a[i]);
  trim(ring, out);
  return out;
}

template <class R>
Poly<R> powmod(const R& ring, Poly<R> base, std::uint64_t e, const Poly<R>& modulus) {
  Poly<R> result = mod(ring, constant(ring, ring.one()), modulus);
  base = mod(ring, base, modulus);
  while (e > 0) {
    if (e & 1) result = mod(ring, mul(ring, result, base), modulus);
    e >>= 1;
    if (e > 0) base = mod(ring, mul(ring, base, base), modulus);
  }
  return result;
}

template <class R>
typename R::value_type eval(const R& ring, const Poly<R>& a, typename R::value_type at) {
  auto acc = ring.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = ring.add(ring.mul(acc, at), a[i]);
  return acc;
}

/// For a polynomial whose derivative vanishes (a p-th power in characteristic
/// p), returns the polynomial r with r^p = a.
template <class R>
Poly<R> pth_root(const R& ring, const Poly<R>& a) {
  const auto p = static_cast<std::size_t>(ring.characteristic());
  Poly<R> out;
  for (std::size_t i = 0; i < a.size(); i += p) out.push_back(ring.frobenius_inverse(a[i]));
  trim(ring, out);
  return out;
}

/// Z/pZ as a coefficient ring.
struct PrimeRing {
  using value_type = std::uint32_t;

  std::uint32_t p;

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p; }
  value_type add(value_type a, value_type b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p ? s - p : s);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p - b); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p);
  }
  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = one();
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  value_type inv(value_type a) const { return pow(a, p - 2); }
  value_type from_integer(std::int64_t k) const {
    const std::int64_t m = k % static_cast<std::int64_t>(p);
    return static_cast<value_type>(m < 0 ? m + p : m);
  }
  std::uint64_t characteristic() const { return p; }
  value_type frobenius_inverse(value_type a) const { return a; }
};

}  // namespace potsum::poly
