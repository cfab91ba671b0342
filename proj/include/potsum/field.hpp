#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace potsum {

/// A concrete model of GF(p^v): Z/pZ[x] modulo a monic irreducible of degree v.
struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t v = 0;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;  // constant term first, monic, size v + 1

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// A field element, identified by the base-p encoding of its residue
/// polynomial: index = sum c_i * p^i. Index 0 is zero and index 1 is one.
struct Element {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

struct FieldLimits {
  std::uint64_t max_order = std::uint64_t{1} << 31;
  /// Fields up to this order get full log/antilog tables.
  std::uint64_t table_limit = std::uint64_t{1} << 20;
};

struct CubeRoots {
  Element one;
  Element z;  // generator^((q-1)/3)
  Element y;  // z^2 = -1 - z
};

/// Immutable field context. All member functions are const and reentrant, so
/// one instance can be shared across threads.
class Field {
 public:
  using value_type = Element;

  /// Field of order p^v over the smallest monic irreducible modulus.
  static Field build(std::uint64_t p, std::uint32_t v, const FieldLimits& limits = {});

  /// Field over an explicit modulus (checked for irreducibility).
  static Field with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus,
                            const FieldLimits& limits = {});

  /// Field of order q; throws InvalidOrder unless q is a prime power.
  static Field of_order(std::uint64_t q, const FieldLimits& limits = {});

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint64_t order() const noexcept { return spec_.q; }
  std::uint32_t characteristic() const noexcept { return spec_.p; }
  std::uint32_t degree() const noexcept { return spec_.v; }
  Element generator() const noexcept { return generator_; }
  bool has_log_tables() const noexcept { return !log_.empty(); }
  bool contains(Element a) const noexcept { return a.index < spec_.q; }

  Element zero() const noexcept { return Element{0}; }
  Element one() const noexcept { return Element{1}; }
  /// Image of an integer in the prime subfield.
  Element from_integer(std::int64_t k) const noexcept;

  Element add(Element a, Element b) const noexcept;
  Element sub(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element mul(Element a, Element b) const noexcept;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const noexcept;

  /// Discrete logarithm to base generator(), in [0, q-1). Requires a != 0.
  std::uint64_t log(Element a) const;
  /// generator()^k.
  Element antilog(std::uint64_t k) const noexcept;

  std::uint64_t multiplicative_order(Element a) const;
  std::optional<CubeRoots> cube_roots_of_unity() const;

  /// The unique b with b^p = a.
  Element frobenius_inverse(Element a) const noexcept;
  std::uint64_t characteristic_u64() const noexcept { return spec_.p; }

  std::vector<std::uint32_t> digits(Element a) const;
  Element from_digits(std::span<const std::uint32_t> digits) const;

  /// Prime factors of q-1, ascending.
  const std::vector<std::uint64_t>& group_order_factors() const noexcept { return factors_; }

 private:
  Field() = default;
  void init(const FieldLimits& limits);
  Element raw_mul(Element a, Element b) const noexcept;
  Element raw_pow(Element a, std::uint64_t e) const noexcept;
  bool is_primitive(Element a) const noexcept;

  FieldSpec spec_;
  Element generator_;
  std::vector<std::uint64_t> factors_;
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<std::uint32_t> exp_;  // length 2(q-1), exp_[k] = g^k
};

Field build_field(std::uint64_t p, std::uint32_t v, const FieldLimits& limits = {});

/// Rabin's test: f (monic, constant first) is irreducible over Z/pZ.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> f);

/// Smallest monic irreducible of degree v, ordering candidates by their
/// base-p index with the constant term least significant. For v = 1 this is x.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t v);

/// The first `count` monic irreducibles of degree v in the same order.
std::vector<std::vector<std::uint32_t>> irreducibles(std::uint32_t p, std::uint32_t v,
                                                     std::size_t count);

/// Human-readable polynomial, e.g. "x^2 + x + 1".
std::string format_polynomial(std::span<const std::uint32_t> coefficients);

}  // namespace potsum
