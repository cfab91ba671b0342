#pragma once

#include <cstdint>
#include <span>
#include <type_traits>

#include "potsum/eisenstein.hpp"
#include "potsum/field.hpp"

// Character sums over GF(q) with a small set of excluded points. Every
// S/T/U/V-type sum in the analysis goes through these two functions.
namespace potsum {

namespace detail {

inline bool is_excluded(std::span<const Element> excluded, Element a) noexcept {
  for (auto e : excluded)
    if (e == a) return true;
  return false;
}

inline constexpr std::int64_t kParallelSumThreshold = 2048;

}  // namespace detail

/// Sum of term(alpha) over alpha not in `excluded`, OpenMP-parallel for large
/// fields. `term` must be pure and return an integer or an EisensteinInt.
template <class Term>
auto sum_excluding(const Field& field, std::span<const Element> excluded, const Term& term) {
  using Result = std::invoke_result_t<const Term&, Element>;
  const auto q = static_cast<std::int64_t>(field.order());
  if constexpr (std::is_same_v<Result, EisensteinInt>) {
    std::int64_t sa = 0, sb = 0;
#pragma omp parallel for reduction(+ : sa, sb) schedule(static) \
    if (q >= detail::kParallelSumThreshold)
    for (std::int64_t i = 0; i < q; ++i) {
      const Element a{static_cast<std::uint32_t>(i)};
      if (detail::is_excluded(excluded, a)) continue;
      const EisensteinInt t = term(a);
      sa += t.a();
      sb += t.b();
    }
    return EisensteinInt(sa, sb);
  } else {
    std::int64_t s = 0;
#pragma omp parallel for reduction(+ : s) schedule(static) if (q >= detail::kParallelSumThreshold)
    for (std::int64_t i = 0; i < q; ++i) {
      const Element a{static_cast<std::uint32_t>(i)};
      if (detail::is_excluded(excluded, a)) continue;
      s += static_cast<std::int64_t>(term(a));
    }
    return s;
  }
}

/// Serial reference for sum_excluding().
template <class Term>
auto sum_excluding_serial(const Field& field, std::span<const Element> excluded,
                          const Term& term) {
  using Result = std::invoke_result_t<const Term&, Element>;
  using Acc = std::conditional_t<std::is_same_v<Result, EisensteinInt>, EisensteinInt, std::int64_t>;
  Acc s{};
  for (std::uint32_t i = 0; i < field.order(); ++i) {
    const Element a{i};
    if (detail::is_excluded(excluded, a)) continue;
    s += static_cast<Acc>(term(a));
  }
  return s;
}

}  // namespace potsum
