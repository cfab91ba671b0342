#include "potsum/sumset.hpp"

#include <omp.h>

#include <exception>
#include <mutex>

#include "potsum/error.hpp"
#include "potsum/numtheory.hpp"

namespace potsum {

namespace {

using Words = std::vector<std::uint64_t>;

void mask_tail(Words& w, std::size_t nbits) {
  const std::size_t rest = nbits % 64;
  if (rest != 0) w.back() &= (std::uint64_t{1} << rest) - 1;
}

// dst[i + s] |= src[i]; bits pushed past the end are dropped by the caller.
void or_shift_up(Words& dst, const Words& src, std::size_t s) {
  const std::size_t ws = s / 64, bs = s % 64, n = dst.size();
  for (std::size_t k = ws; k < n; ++k) {
    std::uint64_t w = src[k - ws] << bs;
    if (bs != 0 && k > ws) w |= src[k - ws - 1] >> (64 - bs);
    dst[k] |= w;
  }
}

// dst[i - t] |= src[i] for i >= t.
void or_shift_down(Words& dst, const Words& src, std::size_t t) {
  const std::size_t wt = t / 64, bt = t % 64, n = src.size();
  for (std::size_t k = 0; k + wt < n; ++k) {
    std::uint64_t w = src[k + wt] >> bt;
    if (bt != 0 && k + wt + 1 < n) w |= src[k + wt + 1] << (64 - bt);
    dst[k] |= w;
  }
}

// Bit i of the result is bit i ^ c of x, for c < 64.
std::uint64_t xor_permute(std::uint64_t x, std::uint32_t c) {
  static constexpr std::uint64_t kMasks[6] = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
      0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
  for (int k = 0; k < 6; ++k) {
    if (!((c >> k) & 1)) continue;
    const int s = 1 << k;
    x = ((x & kMasks[k]) << s) | ((x >> s) & kMasks[k]);
  }
  return x;
}

void check_context(const Field& field, const PotentSet& a, const PotentSet& b) {
  if (!(a.model == field.spec()) || !(b.model == field.spec()))
    throw Error(ErrorKind::ContextMismatch, "potent sets built over a different field model");
}

}  // namespace

void SearchConfig::validate() const {
  if (m < 2) throw Error(ErrorKind::InvalidExponent, "m must be at least 2");
  if (limit < 2) throw Error(ErrorKind::InvalidArgument, "limit must be at least 2");
}

DenseBitset sumset(const Field& field, const PotentSet& a, const PotentSet& b) {
  check_context(field, a, b);
  const PotentSet& shifts = a.size() <= b.size() ? a : b;
  const PotentSet& base = a.size() <= b.size() ? b : a;
  const std::size_t q = field.order();
  DenseBitset out(q);
  Words& dst = out.words();
  const Words& src = base.bits.words();

  if (field.degree() == 1) {
    for (auto s : shifts.members) {
      if (s.index == 0) {
        for (std::size_t k = 0; k < dst.size(); ++k) dst[k] |= src[k];
        continue;
      }
      or_shift_up(dst, src, s.index);
      mask_tail(dst, q);
      or_shift_down(dst, src, q - s.index);
    }
  } else if (field.characteristic() == 2) {
    for (auto s : shifts.members) {
      const std::uint32_t hi = s.index >> 6, lo = s.index & 63;
      for (std::size_t w = 0; w < src.size(); ++w)
        if (src[w] != 0) dst[w ^ hi] |= xor_permute(src[w], lo);
    }
  } else {
    for (auto s : shifts.members)
      for (auto t : base.members) out.set(field.add(s, t).index);
  }
  return out;
}

DenseBitset sumset_reference(const Field& field, const PotentSet& a, const PotentSet& b) {
  check_context(field, a, b);
  DenseBitset out(field.order());
  for (auto x : a.members)
    for (auto y : b.members) out.set(field.add(x, y).index);
  return out;
}

bool covers(const Field& field, const PotentSet& a, const PotentSet& b) {
  check_context(field, a, b);
  if (static_cast<std::uint64_t>(a.size()) * b.size() < field.order()) return false;
  return sumset(field, a, b).all();
}

bool covers_reference(const Field& field, const PotentSet& a, const PotentSet& b) {
  return sumset_reference(field, a, b).all();
}

bool admitted(BoundaryRule rule, std::uint64_t q, std::uint64_t n) {
  return rule == BoundaryRule::AppendixExact ? n + 1 < q : n < q;
}

std::vector<SearchHit> check_one(const Field& field, std::uint64_t m, BoundaryRule rule) {
  if (m < 2) throw Error(ErrorKind::InvalidExponent, "m must be at least 2");
  const std::uint64_t q = field.order();
  const PotentSet cm = n_potents(field, m);
  std::vector<SearchHit> hits;
  for (std::uint64_t d : divisors(q - 1)) {
    const std::uint64_t n = d + 1;
    if (!admitted(rule, q, n)) continue;
    if (covers(field, cm, n_potents(field, n)))
      hits.push_back({q, m, n, !admitted(BoundaryRule::AppendixExact, q, n)});
  }
  return hits;
}

std::vector<std::uint64_t> check_one(std::uint64_t q, std::uint64_t m, BoundaryRule rule) {
  std::vector<std::uint64_t> out;
  for (const auto& h : check_one(Field::of_order(q), m, rule)) out.push_back(h.n);
  return out;
}

std::vector<SearchHit> check_all(const SearchConfig& config) {
  config.validate();
  const auto orders = prime_powers_in_sweep_order(config.limit);
  const auto count = static_cast<std::int64_t>(orders.size());
  std::vector<std::vector<SearchHit>> per_field(orders.size());
  std::exception_ptr failure;
  std::mutex failure_lock;
  const int threads = config.parallelism > 0 ? config.parallelism : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      per_field[i] = check_one(Field::of_order(orders[i]), config.m, config.boundary_rule);
    } catch (...) {
      std::lock_guard lock(failure_lock);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<SearchHit> hits;
  for (auto& part : per_field) hits.insert(hits.end(), part.begin(), part.end());
  return hits;
}

std::vector<SearchHit> check_all_serial(const SearchConfig& config) {
  config.validate();
  std::vector<SearchHit> hits;
  for (std::uint64_t q : prime_powers_in_sweep_order(config.limit)) {
    const auto part = check_one(Field::of_order(q), config.m, config.boundary_rule);
    hits.insert(hits.end(), part.begin(), part.end());
  }
  return hits;
}

}  // namespace potsum
