#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace potsum {

/// Fixed-length bitset over element indices [0, size).
class DenseBitset {
 public:
  DenseBitset() = default;
  explicit DenseBitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  std::vector<std::uint64_t>& words() noexcept { return words_; }

  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool all() const noexcept {
    if (size_ == 0) return true;
    const std::size_t full = size_ / 64;
    for (std::size_t i = 0; i < full; ++i)
      if (words_[i] != ~std::uint64_t{0}) return false;
    const std::size_t rest = size_ % 64;
    return rest == 0 || words_[full] == (std::uint64_t{1} << rest) - 1;
  }

  friend bool operator==(const DenseBitset&, const DenseBitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace potsum
