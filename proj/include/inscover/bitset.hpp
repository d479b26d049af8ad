#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace inscover {

// Fixed-size bit vector sized at construction. Sized for incidence rows:
// the hot operations are popcount of an intersection and in-place
// difference, neither of which allocates.
class DynamicBitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  DynamicBitset() = default;
  explicit DynamicBitset(std::size_t size, bool value = false)
      : size_(size), blocks_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    trim();
  }

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept {
    return (blocks_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) noexcept { blocks_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept {
    blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  void clear() noexcept {
    for (auto& b : blocks_) b = 0;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto b : blocks_) c += static_cast<std::size_t>(std::popcount(b));
    return c;
  }

  bool any() const noexcept {
    for (auto b : blocks_)
      if (b) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  std::size_t count_and(const DynamicBitset& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(blocks_[i] & other.blocks_[i]));
    return c;
  }

  bool intersects(const DynamicBitset& other) const noexcept {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i] & other.blocks_[i]) return true;
    return false;
  }

  DynamicBitset& operator|=(const DynamicBitset& other) noexcept {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= other.blocks_[i];
    return *this;
  }
  DynamicBitset& operator&=(const DynamicBitset& other) noexcept {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= other.blocks_[i];
    return *this;
  }
  // this &= ~other
  DynamicBitset& subtract(const DynamicBitset& other) noexcept {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~other.blocks_[i];
    return *this;
  }

  std::size_t find_first() const noexcept { return find_from_block(0); }

  std::size_t find_next(std::size_t i) const noexcept {
    ++i;
    if (i >= size_) return npos;
    std::size_t block = i >> 6;
    std::uint64_t word = blocks_[block] & (~std::uint64_t{0} << (i & 63));
    if (word) return (block << 6) + static_cast<std::size_t>(std::countr_zero(word));
    return find_from_block(block + 1);
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      std::uint64_t word = blocks_[b];
      while (word) {
        f((b << 6) + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  bool operator==(const DynamicBitset&) const = default;

 private:
  std::size_t find_from_block(std::size_t block) const noexcept {
    for (; block < blocks_.size(); ++block)
      if (blocks_[block])
        return (block << 6) + static_cast<std::size_t>(std::countr_zero(blocks_[block]));
    return npos;
  }

  void trim() noexcept {
    if (size_ % 64 && !blocks_.empty())
      blocks_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> blocks_;
};

}  // namespace inscover
