#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcss/errors.hpp"

namespace mcss {

/// Packed vector over GF(2). Bit i lives at bit (i mod 64) of word (i / 64);
/// byte serialization is LSB-first (bit i at bit (i mod 8) of byte (i / 8)).
/// Padding bits beyond the length are kept at zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t length) : len_(length), w_((length + 63) / 64) {}

  std::size_t size() const { return len_; }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  void set(std::size_t i, bool v) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (v)
      w_[i >> 6] |= mask;
    else
      w_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

  void xor_with(const BitVec& other) {
    if (other.len_ != len_) throw DimensionMismatch("BitVec xor length");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= other.w_[i];
  }

  std::size_t weight() const;

  bool is_zero() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }

  std::span<const uint64_t> words() const { return w_; }
  std::span<uint64_t> words() { return w_; }

  std::vector<uint8_t> to_bytes() const;
  static BitVec from_bytes(std::span<const uint8_t> bytes, std::size_t length);

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::size_t len_ = 0;
  std::vector<uint64_t> w_;
};

inline BitVec operator^(const BitVec& a, const BitVec& b) {
  BitVec r = a;
  r.xor_with(b);
  return r;
}

}  // namespace mcss
