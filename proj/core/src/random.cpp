#include "mcss/random.hpp"

#include <cstring>
#include <random>

#include "mcss/digest.hpp"
#include "mcss/errors.hpp"

namespace mcss {

namespace {
constexpr std::size_t kBlockBytes = 1024;
}

RandomSource::RandomSource(std::span<const uint8_t> seed)
    : seed_(seed.begin(), seed.end()) {}

RandomSource::RandomSource() {
  std::random_device rd;
  seed_.resize(32);
  for (std::size_t i = 0; i < seed_.size(); i += 4) {
    uint32_t v = rd();
    std::memcpy(seed_.data() + i, &v, 4);
  }
}

void RandomSource::refill() {
  Bytes framed;
  framed.reserve(seed_.size() + 9);
  framed.push_back(tag::kRng);
  for (int i = 0; i < 8; ++i)
    framed.push_back(static_cast<uint8_t>(counter_ >> (8 * i)));
  framed.insert(framed.end(), seed_.begin(), seed_.end());
  buf_ = shake256(framed, kBlockBytes);
  ++counter_;
  pos_ = 0;
}

uint8_t RandomSource::next_byte() {
  if (pos_ >= buf_.size()) refill();
  return buf_[pos_++];
}

uint64_t RandomSource::next_u64() {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= uint64_t{next_byte()} << (8 * i);
  return v;
}

uint64_t RandomSource::uniform(uint64_t bound) {
  if (bound == 0) throw InvalidInput("uniform bound must be positive");
  if ((bound & (bound - 1)) == 0) return next_u64() & (bound - 1);
  // Rejection sample from the smallest covering power of two.
  uint64_t mask = bound - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    uint64_t v = next_u64() & mask;
    if (v < bound) return v;
  }
}

void RandomSource::fill_bytes(std::span<uint8_t> out) {
  for (auto& b : out) b = next_byte();
}

}  // namespace mcss
