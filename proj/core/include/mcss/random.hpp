#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mcss {

/// Deterministic random stream: SHAKE-256 of (tag || seed || counter) in
/// counter mode. A fixed seed reproduces the exact same stream on any
/// platform; seed() with no argument pulls entropy from the OS.
class RandomSource {
 public:
  explicit RandomSource(std::span<const uint8_t> seed);
  /// OS-entropy seeded.
  RandomSource();

  uint64_t next_u64();
  uint8_t next_byte();

  /// Uniform in [0, bound) by rejection; bound > 0.
  uint64_t uniform(uint64_t bound);

  void fill_bytes(std::span<uint8_t> out);

 private:
  void refill();

  std::vector<uint8_t> seed_;
  uint64_t counter_ = 0;
  std::vector<uint8_t> buf_;
  std::size_t pos_ = 0;
};

}  // namespace mcss
