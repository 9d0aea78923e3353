#pragma once

#include <memory>
#include <span>
#include <utility>

#include "mcss/digest.hpp"
#include "mcss/random.hpp"

namespace mcss {

/// Pluggable outer (conventional) signature provider with fixed byte sizes.
class OuterSigner {
 public:
  virtual ~OuterSigner() = default;

  virtual std::pair<Bytes, Bytes> keygen(RandomSource& rng) const = 0;  // pk, sk
  virtual Bytes sign(std::span<const uint8_t> sk,
                     std::span<const uint8_t> msg) const = 0;
  virtual bool verify(std::span<const uint8_t> pk, std::span<const uint8_t> msg,
                      std::span<const uint8_t> sig) const = 0;

  virtual std::size_t pk_bytes() const = 0;
  virtual std::size_t sig_bytes() const = 0;
};

/// Size-faithful Dilithium2 stand-in: a 1312-byte public identifier and a
/// 2420-byte SHAKE-256 MAC keyed by that identifier (sk = pk). Verification
/// recomputes the MAC, so anyone able to verify can also forge -- this
/// provider simulates sizes and timing, not unforgeability. A real lattice
/// signature can be plugged in behind the same interface.
class SimulatedDilithium2 final : public OuterSigner {
 public:
  static constexpr std::size_t kPkBytes = 1312;
  static constexpr std::size_t kSigBytes = 2420;

  std::pair<Bytes, Bytes> keygen(RandomSource& rng) const override;
  Bytes sign(std::span<const uint8_t> sk,
             std::span<const uint8_t> msg) const override;
  bool verify(std::span<const uint8_t> pk, std::span<const uint8_t> msg,
              std::span<const uint8_t> sig) const override;

  std::size_t pk_bytes() const override { return kPkBytes; }
  std::size_t sig_bytes() const override { return kSigBytes; }
};

}  // namespace mcss
