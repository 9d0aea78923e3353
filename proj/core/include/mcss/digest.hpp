#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcss/bitvec.hpp"

namespace mcss {

using Bytes = std::vector<uint8_t>;

// Domain separation tags for every SHAKE-256 use in this project.
namespace tag {
inline constexpr uint8_t kOracleG = 0x01;
inline constexpr uint8_t kOuterPk = 0x02;
inline constexpr uint8_t kOuterSig = 0x03;
inline constexpr uint8_t kRng = 0x04;
}  // namespace tag

/// One-shot SHAKE-256 of `input`, squeezed to `out_len` bytes.
Bytes shake256(std::span<const uint8_t> input, std::size_t out_len);

/// The random-oracle interface G used by the chameleon hash: maps an
/// arbitrary byte string to a fixed number of bits. Implementations must be
/// deterministic, and distinct context tags must behave as independent
/// functions.
class DigestOracle {
 public:
  virtual ~DigestOracle() = default;
  virtual BitVec digest(uint8_t context_tag, std::span<const uint8_t> input,
                        std::size_t out_bits) const = 0;
};

/// Production oracle: SHAKE-256 over (tag || params_id || input), squeezed to
/// out_bits. The parameter-set identifier is mixed in so the same message
/// hashed under different parameter sets yields unrelated digests.
class Shake256Oracle final : public DigestOracle {
 public:
  explicit Shake256Oracle(uint8_t params_id) : params_id_(params_id) {}
  BitVec digest(uint8_t context_tag, std::span<const uint8_t> input,
                std::size_t out_bits) const override;

 private:
  uint8_t params_id_;
};

/// Test-only oracle: returns the input bits unchanged. Requires the input to
/// carry exactly out_bits bits. This makes decodable collision instances
/// constructible at any parameter size; a genuine random oracle does not.
class IdentityOracle final : public DigestOracle {
 public:
  BitVec digest(uint8_t context_tag, std::span<const uint8_t> input,
                std::size_t out_bits) const override;
};

/// Wraps another oracle and records every query. Single-threaded use only.
class RecordingOracle final : public DigestOracle {
 public:
  struct Query {
    uint8_t context_tag;
    Bytes input;
    std::size_t out_bits;
  };

  explicit RecordingOracle(const DigestOracle& inner) : inner_(inner) {}
  BitVec digest(uint8_t context_tag, std::span<const uint8_t> input,
                std::size_t out_bits) const override;
  const std::vector<Query>& queries() const { return queries_; }

 private:
  const DigestOracle& inner_;
  mutable std::vector<Query> queries_;
};

}  // namespace mcss
