#pragma once

#include "mcss/scheme.hpp"

namespace mcss {
namespace codec {

// Wire framing: 4-byte magic "MCSS", 1-byte version, 1-byte kind, 1-byte
// params id. All multi-byte integers little-endian, all bit packing
// LSB-first. Full field-by-field layout in docs/wire_format.md.
inline constexpr uint8_t kMagic[4] = {'M', 'C', 'S', 'S'};
inline constexpr uint8_t kVersion = 0x01;
inline constexpr std::size_t kHeaderBytes = 7;

enum class Kind : uint8_t {
  PublicKey = 0x01,
  SignerSecret = 0x02,
  SanitizerSecret = 0x03,
  Signature = 0x04,
};

/// Closed-form sizes (payload only, the 7-byte header excluded), matching
/// encoder output exactly:
///   pk     = 2·(n-k)·n/8 + outer_pk_bytes
///   sig(L) = 4 + ceil(L/8) + ceil((n-k)/8) + L·n/8 + outer_sig_bytes
struct SizeReport {
  std::size_t pk_bytes;
  std::size_t sig_bytes;
  std::size_t per_block_bytes;  // n/8
};

SizeReport size_report(const CodeParams& params, std::size_t L,
                       const OuterSigner& outer);

Bytes encode_public_key(const SchemePublicKey& pk, const OuterSigner& outer);
SchemePublicKey decode_public_key(std::span<const uint8_t> data,
                                  const OuterSigner& outer);

Bytes encode_signature(const SanitizableSignature& sig,
                       const CodeParams& params, const OuterSigner& outer);
SanitizableSignature decode_signature(std::span<const uint8_t> data,
                                      const OuterSigner& outer,
                                      const CodeParams** params_out = nullptr);

/// Sanitizer (or escrowed non-instance) trapdoor key.
Bytes encode_chameleon_secret(const ChameleonSecret& sk,
                              const CodeParams& params);
ChameleonSecret decode_chameleon_secret(std::span<const uint8_t> data);

Bytes encode_signer_secret(std::span<const uint8_t> outer_sk,
                           const CodeParams& params);
Bytes decode_signer_secret(std::span<const uint8_t> data);

struct HeaderInfo {
  Kind kind;
  const CodeParams* params;
};
HeaderInfo peek_header(std::span<const uint8_t> data);

}  // namespace codec
}  // namespace mcss
