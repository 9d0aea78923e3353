#pragma once

#include <vector>

#include "mcss/chameleon.hpp"
#include "mcss/outer.hpp"

namespace mcss {

/// Message as L blocks of exactly k bits each.
struct BlockMessage {
  std::vector<BitVec> blocks;

  std::size_t block_count() const { return blocks.size(); }
};

/// Per-block admissibility: bit i true means block i may be sanitized.
struct AdmMask {
  std::vector<bool> bits;

  std::size_t size() const { return bits.size(); }
  friend bool operator==(const AdmMask&, const AdmMask&) = default;
};

struct SchemePublicKey {
  CodeParams params;
  Bytes outer_pk;
  ChameleonPublic non;  // immutable-block instance
  ChameleonPublic san;  // admissible-block instance
};

/// Sanitizer trapdoor: the san-instance secret only. The non-instance secret
/// is never placed here.
struct SanitizerKey {
  ChameleonSecret secret;
};

struct SanitizableSignature {
  BitVec h_L;  // n-k bits
  Bytes outer_sig;
  std::vector<Randomizer> randomizers;  // one per block, weight exactly t
  AdmMask adm;

  friend bool operator==(const SanitizableSignature& a,
                         const SanitizableSignature& b) {
    if (a.h_L != b.h_L || a.outer_sig != b.outer_sig || !(a.adm == b.adm) ||
        a.randomizers.size() != b.randomizers.size())
      return false;
    for (std::size_t i = 0; i < a.randomizers.size(); ++i)
      if (a.randomizers[i].r != b.randomizers[i].r) return false;
    return true;
  }
};

struct SchemeKeys {
  SchemePublicKey pk;
  Bytes signer_sk;
  SanitizerKey san_key;
  /// The non-instance trapdoor. No protocol operation reads it; it is
  /// returned so tests can prove it is never required.
  ChameleonSecret non_secret_escrow;
};

enum class VerifyReason { Ok, WeightCheck, ChainMismatch, OuterSig };

struct VerifyResult {
  bool ok;
  VerifyReason reason;
};

const char* to_string(VerifyReason r);

SchemeKeys keygen(const CodeParams& params, const OuterSigner& outer,
                  RandomSource& rng);

struct ChainResult {
  std::vector<BitVec> h;  // h_0 .. h_L
  const BitVec& h_L() const { return h.back(); }
};

/// h_0 = 0^(n-k); x_i = h_{i-1} || M[i] (n bits, chain value in the low
/// n-k positions); h_i hashes x_i under the san instance when adm[i] is
/// set, the non instance otherwise.
ChainResult chain_digest(const SchemePublicKey& pk, const DigestOracle& G,
                         const BlockMessage& M, const AdmMask& adm,
                         const std::vector<Randomizer>& randomizers);

/// Byte packing of the outer-signed payload: packed h_L, adm packed
/// LSB-first into ceil(L/8) bytes, then L as 4-byte little-endian. The
/// length prefix removes (h_L, adm) ambiguity across different L.
Bytes outer_payload(const BitVec& h_L, const AdmMask& adm);

SanitizableSignature sign(std::span<const uint8_t> signer_sk,
                          const SchemePublicKey& pk, const OuterSigner& outer,
                          const DigestOracle& G, const BlockMessage& M,
                          const AdmMask& adm, RandomSource& rng);

VerifyResult verify(const SchemePublicKey& pk, const OuterSigner& outer,
                    const DigestOracle& G, const BlockMessage& M,
                    const SanitizableSignature& sig);

/// Rewrites the admissible blocks where M_new differs from M, in ascending
/// order, finding a randomizer collision per block. h_L and the outer
/// signature are unchanged on success. Throws InvalidInput when sig does not
/// verify on M or M_new touches an immutable block; NotDecodable /
/// WeightMismatch carry the failing block index.
/// Builds a replacement for admissible block `i` whose identity-oracle
/// collision target is decodable by construction: the replacement is chosen
/// so the target syndrome is that of a fresh weight-t vector agreeing with
/// r_i on the chain-value positions. Only meaningful under IdentityOracle.
BitVec constructive_block_rewrite(const ChainResult& chain,
                                  const BlockMessage& M,
                                  const SanitizableSignature& sig,
                                  std::size_t i, const CodeParams& params,
                                  RandomSource& rng);

SanitizableSignature sanitize(const SanitizerKey& san_key,
                              const SchemePublicKey& pk,
                              const OuterSigner& outer, const DigestOracle& G,
                              const BlockMessage& M,
                              const SanitizableSignature& sig,
                              const BlockMessage& M_new);

}  // namespace mcss
