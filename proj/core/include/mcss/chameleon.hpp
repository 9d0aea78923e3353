#pragma once

#include <optional>

#include "mcss/digest.hpp"
#include "mcss/goppa.hpp"

namespace mcss {

/// Public chameleon hashing key: the masked matrix H_pub = S'·Hsec·P.
struct ChameleonPublic {
  CodeParams params;
  BitMatrix Hpub;  // (n-k) x n
};

/// Trapdoor: the permutation, the inverse scrambler, and the code itself.
struct ChameleonSecret {
  Permutation P;
  BitMatrix S_inv;  // (S')^{-1}, (n-k) x (n-k)
  GoppaCode code;
};

/// Randomizer for the chameleon hash: an n-bit vector of weight exactly t.
struct Randomizer {
  BitVec r;
};

/// Verify wt(r) = t (Exact, the scheme default) or wt(r) <= t (AtMost,
/// analysis only).
enum class WeightPolicy { Exact, AtMost };

struct ChameleonKeypair {
  ChameleonPublic pk;
  ChameleonSecret sk;
};

ChameleonKeypair ch_gen(const CodeParams& params, RandomSource& rng);

/// Uniform over the weight-t sphere via Fisher-Yates selection of t
/// distinct positions.
Randomizer sample_randomizer(const CodeParams& params, RandomSource& rng);

/// CH_pk(m, r) = (G(m) xor r)·Hpub^T. `m` is the packed message bytes fed to
/// the oracle; the digest is squeezed to n bits. Throws WeightMismatch when
/// r violates the weight policy.
BitVec ch_hash(const ChameleonPublic& pk, const DigestOracle& G,
               std::span<const uint8_t> m, const Randomizer& r,
               WeightPolicy policy = WeightPolicy::Exact);

/// Trapdoor collision finding: returns r' with
/// CH(m, r) = CH(m_new, r') and wt(r') = t.
/// Throws NotDecodable when the target syndrome is outside the decoding
/// radius and WeightMismatch when the decoded vector has weight < t under
/// the Exact policy.
Randomizer ch_collide(const ChameleonSecret& sk, const ChameleonPublic& pk,
                      const DigestOracle& G, std::span<const uint8_t> m,
                      const Randomizer& r, std::span<const uint8_t> m_new,
                      WeightPolicy policy = WeightPolicy::Exact);

/// Packs an n-bit vector LSB-first into n/8 bytes: the normative digest
/// input encoding.
Bytes pack_bits(const BitVec& v);

}  // namespace mcss
