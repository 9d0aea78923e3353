#include "mcss/scheme.hpp"

#include <algorithm>

namespace mcss {

const char* to_string(VerifyReason r) {
  switch (r) {
    case VerifyReason::Ok:
      return "Ok";
    case VerifyReason::WeightCheck:
      return "WeightCheck";
    case VerifyReason::ChainMismatch:
      return "ChainMismatch";
    case VerifyReason::OuterSig:
      return "OuterSig";
  }
  return "?";
}

SchemeKeys keygen(const CodeParams& params, const OuterSigner& outer,
                  RandomSource& rng) {
  ChameleonKeypair non = ch_gen(params, rng);
  ChameleonKeypair san = ch_gen(params, rng);
  auto [outer_pk, outer_sk] = outer.keygen(rng);
  return SchemeKeys{
      SchemePublicKey{params, std::move(outer_pk), std::move(non.pk),
                      std::move(san.pk)},
      std::move(outer_sk),
      SanitizerKey{std::move(san.sk)},
      std::move(non.sk),
  };
}

namespace {

/// x_i = h_{i-1} || M[i]: chain value in positions 0..n-k-1, block bits
/// after it.
BitVec chain_input(const BitVec& h_prev, const BitVec& block,
                   const CodeParams& params) {
  BitVec x(params.n);
  for (std::size_t b = 0; b < params.parity_bits(); ++b)
    if (h_prev.get(b)) x.set(b, true);
  for (std::size_t b = 0; b < params.k; ++b)
    if (block.get(b)) x.set(params.parity_bits() + b, true);
  return x;
}

void check_shapes(const SchemePublicKey& pk, const BlockMessage& M,
                  const AdmMask& adm, std::size_t randomizer_count) {
  const std::size_t L = M.block_count();
  if (L < 1) throw InvalidInput("message must have at least one block");
  if (adm.size() != L) throw DimensionMismatch("adm length != block count");
  if (randomizer_count != L)
    throw DimensionMismatch("randomizer count != block count");
  for (const auto& block : M.blocks)
    if (block.size() != pk.params.k)
      throw DimensionMismatch("block must be exactly k bits");
}

}  // namespace

ChainResult chain_digest(const SchemePublicKey& pk, const DigestOracle& G,
                         const BlockMessage& M, const AdmMask& adm,
                         const std::vector<Randomizer>& randomizers) {
  check_shapes(pk, M, adm, randomizers.size());
  ChainResult out;
  out.h.reserve(M.block_count() + 1);
  out.h.push_back(BitVec(pk.params.parity_bits()));  // h_0 = 0
  for (std::size_t i = 0; i < M.block_count(); ++i) {
    BitVec x = chain_input(out.h.back(), M.blocks[i], pk.params);
    const ChameleonPublic& inst = adm.bits[i] ? pk.san : pk.non;
    out.h.push_back(ch_hash(inst, G, pack_bits(x), randomizers[i]));
  }
  return out;
}

Bytes outer_payload(const BitVec& h_L, const AdmMask& adm) {
  Bytes out = h_L.to_bytes();
  BitVec adm_bits(adm.size());
  for (std::size_t i = 0; i < adm.size(); ++i)
    if (adm.bits[i]) adm_bits.set(i, true);
  Bytes packed_adm = adm_bits.to_bytes();
  out.insert(out.end(), packed_adm.begin(), packed_adm.end());
  uint32_t L = static_cast<uint32_t>(adm.size());
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(L >> (8 * i)));
  return out;
}

SanitizableSignature sign(std::span<const uint8_t> signer_sk,
                          const SchemePublicKey& pk, const OuterSigner& outer,
                          const DigestOracle& G, const BlockMessage& M,
                          const AdmMask& adm, RandomSource& rng) {
  std::vector<Randomizer> rs;
  rs.reserve(M.block_count());
  for (std::size_t i = 0; i < M.block_count(); ++i)
    rs.push_back(sample_randomizer(pk.params, rng));
  ChainResult chain = chain_digest(pk, G, M, adm, rs);
  Bytes outer_sig = outer.sign(signer_sk, outer_payload(chain.h_L(), adm));
  return SanitizableSignature{chain.h_L(), std::move(outer_sig), std::move(rs),
                              adm};
}

VerifyResult verify(const SchemePublicKey& pk, const OuterSigner& outer,
                    const DigestOracle& G, const BlockMessage& M,
                    const SanitizableSignature& sig) {
  if (M.block_count() != sig.adm.size() ||
      M.block_count() != sig.randomizers.size())
    return {false, VerifyReason::ChainMismatch};
  for (const auto& r : sig.randomizers)
    if (r.r.weight() != pk.params.t) return {false, VerifyReason::WeightCheck};
  ChainResult chain;
  try {
    chain = chain_digest(pk, G, M, sig.adm, sig.randomizers);
  } catch (const Error&) {
    return {false, VerifyReason::ChainMismatch};
  }
  if (chain.h_L() != sig.h_L) return {false, VerifyReason::ChainMismatch};
  if (!outer.verify(pk.outer_pk, outer_payload(sig.h_L, sig.adm),
                    sig.outer_sig))
    return {false, VerifyReason::OuterSig};
  return {true, VerifyReason::Ok};
}

BitVec constructive_block_rewrite(const ChainResult& chain,
                                  const BlockMessage& M,
                                  const SanitizableSignature& sig,
                                  std::size_t i, const CodeParams& params,
                                  RandomSource& rng) {
  // Pick f of weight exactly t agreeing with r_i on the chain-value prefix;
  // then under the identity oracle the collision target decodes to exactly
  // f. The block rewrite that realizes it is M[i] xor the suffix of
  // (r_i xor f).
  const std::size_t nk = params.parity_bits();
  const BitVec& r = sig.randomizers[i].r;
  BitVec f(params.n);
  std::size_t prefix_weight = 0;
  for (std::size_t b = 0; b < nk; ++b)
    if (r.get(b)) {
      f.set(b, true);
      ++prefix_weight;
    }
  std::size_t remaining = params.t - prefix_weight;
  std::vector<uint32_t> idx(params.k);
  for (std::size_t b = 0; b < params.k; ++b)
    idx[b] = static_cast<uint32_t>(nk + b);
  for (std::size_t b = 0; b < remaining; ++b) {
    std::size_t pick = b + rng.uniform(params.k - b);
    std::swap(idx[b], idx[pick]);
    f.set(idx[b], true);
  }
  BitVec delta = r ^ f;
  BitVec block = M.blocks[i];
  for (std::size_t b = 0; b < params.k; ++b)
    if (delta.get(nk + b)) block.flip(b);
  return block;
}

SanitizableSignature sanitize(const SanitizerKey& san_key,
                              const SchemePublicKey& pk,
                              const OuterSigner& outer, const DigestOracle& G,
                              const BlockMessage& M,
                              const SanitizableSignature& sig,
                              const BlockMessage& M_new) {
  VerifyResult vr = verify(pk, outer, G, M, sig);
  if (!vr.ok)
    throw InvalidInput(std::string("signature does not verify on M: ") +
                       to_string(vr.reason));
  if (M_new.block_count() != M.block_count())
    throw InvalidInput("block count changed");
  for (std::size_t i = 0; i < M.block_count(); ++i)
    if (!sig.adm.bits[i] && M.blocks[i] != M_new.blocks[i])
      throw InvalidInput("modification touches immutable block " +
                         std::to_string(i));

  ChainResult chain = chain_digest(pk, G, M, sig.adm, sig.randomizers);
  SanitizableSignature out = sig;
  BlockMessage cur = M;

  for (std::size_t i = 0; i < M.block_count(); ++i) {
    if (M.blocks[i] == M_new.blocks[i]) continue;
    Bytes m_old = pack_bits(chain_input(chain.h[i], M.blocks[i], pk.params));
    Bytes m_new =
        pack_bits(chain_input(chain.h[i], M_new.blocks[i], pk.params));
    Randomizer r_new;
    try {
      r_new = ch_collide(san_key.secret, pk.san, G, m_old,
                         sig.randomizers[i], m_new);
    } catch (const NotDecodable&) {
      throw NotDecodable(i);
    } catch (const WeightMismatch& e) {
      throw WeightMismatch(e.what(), i);
    }
    out.randomizers[i] = std::move(r_new);
    cur.blocks[i] = M_new.blocks[i];
  }

  // Collisions preserve every h_i, so the downstream chain must be
  // bit-identical; recompute and treat any mismatch as an internal error.
  ChainResult new_chain = chain_digest(pk, G, cur, sig.adm, out.randomizers);
  for (std::size_t i = 0; i <= M.block_count(); ++i)
    if (new_chain.h[i] != chain.h[i])
      throw Error("internal: sanitized chain diverged at h_" +
                  std::to_string(i));
  return out;
}

}  // namespace mcss
