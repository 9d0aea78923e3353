#include "mcss/chameleon.hpp"

namespace mcss {

Bytes pack_bits(const BitVec& v) { return v.to_bytes(); }

ChameleonKeypair ch_gen(const CodeParams& params, RandomSource& rng) {
  GoppaCode code = generate_code(params, rng);
  BitMatrix S = random_invertible(params.parity_bits(), rng);
  Permutation P = random_permutation(params.n, rng);
  BitMatrix Hpub = permute_columns(mat_mul(S, code.Hsec), P);
  BitMatrix S_inv = mat_invert(S);
  return {ChameleonPublic{params, std::move(Hpub)},
          ChameleonSecret{std::move(P), std::move(S_inv), std::move(code)}};
}

Randomizer sample_randomizer(const CodeParams& params, RandomSource& rng) {
  // Fisher-Yates selection of t distinct positions: uniform over the
  // weight-t sphere.
  std::vector<uint32_t> idx(params.n);
  for (std::size_t i = 0; i < params.n; ++i) idx[i] = static_cast<uint32_t>(i);
  BitVec r(params.n);
  for (unsigned i = 0; i < params.t; ++i) {
    std::size_t pick = i + rng.uniform(params.n - i);
    std::swap(idx[i], idx[pick]);
    r.set(idx[i], true);
  }
  return Randomizer{std::move(r)};
}

namespace {

void check_weight(const BitVec& r, const CodeParams& params,
                  WeightPolicy policy) {
  std::size_t w = r.weight();
  if (policy == WeightPolicy::Exact ? w != params.t : w > params.t)
    throw WeightMismatch("randomizer weight " + std::to_string(w) +
                         " violates weight-" + std::to_string(params.t) +
                         " policy");
}

}  // namespace

BitVec ch_hash(const ChameleonPublic& pk, const DigestOracle& G,
               std::span<const uint8_t> m, const Randomizer& r,
               WeightPolicy policy) {
  if (r.r.size() != pk.params.n)
    throw DimensionMismatch("randomizer length != n");
  check_weight(r.r, pk.params, policy);
  BitVec y = G.digest(tag::kOracleG, m, pk.params.n);
  y.xor_with(r.r);
  return vec_mat_transpose_mul(y, pk.Hpub);
}

Randomizer ch_collide(const ChameleonSecret& sk, const ChameleonPublic& pk,
                      const DigestOracle& G, std::span<const uint8_t> m,
                      const Randomizer& r, std::span<const uint8_t> m_new,
                      WeightPolicy policy) {
  const CodeParams& params = pk.params;
  check_weight(r.r, params, policy);

  // s_target = (G(m) xor r xor G(m'))·Hpub^T is the syndrome r' must hit.
  BitVec y = G.digest(tag::kOracleG, m, params.n);
  y.xor_with(r.r);
  y.xor_with(G.digest(tag::kOracleG, m_new, params.n));
  BitVec s_target = vec_mat_transpose_mul(y, pk.Hpub);

  // Unscramble: s_pp = s_target·(S')^{-T}, then decode under the secret code
  // and undo the column permutation.
  BitVec s_pp = vec_mat_transpose_mul(s_target, sk.S_inv);
  std::optional<BitVec> f = patterson_decode(sk.code, s_pp);
  if (!f) throw NotDecodable();
  if (policy == WeightPolicy::Exact && f->weight() != params.t)
    throw WeightMismatch("decoded collision vector has weight " +
                         std::to_string(f->weight()) + " < t");
  return Randomizer{apply_permutation(*f, sk.P)};
}

}  // namespace mcss
