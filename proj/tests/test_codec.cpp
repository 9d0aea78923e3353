#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "mcss/codec.hpp"
#include "test_util.hpp"

using namespace mcss;

namespace {

BlockMessage random_message(const CodeParams& params, std::size_t L,
                            RandomSource& rng) {
  BlockMessage M;
  for (std::size_t i = 0; i < L; ++i)
    M.blocks.push_back(random_bitvec(params.k, rng));
  return M;
}

struct Fixture {
  CodeParams params;
  SimulatedDilithium2 outer;
  SchemeKeys keys;
  Shake256Oracle G;

  explicit Fixture(const char* name, uint64_t seed)
      : params(params_by_name(name)),
        keys([&] {
          auto rng = make_rng(seed);
          return keygen(params, outer, rng);
        }()),
        G(params.id) {}
};

}  // namespace

TEST_CASE("size_report: published sizes at secure and toy") {
  SimulatedDilithium2 outer;
  auto secure = codec::size_report(params_by_name("secure"), 10, outer);
  CHECK(secure.pk_bytes == 671008);
  CHECK(secure.per_block_bytes == 436);
  CHECK(secure.sig_bytes >= 6881 - 16);
  CHECK(secure.sig_bytes <= 6881 + 16);

  auto toy = codec::size_report(params_by_name("toy"), 1, outer);
  CHECK(toy.pk_bytes == 9504);
  CHECK(toy.per_block_bytes == 32);

  // Per-block increment: consecutive L differ by exactly n/8 except at the
  // admissibility byte boundary.
  auto a = codec::size_report(params_by_name("secure"), 3, outer);
  auto b = codec::size_report(params_by_name("secure"), 4, outer);
  CHECK(b.sig_bytes - a.sig_bytes == 436);
}

TEST_CASE("encoded sizes match the closed form across parameters and L") {
  auto rng = make_rng(193);
  for (const char* name : {"nano", "toy"}) {
    Fixture fx(name, 193);
    for (std::size_t L : {1, 3, 8, 20}) {
      CAPTURE(name);
      CAPTURE(L);
      BlockMessage M = random_message(fx.params, L, rng);
      AdmMask adm{std::vector<bool>(L, true)};
      SanitizableSignature sig =
          sign(fx.keys.signer_sk, fx.keys.pk, fx.outer, fx.G, M, adm, rng);
      auto report = codec::size_report(fx.params, L, fx.outer);
      Bytes enc = codec::encode_signature(sig, fx.params, fx.outer);
      REQUIRE(enc.size() == report.sig_bytes + codec::kHeaderBytes);
    }
    Bytes pk_enc = codec::encode_public_key(fx.keys.pk, fx.outer);
    REQUIRE(pk_enc.size() ==
            codec::size_report(fx.params, 1, fx.outer).pk_bytes +
                codec::kHeaderBytes);
  }
}

TEST_CASE("public key round trip") {
  Fixture fx("nano", 197);
  Bytes enc = codec::encode_public_key(fx.keys.pk, fx.outer);

  auto hdr = codec::peek_header(enc);
  CHECK(hdr.kind == codec::Kind::PublicKey);
  CHECK(hdr.params->name == "nano");

  SchemePublicKey back = codec::decode_public_key(enc, fx.outer);
  CHECK(back.outer_pk == fx.keys.pk.outer_pk);
  CHECK(back.non.Hpub == fx.keys.pk.non.Hpub);
  CHECK(back.san.Hpub == fx.keys.pk.san.Hpub);
  CHECK(back.params.id == fx.params.id);
}

TEST_CASE("signature round trip preserves every field") {
  Fixture fx("nano", 199);
  auto rng = make_rng(211);
  BlockMessage M = random_message(fx.params, 5, rng);
  AdmMask adm{{true, false, true, true, false}};
  SanitizableSignature sig =
      sign(fx.keys.signer_sk, fx.keys.pk, fx.outer, fx.G, M, adm, rng);

  Bytes enc = codec::encode_signature(sig, fx.params, fx.outer);
  const CodeParams* p = nullptr;
  SanitizableSignature back = codec::decode_signature(enc, fx.outer, &p);
  REQUIRE(p != nullptr);
  CHECK(p->id == fx.params.id);
  CHECK(back == sig);
  CHECK(verify(fx.keys.pk, fx.outer, fx.G, M, back).ok);
}

TEST_CASE("chameleon secret round trip rebuilds a working trapdoor") {
  Fixture fx("nano", 223);
  const ChameleonSecret& sk = fx.keys.san_key.secret;
  Bytes enc = codec::encode_chameleon_secret(sk, fx.params);
  ChameleonSecret back = codec::decode_chameleon_secret(enc);

  CHECK(back.P.map == sk.P.map);
  CHECK(back.S_inv == sk.S_inv);
  CHECK(back.code.g == sk.code.g);
  CHECK(back.code.support == sk.code.support);
  CHECK(back.code.Hsec == sk.code.Hsec);
  CHECK(back.code.sqrt_x == sk.code.sqrt_x);

  // The decoded trapdoor actually opens collisions for the public instance.
  auto rng = make_rng(227);
  IdentityOracle ident;
  BitVec m_bits = random_bitvec(fx.params.n, rng);
  Randomizer r = sample_randomizer(fx.params, rng);
  BitVec f(fx.params.n);
  while (f.weight() < fx.params.t) f.set(rng.uniform(fx.params.n), true);
  Bytes m = pack_bits(m_bits), m_new = pack_bits(m_bits ^ r.r ^ f);
  Randomizer r2 = ch_collide(back, fx.keys.pk.san, ident, m, r, m_new);
  CHECK(ch_hash(fx.keys.pk.san, ident, m_new, r2) ==
        ch_hash(fx.keys.pk.san, ident, m, r));
}

TEST_CASE("signer secret round trip") {
  Fixture fx("nano", 229);
  Bytes enc = codec::encode_signer_secret(fx.keys.signer_sk, fx.params);
  CHECK(codec::decode_signer_secret(enc) == fx.keys.signer_sk);
  CHECK(codec::peek_header(enc).kind == codec::Kind::SignerSecret);
}

TEST_CASE("decoders reject malformed input") {
  Fixture fx("nano", 233);
  auto rng = make_rng(239);
  BlockMessage M = random_message(fx.params, 2, rng);
  AdmMask adm{{true, true}};
  SanitizableSignature sig =
      sign(fx.keys.signer_sk, fx.keys.pk, fx.outer, fx.G, M, adm, rng);

  Bytes pk_enc = codec::encode_public_key(fx.keys.pk, fx.outer);
  Bytes sig_enc = codec::encode_signature(sig, fx.params, fx.outer);
  Bytes sk_enc =
      codec::encode_chameleon_secret(fx.keys.san_key.secret, fx.params);

  // Header damage.
  Bytes bad = pk_enc;
  bad[0] = 'X';
  CHECK_THROWS_AS(codec::decode_public_key(bad, fx.outer), MalformedInput);
  bad = pk_enc;
  bad[4] = 0x7F;  // version
  CHECK_THROWS_AS(codec::decode_public_key(bad, fx.outer), MalformedInput);
  bad = pk_enc;
  bad[5] = static_cast<uint8_t>(codec::Kind::Signature);  // kind
  CHECK_THROWS_AS(codec::decode_public_key(bad, fx.outer), MalformedInput);
  bad = pk_enc;
  bad[6] = 0xEE;  // unknown params id
  CHECK_THROWS_AS(codec::decode_public_key(bad, fx.outer), MalformedInput);

  // Truncation and trailing garbage.
  Bytes cut(pk_enc.begin(), pk_enc.end() - 1);
  CHECK_THROWS_AS(codec::decode_public_key(cut, fx.outer), MalformedInput);
  Bytes extra = sig_enc;
  extra.push_back(0);
  CHECK_THROWS_AS(codec::decode_signature(extra, fx.outer), MalformedInput);

  // Randomizer weight violation inside a signature.
  Bytes heavy = sig_enc;
  std::size_t r0 =
      codec::kHeaderBytes + 4 + 1 + 2;  // L, adm byte, h_L (10 bits -> 2 bytes)
  heavy[r0] = 0xFF;
  CHECK_THROWS_AS(codec::decode_signature(heavy, fx.outer), WeightMismatch);

  // Duplicate permutation index in a trapdoor key.
  Bytes dup = sk_enc;
  for (int b = 0; b < 4; ++b)
    dup[codec::kHeaderBytes + 4 + b] = dup[codec::kHeaderBytes + b];
  CHECK_THROWS_AS(codec::decode_chameleon_secret(dup), MalformedInput);
}

TEST_CASE("random byte mutations never crash the decoders") {
  Fixture fx("nano", 241);
  auto rng = make_rng(251);
  BlockMessage M = random_message(fx.params, 3, rng);
  AdmMask adm{{true, false, true}};
  SanitizableSignature sig =
      sign(fx.keys.signer_sk, fx.keys.pk, fx.outer, fx.G, M, adm, rng);

  const Bytes encs[] = {
      codec::encode_public_key(fx.keys.pk, fx.outer),
      codec::encode_signature(sig, fx.params, fx.outer),
      codec::encode_chameleon_secret(fx.keys.san_key.secret, fx.params),
      codec::encode_signer_secret(fx.keys.signer_sk, fx.params),
  };
  int rejected = 0, accepted = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const Bytes& base = encs[trial % 4];
    Bytes mut = base;
    int flips = 1 + static_cast<int>(rng.uniform(4));
    for (int f = 0; f < flips; ++f)
      mut[rng.uniform(mut.size())] ^= static_cast<uint8_t>(1 + rng.uniform(255));
    try {
      switch (trial % 4) {
        case 0:
          codec::decode_public_key(mut, fx.outer);
          break;
        case 1: {
          SanitizableSignature s = codec::decode_signature(mut, fx.outer);
          for (const auto& r : s.randomizers)
            REQUIRE(r.r.weight() == fx.params.t);
          break;
        }
        case 2: {
          ChameleonSecret s = codec::decode_chameleon_secret(mut);
          REQUIRE(s.P.is_bijection());
          REQUIRE(mat_rank(s.S_inv) == fx.params.parity_bits());
          break;
        }
        case 3:
          codec::decode_signer_secret(mut);
          break;
      }
      ++accepted;
    } catch (const MalformedInput&) {
      ++rejected;
    } catch (const WeightMismatch&) {
      ++rejected;
    }
  }
  CHECK(rejected + accepted == 3000);
  CHECK(rejected > 0);
}
