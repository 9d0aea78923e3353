#include "mcss/codec.hpp"

#include <algorithm>
#include <cstring>

namespace mcss {
namespace codec {

namespace {

struct Writer {
  Bytes out;

  void header(Kind kind, uint8_t params_id) {
    out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
    out.push_back(kVersion);
    out.push_back(static_cast<uint8_t>(kind));
    out.push_back(params_id);
  }
  void bytes(std::span<const uint8_t> b) {
    out.insert(out.end(), b.begin(), b.end());
  }
  void le16(uint16_t v) {
    out.push_back(static_cast<uint8_t>(v));
    out.push_back(static_cast<uint8_t>(v >> 8));
  }
  void le32(uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }
  void matrix(const BitMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) bytes(m.row_as_vec(r).to_bytes());
  }
};

struct Reader {
  std::span<const uint8_t> data;
  std::size_t pos = 0;

  std::span<const uint8_t> bytes(std::size_t n) {
    if (pos + n > data.size()) throw MalformedInput("truncated input");
    auto s = data.subspan(pos, n);
    pos += n;
    return s;
  }
  uint8_t byte() { return bytes(1)[0]; }
  uint16_t le16() {
    auto b = bytes(2);
    return static_cast<uint16_t>(b[0] | b[1] << 8);
  }
  uint32_t le32() {
    auto b = bytes(4);
    return static_cast<uint32_t>(b[0]) | static_cast<uint32_t>(b[1]) << 8 |
           static_cast<uint32_t>(b[2]) << 16 | static_cast<uint32_t>(b[3]) << 24;
  }
  BitMatrix matrix(std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    std::size_t row_bytes = (cols + 7) / 8;
    for (std::size_t r = 0; r < rows; ++r)
      m.set_row(r, BitVec::from_bytes(bytes(row_bytes), cols));
    return m;
  }
  const CodeParams& header(Kind expected_kind) {
    auto magic = bytes(4);
    if (!std::equal(magic.begin(), magic.end(), std::begin(kMagic)))
      throw MalformedInput("bad magic");
    if (byte() != kVersion) throw MalformedInput("unsupported version");
    if (byte() != static_cast<uint8_t>(expected_kind))
      throw MalformedInput("unexpected object kind");
    return params_by_id(byte());
  }
  void done() {
    if (pos != data.size()) throw MalformedInput("trailing bytes");
  }
};

}  // namespace

SizeReport size_report(const CodeParams& p, std::size_t L,
                       const OuterSigner& outer) {
  std::size_t nk = p.parity_bits();
  return SizeReport{
      2 * nk * p.n / 8 + outer.pk_bytes(),
      4 + (L + 7) / 8 + (nk + 7) / 8 + L * p.n / 8 + outer.sig_bytes(),
      p.n / 8,
  };
}

Bytes encode_public_key(const SchemePublicKey& pk, const OuterSigner& outer) {
  if (pk.outer_pk.size() != outer.pk_bytes())
    throw InvalidInput("outer public key size mismatch");
  Writer w;
  w.header(Kind::PublicKey, pk.params.id);
  w.bytes(pk.outer_pk);
  w.matrix(pk.non.Hpub);
  w.matrix(pk.san.Hpub);
  return std::move(w.out);
}

SchemePublicKey decode_public_key(std::span<const uint8_t> data,
                                  const OuterSigner& outer) {
  Reader r{data};
  const CodeParams& p = r.header(Kind::PublicKey);
  auto outer_pk = r.bytes(outer.pk_bytes());
  BitMatrix non = r.matrix(p.parity_bits(), p.n);
  BitMatrix san = r.matrix(p.parity_bits(), p.n);
  r.done();
  return SchemePublicKey{p, Bytes(outer_pk.begin(), outer_pk.end()),
                         ChameleonPublic{p, std::move(non)},
                         ChameleonPublic{p, std::move(san)}};
}

Bytes encode_signature(const SanitizableSignature& sig, const CodeParams& p,
                       const OuterSigner& outer) {
  const std::size_t L = sig.adm.size();
  if (sig.randomizers.size() != L || L == 0)
    throw InvalidInput("signature shape");
  if (sig.outer_sig.size() != outer.sig_bytes())
    throw InvalidInput("outer signature size mismatch");
  Writer w;
  w.header(Kind::Signature, p.id);
  w.le32(static_cast<uint32_t>(L));
  BitVec adm_bits(L);
  for (std::size_t i = 0; i < L; ++i)
    if (sig.adm.bits[i]) adm_bits.set(i, true);
  w.bytes(adm_bits.to_bytes());
  w.bytes(sig.h_L.to_bytes());
  for (const auto& rz : sig.randomizers) w.bytes(rz.r.to_bytes());
  w.bytes(sig.outer_sig);
  return std::move(w.out);
}

SanitizableSignature decode_signature(std::span<const uint8_t> data,
                                      const OuterSigner& outer,
                                      const CodeParams** params_out) {
  Reader r{data};
  const CodeParams& p = r.header(Kind::Signature);
  uint32_t L = r.le32();
  if (L == 0 || L > (1u << 20)) throw MalformedInput("implausible block count");
  BitVec adm_bits = BitVec::from_bytes(r.bytes((L + 7) / 8), L);
  BitVec h_L = BitVec::from_bytes(r.bytes((p.parity_bits() + 7) / 8),
                                  p.parity_bits());
  std::vector<Randomizer> rs;
  rs.reserve(L);
  for (uint32_t i = 0; i < L; ++i) {
    BitVec rv = BitVec::from_bytes(r.bytes(p.n / 8), p.n);
    if (rv.weight() != p.t)
      throw WeightMismatch("randomizer " + std::to_string(i) +
                           " has weight != t");
    rs.push_back(Randomizer{std::move(rv)});
  }
  auto outer_sig = r.bytes(outer.sig_bytes());
  r.done();
  AdmMask adm;
  adm.bits.resize(L);
  for (uint32_t i = 0; i < L; ++i) adm.bits[i] = adm_bits.get(i);
  if (params_out) *params_out = &p;
  return SanitizableSignature{std::move(h_L),
                              Bytes(outer_sig.begin(), outer_sig.end()),
                              std::move(rs), std::move(adm)};
}

Bytes encode_chameleon_secret(const ChameleonSecret& sk,
                              const CodeParams& p) {
  Writer w;
  w.header(Kind::SanitizerSecret, p.id);
  for (uint32_t v : sk.P.map) w.le32(v);
  w.matrix(sk.S_inv);
  for (unsigned i = 0; i <= p.t; ++i) w.le16(sk.code.g.coeff(i));
  for (Fe L : sk.code.support) w.le16(L);
  w.out.push_back(static_cast<uint8_t>(p.m));
  return std::move(w.out);
}

ChameleonSecret decode_chameleon_secret(std::span<const uint8_t> data) {
  Reader r{data};
  const CodeParams& p = r.header(Kind::SanitizerSecret);
  const std::size_t nk = p.parity_bits();

  Permutation P;
  P.map.resize(p.n);
  for (auto& v : P.map) v = r.le32();
  BitMatrix S_inv = r.matrix(nk, nk);

  std::vector<Fe> gc(p.t + 1);
  for (auto& c : gc) c = r.le16();
  std::vector<Fe> support(p.n);
  for (auto& L : support) L = r.le16();
  unsigned m = r.byte();
  r.done();

  if (m != p.m) throw MalformedInput("field degree disagrees with params");
  if (!P.is_bijection()) throw MalformedInput("permutation is not a bijection");

  const Field& F = Field::get(p.m);
  const uint32_t order = F.order();
  for (Fe c : gc)
    if (c >= order) throw MalformedInput("g coefficient out of field range");
  Poly g(std::move(gc));
  if (g.deg() != static_cast<int>(p.t) || g.lead() != 1)
    throw MalformedInput("g is not monic of degree t");
  if (!F.poly_irreducible(g)) throw MalformedInput("g is reducible");

  std::vector<bool> seen(order, false);
  for (Fe L : support) {
    if (L >= order || seen[L])
      throw MalformedInput("support elements not distinct field elements");
    seen[L] = true;
    if (F.poly_eval(g, L) == 0)
      throw MalformedInput("support element is a root of g");
  }
  if (mat_rank(S_inv) != nk) throw MalformedInput("scrambler not invertible");

  // Hsec and sqrt_x are derived, not serialized.
  GoppaCode code;
  code.params = p;
  code.field = F.params();
  code.g = std::move(g);
  code.support = std::move(support);
  code.sqrt_x = F.compute_sqrt_x(code.g);
  {
    BitMatrix H(nk, p.n);
    for (std::size_t j = 0; j < p.n; ++j) {
      Fe L = code.support[j];
      Fe entry = F.inv(F.poly_eval(code.g, L));
      for (unsigned i = 0; i < p.t; ++i) {
        for (unsigned b = 0; b < p.m; ++b)
          if (entry >> b & 1)
            H.set(static_cast<std::size_t>(i) * p.m + b, j, true);
        entry = F.mul(entry, L);
      }
    }
    code.Hsec = std::move(H);
  }
  return ChameleonSecret{std::move(P), std::move(S_inv), std::move(code)};
}

Bytes encode_signer_secret(std::span<const uint8_t> outer_sk,
                           const CodeParams& p) {
  Writer w;
  w.header(Kind::SignerSecret, p.id);
  w.le32(static_cast<uint32_t>(outer_sk.size()));
  w.bytes(outer_sk);
  return std::move(w.out);
}

Bytes decode_signer_secret(std::span<const uint8_t> data) {
  Reader r{data};
  r.header(Kind::SignerSecret);
  uint32_t len = r.le32();
  auto sk = r.bytes(len);
  r.done();
  return Bytes(sk.begin(), sk.end());
}

HeaderInfo peek_header(std::span<const uint8_t> data) {
  Reader r{data};
  auto magic = r.bytes(4);
  if (!std::equal(magic.begin(), magic.end(), std::begin(kMagic)))
    throw MalformedInput("bad magic");
  if (r.byte() != kVersion) throw MalformedInput("unsupported version");
  uint8_t kind = r.byte();
  if (kind < 0x01 || kind > 0x04) throw MalformedInput("unknown object kind");
  return HeaderInfo{static_cast<Kind>(kind), &params_by_id(r.byte())};
}

}  // namespace codec
}  // namespace mcss
