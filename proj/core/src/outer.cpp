#include "mcss/outer.hpp"

namespace mcss {

std::pair<Bytes, Bytes> SimulatedDilithium2::keygen(RandomSource& rng) const {
  Bytes seed(32);
  rng.fill_bytes(seed);
  Bytes framed;
  framed.push_back(tag::kOuterPk);
  framed.insert(framed.end(), seed.begin(), seed.end());
  Bytes pk = shake256(framed, kPkBytes);
  return {pk, pk};  // sk = pk: the MAC key is the public identifier
}

Bytes SimulatedDilithium2::sign(std::span<const uint8_t> sk,
                                std::span<const uint8_t> msg) const {
  if (sk.size() != kPkBytes) throw InvalidInput("outer secret key size");
  Bytes framed;
  framed.reserve(1 + sk.size() + msg.size());
  framed.push_back(tag::kOuterSig);
  framed.insert(framed.end(), sk.begin(), sk.end());
  framed.insert(framed.end(), msg.begin(), msg.end());
  return shake256(framed, kSigBytes);
}

bool SimulatedDilithium2::verify(std::span<const uint8_t> pk,
                                 std::span<const uint8_t> msg,
                                 std::span<const uint8_t> sig) const {
  if (pk.size() != kPkBytes || sig.size() != kSigBytes) return false;
  Bytes expect = sign(pk, msg);
  return std::equal(expect.begin(), expect.end(), sig.begin());
}

}  // namespace mcss
