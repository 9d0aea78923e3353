#include "mcss/digest.hpp"

#include <openssl/evp.h>

#include <memory>

#include "mcss/errors.hpp"

namespace mcss {

Bytes shake256(std::span<const uint8_t> input, std::size_t out_len) {
  Bytes out(out_len);
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(
      EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_shake256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), input.data(), input.size()) != 1 ||
      EVP_DigestFinalXOF(ctx.get(), out.data(), out.size()) != 1)
    throw Error("SHAKE-256 failure");
  return out;
}

BitVec Shake256Oracle::digest(uint8_t context_tag,
                              std::span<const uint8_t> input,
                              std::size_t out_bits) const {
  Bytes framed;
  framed.reserve(input.size() + 2);
  framed.push_back(context_tag);
  framed.push_back(params_id_);
  framed.insert(framed.end(), input.begin(), input.end());
  Bytes raw = shake256(framed, (out_bits + 7) / 8);
  return BitVec::from_bytes(raw, out_bits);
}

BitVec IdentityOracle::digest(uint8_t /*context_tag*/,
                              std::span<const uint8_t> input,
                              std::size_t out_bits) const {
  if (input.size() != (out_bits + 7) / 8)
    throw DimensionMismatch("identity oracle input must carry out_bits bits");
  return BitVec::from_bytes(input, out_bits);
}

BitVec RecordingOracle::digest(uint8_t context_tag,
                               std::span<const uint8_t> input,
                               std::size_t out_bits) const {
  queries_.push_back({context_tag, Bytes(input.begin(), input.end()), out_bits});
  return inner_.digest(context_tag, input, out_bits);
}

}  // namespace mcss
