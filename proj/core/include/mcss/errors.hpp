#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcss {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ZeroInverse : Error {
  ZeroInverse() : Error("inverse of zero field element") {}
};

struct DivisionByZeroPoly : Error {
  DivisionByZeroPoly() : Error("polynomial division by zero") {}
};

struct Singular : Error {
  Singular() : Error("matrix is singular") {}
};

/// Syndrome lies outside the decoding radius. `block` is the index of the
/// failing message block when raised during sanitization, SIZE_MAX otherwise.
struct NotDecodable : Error {
  std::size_t block;
  explicit NotDecodable(std::size_t b = static_cast<std::size_t>(-1))
      : Error("syndrome not decodable" +
              (b == static_cast<std::size_t>(-1)
                   ? std::string()
                   : " at block " + std::to_string(b))),
        block(b) {}
};

struct WeightMismatch : Error {
  std::size_t block;
  explicit WeightMismatch(const std::string& what,
                          std::size_t b = static_cast<std::size_t>(-1))
      : Error(what), block(b) {}
};

struct MalformedInput : Error {
  using Error::Error;
};

struct InvalidInput : Error {
  using Error::Error;
};

}  // namespace mcss
