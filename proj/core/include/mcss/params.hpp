#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mcss {

/// Registry entry driving every size and loop bound: [n, k, 2t+1] binary
/// Goppa code over GF(2^m) with k = n - m·t.
struct CodeParams {
  std::string name;
  unsigned m;
  std::size_t n;
  std::size_t k;
  unsigned t;
  uint8_t id;  // wire identifier

  std::size_t parity_bits() const { return n - k; }  // = m·t

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

const std::vector<CodeParams>& params_registry();

/// Lookup by name; throws InvalidInput on unknown names.
const CodeParams& params_by_name(std::string_view name);

/// Lookup by wire id; throws MalformedInput on unknown ids.
const CodeParams& params_by_id(uint8_t id);

}  // namespace mcss
