#include "mcss/params.hpp"

#include "mcss/errors.hpp"

namespace mcss {

const std::vector<CodeParams>& params_registry() {
  // k = n - m·t throughout. A figure of k=256 sometimes quoted for the
  // (m=9, n=512, t=32) shape contradicts k = n - m·t; 224 is the
  // consistent value and is what this registry uses.
  static const std::vector<CodeParams> registry = {
      {"nano", 5, 32, 22, 2, 0x01},
      {"toy", 8, 256, 128, 16, 0x02},
      {"benchmark", 9, 512, 224, 32, 0x03},
      {"medium", 10, 1024, 524, 50, 0x04},
      {"secure", 12, 3488, 2720, 64, 0x05},
  };
  return registry;
}

const CodeParams& params_by_name(std::string_view name) {
  for (const auto& p : params_registry())
    if (p.name == name) return p;
  throw InvalidInput("unknown parameter set: " + std::string(name));
}

const CodeParams& params_by_id(uint8_t id) {
  for (const auto& p : params_registry())
    if (p.id == id) return p;
  throw MalformedInput("unknown parameter-set id");
}

}  // namespace mcss
