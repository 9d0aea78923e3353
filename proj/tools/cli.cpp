// mcss: command-line front end for the sanitizable signature scheme.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcss/analysis.hpp"
#include "mcss/codec.hpp"
#include "mcss/scheme.hpp"

using namespace mcss;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitNotDecodable = 2;
constexpr int kExitMalformed = 3;
constexpr int kExitUsage = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(in),
               std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, std::span<const uint8_t> data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedInput("cannot write " + path);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw MalformedInput("short write to " + path);
}

RandomSource make_source(const std::string& seed_hex) {
  Bytes seed;
  if (seed_hex.empty()) {
    std::random_device rd;
    for (int i = 0; i < 32; ++i) seed.push_back(static_cast<uint8_t>(rd()));
  } else {
    if (seed_hex.size() % 2 != 0)
      throw UsageError("--seed must be an even-length hex string");
    for (std::size_t i = 0; i < seed_hex.size(); i += 2) {
      auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw UsageError("--seed contains a non-hex character");
      };
      seed.push_back(static_cast<uint8_t>(nib(seed_hex[i]) * 16 +
                                          nib(seed_hex[i + 1])));
    }
  }
  return RandomSource(seed);
}

std::unique_ptr<DigestOracle> make_oracle(const std::string& test_oracle,
                                          uint8_t params_id) {
  if (test_oracle.empty())
    return std::make_unique<Shake256Oracle>(params_id);
  if (test_oracle == "identity") {
    std::fprintf(stderr,
                 "WARNING: --test-oracle identity disables the digest "
                 "preprocessing step.\n"
                 "WARNING: output is NOT secure; for demonstrations and "
                 "testing only.\n");
    return std::make_unique<IdentityOracle>();
  }
  throw UsageError("unknown --test-oracle value: " + test_oracle);
}

/// Splits raw bytes into k-bit blocks with 10* padding: a single 1 bit is
/// appended, then zeros up to the next block boundary. L is at least 1.
BlockMessage pad_message(const Bytes& raw, const CodeParams& params) {
  std::size_t msg_bits = raw.size() * 8;
  std::size_t total = ((msg_bits + 1 + params.k - 1) / params.k) * params.k;
  BitVec all(total);
  for (std::size_t i = 0; i < msg_bits; ++i)
    if (raw[i / 8] >> (i % 8) & 1) all.set(i, true);
  all.set(msg_bits, true);  // the 1 of 10*
  BlockMessage M;
  for (std::size_t off = 0; off < total; off += params.k) {
    BitVec block(params.k);
    for (std::size_t b = 0; b < params.k; ++b)
      if (all.get(off + b)) block.set(b, true);
    M.blocks.push_back(std::move(block));
  }
  return M;
}

AdmMask parse_adm(const std::string& csv, std::size_t L) {
  AdmMask adm;
  std::string cur;
  auto flush = [&] {
    if (cur == "0")
      adm.bits.push_back(false);
    else if (cur == "1")
      adm.bits.push_back(true);
    else
      throw UsageError("--adm entries must be 0 or 1");
    cur.clear();
  };
  for (char c : csv) {
    if (c == ',')
      flush();
    else
      cur += c;
  }
  if (!cur.empty() || adm.bits.empty()) flush();
  if (adm.size() != L)
    throw UsageError("--adm has " + std::to_string(adm.size()) +
                     " entries but the padded message has " +
                     std::to_string(L) + " blocks");
  return adm;
}

const char* kind_name(codec::Kind k) {
  switch (k) {
    case codec::Kind::PublicKey:
      return "public key";
    case codec::Kind::SignerSecret:
      return "signer secret key";
    case codec::Kind::SanitizerSecret:
      return "chameleon trapdoor key";
    case codec::Kind::Signature:
      return "signature";
  }
  return "?";
}

// ---------------------------------------------------------------------------

int cmd_keygen(const std::string& params_name, const std::string& out_dir,
               const std::string& seed_hex) {
  CodeParams params = params_by_name(params_name);
  RandomSource rng = make_source(seed_hex);
  SimulatedDilithium2 outer;
  SchemeKeys keys = keygen(params, outer, rng);

  std::filesystem::create_directories(out_dir);
  auto at = [&](const char* name) { return out_dir + "/" + name; };
  write_file(at("pk.mcss"), codec::encode_public_key(keys.pk, outer));
  write_file(at("signer.sk"),
             codec::encode_signer_secret(keys.signer_sk, params));
  write_file(at("sanitizer.sk"),
             codec::encode_chameleon_secret(keys.san_key.secret, params));
  write_file(at("escrow.sk"),
             codec::encode_chameleon_secret(keys.non_secret_escrow, params));
  std::printf("wrote pk.mcss, signer.sk, sanitizer.sk, escrow.sk to %s\n",
              out_dir.c_str());
  return kExitOk;
}

int cmd_sign(const std::string& pk_path, const std::string& sk_path,
             const std::string& in_path, const std::string& adm_csv,
             const std::string& out_path, const std::string& seed_hex,
             const std::string& test_oracle) {
  SimulatedDilithium2 outer;
  SchemePublicKey pk = codec::decode_public_key(read_file(pk_path), outer);
  Bytes signer_sk = codec::decode_signer_secret(read_file(sk_path));
  BlockMessage M = pad_message(read_file(in_path), pk.params);
  AdmMask adm = parse_adm(adm_csv, M.block_count());
  auto oracle = make_oracle(test_oracle, pk.params.id);
  RandomSource rng = make_source(seed_hex);

  SanitizableSignature sig =
      sign(signer_sk, pk, outer, *oracle, M, adm, rng);
  write_file(out_path, codec::encode_signature(sig, pk.params, outer));
  std::printf("signed %zu block(s) -> %s\n", M.block_count(),
              out_path.c_str());
  return kExitOk;
}

int cmd_verify(const std::string& pk_path, const std::string& in_path,
               const std::string& sig_path, const std::string& test_oracle) {
  SimulatedDilithium2 outer;
  SchemePublicKey pk = codec::decode_public_key(read_file(pk_path), outer);
  const CodeParams* sig_params = nullptr;
  SanitizableSignature sig =
      codec::decode_signature(read_file(sig_path), outer, &sig_params);
  if (sig_params->id != pk.params.id)
    throw MalformedInput("signature and public key parameter sets differ");
  BlockMessage M = pad_message(read_file(in_path), pk.params);
  auto oracle = make_oracle(test_oracle, pk.params.id);

  VerifyResult vr = verify(pk, outer, *oracle, M, sig);
  std::printf("%s\n", vr.ok ? "OK" : to_string(vr.reason));
  return vr.ok ? kExitOk : kExitVerifyFailure;
}

int cmd_sanitize(const std::string& pk_path, const std::string& sankey_path,
                 const std::string& orig_path, const std::string& new_path,
                 const std::string& sig_path, const std::string& out_path,
                 const std::string& test_oracle) {
  SimulatedDilithium2 outer;
  SchemePublicKey pk = codec::decode_public_key(read_file(pk_path), outer);
  SanitizerKey san_key{codec::decode_chameleon_secret(read_file(sankey_path))};
  SanitizableSignature sig =
      codec::decode_signature(read_file(sig_path), outer);
  BlockMessage M = pad_message(read_file(orig_path), pk.params);
  BlockMessage M_new = pad_message(read_file(new_path), pk.params);
  auto oracle = make_oracle(test_oracle, pk.params.id);

  try {
    SanitizableSignature out =
        sanitize(san_key, pk, outer, *oracle, M, sig, M_new);
    write_file(out_path, codec::encode_signature(out, pk.params, outer));
  } catch (const NotDecodable& e) {
    std::fprintf(stderr, "sanitization failed: %s\n", e.what());
    return kExitNotDecodable;
  } catch (const WeightMismatch& e) {
    std::fprintf(stderr, "sanitization failed: %s\n", e.what());
    return kExitNotDecodable;
  } catch (const InvalidInput& e) {
    std::fprintf(stderr, "sanitization refused: %s\n", e.what());
    return kExitVerifyFailure;
  }
  std::printf("sanitized signature -> %s\n", out_path.c_str());
  return kExitOk;
}

int cmd_analyze(const std::string& what, const std::string& params_name,
                unsigned n, unsigned t) {
  auto print = [](const ExactRatio& r) {
    std::printf("%s/%s = %s\n", r.num().str().c_str(), r.den().str().c_str(),
                r.to_decimal(12).c_str());
  };
  if (what == "density") {
    if (params_name.empty())
      throw UsageError("--what density requires --params");
    print(decodable_density(params_by_name(params_name)));
    return kExitOk;
  }
  if (!params_name.empty()) {
    CodeParams p = params_by_name(params_name);
    n = static_cast<unsigned>(p.n);
    t = p.t;
  } else if (n == 0) {
    throw UsageError("provide --params NAME or --n N --t T");
  }
  if (what == "delta")
    print(delta_exact(n, t));
  else if (what == "ratio")
    print(weight_ratio(n, t));
  else
    throw UsageError("--what must be delta, ratio, or density");
  return kExitOk;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  if (out.empty()) throw UsageError("empty list");
  return out;
}

int cmd_bench(const std::string& params_csv, const std::string& blocks_csv,
              const std::string& out_path, const std::string& seed_hex) {
  using Clock = std::chrono::steady_clock;
  auto ms = [](Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0)
        .count();
  };
  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
  };

  SimulatedDilithium2 outer;
  RandomSource rng = make_source(seed_hex);
  IdentityOracle oracle;  // constructive rewrites keep sanitize decodable
  json report;
  report["records"] = json::array();
  const int reps = 5;

  for (const std::string& name : split_csv(params_csv)) {
    CodeParams params = params_by_name(name);

    std::vector<double> keygen_ms;
    std::unique_ptr<SchemeKeys> keys;
    for (int rep = 0; rep < reps; ++rep) {
      auto t0 = Clock::now();
      auto k = std::make_unique<SchemeKeys>(keygen(params, outer, rng));
      keygen_ms.push_back(ms(t0));
      keys = std::move(k);
    }
    report["records"].push_back(
        {{"params", name},
         {"op", "keygen"},
         {"median_ms", median(keygen_ms)},
         {"samples_ms", keygen_ms}});

    for (const std::string& Ls : split_csv(blocks_csv)) {
      std::size_t L = std::stoul(Ls);
      if (L == 0) throw UsageError("--blocks entries must be positive");
      AdmMask adm{std::vector<bool>(L, true)};

      std::vector<double> sign_ms, verify_ms, sanitize_ms;
      for (int rep = 0; rep < reps; ++rep) {
        BlockMessage M;
        for (std::size_t i = 0; i < L; ++i)
          M.blocks.push_back(random_bitvec(params.k, rng));

        auto t0 = Clock::now();
        SanitizableSignature sig =
            sign(keys->signer_sk, keys->pk, outer, oracle, M, adm, rng);
        sign_ms.push_back(ms(t0));

        t0 = Clock::now();
        VerifyResult vr = verify(keys->pk, outer, oracle, M, sig);
        verify_ms.push_back(ms(t0));
        if (!vr.ok) throw Error("internal: benchmark signature rejected");

        ChainResult chain =
            chain_digest(keys->pk, oracle, M, adm, sig.randomizers);
        BlockMessage M_new = M;
        M_new.blocks[0] =
            constructive_block_rewrite(chain, M, sig, 0, params, rng);
        t0 = Clock::now();
        sanitize(keys->san_key, keys->pk, outer, oracle, M, sig, M_new);
        sanitize_ms.push_back(ms(t0));
      }

      auto sizes = codec::size_report(params, L, outer);
      json size_obj = {{"pk_bytes", sizes.pk_bytes},
                       {"sig_bytes", sizes.sig_bytes},
                       {"per_block_bytes", sizes.per_block_bytes}};
      auto push = [&](const char* op, const std::vector<double>& samples) {
        report["records"].push_back({{"params", name},
                                     {"L", L},
                                     {"op", op},
                                     {"median_ms", median(samples)},
                                     {"samples_ms", samples},
                                     {"sizes", size_obj}});
      };
      push("sign", sign_ms);
      push("verify", verify_ms);
      push("sanitize_1block", sanitize_ms);

      std::printf("%-10s L=%-3zu sign %8.2f ms  verify %8.2f ms  "
                  "sanitize %8.2f ms\n",
                  name.c_str(), L, median(sign_ms), median(verify_ms),
                  median(sanitize_ms));
    }
  }
  std::string text = report.dump(2);
  write_file(out_path,
             std::span(reinterpret_cast<const uint8_t*>(text.data()),
                       text.size()));
  std::printf("report written to %s\n", out_path.c_str());
  return kExitOk;
}

int cmd_inspect(const std::string& path) {
  Bytes data = read_file(path);
  codec::HeaderInfo hdr = codec::peek_header(data);
  const CodeParams& p = *hdr.params;
  std::printf("kind:   %s\n", kind_name(hdr.kind));
  std::printf("params: %s (m=%u n=%zu k=%zu t=%u)\n", p.name.c_str(), p.m,
              p.n, p.k, p.t);
  std::printf("bytes:  %zu (payload %zu)\n", data.size(),
              data.size() - codec::kHeaderBytes);

  SimulatedDilithium2 outer;
  switch (hdr.kind) {
    case codec::Kind::PublicKey: {
      SchemePublicKey pk = codec::decode_public_key(data, outer);
      std::printf("outer pk: %zu bytes; two %zux%zu parity-check matrices\n",
                  pk.outer_pk.size(), pk.non.Hpub.rows(), pk.non.Hpub.cols());
      break;
    }
    case codec::Kind::Signature: {
      SanitizableSignature sig = codec::decode_signature(data, outer);
      std::size_t admissible = 0;
      for (bool b : sig.adm.bits) admissible += b;
      std::printf("blocks: %zu (%zu admissible); randomizers weight %u; "
                  "outer sig %zu bytes\n",
                  sig.adm.size(), admissible, p.t, sig.outer_sig.size());
      break;
    }
    case codec::Kind::SanitizerSecret: {
      ChameleonSecret sk = codec::decode_chameleon_secret(data);
      std::printf("trapdoor: degree-%d Goppa polynomial, support %zu, "
                  "scrambler %zux%zu\n",
                  sk.code.g.deg(), sk.code.support.size(), sk.S_inv.rows(),
                  sk.S_inv.cols());
      break;
    }
    case codec::Kind::SignerSecret: {
      Bytes sk = codec::decode_signer_secret(data);
      std::printf("outer secret key: %zu bytes\n", sk.size());
      break;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"McEliece-based chameleon-hash sanitizable signatures"};
  app.require_subcommand(1);

  std::string params_name, out_dir, seed_hex;
  std::string pk_path, sk_path, in_path, adm_csv, out_path, sig_path;
  std::string sankey_path, orig_path, new_path, test_oracle;
  std::string what, params_csv, blocks_csv, file_path;
  unsigned an = 0, at = 0;

  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key set");
  keygen_cmd->add_option("--params", params_name, "Parameter set name")
      ->required();
  keygen_cmd->add_option("--out", out_dir, "Output directory")->required();
  keygen_cmd->add_option("--seed", seed_hex, "Deterministic seed (hex)");

  auto* sign_cmd = app.add_subcommand("sign", "Sign a message file");
  sign_cmd->add_option("--pk", pk_path)->required();
  sign_cmd->add_option("--sk", sk_path)->required();
  sign_cmd->add_option("--in", in_path)->required();
  sign_cmd->add_option("--adm", adm_csv, "Admissibility CSV, e.g. 0,1,0")
      ->required();
  sign_cmd->add_option("--out", out_path)->required();
  sign_cmd->add_option("--seed", seed_hex);
  sign_cmd->add_option("--test-oracle", test_oracle);

  auto* verify_cmd = app.add_subcommand("verify", "Verify a signature");
  verify_cmd->add_option("--pk", pk_path)->required();
  verify_cmd->add_option("--in", in_path)->required();
  verify_cmd->add_option("--sig", sig_path)->required();
  verify_cmd->add_option("--test-oracle", test_oracle);

  auto* san_cmd = app.add_subcommand("sanitize", "Rewrite admissible blocks");
  san_cmd->add_option("--pk", pk_path)->required();
  san_cmd->add_option("--sankey", sankey_path)->required();
  san_cmd->add_option("--orig", orig_path)->required();
  san_cmd->add_option("--new", new_path)->required();
  san_cmd->add_option("--sig", sig_path)->required();
  san_cmd->add_option("--out", out_path)->required();
  san_cmd->add_option("--test-oracle", test_oracle);

  auto* ana_cmd = app.add_subcommand("analyze", "Exact statistics");
  ana_cmd->add_option("--what", what, "delta | ratio | density")->required();
  ana_cmd->add_option("--params", params_name);
  ana_cmd->add_option("--n", an);
  ana_cmd->add_option("--t", at);

  auto* bench_cmd = app.add_subcommand("bench", "Timing report");
  bench_cmd->add_option("--params", params_csv, "CSV of parameter sets")
      ->required();
  bench_cmd->add_option("--blocks", blocks_csv, "CSV of block counts")
      ->required();
  bench_cmd->add_option("--out", out_path, "JSON report path")->required();
  bench_cmd->add_option("--seed", seed_hex);

  auto* ins_cmd = app.add_subcommand("inspect", "Decode any artifact file");
  ins_cmd->add_option("--file", file_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (keygen_cmd->parsed())
      return cmd_keygen(params_name, out_dir, seed_hex);
    if (sign_cmd->parsed())
      return cmd_sign(pk_path, sk_path, in_path, adm_csv, out_path, seed_hex,
                      test_oracle);
    if (verify_cmd->parsed())
      return cmd_verify(pk_path, in_path, sig_path, test_oracle);
    if (san_cmd->parsed())
      return cmd_sanitize(pk_path, sankey_path, orig_path, new_path, sig_path,
                          out_path, test_oracle);
    if (ana_cmd->parsed()) return cmd_analyze(what, params_name, an, at);
    if (bench_cmd->parsed())
      return cmd_bench(params_csv, blocks_csv, out_path, seed_hex);
    if (ins_cmd->parsed()) return cmd_inspect(file_path);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const MalformedInput& e) {
    std::fprintf(stderr, "malformed input: %s\n", e.what());
    return kExitMalformed;
  } catch (const InvalidInput& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitMalformed;
  }
  return kExitUsage;
}
