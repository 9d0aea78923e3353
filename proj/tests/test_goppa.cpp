#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mcss/goppa.hpp"
#include "test_util.hpp"

using namespace mcss;

namespace {

BitVec random_error(std::size_t n, unsigned weight, RandomSource& rng) {
  BitVec e(n);
  while (e.weight() < weight) e.set(rng.uniform(n), true);
  return e;
}

std::vector<BitVec> all_patterns_weight_le2(std::size_t n) {
  std::vector<BitVec> out;
  out.push_back(BitVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    BitVec e(n);
    e.set(i, true);
    out.push_back(e);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      BitVec e(n);
      e.set(i, true);
      e.set(j, true);
      out.push_back(e);
    }
  return out;
}

}  // namespace

TEST_CASE("nano code: distinct syndromes for all weight<=2 patterns") {
  auto rng = make_rng(61);
  GoppaCode code = generate_code(params_by_name("nano"), rng);
  auto patterns = all_patterns_weight_le2(32);
  REQUIRE(patterns.size() == 529);

  std::set<std::vector<uint8_t>> syndromes;
  for (const auto& e : patterns)
    syndromes.insert(syndrome_of(code, e).to_bytes());
  // All distinct <=> minimum distance >= 5, the designed 2t+1.
  CHECK(syndromes.size() == 529);
}

TEST_CASE("toy code: full-rank parity check") {
  auto rng = make_rng(67);
  GoppaCode code = generate_code(params_by_name("toy"), rng);
  CHECK(mat_rank(code.Hsec) == 128);
}

TEST_CASE("generation is deterministic under a fixed seed") {
  auto rng1 = make_rng(71), rng2 = make_rng(71);
  GoppaCode a = generate_code(params_by_name("nano"), rng1);
  GoppaCode b = generate_code(params_by_name("nano"), rng2);
  CHECK(a.g == b.g);
  CHECK(a.support == b.support);
  CHECK(a.Hsec == b.Hsec);
}

TEST_CASE("syndrome_of") {
  auto rng = make_rng(73);
  GoppaCode code = generate_code(params_by_name("nano"), rng);

  CHECK(syndrome_of(code, BitVec(32)) == BitVec(10));

  for (std::size_t j = 0; j < 32; ++j) {
    BitVec e(32);
    e.set(j, true);
    BitVec s = syndrome_of(code, e);
    for (std::size_t i = 0; i < 10; ++i)
      REQUIRE(s.get(i) == code.Hsec.get(i, j));
  }

  for (int trial = 0; trial < 100; ++trial) {
    BitVec a = random_bitvec(32, rng), b = random_bitvec(32, rng);
    REQUIRE(syndrome_of(code, a ^ b) ==
            (syndrome_of(code, a) ^ syndrome_of(code, b)));
  }
  CHECK_THROWS_AS(syndrome_of(code, BitVec(31)), DimensionMismatch);
}

TEST_CASE("syndrome_to_poly") {
  auto rng = make_rng(79);
  GoppaCode code = generate_code(params_by_name("nano"), rng);
  const Field& F = code.fld();

  CHECK(syndrome_to_poly(code, BitVec(10)).is_zero());

  // Inverse of the packing used in Hsec: a single error at j yields
  // coefficient i = L_j^i / g(L_j).
  for (std::size_t j = 0; j < 32; ++j) {
    BitVec e(32);
    e.set(j, true);
    Poly p = syndrome_to_poly(code, syndrome_of(code, e));
    Fe ginv = F.inv(F.poly_eval(code.g, code.support[j]));
    for (unsigned i = 0; i < 2; ++i)
      REQUIRE(p.coeff(i) == F.mul(ginv, F.pow(code.support[j], i)));
  }

  // Round trip with the row packing.
  for (int trial = 0; trial < 50; ++trial) {
    BitVec s = random_bitvec(10, rng);
    Poly p = syndrome_to_poly(code, s);
    BitVec back(10);
    for (unsigned i = 0; i < 2; ++i)
      for (unsigned b = 0; b < 5; ++b)
        if (p.coeff(i) >> b & 1) back.set(i * 5 + b, true);
    REQUIRE(back == s);
  }
}

TEST_CASE("patterson: exhaustive nano round trip") {
  auto rng = make_rng(83);
  GoppaCode code = generate_code(params_by_name("nano"), rng);
  for (const auto& e : all_patterns_weight_le2(32)) {
    auto dec = patterson_decode(code, syndrome_of(code, e));
    REQUIRE(dec.has_value());
    REQUIRE(*dec == e);
  }
}

TEST_CASE("patterson: randomized round trips at every registry set") {
  for (const auto& params : params_registry()) {
    CAPTURE(params.name);
    auto rng = make_rng(89 + params.id);
    GoppaCode code = generate_code(params, rng);
    for (int trial = 0; trial < 50; ++trial) {
      unsigned w = 1 + static_cast<unsigned>(rng.uniform(params.t));
      BitVec e = random_error(params.n, w, rng);
      auto dec = patterson_decode(code, syndrome_of(code, e));
      REQUIRE(dec.has_value());
      REQUIRE(*dec == e);
    }
  }
}

TEST_CASE("patterson: zero syndrome decodes to the zero vector") {
  auto rng = make_rng(97);
  GoppaCode code = generate_code(params_by_name("nano"), rng);
  auto dec = patterson_decode(code, BitVec(10));
  REQUIRE(dec.has_value());
  CHECK(dec->is_zero());
}

TEST_CASE("patterson: random-syndrome success rate matches the ball density") {
  auto rng = make_rng(101);
  GoppaCode code = generate_code(params_by_name("nano"), rng);
  const int trials = 2000;
  int ok = 0;
  for (int i = 0; i < trials; ++i) {
    BitVec s = random_bitvec(10, rng);
    auto dec = patterson_decode(code, s);
    if (dec) {
      REQUIRE(syndrome_of(code, *dec) == s);
      REQUIRE(dec->weight() <= 2);
      ++ok;
    }
  }
  double rate = static_cast<double>(ok) / trials;
  CHECK(rate > 529.0 / 1024 - 0.04);
  CHECK(rate < 529.0 / 1024 + 0.04);
}
