#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mcss/analysis.hpp"
#include "mcss/errors.hpp"
#include "test_util.hpp"

using namespace mcss;

TEST_CASE("ExactRatio: reduction, decimal expansion, arithmetic") {
  ExactRatio half(2, 4);
  CHECK(half.num() == 1);
  CHECK(half.den() == 2);
  CHECK(half.to_decimal(4) == "0.5000");

  ExactRatio third(1, 3);
  CHECK(third.to_decimal(6) == "0.333333");
  CHECK((half + third) == ExactRatio(5, 6));
  CHECK((half + half) == ExactRatio(1, 1));
  CHECK(ExactRatio(1, 1).to_decimal(2) == "1.00");

  CHECK(std::abs(ExactRatio(1, 7).to_double() - 1.0 / 7) < 1e-15);
  CHECK_THROWS_AS(ExactRatio(1, 0), InvalidInput);
}

TEST_CASE("binomial against Pascal recurrence and known values") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(52, 5) == 2598960);
  // Independent oracle: Pascal's triangle up to n = 64.
  std::vector<std::vector<ExactRatio::Int>> pascal(65);
  for (unsigned n = 0; n <= 64; ++n) {
    pascal[n].resize(n + 1);
    for (unsigned k = 0; k <= n; ++k)
      pascal[n][k] = (k == 0 || k == n)
                         ? ExactRatio::Int(1)
                         : pascal[n - 1][k - 1] + pascal[n - 1][k];
  }
  for (unsigned n = 0; n <= 64; ++n)
    for (unsigned k = 0; k <= n; ++k) REQUIRE(binomial(n, k) == pascal[n][k]);
}

TEST_CASE("delta and weight ratio: published rounded values and exact sums") {
  // The full-size parameter set: delta rounds to 0.0187, the exact-weight
  // ratio to 0.981.
  ExactRatio d = delta_exact(3488, 64);
  CHECK(std::round(d.to_double() * 1e4) == 187.0);
  CHECK(d.to_decimal(5).substr(0, 6) == "0.0186");  // 0.01867 truncated
  ExactRatio w = weight_ratio(3488, 64);
  CHECK(std::round(w.to_double() * 1e3) == 981.0);

  // delta + ratio = 1 exactly, at several sizes.
  for (auto [n, t] : {std::pair{32u, 2u}, {256u, 16u}, {3488u, 64u}})
    REQUIRE((delta_exact(n, t) + weight_ratio(n, t)) == ExactRatio(1, 1));

  // Small case closed form: ball = 1 + 32 + 496 = 529, C(32,2) = 496.
  CHECK(delta_exact(32, 2) == ExactRatio(33, 529));
  CHECK(weight_ratio(32, 2) == ExactRatio(496, 529));

  CHECK_THROWS_AS(delta_exact(4, 5), InvalidInput);
}

TEST_CASE("decodable density: exact fractions per parameter set") {
  CHECK(decodable_density(params_by_name("nano")) == ExactRatio(529, 1024));

  // toy: ball(256,16) / 2^128 is tiny; verify through the exact fraction.
  ExactRatio toy = decodable_density(params_by_name("toy"));
  ExactRatio::Int ball = 0;
  for (unsigned j = 0; j <= 16; ++j) ball += binomial(256, j);
  ExactRatio expect(ball, ExactRatio::Int(1) << 128);
  CHECK(toy == expect);
  CHECK(toy.to_double() < 1e-12);

  ExactRatio secure = decodable_density(params_by_name("secure"));
  CHECK(secure.to_double() < 1e-100);
}

TEST_CASE("transparency_trial: identity-oracle run at toy") {
  auto rng = make_rng(257);
  TransparencyReport rep =
      transparency_trial(params_by_name("toy"), 3, 30, rng, true);
  CHECK(rep.fresh_samples == 90);
  CHECK(rep.sanitize_attempts == 30);
  // Constructive rewrites always land inside the decoding radius.
  CHECK(rep.sanitized_samples == 30);
  CHECK(rep.fresh_point_mass_at_t);
  CHECK(rep.sanitized_point_mass_at_t);
  CHECK(rep.max_fresh_z < 6.0);
  CHECK(rep.max_sanitized_z < 6.0);
}

TEST_CASE("transparency_trial: genuine oracle at nano") {
  auto rng = make_rng(263);
  const std::size_t trials = 300;
  TransparencyReport rep =
      transparency_trial(params_by_name("nano"), 2, trials, rng, false);
  CHECK(rep.fresh_samples == 2 * trials);
  CHECK(rep.fresh_point_mass_at_t);
  CHECK(rep.sanitized_point_mass_at_t);
  // Success rate tracks the decodable density 529/1024.
  double rate = double(rep.sanitized_samples) / double(rep.sanitize_attempts);
  CHECK(rate > 529.0 / 1024 - 0.1);
  CHECK(rate < 529.0 / 1024 + 0.1);
  CHECK(rep.max_fresh_z < 6.0);
  CHECK(rep.max_sanitized_z < 6.0);
}
