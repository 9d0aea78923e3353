#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcss/field.hpp"
#include "test_util.hpp"

using namespace mcss;

namespace {

// Independent shift-and-reduce oracle for field multiplication.
Fe oracle_mul(uint32_t a, uint32_t b, uint32_t reduction, unsigned m) {
  uint64_t prod = 0;
  for (unsigned i = 0; i < m; ++i)
    if (b >> i & 1) prod ^= uint64_t{a} << i;
  for (int i = 63; i >= static_cast<int>(m); --i)
    if (prod >> i & 1) prod ^= uint64_t{reduction} << (i - m);
  return static_cast<Fe>(prod);
}

}  // namespace

TEST_CASE("registry reduction polynomials are irreducible of degree m") {
  for (unsigned m = 3; m <= 16; ++m) {
    FieldParams fp = field_params_registry(m);
    CAPTURE(m);
    CHECK((fp.reduction >> m) == 1u);
    CHECK(binary_poly_irreducible(fp.reduction));
  }
}

TEST_CASE("field_mul basics in GF(2^3), x^3+x+1") {
  const Field& F = Field::get(3);
  CHECK(F.mul(0, 2) == 0);
  CHECK(F.mul(1, 2) == 2);
  CHECK(F.mul(3, 5) == 4);  // matches the brute-force oracle below
  CHECK(oracle_mul(3, 5, 0xB, 3) == 4);
}

TEST_CASE("field_mul matches the shift-reduce oracle") {
  for (unsigned m : {3u, 5u, 8u}) {
    const Field& F = Field::get(m);
    uint32_t order = F.order();
    for (uint32_t a = 0; a < order; ++a)
      for (uint32_t b = a; b < order; ++b) {
        Fe expect = oracle_mul(a, b, F.params().reduction, m);
        REQUIRE(F.mul(static_cast<Fe>(a), static_cast<Fe>(b)) == expect);
        REQUIRE(F.mul(static_cast<Fe>(b), static_cast<Fe>(a)) == expect);
      }
  }
}

TEST_CASE("field_inv") {
  const Field& F3 = Field::get(3);
  CHECK(F3.inv(1) == 1);
  CHECK(F3.inv(2) == 5);  // exhaustive: 2*5 = 1 in GF(2^3)
  CHECK_THROWS_AS(F3.inv(0), ZeroInverse);

  // a * a^{-1} = 1, exhaustive for m <= 8, randomized above.
  for (unsigned m : {3u, 5u, 8u}) {
    const Field& F = Field::get(m);
    for (uint32_t a = 1; a < F.order(); ++a)
      REQUIRE(F.mul(static_cast<Fe>(a), F.inv(static_cast<Fe>(a))) == 1);
  }
  auto rng = make_rng(7);
  for (unsigned m : {10u, 12u, 16u}) {
    const Field& F = Field::get(m);
    for (int i = 0; i < 2000; ++i) {
      Fe a = static_cast<Fe>(1 + rng.uniform(F.order() - 1));
      REQUIRE(F.mul(a, F.inv(a)) == 1);
    }
  }
}

TEST_CASE("field_sqrt") {
  const Field& F3 = Field::get(3);
  CHECK(F3.sqrt(0) == 0);
  CHECK(F3.sqrt(1) == 1);
  CHECK(F3.sqrt(2) == 6);
  CHECK(F3.mul(6, 6) == 2);

  // sqrt(a*a) = a for all a: squaring is a bijection.
  for (unsigned m : {3u, 5u, 8u, 12u}) {
    const Field& F = Field::get(m);
    for (uint32_t a = 0; a < F.order(); ++a) {
      Fe fa = static_cast<Fe>(a);
      REQUIRE(F.sqrt(F.mul(fa, fa)) == fa);
      REQUIRE(F.mul(F.sqrt(fa), F.sqrt(fa)) == fa);
    }
  }
}

namespace {

Poly random_poly(const Field& F, int max_deg, RandomSource& rng) {
  std::vector<Fe> c(rng.uniform(max_deg + 2));
  for (auto& x : c) x = static_cast<Fe>(rng.uniform(F.order()));
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("poly_divmod") {
  const Field& F = Field::get(3);
  auto rng = make_rng(11);

  Poly a = random_poly(F, 4, rng);
  CHECK(F.poly_divmod(a, Poly::one()) == std::make_pair(a, Poly()));

  Poly b = random_poly(F, 4, rng);
  while (b.is_zero()) b = random_poly(F, 4, rng);
  CHECK(F.poly_divmod(b, b) ==
        std::make_pair(F.poly_scale(Poly::one(), 1), Poly()));

  CHECK_THROWS_AS(F.poly_divmod(a, Poly()), DivisionByZeroPoly);

  // Recomposition oracle: a = q*b + r, deg r < deg b.
  for (int i = 0; i < 500; ++i) {
    Poly x = random_poly(F, 4, rng);
    Poly y = random_poly(F, 4, rng);
    if (y.is_zero()) continue;
    auto [q, r] = F.poly_divmod(x, y);
    REQUIRE(r.deg() < y.deg());
    REQUIRE(F.poly_add(F.poly_mul(q, y), r) == x);
  }
}

TEST_CASE("poly_eea_partial") {
  const Field& F = Field::get(5);
  auto rng = make_rng(13);

  Poly g({3, 7, 1});  // monic degree 2

  // Degenerate conventions.
  CHECK(F.poly_eea_partial(g, Poly(), 0) == std::make_pair(Poly(), Poly::one()));
  Poly small({9});
  CHECK(F.poly_eea_partial(g, small, 1) == std::make_pair(small, Poly::one()));

  // a = b*R (mod g) with both degree bounds, by recomposition.
  for (int trial = 0; trial < 500; ++trial) {
    Poly gg = F.poly_make_monic(random_poly(F, 3, rng));
    if (gg.deg() < 1) continue;
    Poly R = F.poly_mod(random_poly(F, 4, rng), gg);
    int stop = static_cast<int>(rng.uniform(gg.deg()));
    auto [a, b] = F.poly_eea_partial(gg, R, stop);
    REQUIRE(a.deg() <= stop);
    REQUIRE(b.deg() <= gg.deg() - 1 - stop);
    REQUIRE(F.poly_mod(F.poly_add(a, F.poly_mul(b, R)), gg).is_zero());
  }
}

TEST_CASE("random_irreducible") {
  auto rng = make_rng(17);

  const Field& F5 = Field::get(5);
  Poly lin = F5.random_irreducible(1, rng);
  CHECK(lin.deg() == 1);
  CHECK(lin.lead() == 1);

  // t=2 over GF(2^5): no roots in the field (exhaustive; sufficient for
  // degree 2).
  for (int i = 0; i < 20; ++i) {
    Poly g = F5.random_irreducible(2, rng);
    REQUIRE(g.deg() == 2);
    for (uint32_t a = 0; a < F5.order(); ++a)
      REQUIRE(F5.poly_eval(g, static_cast<Fe>(a)) != 0);
  }

  // t=16 over GF(2^8): passes an independently coded Frobenius/gcd test.
  const Field& F8 = Field::get(8);
  Poly g = F8.random_irreducible(16, rng);
  REQUIRE(g.deg() == 16);
  Poly u = Poly::x();
  for (int i = 1; i <= 16; ++i) {
    for (int s = 0; s < 8; ++s) u = F8.poly_mod(F8.poly_mul(u, u), g);
    if (i <= 8) REQUIRE(F8.poly_gcd(g, F8.poly_add(u, Poly::x())).deg() == 0);
  }
  REQUIRE(u == F8.poly_mod(Poly::x(), g));
}

TEST_CASE("sqrt_mod_g") {
  const Field& F = Field::get(5);
  auto rng = make_rng(19);
  Poly g = F.random_irreducible(2, rng);
  Poly sqrt_x = F.compute_sqrt_x(g);

  CHECK(F.sqrt_mod_g(Poly(), g, sqrt_x).is_zero());
  CHECK(F.sqrt_mod_g(Poly::one(), g, sqrt_x) == Poly::one());

  for (int i = 0; i < 500; ++i) {
    Poly T = F.poly_mod(random_poly(F, 3, rng), g);
    Poly R = F.sqrt_mod_g(T, g, sqrt_x);
    REQUIRE(F.poly_sqr_mod(R, g) == T);
  }
}
