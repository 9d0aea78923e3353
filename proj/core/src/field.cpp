#include "mcss/field.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>

namespace mcss {

namespace {

// Low-weight irreducible reduction polynomials, m = 3..16. m=12 is
// z^12+z^3+1, the Classic-McEliece-348864 field.
constexpr std::array<uint32_t, 17> kReduction = {
    0,       0,      0,      0xB,    0x13,   0x25,    0x43,   0x83,  0x11D,
    0x221,   0x409,  0x805,  0x1009, 0x201B, 0x4443,  0x8003, 0x1100B,
};

unsigned bp_deg(uint32_t p) {
  unsigned d = 0;
  while (p >> (d + 1)) ++d;
  return d;
}

uint32_t bp_mod(uint64_t a, uint32_t b) {
  unsigned db = bp_deg(b);
  for (int i = 63 - static_cast<int>(db); i >= 0; --i)
    if (a >> (i + db) & 1) a ^= uint64_t{b} << i;
  return static_cast<uint32_t>(a);
}

uint64_t bp_mul(uint32_t a, uint32_t b) {
  uint64_t r = 0;
  for (unsigned i = 0; b >> i; ++i)
    if (b >> i & 1) r ^= uint64_t{a} << i;
  return r;
}

// Shift-reduce product, used only while building the tables.
Fe slow_mul(uint32_t a, uint32_t b, uint32_t reduction) {
  return static_cast<Fe>(bp_mod(bp_mul(a, b), reduction));
}

}  // namespace

bool binary_poly_irreducible(uint32_t poly) {
  unsigned d = bp_deg(poly);
  if (d == 0) return false;
  for (uint32_t div = 2; bp_deg(div) <= d / 2; ++div)
    if (bp_mod(poly, div) == 0) return false;
  return true;
}

FieldParams field_params_registry(unsigned m) {
  if (m < 3 || m > 16) throw InvalidInput("field degree out of range 3..16");
  return {m, kReduction[m]};
}

Field::Field(const FieldParams& fp) : fp_(fp), order_(uint32_t{1} << fp.m) {
  if (bp_deg(fp.reduction) != fp.m || !binary_poly_irreducible(fp.reduction))
    throw InvalidInput("reduction polynomial not irreducible of degree m");

  // Log/antilog tables over a multiplicative generator. x itself need not
  // generate (the reduction need not be primitive), so search for one.
  const uint32_t group = order_ - 1;
  log_.assign(order_, 0);
  exp_.assign(2 * group, 0);
  for (uint32_t cand = 2; cand < order_; ++cand) {
    uint32_t v = 1;
    uint32_t len = 0;
    bool ok = true;
    std::vector<uint16_t> log(order_, 0);
    do {
      exp_[len] = static_cast<Fe>(v);
      log[v] = static_cast<uint16_t>(len);
      v = slow_mul(v, cand, fp.reduction);
      ++len;
      if (len > group) {
        ok = false;
        break;
      }
    } while (v != 1);
    if (ok && len == group) {
      log_ = std::move(log);
      for (uint32_t i = 0; i < group; ++i) exp_[group + i] = exp_[i];
      return;
    }
  }
  throw Error("no generator found");  // unreachable for a true field
}

const Field& Field::get(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<Field>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(m);
  if (it == cache.end())
    it = cache.emplace(m, std::make_unique<Field>(field_params_registry(m)))
             .first;
  return *it->second;
}

Fe Field::sqrt(Fe a) const {
  if (a == 0) return 0;
  uint32_t group = order_ - 1;
  uint64_t e = (uint64_t{log_[a]} << (fp_.m - 1)) % group;
  return exp_[e];
}

Fe Field::pow(Fe a, uint64_t e) const {
  if (a == 0) return e == 0 ? Fe{1} : Fe{0};
  uint32_t group = order_ - 1;
  return exp_[(uint64_t{log_[a]} * (e % group)) % group];
}

Poly Field::poly_add(const Poly& a, const Poly& b) const {
  std::vector<Fe> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] ^= b.c[i];
  return Poly(std::move(c));
}

Poly Field::poly_mul(const Poly& a, const Poly& b) const {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Fe> c(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      c[i + j] ^= mul(a.c[i], b.c[j]);
  }
  return Poly(std::move(c));
}

std::pair<Poly, Poly> Field::poly_divmod(const Poly& a, const Poly& b) const {
  if (b.is_zero()) throw DivisionByZeroPoly();
  if (a.deg() < b.deg()) return {Poly(), a};
  std::vector<Fe> rem = a.c;
  std::vector<Fe> quot(a.c.size() - b.c.size() + 1, 0);
  Fe lead_inv = inv(b.lead());
  for (int i = a.deg(); i >= b.deg(); --i) {
    Fe coef = rem[i];
    if (coef == 0) continue;
    Fe q = mul(coef, lead_inv);
    quot[i - b.deg()] = q;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      rem[i - b.deg() + j] ^= mul(q, b.c[j]);
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Field::poly_mod(const Poly& a, const Poly& b) const {
  return poly_divmod(a, b).second;
}

Poly Field::poly_gcd(Poly a, Poly b) const {
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Fe Field::poly_eval(const Poly& p, Fe x) const {
  Fe acc = 0;
  for (std::size_t i = p.c.size(); i-- > 0;) acc = add(mul(acc, x), p.c[i]);
  return acc;
}

Poly Field::poly_scale(const Poly& p, Fe s) const {
  std::vector<Fe> c(p.c.size());
  for (std::size_t i = 0; i < p.c.size(); ++i) c[i] = mul(p.c[i], s);
  return Poly(std::move(c));
}

Poly Field::poly_make_monic(const Poly& p) const {
  if (p.is_zero() || p.lead() == 1) return p;
  return poly_scale(p, inv(p.lead()));
}

Poly Field::poly_sqr_mod(const Poly& p, const Poly& g) const {
  if (p.is_zero()) return Poly();
  // Squaring is linear in characteristic 2: coefficients square and spread.
  std::vector<Fe> c(2 * p.c.size() - 1, 0);
  for (std::size_t i = 0; i < p.c.size(); ++i)
    c[2 * i] = mul(p.c[i], p.c[i]);
  return poly_mod(Poly(std::move(c)), g);
}

Poly Field::poly_inv_mod(const Poly& a, const Poly& g) const {
  Poly r0 = g, r1 = poly_mod(a, g);
  if (r1.is_zero()) throw ZeroInverse();
  Poly s0, s1 = Poly::one();
  while (!r1.is_zero()) {
    auto [q, r2] = poly_divmod(r0, r1);
    Poly s2 = poly_add(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.deg() != 0) throw Error("poly_inv_mod: inputs not coprime");
  return poly_scale(s0, inv(r0.c[0]));
}

std::pair<Poly, Poly> Field::poly_eea_partial(const Poly& g, const Poly& R,
                                              int stop_deg) const {
  // Invariant: r_i = a_i·g + b_i·R, so r_i = b_i·R (mod g).
  Poly r0 = g, r1 = R;
  Poly b0, b1 = Poly::one();
  while (r1.deg() > stop_deg) {
    auto [q, r2] = poly_divmod(r0, r1);
    Poly b2 = poly_add(b0, poly_mul(q, b1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    b0 = std::move(b1);
    b1 = std::move(b2);
  }
  return {r1, b1};
}

bool Field::poly_irreducible(const Poly& g) const {
  int t = g.deg();
  if (t < 1) return false;
  // u <- x^(2^(m·i)) mod g via repeated Frobenius; g is irreducible iff
  // x^(2^(m·t)) = x (mod g) and gcd(x^(2^(m·i)) - x, g) = 1 for i <= t/2.
  Poly u = poly_mod(Poly::x(), g);
  const Poly x = poly_mod(Poly::x(), g);
  for (int i = 1; i <= t; ++i) {
    for (unsigned s = 0; s < fp_.m; ++s) u = poly_sqr_mod(u, g);
    if (i <= t / 2) {
      Poly d = poly_gcd(g, poly_add(u, x));
      if (d.deg() != 0) return false;
    }
  }
  return u == x;
}

Poly Field::random_irreducible(unsigned t, RandomSource& rng) const {
  for (;;) {
    std::vector<Fe> c(t + 1);
    for (unsigned i = 0; i < t; ++i)
      c[i] = static_cast<Fe>(rng.uniform(order_));
    c[t] = 1;
    Poly g(std::move(c));
    if (t == 1 || poly_irreducible(g)) return g;
  }
}

Poly Field::sqrt_mod_g(const Poly& T, const Poly& g, const Poly& sqrt_x) const {
  // T = A(x)^2 + x·B(x)^2 where A, B collect the square roots of the even
  // and odd coefficients; then sqrt(T) = A + sqrt_x·B.
  std::vector<Fe> a, b;
  for (std::size_t i = 0; i < T.c.size(); ++i) {
    Fe root = sqrt(T.c[i]);
    if (i % 2 == 0)
      a.push_back(root);
    else
      b.push_back(root);
  }
  Poly A(std::move(a)), B(std::move(b));
  return poly_mod(poly_add(A, poly_mul(sqrt_x, B)), g);
}

Poly Field::compute_sqrt_x(const Poly& g) const {
  // x^(2^(m·t - 1)) mod g, by m·t - 1 squarings.
  Poly u = poly_mod(Poly::x(), g);
  std::size_t steps = static_cast<std::size_t>(fp_.m) * g.deg() - 1;
  for (std::size_t i = 0; i < steps; ++i) u = poly_sqr_mod(u, g);
  return u;
}

}  // namespace mcss
