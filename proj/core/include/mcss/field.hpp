#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mcss/errors.hpp"
#include "mcss/random.hpp"

namespace mcss {

/// Element of GF(2^m), coefficient i of the representing binary polynomial at
/// bit i. Valid values are < 2^m.
using Fe = uint16_t;

struct FieldParams {
  unsigned m;          // extension degree, 3..16
  uint32_t reduction;  // degree-m irreducible binary polynomial, (m+1) bits
};

/// Reduction polynomial registry for m = 3..16. Fixed so two implementations
/// of this artifact agree element-for-element; m=12 is z^12+z^3+1, the
/// Classic-McEliece-348864 field. Every entry is re-verified irreducible by
/// trial division the first time a Field is built for it.
FieldParams field_params_registry(unsigned m);

/// Irreducibility of a binary polynomial given as a bitmask, by trial
/// division against all binary polynomials of degree <= deg/2.
bool binary_poly_irreducible(uint32_t poly);

class Field;

/// Polynomial over GF(2^m), lowest-degree coefficient first, normalized so
/// the trailing coefficient is nonzero. The zero polynomial has an empty
/// coefficient vector; its degree is the sentinel kZeroDeg (standing in for
/// minus infinity, and comparing below every true degree).
struct Poly {
  static constexpr int kZeroDeg = -1;

  std::vector<Fe> c;

  Poly() = default;
  explicit Poly(std::vector<Fe> coeffs) : c(std::move(coeffs)) { normalize(); }

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Fe coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
  Fe lead() const { return c.back(); }

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  static Poly x() { return Poly({0, 1}); }
  static Poly one() { return Poly({1}); }

  friend bool operator==(const Poly&, const Poly&) = default;
};

/// GF(2^m) arithmetic context: log/antilog tables over a generator, built
/// once per extension degree. Immutable after construction.
class Field {
 public:
  explicit Field(const FieldParams& fp);
  static const Field& get(unsigned m);  // registry-backed, cached

  const FieldParams& params() const { return fp_; }
  unsigned m() const { return fp_.m; }
  uint32_t order() const { return order_; }  // 2^m

  Fe add(Fe a, Fe b) const { return a ^ b; }
  Fe mul(Fe a, Fe b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Fe inv(Fe a) const {
    if (a == 0) throw ZeroInverse();
    return exp_[order_ - 1 - log_[a]];
  }
  /// a^(2^(m-1)); squaring is a bijection in characteristic 2.
  Fe sqrt(Fe a) const;
  Fe pow(Fe a, uint64_t e) const;

  // --- polynomial ring GF(2^m)[x] ---
  Poly poly_add(const Poly& a, const Poly& b) const;
  Poly poly_mul(const Poly& a, const Poly& b) const;
  std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) const;
  Poly poly_mod(const Poly& a, const Poly& b) const;
  Poly poly_gcd(Poly a, Poly b) const;
  Fe poly_eval(const Poly& p, Fe x) const;
  Poly poly_scale(const Poly& p, Fe s) const;
  Poly poly_make_monic(const Poly& p) const;
  /// Square of p reduced mod g; exploits the linearity of squaring.
  Poly poly_sqr_mod(const Poly& p, const Poly& g) const;
  /// Inverse of a mod g, g irreducible, a nonzero mod g.
  Poly poly_inv_mod(const Poly& a, const Poly& g) const;

  /// Partial extended Euclid on (g, R): returns (a, b) with a = b·R (mod g),
  /// deg a <= stop_deg and deg b <= deg g - 1 - stop_deg, stopping at the
  /// first remainder of degree <= stop_deg.
  std::pair<Poly, Poly> poly_eea_partial(const Poly& g, const Poly& R,
                                         int stop_deg) const;

  /// Monic irreducibility test over GF(2^m).
  bool poly_irreducible(const Poly& g) const;

  /// Rejection-sampled monic irreducible polynomial of degree t.
  Poly random_irreducible(unsigned t, RandomSource& rng) const;

  /// R with R^2 = T (mod g): split T into even/odd parts and use the
  /// supplied sqrt_x = sqrt of x mod g (precomputed per code).
  Poly sqrt_mod_g(const Poly& T, const Poly& g, const Poly& sqrt_x) const;

  /// x^(2^(m·t - 1)) mod g for deg g = t: the square root of x in
  /// GF(2^m)[x]/(g).
  Poly compute_sqrt_x(const Poly& g) const;

 private:
  FieldParams fp_;
  uint32_t order_;
  std::vector<uint16_t> log_;
  std::vector<Fe> exp_;  // doubled table so mul needs no modular reduction
};

}  // namespace mcss
