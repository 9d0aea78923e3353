#include "mcss/goppa.hpp"

#include <algorithm>
#include <numeric>

namespace mcss {

namespace {

BitMatrix build_parity_check(const Field& F, const Poly& g,
                             const std::vector<Fe>& support, unsigned t) {
  // H column j packs L_j^i / g(L_j) for i = 0..t-1, coefficient bit b of
  // entry i at row i·m + b.
  const unsigned m = F.m();
  BitMatrix H(static_cast<std::size_t>(m) * t, support.size());
  for (std::size_t j = 0; j < support.size(); ++j) {
    Fe L = support[j];
    Fe entry = F.inv(F.poly_eval(g, L));
    for (unsigned i = 0; i < t; ++i) {
      for (unsigned b = 0; b < m; ++b)
        if (entry >> b & 1) H.set(static_cast<std::size_t>(i) * m + b, j, true);
      entry = F.mul(entry, L);
    }
  }
  return H;
}

/// Converts the packed power-sum syndrome coefficients s̃ into the Goppa
/// syndrome polynomial S(x) = sum_j e_j/(x - L_j) mod g that Patterson
/// expects. The two are related by the invertible triangular map
/// S_i = sum_b g_{i+1+b}·s̃_b derived from
/// (g(x) - g(L))/(x - L) = sum_i x^i · sum_b g_{i+1+b} L^b.
Poly to_goppa_syndrome(const Field& F, const Poly& g, const Poly& packed) {
  const unsigned t = static_cast<unsigned>(g.deg());
  std::vector<Fe> s(t, 0);
  for (unsigned i = 0; i < t; ++i) {
    Fe acc = 0;
    for (unsigned b = 0; b + i + 1 <= t; ++b)
      acc ^= F.mul(g.coeff(i + 1 + b), packed.coeff(b));
    s[i] = acc;
  }
  return Poly(std::move(s));
}

}  // namespace

GoppaCode generate_code(const CodeParams& params, RandomSource& rng) {
  if (params.n > (std::size_t{1} << params.m) || params.k != params.n - params.m * params.t)
    throw InvalidInput("inconsistent code parameters");
  const Field& F = Field::get(params.m);

  for (;;) {
    Poly g = F.random_irreducible(params.t, rng);

    std::vector<Fe> all(F.order());
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t i = all.size(); i > 1; --i)
      std::swap(all[i - 1], all[rng.uniform(i)]);

    std::vector<Fe> support;
    support.reserve(params.n);
    for (Fe L : all) {
      if (support.size() == params.n) break;
      if (F.poly_eval(g, L) != 0) support.push_back(L);
    }
    if (support.size() < params.n) continue;  // only possible at t = 1

    BitMatrix Hsec = build_parity_check(F, g, support, params.t);
    if (mat_rank(Hsec) != params.parity_bits()) continue;  // rare defect

    Poly sqrt_x = F.compute_sqrt_x(g);
    return GoppaCode{params, F.params(), std::move(g), std::move(support),
                     std::move(Hsec), std::move(sqrt_x)};
  }
}

BitVec syndrome_of(const GoppaCode& code, const BitVec& e) {
  if (e.size() != code.params.n)
    throw DimensionMismatch("syndrome_of: error vector length");
  return vec_mat_transpose_mul(e, code.Hsec);
}

Poly syndrome_to_poly(const GoppaCode& code, const BitVec& s) {
  if (s.size() != code.params.parity_bits())
    throw DimensionMismatch("syndrome_to_poly: syndrome length");
  const unsigned m = code.field.m;
  std::vector<Fe> c(code.params.t, 0);
  for (unsigned i = 0; i < code.params.t; ++i) {
    Fe v = 0;
    for (unsigned b = 0; b < m; ++b)
      if (s.get(static_cast<std::size_t>(i) * m + b)) v |= Fe{1} << b;
    c[i] = v;
  }
  return Poly(std::move(c));
}

std::optional<BitVec> patterson_decode(const GoppaCode& code, const BitVec& s) {
  if (s.size() != code.params.parity_bits())
    throw DimensionMismatch("patterson_decode: syndrome length");
  const std::size_t n = code.params.n;
  const unsigned t = code.params.t;
  if (s.is_zero()) return BitVec(n);

  const Field& F = code.fld();
  Poly S = to_goppa_syndrome(F, code.g, syndrome_to_poly(code, s));
  if (S.is_zero()) return std::nullopt;

  Poly T = F.poly_inv_mod(S, code.g);

  Poly sigma;
  if (T == Poly::x()) {
    // sqrt of the zero polynomial degenerates; the locator is x itself
    // (single error at the support position holding the field element 0).
    sigma = Poly::x();
  } else {
    Poly R = F.sqrt_mod_g(F.poly_add(T, Poly::x()), code.g, code.sqrt_x);
    auto [a, b] = F.poly_eea_partial(code.g, R, static_cast<int>(t) / 2);
    // sigma = a^2 + x·b^2
    Poly a2 = F.poly_mul(a, a);
    Poly b2 = F.poly_mul(b, b);
    sigma = F.poly_add(a2, F.poly_mul(Poly::x(), b2));
  }
  if (sigma.is_zero()) return std::nullopt;

  BitVec e(n);
  std::size_t roots = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (F.poly_eval(sigma, code.support[j]) == 0) {
      e.set(j, true);
      ++roots;
    }
  }

  // Accept only a fully consistent decode.
  if (roots != static_cast<std::size_t>(sigma.deg())) return std::nullopt;
  if (e.weight() > t) return std::nullopt;
  if (syndrome_of(code, e) != s) return std::nullopt;
  return e;
}

}  // namespace mcss
