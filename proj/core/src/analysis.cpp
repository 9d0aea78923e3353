#include "mcss/analysis.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "mcss/errors.hpp"
#include "mcss/scheme.hpp"

namespace mcss {

using Int = ExactRatio::Int;

ExactRatio::ExactRatio(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ <= 0) throw InvalidInput("denominator must be positive");
  Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string ExactRatio::to_decimal(unsigned digits) const {
  Int whole = num_ / den_;
  Int rem = num_ % den_;
  if (rem < 0) rem = -rem;
  std::string s = whole.str();
  s += '.';
  for (unsigned i = 0; i < digits; ++i) {
    rem *= 10;
    s += static_cast<char>('0' + static_cast<int>(rem / den_));
    rem %= den_;
  }
  return s;
}

double ExactRatio::to_double() const { return std::stod(to_decimal(18)); }

ExactRatio ExactRatio::operator+(const ExactRatio& o) const {
  return ExactRatio(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

namespace {
Int ball_size(unsigned n, unsigned t) {
  Int sum = 0;
  for (unsigned j = 0; j <= t; ++j) sum += binomial(n, j);
  return sum;
}
}  // namespace

ExactRatio delta_exact(unsigned n, unsigned t) {
  if (t > n) throw InvalidInput("t > n");
  Int ball = ball_size(n, t);
  return ExactRatio(ball - binomial(n, t), ball);
}

ExactRatio weight_ratio(unsigned n, unsigned t) {
  if (t > n) throw InvalidInput("t > n");
  return ExactRatio(binomial(n, t), ball_size(n, t));
}

ExactRatio decodable_density(const CodeParams& params) {
  Int den = Int(1) << (params.n - params.k);
  return ExactRatio(ball_size(static_cast<unsigned>(params.n), params.t), den);
}

TransparencyReport transparency_trial(const CodeParams& params, std::size_t L,
                                      std::size_t trials, RandomSource& rng,
                                      bool identity_oracle) {
  const std::size_t n = params.n;
  SimulatedDilithium2 outer;
  std::unique_ptr<DigestOracle> oracle;
  if (identity_oracle)
    oracle = std::make_unique<IdentityOracle>();
  else
    oracle = std::make_unique<Shake256Oracle>(params.id);

  SchemeKeys keys = keygen(params, outer, rng);

  TransparencyReport rep;
  rep.fresh_position_counts.assign(n, 0);
  rep.sanitized_position_counts.assign(n, 0);
  rep.fresh_point_mass_at_t = true;
  rep.sanitized_point_mass_at_t = true;

  AdmMask adm;
  adm.bits.assign(L, true);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    BlockMessage M;
    for (std::size_t i = 0; i < L; ++i)
      M.blocks.push_back(random_bitvec(params.k, rng));
    SanitizableSignature sig =
        sign(keys.signer_sk, keys.pk, outer, *oracle, M, adm, rng);
    for (const auto& r : sig.randomizers) {
      ++rep.fresh_samples;
      if (r.r.weight() != params.t) rep.fresh_point_mass_at_t = false;
      for (std::size_t b = 0; b < n; ++b)
        if (r.r.get(b)) ++rep.fresh_position_counts[b];
    }

    BlockMessage M_new = M;
    if (identity_oracle) {
      ChainResult chain = chain_digest(keys.pk, *oracle, M, adm, sig.randomizers);
      M_new.blocks[0] =
          constructive_block_rewrite(chain, M, sig, 0, params, rng);
    } else {
      M_new.blocks[0] = random_bitvec(params.k, rng);
    }
    ++rep.sanitize_attempts;
    try {
      SanitizableSignature sig2 =
          sanitize(keys.san_key, keys.pk, outer, *oracle, M, sig, M_new);
      for (std::size_t i = 0; i < L; ++i) {
        if (sig2.randomizers[i].r == sig.randomizers[i].r) continue;
        ++rep.sanitized_samples;
        if (sig2.randomizers[i].r.weight() != params.t)
          rep.sanitized_point_mass_at_t = false;
        for (std::size_t b = 0; b < n; ++b)
          if (sig2.randomizers[i].r.get(b)) ++rep.sanitized_position_counts[b];
      }
    } catch (const NotDecodable&) {
    } catch (const WeightMismatch&) {
    }
  }

  auto max_z = [&](const std::vector<std::size_t>& counts, std::size_t samples) {
    if (samples == 0) return 0.0;
    double p = static_cast<double>(params.t) / static_cast<double>(n);
    double sd = std::sqrt(static_cast<double>(samples) * p * (1 - p));
    double worst = 0.0;
    for (std::size_t b = 0; b < n; ++b) {
      double z = (static_cast<double>(counts[b]) -
                  static_cast<double>(samples) * p) /
                 (sd > 0 ? sd : 1.0);
      worst = std::max(worst, std::abs(z));
    }
    return worst;
  };
  rep.max_fresh_z = max_z(rep.fresh_position_counts, rep.fresh_samples);
  rep.max_sanitized_z =
      max_z(rep.sanitized_position_counts, rep.sanitized_samples);
  return rep;
}

}  // namespace mcss
