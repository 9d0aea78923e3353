#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "mcss/params.hpp"
#include "mcss/random.hpp"

namespace mcss {

/// Exact rational with arbitrary-precision integers, reduced to lowest
/// terms on construction; denominator > 0.
class ExactRatio {
 public:
  using Int = boost::multiprecision::cpp_int;

  ExactRatio(Int num, Int den);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  /// Decimal expansion truncated to `digits` fractional digits.
  std::string to_decimal(unsigned digits) const;
  double to_double() const;

  ExactRatio operator+(const ExactRatio& o) const;
  friend bool operator==(const ExactRatio&, const ExactRatio&) = default;

 private:
  Int num_, den_;
};

ExactRatio::Int binomial(unsigned n, unsigned k);

/// 1 - C(n,t) / sum_{j<=t} C(n,j): the statistical distance between the
/// weight-exactly-t and weight-at-most-t randomizer distributions.
ExactRatio delta_exact(unsigned n, unsigned t);

/// C(n,t) / sum_{j<=t} C(n,j) = 1 - delta_exact(n,t).
ExactRatio weight_ratio(unsigned n, unsigned t);

/// sum_{j<=t} C(n,j) / 2^(n-k): the fraction of syndromes inside the
/// decoding radius, i.e. the trapdoor collision success probability on a
/// uniformly random target.
ExactRatio decodable_density(const CodeParams& params);

/// Empirical comparison of fresh-signer and sanitizer randomizer
/// distributions: weight histograms (both must be point masses at t) and
/// per-position one-bit frequencies with z-scores against t/n.
struct TransparencyReport {
  std::size_t fresh_samples = 0;
  std::size_t sanitized_samples = 0;
  std::size_t sanitize_attempts = 0;
  bool fresh_point_mass_at_t = false;
  bool sanitized_point_mass_at_t = false;
  std::vector<std::size_t> fresh_position_counts;
  std::vector<std::size_t> sanitized_position_counts;
  double max_fresh_z = 0.0;
  double max_sanitized_z = 0.0;
};

/// Runs `trials` sign-then-sanitize rounds on L-block messages. With
/// `identity_oracle` the collision instances are constructed decodable;
/// otherwise only the nano set succeeds at useful volume.
TransparencyReport transparency_trial(const CodeParams& params, std::size_t L,
                                      std::size_t trials, RandomSource& rng,
                                      bool identity_oracle);

}  // namespace mcss
