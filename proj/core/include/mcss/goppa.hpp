#pragma once

#include <optional>
#include <vector>

#include "mcss/bitmat.hpp"
#include "mcss/field.hpp"
#include "mcss/params.hpp"

namespace mcss {

/// Secret binary irreducible Goppa code: the decoding trapdoor.
///
/// Hsec column j packs the t field entries L_j^i / g(L_j), i = 0..t-1, each
/// expanded to m bits with coefficient bit b of entry i at row i·m + b.
struct GoppaCode {
  CodeParams params;
  FieldParams field;
  Poly g;                   // monic irreducible, degree t
  std::vector<Fe> support;  // n distinct elements, g(L_j) != 0
  BitMatrix Hsec;           // (n-k) x n
  Poly sqrt_x;              // sqrt of x mod g, precomputed

  const Field& fld() const { return Field::get(field.m); }
};

/// Generates a code whose Hsec has full rank n-k (regenerates g/support on
/// the rare rank defect). Support is a uniformly shuffled size-n subset of
/// GF(2^m).
GoppaCode generate_code(const CodeParams& params, RandomSource& rng);

/// e·Hsec^T, length n-k.
BitVec syndrome_of(const GoppaCode& code, const BitVec& e);

/// Regroups the m·t syndrome bits into t GF(2^m) coefficients, inverting the
/// bit expansion used to build Hsec. Coefficient i of the result is
/// sum_j e_j L_j^i / g(L_j) for the error e behind the syndrome.
Poly syndrome_to_poly(const GoppaCode& code, const BitVec& s);

/// Patterson decoding: recovers the unique error vector of weight <= t from
/// its syndrome, or nullopt when the syndrome lies outside the decoding
/// radius. The decoder verifies its own output (root count = degree of the
/// locator, weight bound, re-encoded syndrome) and reports any internal
/// inconsistency as nullopt.
std::optional<BitVec> patterson_decode(const GoppaCode& code, const BitVec& s);

}  // namespace mcss
