#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcss/bitvec.hpp"
#include "mcss/random.hpp"

namespace mcss {

/// Row-major bit-packed matrix over GF(2), same bit order as BitVec.
/// Rows are padded to whole 64-bit words; padding bits stay zero.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t r, std::size_t c) const {
    return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    uint64_t mask = uint64_t{1} << (c & 63);
    if (v)
      w_[r * wpr_ + (c >> 6)] |= mask;
    else
      w_[r * wpr_ + (c >> 6)] &= ~mask;
  }

  std::span<const uint64_t> row(std::size_t r) const {
    return {w_.data() + r * wpr_, wpr_};
  }
  std::span<uint64_t> row(std::size_t r) { return {w_.data() + r * wpr_, wpr_}; }

  void row_xor(std::size_t dst, std::size_t src) {
    uint64_t* d = w_.data() + dst * wpr_;
    const uint64_t* s = w_.data() + src * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
  }
  void row_swap(std::size_t a, std::size_t b);

  static BitMatrix identity(std::size_t dim);

  BitVec row_as_vec(std::size_t r) const;
  void set_row(std::size_t r, const BitVec& v);

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<uint64_t> w_;
};

/// Permutation of [0, n), stored as an index map: position j of the output
/// takes input position map[j]. This is the one normative convention for
/// r' = f·P and for the column masking of H_pub throughout the project.
struct Permutation {
  std::vector<uint32_t> map;

  std::size_t size() const { return map.size(); }
  Permutation inverse() const;
  bool is_bijection() const;
  /// Dense 0/1 matrix M with v·M = apply(*this, v); for tests.
  BitMatrix to_matrix() const;
};

/// w = v·M^T: w[i] is the parity of AND(v, row i of M).
BitVec vec_mat_transpose_mul(const BitVec& v, const BitMatrix& M);

BitMatrix mat_mul(const BitMatrix& A, const BitMatrix& B);

/// Gauss-Jordan inverse over GF(2). Throws Singular when rank < dim.
BitMatrix mat_invert(const BitMatrix& A);

std::size_t mat_rank(BitMatrix A);

BitVec random_bitvec(std::size_t length, RandomSource& rng);

/// Rejection sampling with a rank check; ~3.46 expected attempts.
BitMatrix random_invertible(std::size_t dim, RandomSource& rng);

Permutation random_permutation(std::size_t n, RandomSource& rng);

BitVec apply_permutation(const BitVec& v, const Permutation& P);

/// Column j of the output is column P.map[j] of M (same convention as
/// apply_permutation, applied to every row).
BitMatrix permute_columns(const BitMatrix& M, const Permutation& P);

}  // namespace mcss
