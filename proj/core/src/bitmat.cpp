#include "mcss/bitmat.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace mcss {

std::size_t BitVec::weight() const {
  std::size_t w = 0;
  for (uint64_t word : w_) w += std::popcount(word);
  return w;
}

std::vector<uint8_t> BitVec::to_bytes() const {
  std::vector<uint8_t> out((len_ + 7) / 8);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<uint8_t>(w_[i / 8] >> (8 * (i % 8)));
  return out;
}

BitVec BitVec::from_bytes(std::span<const uint8_t> bytes, std::size_t length) {
  if (bytes.size() < (length + 7) / 8)
    throw DimensionMismatch("byte buffer shorter than bit length");
  BitVec v(length);
  for (std::size_t i = 0; i < (length + 7) / 8; ++i)
    v.w_[i / 8] |= uint64_t{bytes[i]} << (8 * (i % 8));
  // Clear padding past the length so equality stays well defined.
  if (length % 64)
    v.w_.back() &= (uint64_t{1} << (length % 64)) - 1;
  return v;
}

void BitMatrix::row_swap(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(w_.begin() + a * wpr_, w_.begin() + (a + 1) * wpr_,
                   w_.begin() + b * wpr_);
}

BitMatrix BitMatrix::identity(std::size_t dim) {
  BitMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, true);
  return m;
}

BitVec BitMatrix::row_as_vec(std::size_t r) const {
  BitVec v(cols_);
  auto src = row(r);
  std::copy(src.begin(), src.end(), v.words().begin());
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVec& v) {
  if (v.size() != cols_) throw DimensionMismatch("set_row length");
  auto dst = row(r);
  std::copy(v.words().begin(), v.words().end(), dst.begin());
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.map.resize(map.size());
  for (std::size_t j = 0; j < map.size(); ++j) inv.map[map[j]] = j;
  return inv;
}

bool Permutation::is_bijection() const {
  std::vector<bool> seen(map.size(), false);
  for (uint32_t v : map) {
    if (v >= map.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

BitMatrix Permutation::to_matrix() const {
  // v·M = apply(v): M[i][j] = 1 iff apply picks input i for output j,
  // i.e. i = map[j].
  BitMatrix m(map.size(), map.size());
  for (std::size_t j = 0; j < map.size(); ++j) m.set(map[j], j, true);
  return m;
}

BitVec vec_mat_transpose_mul(const BitVec& v, const BitMatrix& M) {
  if (v.size() != M.cols())
    throw DimensionMismatch("vec_mat_transpose_mul: length != cols");
  BitVec w(M.rows());
  auto vw = v.words();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    auto rw = M.row(i);
    uint64_t acc = 0;
    for (std::size_t j = 0; j < rw.size(); ++j) acc ^= rw[j] & vw[j];
    w.set(i, std::popcount(acc) & 1);
  }
  return w;
}

BitMatrix mat_mul(const BitMatrix& A, const BitMatrix& B) {
  if (A.cols() != B.rows()) throw DimensionMismatch("mat_mul: inner dims");
  BitMatrix R(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    auto arow = A.row(i);
    auto rrow = R.row(i);
    for (std::size_t jw = 0; jw < arow.size(); ++jw) {
      uint64_t word = arow[jw];
      while (word) {
        std::size_t j = jw * 64 + std::countr_zero(word);
        word &= word - 1;
        auto brow = B.row(j);
        for (std::size_t k = 0; k < rrow.size(); ++k) rrow[k] ^= brow[k];
      }
    }
  }
  return R;
}

BitMatrix mat_invert(const BitMatrix& A) {
  if (A.rows() != A.cols()) throw DimensionMismatch("mat_invert: not square");
  std::size_t n = A.rows();
  BitMatrix work = A;
  BitMatrix inv = BitMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !work.get(pivot, col)) ++pivot;
    if (pivot == n) throw Singular();
    work.row_swap(col, pivot);
    inv.row_swap(col, pivot);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && work.get(r, col)) {
        work.row_xor(r, col);
        inv.row_xor(r, col);
      }
    }
  }
  return inv;
}

std::size_t mat_rank(BitMatrix A) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < A.cols() && rank < A.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < A.rows() && !A.get(pivot, col)) ++pivot;
    if (pivot == A.rows()) continue;
    A.row_swap(rank, pivot);
    for (std::size_t r = pivot + 1; r < A.rows(); ++r)
      if (A.get(r, col)) A.row_xor(r, rank);
    ++rank;
  }
  return rank;
}

BitVec random_bitvec(std::size_t length, RandomSource& rng) {
  BitVec v(length);
  auto words = v.words();
  for (auto& w : words) w = rng.next_u64();
  if (length % 64) words.back() &= (uint64_t{1} << (length % 64)) - 1;
  return v;
}

BitMatrix random_invertible(std::size_t dim, RandomSource& rng) {
  if (dim == 0) throw InvalidInput("dimension must be >= 1");
  for (;;) {
    BitMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      m.set_row(i, random_bitvec(dim, rng));
    if (mat_rank(m) == dim) return m;
  }
}

Permutation random_permutation(std::size_t n, RandomSource& rng) {
  Permutation p;
  p.map.resize(n);
  std::iota(p.map.begin(), p.map.end(), 0u);
  for (std::size_t i = n; i > 1; --i)
    std::swap(p.map[i - 1], p.map[rng.uniform(i)]);
  return p;
}

BitVec apply_permutation(const BitVec& v, const Permutation& P) {
  if (v.size() != P.size())
    throw DimensionMismatch("apply_permutation: length mismatch");
  BitVec out(v.size());
  for (std::size_t j = 0; j < P.size(); ++j)
    if (v.get(P.map[j])) out.set(j, true);
  return out;
}

BitMatrix permute_columns(const BitMatrix& M, const Permutation& P) {
  if (M.cols() != P.size())
    throw DimensionMismatch("permute_columns: cols mismatch");
  BitMatrix out(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (M.get(i, P.map[j])) out.set(i, j, true);
  return out;
}

}  // namespace mcss
