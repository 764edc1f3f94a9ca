#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "kostka/qratfun.hpp"

namespace kostka {

struct SingularBlock : std::runtime_error {
  explicit SingularBlock(std::size_t block)
      : std::runtime_error("singular leading principal block " + std::to_string(block)),
        block_index(block) {}
  std::size_t block_index;
};

/// Dense matrix over the rational function field Q(q).
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  QRatFun& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const QRatFun& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix transposed() const;
  bool operator==(const RatMatrix& o) const;
  bool is_zero() const;

 private:
  std::size_t rows_, cols_;
  std::vector<QRatFun> entries_;
};

/// Index ranges [begin, end) partitioning 0..n in order.
struct BlockStructure {
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  static BlockStructure from_sizes(const std::vector<std::size_t>& sizes);
};

struct BlockLDU {
  RatMatrix L;  // block lower, identity diagonal blocks
  RatMatrix D;  // block diagonal
  RatMatrix U;  // block upper, identity diagonal blocks
};

/// Dense Gaussian inverse; returns false (leaving out unspecified) when the
/// matrix is singular.
bool try_invert(const RatMatrix& m, RatMatrix& out);

/// Unique block LDU factorization of a square matrix with the given ordered
/// block partition. Throws SingularBlock(k) when the k-th diagonal block of
/// the running Schur complement is not invertible.
BlockLDU block_ldu(const RatMatrix& omega, const BlockStructure& blocks);

}  // namespace kostka
