#include "kostka/ratmatrix.hpp"

namespace kostka {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = QRatFun::one();
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const QRatFun& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += a * o.at(k, j);
      }
    }
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
  return r;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

bool RatMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

BlockStructure BlockStructure::from_sizes(const std::vector<std::size_t>& sizes) {
  BlockStructure b;
  std::size_t pos = 0;
  for (std::size_t s : sizes) {
    b.ranges.emplace_back(pos, pos + s);
    pos += s;
  }
  return b;
}

namespace {

/// Gaussian-elimination inverse of a small dense block; returns false when singular.
bool invert_dense(RatMatrix m, RatMatrix& inv) {
  std::size_t n = m.rows();
  inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return false;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    QRatFun p = m.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m.at(i, col).is_zero()) continue;
      QRatFun f = m.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m.at(i, j) -= f * m.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return true;
}

}  // namespace

bool try_invert(const RatMatrix& m, RatMatrix& out) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  return invert_dense(m, out);
}

BlockLDU block_ldu(const RatMatrix& omega, const BlockStructure& blocks) {
  std::size_t n = omega.rows();
  if (omega.cols() != n) throw std::invalid_argument("block_ldu requires a square matrix");
  if (blocks.ranges.empty() || blocks.ranges.front().first != 0 ||
      blocks.ranges.back().second != n)
    throw std::invalid_argument("blocks must partition the index range in order");
  for (std::size_t k = 1; k < blocks.ranges.size(); ++k)
    if (blocks.ranges[k].first != blocks.ranges[k - 1].second)
      throw std::invalid_argument("blocks must be contiguous and ordered");

  RatMatrix S = omega;  // running Schur complement, updated in place
  BlockLDU f{RatMatrix::identity(n), RatMatrix(n, n), RatMatrix::identity(n)};
  std::size_t nb = blocks.ranges.size();
  for (std::size_t k = 0; k < nb; ++k) {
    auto [b0, b1] = blocks.ranges[k];
    std::size_t bs = b1 - b0;
    RatMatrix Dk(bs, bs);
    for (std::size_t i = 0; i < bs; ++i)
      for (std::size_t j = 0; j < bs; ++j) Dk.at(i, j) = S.at(b0 + i, b0 + j);
    RatMatrix Dinv;
    if (!invert_dense(Dk, Dinv)) throw SingularBlock(k);
    for (std::size_t i = 0; i < bs; ++i)
      for (std::size_t j = 0; j < bs; ++j) f.D.at(b0 + i, b0 + j) = Dk.at(i, j);
    // L column block and U row block below/right of the pivot
    for (std::size_t r = b1; r < n; ++r)
      for (std::size_t j = 0; j < bs; ++j) {
        QRatFun acc;
        for (std::size_t m = 0; m < bs; ++m) acc += S.at(r, b0 + m) * Dinv.at(m, j);
        f.L.at(r, b0 + j) = acc;
      }
    for (std::size_t i = 0; i < bs; ++i)
      for (std::size_t c = b1; c < n; ++c) {
        QRatFun acc;
        for (std::size_t m = 0; m < bs; ++m) acc += Dinv.at(i, m) * S.at(b0 + m, c);
        f.U.at(b0 + i, c) = acc;
      }
    // Schur complement update of the trailing square
    for (std::size_t r = b1; r < n; ++r)
      for (std::size_t c = b1; c < n; ++c) {
        QRatFun acc;
        for (std::size_t i = 0; i < bs; ++i)
          for (std::size_t j = 0; j < bs; ++j)
            acc += f.L.at(r, b0 + i) * Dk.at(i, j) * f.U.at(b0 + j, c);
        S.at(r, c) -= acc;
      }
  }
  return f;
}

}  // namespace kostka
