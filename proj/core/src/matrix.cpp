#include "flatcyc/matrix.hpp"

namespace flatcyc {

IntMatrix make_int_matrix(const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix out(r, c, BigInt(0));
  for (std::size_t i = 0; i < r; ++i) {
    require(rows[i].size() == c, Errc::SizeMismatch, "ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t d = 0;
  for (const auto& b : blocks) {
    require(b.is_square(), Errc::NotSquare, "block_diagonal expects square blocks");
    d += b.rows();
  }
  IntMatrix out(d, d, BigInt(0));
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(offset + i, offset + j) = b(i, j);
    offset += b.rows();
  }
  return out;
}

IntMatrix permute(const IntMatrix& A, const std::vector<std::size_t>& perm) {
  require(A.is_square() && perm.size() == A.rows(), Errc::SizeMismatch, "permutation size");
  IntMatrix out(A.rows(), A.cols(), BigInt(0));
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out(i, j) = A(perm[i], perm[j]);
  return out;
}

}  // namespace flatcyc
