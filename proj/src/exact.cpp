#include "kmp/exact.hpp"

#include <utility>

namespace kmp::exact {

SolveResult solve_fraction_free(IntMatrix m, std::vector<mpz_class> b) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t r = 0; r < rows; ++r) m[r].push_back(b[r]);

  // pivot_cols[k] is the column of the k-th pivot row.
  std::vector<std::size_t> pivot_cols;
  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;  // free column
    if (pivot != row) std::swap(m[pivot], m[row]);

    const mpz_class& p = m[row][col];
    for (std::size_t r = row + 1; r < rows; ++r) {
      const mpz_class factor = m[r][col];
      for (std::size_t c = col + 1; c <= cols; ++c) {
        mpz_class v = m[r][c] * p - factor * m[row][c];
        // Sylvester's identity guarantees exactness.
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[r][c] = std::move(v);
      }
      m[r][col] = 0;
    }
    // Rows above the pivot row keep their earlier scale; rows below were all
    // rescaled by p / prev, so the running divisor becomes p.
    prev = p;
    pivot_cols.push_back(col);
    ++row;
  }

  SolveResult result;
  result.rank = pivot_cols.size();
  for (std::size_t r = result.rank; r < rows; ++r) {
    if (m[r][cols] != 0) {
      result.status = SolveStatus::Inconsistent;
      return result;
    }
  }

  result.solution.assign(cols, mpq_class(0));
  for (std::size_t k = result.rank; k-- > 0;) {
    const std::size_t col = pivot_cols[k];
    mpq_class acc = m[k][cols];
    for (std::size_t c = col + 1; c < cols; ++c) {
      if (m[k][c] != 0 && result.solution[c] != 0) acc -= result.solution[c] * m[k][c];
    }
    acc /= m[k][col];
    acc.canonicalize();
    result.solution[col] = std::move(acc);
  }
  result.status = result.rank == cols ? SolveStatus::Unique : SolveStatus::Underdetermined;
  return result;
}

bool invert(const RatMatrix& m, RatMatrix& inverse) {
  const std::size_t n = m.size();
  RatMatrix a = m;
  inverse.assign(n, std::vector<mpq_class>(n, mpq_class(0)));
  for (std::size_t i = 0; i < n; ++i) inverse[i][i] = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    std::swap(inverse[pivot], inverse[col]);

    const mpq_class p = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] /= p;
      inverse[col][c] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inverse[r][c] -= f * inverse[col][c];
      }
    }
  }
  return true;
}

}  // namespace kmp::exact
