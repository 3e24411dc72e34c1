#pragma once

// Exact linear algebra over the integers and rationals (GMP-backed).

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace kmp::exact {

using IntMatrix = std::vector<std::vector<mpz_class>>;
using RatMatrix = std::vector<std::vector<mpq_class>>;

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct SolveResult {
  SolveStatus status = SolveStatus::Inconsistent;
  std::size_t rank = 0;
  // Filled for Unique; for Underdetermined it holds the particular solution
  // with every free variable set to zero.
  std::vector<mpq_class> solution;
};

// Solves M x = b (M is rows x cols, rows may exceed cols) by fraction-free
// Bareiss elimination with row pivoting, followed by rational back
// substitution. Inconsistency is detected exactly on the surplus rows.
SolveResult solve_fraction_free(IntMatrix m, std::vector<mpz_class> b);

// Gauss-Jordan inverse over Q. Returns false if the matrix is singular.
bool invert(const RatMatrix& m, RatMatrix& inverse);

}  // namespace kmp::exact
