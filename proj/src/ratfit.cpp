#include "kmp/ratfit.hpp"

#include <string>

#include "kmp/error.hpp"
#include "kmp/exact.hpp"

namespace kmp {

namespace {

Coeff to_coeff(const mpq_class& q) {
  if (q.get_den() != 1) {
    throw Error(ErrorCode::NonIntegerSolution, "coefficient " + q.get_str() + " is not an integer");
  }
  if (!q.get_num().fits_slong_p()) throw Error(ErrorCode::Overflow, "coefficient exceeds 64 bits");
  return q.get_num().get_si();
}

std::vector<Coeff> to_coeffs(const std::vector<mpq_class>& v) {
  std::vector<Coeff> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(to_coeff(q));
  return out;
}

}  // namespace

RationalFit recover_denominator(const TruncatedSeries& s, const IntPolynomial& p, int dmax) {
  const int order = s.order();
  if (dmax < 0 || order < dmax) {
    throw Error(ErrorCode::Underdetermined, "series of order " + std::to_string(order) +
                                                " cannot determine a denominator of degree " +
                                                std::to_string(dmax));
  }
  if (s.coeff(0) != 1 && s.coeff(0) != -1) {
    throw Error(ErrorCode::NonUnitConstantTerm, "series constant term must be +1 or -1");
  }

  // Unknowns q_0..q_dmax; equation n: sum_j s_{n-j} q_j = p_n.
  const auto unknowns = static_cast<std::size_t>(dmax) + 1;
  exact::IntMatrix m(static_cast<std::size_t>(order) + 1, std::vector<mpz_class>(unknowns, 0));
  std::vector<mpz_class> rhs(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    for (int j = 0; j <= std::min(n, dmax); ++j) {
      m[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] = static_cast<long>(s.coeff(n - j));
    }
    rhs[static_cast<std::size_t>(n)] = static_cast<long>(p.coeff(n));
  }

  const auto sol = exact::solve_fraction_free(std::move(m), std::move(rhs));
  if (sol.status == exact::SolveStatus::Inconsistent) {
    throw Error(ErrorCode::Inconsistent, "no denominator of degree <= " + std::to_string(dmax) +
                                             " matches the series");
  }
  if (sol.status == exact::SolveStatus::Underdetermined) {
    throw Error(ErrorCode::Underdetermined, "convolution system is rank deficient");
  }

  std::vector<Coeff> q = to_coeffs(sol.solution);
  IntPolynomial num = p;
  if (q[0] == -1) {
    for (auto& c : q) c = checked_sub(0, c);
    num = -num;
  } else if (q[0] != 1) {
    throw Error(ErrorCode::Inconsistent, "solution has constant term " + std::to_string(q[0]));
  }
  return RationalFit{num, IntPolynomial(std::move(q)), order, order - dmax};
}

RationalFit recover_rational(const TruncatedSeries& s, int dnum_max, int dden_max) {
  const int order = s.order();
  if (dnum_max < 0 || dden_max < 0 || order < dnum_max + dden_max + 1) {
    throw Error(ErrorCode::Underdetermined,
                "series of order " + std::to_string(order) + " cannot identify degrees (" +
                    std::to_string(dnum_max) + "," + std::to_string(dden_max) + ")");
  }

  for (int dd = 0; dd <= dden_max; ++dd) {
    for (int dn = 0; dn <= dnum_max; ++dn) {
      // Unknowns q_1..q_dd with q_0 = 1; equations for n > dn where p_n = 0:
      // sum_{j>=1} s_{n-j} q_j = -s_n.
      const auto rows = static_cast<std::size_t>(order - dn);
      exact::IntMatrix m(rows, std::vector<mpz_class>(static_cast<std::size_t>(dd), 0));
      std::vector<mpz_class> rhs(rows);
      for (int n = dn + 1; n <= order; ++n) {
        const auto r = static_cast<std::size_t>(n - dn - 1);
        for (int j = 1; j <= std::min(n, dd); ++j) {
          m[r][static_cast<std::size_t>(j - 1)] = static_cast<long>(s.coeff(n - j));
        }
        rhs[r] = static_cast<long>(s.coeff(n));
        rhs[r] = -rhs[r];
      }
      const auto sol = exact::solve_fraction_free(std::move(m), std::move(rhs));
      if (sol.status == exact::SolveStatus::Inconsistent) continue;

      std::vector<Coeff> q{1};
      const auto tail = to_coeffs(sol.solution);
      q.insert(q.end(), tail.begin(), tail.end());
      const IntPolynomial den(q);
      const TruncatedSeries prod = mul(s, den, dn);
      return RationalFit{prod.to_polynomial(), den, order, order - dn - dd};
    }
  }
  throw Error(ErrorCode::Inconsistent, "no rational function within degrees (" + std::to_string(dnum_max) +
                                           "," + std::to_string(dden_max) + ") matches the series");
}

bool satisfies(const RationalFit& fit, const TruncatedSeries& s, int order) {
  if (order > s.order()) return false;
  if (fit.denominator.coeff(0) != 1) return false;
  return mul(s, fit.denominator, order) == TruncatedSeries::from_polynomial(fit.numerator, order);
}

}  // namespace kmp
