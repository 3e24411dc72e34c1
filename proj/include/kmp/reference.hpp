#pragma once

// Reference values for the rank-6 hyperbolic algebra paperH that the
// computations are checked against.

#include <array>
#include <cstdint>
#include <vector>

#include "kmp/polyseries.hpp"
#include "kmp/weyl_enum.hpp"

namespace kmp::reference {

// Length-graded element counts of W(paperH), lengths 0..25.
inline constexpr std::array<Coeff, 26> kHyperbolicGrowth{
    1,      6,      20,     52,     117,    237,    445,    791,    1347,
    2216,   3550,   5568,   8582,   13044,  19604,  29189,  43129,  63332,
    92518,  134572, 195052, 281882, 406361, 584620, 839655, 1204232};

// P(A4).
inline IntPolynomial a4_poincare() { return IntPolynomial{1, 4, 9, 15, 20, 22, 20, 15, 9, 4, 1}; }

// Common degree-20 denominator of the A4 and D5 coset series.
inline IntPolynomial coset_denominator() {
  return IntPolynomial{1, 0, -1, -2, -1, 0, 1, 1, 3, 2, 0, 0, 0, -1, -2, -2, -1, 0, 0, 1, 1};
}

// (1+t)^3 (1+t^2) (1-t+t^2) (1+t^4)
inline IntPolynomial a4_coset_numerator() {
  const IntPolynomial one_plus_t{1, 1};
  return one_plus_t * one_plus_t * one_plus_t * IntPolynomial{1, 0, 1} * IntPolynomial{1, -1, 1} *
         IntPolynomial{1, 0, 0, 0, 1};
}

inline IntPolynomial d5_coset_numerator() { return IntPolynomial{1, 1}; }

// (1-t)^3 (1+t) (1+t+t^2)^2 (1+t^4) (1+t+t^2+t^3+t^4)
inline IntPolynomial affd4_coset_numerator() {
  const IntPolynomial one_minus_t{1, -1};
  const IntPolynomial cyc3{1, 1, 1};
  return one_minus_t * one_minus_t * one_minus_t * IntPolynomial{1, 1} * cyc3 * cyc3 *
         IntPolynomial{1, 0, 0, 0, 1} * IntPolynomial{1, 1, 1, 1, 1};
}

inline IntPolynomial affd4_coset_denominator() {
  return IntPolynomial{1, 0, -1, -2, -1, 1, 1, 0, 1, 1, 1, 1, 0, 0, -1, -1};
}

// Denominator of the growth series over the B5 Poincare polynomial.
inline IntPolynomial b5_quotient_denominator() {
  return IntPolynomial{1, -1, 0, -2, 1, 0, 1, -1, 2, -1, 1, 0, 1, 1, -1, -1, 0, 0, -1, 0, -1, 0, 0, 0, 1};
}

// Minimal coset representatives v (w = u v, u in W_{1,2,3,4}) of lengths 0..6,
// one inner vector per word.
inline std::vector<ReducedWord> a4_coset_words() {
  const std::vector<std::vector<int>> words{
      {},
      {5}, {6},
      {5, 3}, {5, 6}, {6, 3},
      {5, 3, 2}, {5, 3, 4}, {5, 3, 6}, {5, 6, 3}, {6, 3, 2}, {6, 3, 4}, {6, 3, 5},
      {5, 3, 2, 1}, {5, 3, 2, 4}, {5, 3, 2, 6}, {5, 3, 4, 6}, {5, 3, 6, 3}, {5, 6, 3, 2},
      {5, 6, 3, 4}, {5, 6, 3, 5}, {6, 3, 2, 1}, {6, 3, 2, 4}, {6, 3, 2, 5}, {6, 3, 4, 5},
      {5, 3, 2, 1, 4}, {5, 3, 2, 1, 6}, {5, 3, 2, 4, 3}, {5, 3, 2, 4, 6},
      {5, 3, 2, 6, 3}, {5, 3, 4, 6, 3}, {5, 3, 6, 3, 2}, {5, 3, 6, 3, 4}, {5, 3, 6, 3, 5},
      {5, 6, 3, 2, 1}, {5, 6, 3, 2, 4}, {5, 6, 3, 2, 5}, {5, 6, 3, 4, 5}, {6, 3, 2, 1, 4},
      {6, 3, 2, 1, 5}, {6, 3, 2, 4, 3}, {6, 3, 2, 4, 5}, {6, 3, 2, 5, 3}, {6, 3, 4, 5, 3},
      {5, 3, 2, 1, 4, 3}, {5, 3, 2, 1, 4, 6}, {5, 3, 2, 1, 6, 3}, {5, 3, 2, 4, 3, 5},
      {5, 3, 2, 4, 3, 6}, {5, 3, 2, 4, 6, 3}, {5, 3, 2, 6, 3, 2}, {5, 3, 2, 6, 3, 4},
      {5, 3, 2, 6, 3, 5}, {5, 3, 4, 6, 3, 2}, {5, 3, 4, 6, 3, 4}, {5, 3, 4, 6, 3, 5},
      {5, 3, 6, 3, 2, 1}, {5, 3, 6, 3, 2, 4}, {5, 3, 6, 3, 2, 5}, {5, 3, 6, 3, 4, 5},
      {5, 6, 3, 2, 1, 4}, {5, 6, 3, 2, 1, 5}, {5, 6, 3, 2, 4, 3}, {5, 6, 3, 2, 4, 5},
      {5, 6, 3, 2, 5, 3}, {5, 6, 3, 4, 5, 3}, {6, 3, 2, 1, 4, 3}, {6, 3, 2, 1, 4, 5},
      {6, 3, 2, 1, 5, 3}, {6, 3, 2, 4, 3, 5}, {6, 3, 2, 4, 3, 6}, {6, 3, 2, 4, 5, 3},
      {6, 3, 2, 5, 3, 4}, {6, 3, 2, 5, 3, 6}, {6, 3, 4, 5, 3, 2}, {6, 3, 4, 5, 3, 6},
  };
  std::vector<ReducedWord> out;
  for (const auto& w : words) out.push_back(ReducedWord{w});
  return out;
}

inline constexpr std::array<std::int64_t, 7> kA4CosetCounts{1, 2, 3, 7, 12, 19, 32};

}  // namespace kmp::reference
