#pragma once

// Exact recovery of rational functions p/q from truncated integer series.
// Both entry points build the convolution system s*q = p coefficientwise and
// solve it by fraction-free elimination; no floating point is involved.

#include "kmp/polyseries.hpp"

namespace kmp {

struct RationalFit {
  IntPolynomial numerator;
  IntPolynomial denominator;  // constant term 1
  int verified_to = 0;        // s * denominator == numerator through this order
  int slack = 0;              // equations beyond the number of unknowns
};

// Fixed numerator p: finds q with q_0 = 1 and deg q <= dmax such that
// s * q == p through order(s). Needs order(s) >= dmax.
RationalFit recover_denominator(const TruncatedSeries& s, const IntPolynomial& p, int dmax);

// Unknown numerator: the pair (p, q) with the smallest denominator degree,
// then the smallest numerator degree, within the bounds.
// Needs order(s) >= dnum_max + dden_max + 1.
RationalFit recover_rational(const TruncatedSeries& s, int dnum_max, int dden_max);

// Independent re-check of a fit's defining congruence through `order`.
bool satisfies(const RationalFit& fit, const TruncatedSeries& s, int order);

}  // namespace kmp
