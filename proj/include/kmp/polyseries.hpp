#pragma once

// Exact integer polynomials and explicitly truncated power series.
// Every arithmetic step is overflow-checked; overflow throws
// Error(ErrorCode::Overflow) and never wraps.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace kmp {

using Coeff = std::int64_t;

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_sub(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<Coeff> coeffs);
  explicit IntPolynomial(std::vector<Coeff> coeffs);

  static IntPolynomial monomial(Coeff c, int exponent);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Coeff coeff(int k) const noexcept {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)] : 0;
  }
  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
  Coeff eval(Coeff t) const;
  bool is_palindromic() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<Coeff> coeffs_;
};

class TruncatedSeries {
 public:
  // Zero series of the given order.
  explicit TruncatedSeries(int order);
  // coeffs.size() defines the order (size - 1); must be nonempty.
  explicit TruncatedSeries(std::vector<Coeff> coeffs);
  // Pads with zeros or truncates to the order.
  static TruncatedSeries from_polynomial(const IntPolynomial& p, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Coeff coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  Coeff& coeff(int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
  TruncatedSeries truncate(int order) const;
  IntPolynomial to_polynomial() const { return IntPolynomial(coeffs_); }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Coeff> coeffs_;
};

// Cauchy products truncated at min(order, operand orders); the effective
// order is the order of the result. Polynomials count as exact (infinite order).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b, int order);
TruncatedSeries mul(const IntPolynomial& a, const TruncatedSeries& b, int order);
TruncatedSeries mul(const TruncatedSeries& a, const IntPolynomial& b, int order);
TruncatedSeries mul(const IntPolynomial& a, const IntPolynomial& b, int order);

// Requires constant term +1 or -1.
TruncatedSeries inverse(const TruncatedSeries& a, int order);
TruncatedSeries inverse(const IntPolynomial& a, int order);

// num = q * den exactly, else InexactDivision.
IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den);

struct ConvolutionReport {
  int order = 0;                  // effective order checked
  std::vector<bool> per_order;    // per_order[m] <=> w_m == sum_s u_s v_{m-s}
  std::optional<int> first_failure;
  bool passed() const noexcept { return !first_failure.has_value(); }
};

ConvolutionReport convolution_check(const TruncatedSeries& w, const TruncatedSeries& u,
                                    const TruncatedSeries& v);
ConvolutionReport convolution_check(const TruncatedSeries& w, const IntPolynomial& u,
                                    const TruncatedSeries& v);

// (1 + t + ... + t^(n-1)).
IntPolynomial q_integer(int n);

std::string to_string(const IntPolynomial& p);

}  // namespace kmp
