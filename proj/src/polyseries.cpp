#include "kmp/polyseries.hpp"

#include <algorithm>
#include <limits>

#include "kmp/error.hpp"

namespace kmp {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "coefficient addition");
  return r;
}

Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "coefficient subtraction");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "coefficient multiplication");
  return r;
}

IntPolynomial::IntPolynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

IntPolynomial::IntPolynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(Coeff c, int exponent) {
  std::vector<Coeff> v(static_cast<std::size_t>(exponent) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Coeff IntPolynomial::eval(Coeff t) const {
  Coeff acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, t), *it);
  return acc;
}

bool IntPolynomial::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Coeff> r(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t k = 0; k < r.size(); ++k) {
    r[k] = checked_add(a.coeff(static_cast<int>(k)), b.coeff(static_cast<int>(k)));
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Coeff> r(coeffs_.size());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = checked_sub(0, coeffs_[k]);
  return IntPolynomial(std::move(r));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Coeff> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      r[i + j] = checked_add(r[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return IntPolynomial(std::move(r));
}

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw Error(ErrorCode::DimensionMismatch, "negative series order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

TruncatedSeries::TruncatedSeries(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::DimensionMismatch, "series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::from_polynomial(const IntPolynomial& p, int order) {
  TruncatedSeries s(order);
  for (int k = 0; k <= order; ++k) s.coeffs_[static_cast<std::size_t>(k)] = p.coeff(k);
  return s;
}

TruncatedSeries TruncatedSeries::truncate(int order) const {
  if (order > this->order()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot extend a truncated series from order " +
                                                  std::to_string(this->order()) + " to " +
                                                  std::to_string(order));
  }
  return TruncatedSeries(std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

namespace {

TruncatedSeries convolve(const std::vector<Coeff>& a, const std::vector<Coeff>& b, int order) {
  TruncatedSeries r(order);
  for (int m = 0; m <= order; ++m) {
    Coeff acc = 0;
    const int lo = std::max(0, m - static_cast<int>(b.size()) + 1);
    const int hi = std::min(m, static_cast<int>(a.size()) - 1);
    for (int s = lo; s <= hi; ++s) {
      const Coeff x = a[static_cast<std::size_t>(s)];
      if (x == 0) continue;
      acc = checked_add(acc, checked_mul(x, b[static_cast<std::size_t>(m - s)]));
    }
    r.coeff(m) = acc;
  }
  return r;
}

TruncatedSeries invert(const std::vector<Coeff>& a, int order) {
  const Coeff c0 = a.empty() ? 0 : a[0];
  if (c0 != 1 && c0 != -1) {
    throw Error(ErrorCode::NonUnitConstantTerm, "constant term " + std::to_string(c0) + " is not a unit");
  }
  TruncatedSeries r(order);
  r.coeff(0) = c0;  // 1/c0 == c0 for units
  for (int m = 1; m <= order; ++m) {
    Coeff acc = 0;
    const int hi = std::min(m, static_cast<int>(a.size()) - 1);
    for (int s = 1; s <= hi; ++s) {
      const Coeff x = a[static_cast<std::size_t>(s)];
      if (x == 0) continue;
      acc = checked_add(acc, checked_mul(x, r.coeff(m - s)));
    }
    r.coeff(m) = checked_mul(checked_sub(0, acc), c0);
  }
  return r;
}

}  // namespace

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b, int order) {
  return convolve(a.coeffs(), b.coeffs(), std::min({order, a.order(), b.order()}));
}

TruncatedSeries mul(const IntPolynomial& a, const TruncatedSeries& b, int order) {
  if (a.is_zero()) return TruncatedSeries(std::min(order, b.order()));
  return convolve(a.coeffs(), b.coeffs(), std::min(order, b.order()));
}

TruncatedSeries mul(const TruncatedSeries& a, const IntPolynomial& b, int order) { return mul(b, a, order); }

TruncatedSeries mul(const IntPolynomial& a, const IntPolynomial& b, int order) {
  return TruncatedSeries::from_polynomial(a * b, order);
}

TruncatedSeries inverse(const TruncatedSeries& a, int order) {
  return invert(a.coeffs(), std::min(order, a.order()));
}

TruncatedSeries inverse(const IntPolynomial& a, int order) { return invert(a.coeffs(), order); }

IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  if (num.is_zero()) return {};
  const int dn = num.degree();
  const int dd = den.degree();
  if (dn < dd) throw Error(ErrorCode::InexactDivision, "numerator degree below denominator degree");

  std::vector<Coeff> rem = num.coeffs();
  std::vector<Coeff> quot(static_cast<std::size_t>(dn - dd) + 1, 0);
  const Coeff lead = den.coeff(dd);
  for (int k = dn - dd; k >= 0; --k) {
    const Coeff top = rem[static_cast<std::size_t>(k + dd)];
    if (top % lead != 0) throw Error(ErrorCode::InexactDivision, "non-integral quotient coefficient");
    const Coeff q = top / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = rem[static_cast<std::size_t>(k + j)];
      slot = checked_sub(slot, checked_mul(q, den.coeff(j)));
    }
  }
  if (std::any_of(rem.begin(), rem.end(), [](Coeff c) { return c != 0; })) {
    throw Error(ErrorCode::InexactDivision, "nonzero remainder");
  }
  return IntPolynomial(std::move(quot));
}

namespace {

ConvolutionReport compare(const TruncatedSeries& w, const TruncatedSeries& product) {
  ConvolutionReport rep;
  rep.order = product.order();
  rep.per_order.resize(static_cast<std::size_t>(rep.order) + 1);
  for (int m = 0; m <= rep.order; ++m) {
    const bool ok = w.coeff(m) == product.coeff(m);
    rep.per_order[static_cast<std::size_t>(m)] = ok;
    if (!ok && !rep.first_failure) rep.first_failure = m;
  }
  return rep;
}

}  // namespace

ConvolutionReport convolution_check(const TruncatedSeries& w, const TruncatedSeries& u,
                                    const TruncatedSeries& v) {
  return compare(w, mul(u, v, w.order()));
}

ConvolutionReport convolution_check(const TruncatedSeries& w, const IntPolynomial& u,
                                    const TruncatedSeries& v) {
  return compare(w, mul(u, v, w.order()));
}

IntPolynomial q_integer(int n) { return IntPolynomial(std::vector<Coeff>(static_cast<std::size_t>(n), 1)); }

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Coeff c = p.coeff(k);
    if (c == 0) continue;
    const Coeff mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += std::to_string(mag);
    if (k >= 1) out += (mag != 1 ? "*t" : "t");
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace kmp
