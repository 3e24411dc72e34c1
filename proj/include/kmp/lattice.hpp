#pragma once

// Generalized Cartan matrices and the weight/root lattice they define.
//
// Weights are stored in fundamental-weight coordinates. Column i of the
// Cartan matrix is the weight-basis expansion of the simple root alpha_i, so
// the simple reflection sigma_i acts as x -> x - x_i * column(i).
// Generator indices in this API are 1-based, matching the usual notation
// sigma_1 .. sigma_n; storage is 0-based.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kmp {

using Coord = std::int32_t;

class CartanMatrix {
 public:
  // Validates and builds; throws Error on any violated GCM axiom.
  static CartanMatrix validate(const std::vector<std::vector<std::int64_t>>& entries,
                               std::string name = {});

  int rank() const noexcept { return rank_; }
  const std::string& name() const noexcept { return name_; }
  CartanMatrix with_name(std::string name) const;

  // 0-based access.
  Coord at(int row, int col) const { return entries_[static_cast<std::size_t>(row * rank_ + col)]; }
  // Column c (0-based), contiguous.
  std::span<const Coord> column(int c) const {
    return {columns_.data() + static_cast<std::size_t>(c * rank_), static_cast<std::size_t>(rank_)};
  }
  std::vector<std::vector<std::int64_t>> rows() const;

  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) {
    return a.rank_ == b.rank_ && a.entries_ == b.entries_;
  }

 private:
  CartanMatrix() = default;

  int rank_ = 0;
  std::vector<Coord> entries_;  // row-major
  std::vector<Coord> columns_;  // column-major copy
  std::string name_;
};

struct WeightVector {
  std::vector<Coord> coords;

  std::size_t size() const noexcept { return coords.size(); }
  Coord operator[](std::size_t i) const { return coords[i]; }
  bool is_dominant() const;
  bool is_strictly_dominant() const;

  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

struct RootVector {
  std::vector<mpq_class> coords;

  bool is_nonnegative_integral() const;
  friend bool operator==(const RootVector& a, const RootVector& b) { return a.coords == b.coords; }
};

// Strictly increasing, duplicate-free, 1-based generator indices.
class SubsetJ {
 public:
  SubsetJ() = default;
  // Sorts the input; throws InvalidSubset on duplicates or out-of-range indices.
  static SubsetJ make(std::vector<int> indices, int rank);
  static SubsetJ all(int rank);

  const std::vector<int>& indices() const noexcept { return indices_; }
  bool empty() const noexcept { return indices_.empty(); }
  std::size_t size() const noexcept { return indices_.size(); }
  bool contains(int index) const;

 private:
  std::vector<int> indices_;
};

CartanMatrix validate_gcm(const std::vector<std::vector<std::int64_t>>& entries);

WeightVector reflect(const CartanMatrix& a, const WeightVector& x, int i);
WeightVector weyl_vector(const CartanMatrix& a);
CartanMatrix sub_gcm(const CartanMatrix& a, const SubsetJ& j);
// Principal submatrix in an arbitrary order: entry (r,c) = a(order[r], order[c]).
CartanMatrix relabel(const CartanMatrix& a, const std::vector<int>& order);

// Sum of fundamental weights outside J; stabilized exactly by the parabolic W_J.
WeightVector parabolic_seed(const CartanMatrix& a, const SubsetJ& j);

// Exact inverse of the Cartan matrix, used to convert weights into the
// simple-root basis.
class RootBasis {
 public:
  explicit RootBasis(const CartanMatrix& a);

  RootVector to_roots(const WeightVector& x) const;
  // Inverse conversion. Throws DimensionMismatch on a size mismatch or a
  // non-integral result, Overflow when a coordinate does not fit.
  WeightVector to_weights(const RootVector& r) const;

 private:
  int rank_;
  std::vector<Coord> cartan_;     // row-major
  std::vector<mpq_class> inverse_;  // row-major
};

RootVector weight_to_root_basis(const CartanMatrix& a, const WeightVector& x);
RootVector gamma_of(const CartanMatrix& a, const WeightVector& image);

}  // namespace kmp
