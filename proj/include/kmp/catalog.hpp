#pragma once

// Finite and untwisted affine types: Cartan matrices, invariant degrees,
// closed-form Poincare polynomials and Bott's affine product.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmp/lattice.hpp"
#include "kmp/polyseries.hpp"

namespace kmp {

enum class Family { A, B, C, D, E, F, G };

struct FiniteType {
  Family family = Family::A;
  int rank = 1;

  // Throws InvalidRankForFamily.
  static FiniteType make(Family family, int rank);
  // "A4", "B5", ...; throws UnknownAlgebra or InvalidRankForFamily.
  static FiniteType parse(std::string_view name);
  std::string name() const;

  friend bool operator==(const FiniteType&, const FiniteType&) = default;
};

struct DegreeTable {
  std::vector<int> degrees;  // nondecreasing
};

DegreeTable degrees(const FiniteType& t);
IntPolynomial finite_poincare(const FiniteType& t);
std::int64_t group_order(const FiniteType& t);
// P(t) * prod 1/(1 - t^(nu_i - 1)) over the finite type's degrees.
TruncatedSeries bott_series(const FiniteType& t, int order);

CartanMatrix cartan_matrix(const FiniteType& t);
// Untwisted affine extension; the extra node is generator 1, the finite
// nodes follow in their usual order.
CartanMatrix affine_cartan_matrix(const FiniteType& t);

// Highest root of a finite type in simple-root coordinates.
std::vector<std::int64_t> highest_root(const FiniteType& t);

// The hyperbolic rank-6 algebra: a D5-shaped tree with one extra leaf on
// the branch node (node 3 adjacent to 2,4,5,6; node 2 adjacent to 1).
CartanMatrix paper_h();

// Built-in names: finite types ("A4"), affine types ("affD4") and "paperH".
CartanMatrix builtin_algebra(std::string_view name);
std::vector<std::string> builtin_names();

struct Recognized {
  bool affine = false;
  FiniteType type;
  std::string name() const { return (affine ? "aff" : "") + type.name(); }
};

// Identifies a matrix as a finite or untwisted affine type, up to relabeling
// of the generators. Connected diagrams only.
std::optional<Recognized> recognize(const CartanMatrix& a);

}  // namespace kmp
