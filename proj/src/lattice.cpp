#include "kmp/lattice.hpp"

#include <algorithm>
#include <limits>

#include "kmp/error.hpp"
#include "kmp/exact.hpp"

namespace kmp {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::NonTwoDiagonal: return "NonTwoDiagonal";
    case ErrorCode::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case ErrorCode::AsymmetricZeroPattern: return "AsymmetricZeroPattern";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularCartanMatrix: return "SingularCartanMatrix";
    case ErrorCode::NotInPositiveRootLattice: return "NotInPositiveRootLattice";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::InvalidSubset: return "InvalidSubset";
    case ErrorCode::UnknownAlgebra: return "UnknownAlgebra";
    case ErrorCode::InvalidRankForFamily: return "InvalidRankForFamily";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonDominantSeed: return "NonDominantSeed";
    case ErrorCode::MemoryBudgetExceeded: return "MemoryBudgetExceeded";
    case ErrorCode::NotInOrbit: return "NotInOrbit";
    case ErrorCode::RegularityViolation: return "RegularityViolation";
    case ErrorCode::ImageRecurrence: return "ImageRecurrence";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NonIntegerSolution: return "NonIntegerSolution";
    case ErrorCode::UnknownCase: return "UnknownCase";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

Coord narrow(std::int64_t v) {
  if (v < std::numeric_limits<Coord>::min() || v > std::numeric_limits<Coord>::max()) {
    throw Error(ErrorCode::Overflow, "lattice coordinate " + std::to_string(v) + " exceeds 32 bits");
  }
  return static_cast<Coord>(v);
}

void check_index(const CartanMatrix& a, int i) {
  if (i < 1 || i > a.rank()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "generator " + std::to_string(i) + " not in 1.." + std::to_string(a.rank()));
  }
}

void check_size(const CartanMatrix& a, std::size_t n) {
  if (n != static_cast<std::size_t>(a.rank())) {
    throw Error(ErrorCode::DimensionMismatch, "vector of length " + std::to_string(n) +
                                                  " for rank " + std::to_string(a.rank()));
  }
}

}  // namespace

CartanMatrix CartanMatrix::validate(const std::vector<std::vector<std::int64_t>>& entries,
                                    std::string name) {
  const std::size_t n = entries.size();
  if (n == 0) throw Error(ErrorCode::EmptyMatrix, "Cartan matrix has no rows");
  for (const auto& row : entries) {
    if (row.size() != n) throw Error(ErrorCode::NotSquare, "Cartan matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i][i] != 2) {
      throw Error(ErrorCode::NonTwoDiagonal, "entry (" + std::to_string(i + 1) + "," +
                                                 std::to_string(i + 1) + ") is not 2");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries[i][j] > 0) {
        throw Error(ErrorCode::PositiveOffDiagonal,
                    "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is positive");
      }
      if ((entries[i][j] == 0) != (entries[j][i] == 0)) {
        throw Error(ErrorCode::AsymmetricZeroPattern,
                    "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") and (" +
                        std::to_string(j + 1) + "," + std::to_string(i + 1) + ") disagree on zero");
      }
    }
  }

  CartanMatrix m;
  m.rank_ = static_cast<int>(n);
  m.name_ = std::move(name);
  m.entries_.resize(n * n);
  m.columns_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Coord v = narrow(entries[i][j]);
      m.entries_[i * n + j] = v;
      m.columns_[j * n + i] = v;
    }
  }
  return m;
}

CartanMatrix CartanMatrix::with_name(std::string name) const {
  CartanMatrix m = *this;
  m.name_ = std::move(name);
  return m;
}

std::vector<std::vector<std::int64_t>> CartanMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) out[static_cast<std::size_t>(i)].push_back(at(i, j));
  }
  return out;
}

bool WeightVector::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](Coord c) { return c >= 0; });
}

bool WeightVector::is_strictly_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](Coord c) { return c > 0; });
}

bool RootVector::is_nonnegative_integral() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const mpq_class& q) { return q.get_den() == 1 && sgn(q) >= 0; });
}

SubsetJ SubsetJ::make(std::vector<int> indices, int rank) {
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    throw Error(ErrorCode::InvalidSubset, "duplicate generator index");
  }
  for (int i : indices) {
    if (i < 1 || i > rank) {
      throw Error(ErrorCode::InvalidSubset,
                  "generator " + std::to_string(i) + " not in 1.." + std::to_string(rank));
    }
  }
  SubsetJ j;
  j.indices_ = std::move(indices);
  return j;
}

SubsetJ SubsetJ::all(int rank) {
  std::vector<int> idx(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  return make(std::move(idx), rank);
}

bool SubsetJ::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

CartanMatrix validate_gcm(const std::vector<std::vector<std::int64_t>>& entries) {
  return CartanMatrix::validate(entries);
}

WeightVector reflect(const CartanMatrix& a, const WeightVector& x, int i) {
  check_index(a, i);
  check_size(a, x.size());
  const auto col = a.column(i - 1);
  const std::int64_t xi = x.coords[static_cast<std::size_t>(i - 1)];
  WeightVector out;
  out.coords.resize(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    out.coords[k] = narrow(static_cast<std::int64_t>(x.coords[k]) - xi * col[k]);
  }
  return out;
}

WeightVector weyl_vector(const CartanMatrix& a) {
  return WeightVector{std::vector<Coord>(static_cast<std::size_t>(a.rank()), 1)};
}

CartanMatrix sub_gcm(const CartanMatrix& a, const SubsetJ& j) {
  if (j.empty()) throw Error(ErrorCode::EmptySubset, "sub_gcm needs a nonempty subset");
  return relabel(a, j.indices());
}

CartanMatrix relabel(const CartanMatrix& a, const std::vector<int>& order) {
  if (order.empty()) throw Error(ErrorCode::EmptySubset, "empty index list");
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidSubset, "repeated index in relabeling");
  }
  std::vector<std::vector<std::int64_t>> rows(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    check_index(a, order[r]);
    for (std::size_t c = 0; c < order.size(); ++c) {
      check_index(a, order[c]);
      rows[r].push_back(a.at(order[r] - 1, order[c] - 1));
    }
  }
  return CartanMatrix::validate(rows);
}

WeightVector parabolic_seed(const CartanMatrix& a, const SubsetJ& j) {
  if (!j.empty() && j.indices().back() > a.rank()) {
    throw Error(ErrorCode::InvalidSubset, "subset does not fit the algebra's rank");
  }
  WeightVector mu;
  mu.coords.resize(static_cast<std::size_t>(a.rank()));
  for (int i = 1; i <= a.rank(); ++i) {
    mu.coords[static_cast<std::size_t>(i - 1)] = j.contains(i) ? 0 : 1;
  }
  return mu;
}

RootBasis::RootBasis(const CartanMatrix& a) : rank_(a.rank()) {
  const auto n = static_cast<std::size_t>(rank_);
  exact::RatMatrix m(n, std::vector<mpq_class>(n));
  cartan_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Coord v = a.at(static_cast<int>(i), static_cast<int>(j));
      m[i][j] = v;
      cartan_[i * n + j] = v;
    }
  }
  exact::RatMatrix inv;
  if (!exact::invert(m, inv)) {
    throw Error(ErrorCode::SingularCartanMatrix, "Cartan matrix is not invertible");
  }
  inverse_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inverse_[i * n + j] = inv[i][j];
  }
}

RootVector RootBasis::to_roots(const WeightVector& x) const {
  const auto n = static_cast<std::size_t>(rank_);
  if (x.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "weight of length " + std::to_string(x.size()));
  }
  // x = A r, with column i of A the weight expansion of alpha_i.
  RootVector r;
  r.coords.assign(n, mpq_class(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (x.coords[j] != 0) r.coords[i] += inverse_[i * n + j] * x.coords[j];
    }
    r.coords[i].canonicalize();
  }
  return r;
}

WeightVector RootBasis::to_weights(const RootVector& r) const {
  const auto n = static_cast<std::size_t>(rank_);
  if (r.coords.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "root vector of length " + std::to_string(r.coords.size()));
  }
  WeightVector x;
  x.coords.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += r.coords[j] * cartan_[i * n + j];
    acc.canonicalize();
    if (acc.get_den() != 1) {
      throw Error(ErrorCode::DimensionMismatch, "root vector is not in the weight lattice");
    }
    const mpz_class& v = acc.get_num();
    if (!v.fits_slong_p()) throw Error(ErrorCode::Overflow, "weight coordinate too large");
    x.coords[i] = narrow(v.get_si());
  }
  return x;
}

RootVector weight_to_root_basis(const CartanMatrix& a, const WeightVector& x) {
  check_size(a, x.size());
  return RootBasis(a).to_roots(x);
}

RootVector gamma_of(const CartanMatrix& a, const WeightVector& image) {
  check_size(a, image.size());
  WeightVector diff;
  diff.coords.resize(image.size());
  for (std::size_t k = 0; k < image.size(); ++k) {
    diff.coords[k] = narrow(static_cast<std::int64_t>(1) - image.coords[k]);
  }
  RootVector g = RootBasis(a).to_roots(diff);
  if (!g.is_nonnegative_integral()) {
    throw Error(ErrorCode::NotInPositiveRootLattice,
                "rho minus image has a negative or fractional root coordinate");
  }
  return g;
}

}  // namespace kmp
