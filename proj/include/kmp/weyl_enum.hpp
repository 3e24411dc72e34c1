#pragma once

// Length-graded enumeration of Weyl group orbits.
//
// The orbit of a dominant weight mu is explored breadth-first. The depth of
// an orbit point x is the length of the minimal w with x = w(mu); a simple
// reflection sigma_g raises the depth exactly when x_g > 0 and lowers it when
// x_g < 0. With mu = rho the orbit points are in bijection with the group
// elements; with mu = sum of fundamental weights outside J they are in
// bijection with the minimal-length coset representatives of W / W_J.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kmp/lattice.hpp"
#include "kmp/polyseries.hpp"

namespace kmp {

// Sigma(i_1, ..., i_k) = sigma_{i_1} ... sigma_{i_k}; letters are 1-based and
// act right to left.
struct ReducedWord {
  std::vector<int> letters;

  std::size_t length() const noexcept { return letters.size(); }
  ReducedWord reversed() const { return ReducedWord{{letters.rbegin(), letters.rend()}}; }
  std::string to_string() const;

  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

enum class Strategy { FrontierSign, GlobalDedup };

struct ElementRecord {
  WeightVector image;
  ReducedWord word;
};

struct EnumOptions {
  int max_level = 0;  // negative: run until the orbit is exhausted
  Strategy strategy = Strategy::FrontierSign;
  bool collect_elements = false;
  // Cap on the number of candidate images held while building one level.
  // 0 derives it from memory_budget_bytes.
  std::size_t max_frontier = 0;
  std::size_t memory_budget_bytes = std::size_t{8} << 30;
  int threads = 1;
};

struct OrbitLevels {
  std::vector<std::int64_t> counts;
  // Per level, ordered by word; empty unless collect_elements.
  std::vector<std::vector<ElementRecord>> elements;
  WeightVector seed;
  int truncation = 0;
  // The last level has no ascents, so the orbit is finite and complete.
  bool terminated = false;

  std::int64_t total() const;
};

OrbitLevels orbit_bfs(const CartanMatrix& a, const WeightVector& seed, const EnumOptions& options);

struct GrowthSeries {
  TruncatedSeries series{0};
  bool complete = false;  // natural termination: series is the full polynomial
};

// Negative max_degree enumerates until termination (finite types only).
GrowthSeries poincare_series(const CartanMatrix& a, int max_degree, EnumOptions options = {});
GrowthSeries coset_series(const CartanMatrix& a, const SubsetJ& j, int max_degree,
                          EnumOptions options = {});

// Lexicographically least reduced word of the minimal w with w(seed) = image.
ReducedWord canonical_word(const CartanMatrix& a, const WeightVector& image, const WeightVector& seed,
                           std::size_t max_steps = 1u << 20);

// w(x) for w = Sigma(word).
WeightVector apply_word(const CartanMatrix& a, const ReducedWord& word, const WeightVector& x);

struct FactorizationReport {
  TruncatedSeries full{0};
  TruncatedSeries parabolic{0};
  TruncatedSeries cosets{0};
  std::string parabolic_source;  // e.g. "finite D5", "affine D4", "bfs"
  ConvolutionReport check;
};

// Checks P(A) = P(A_J) * (coset series) coefficientwise up to max_degree.
FactorizationReport factorization_report(const CartanMatrix& a, const SubsetJ& j, int max_degree,
                                         EnumOptions options = {});

}  // namespace kmp
