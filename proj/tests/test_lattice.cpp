#include <gtest/gtest.h>

#include <random>

#include "kmp/catalog.hpp"
#include "kmp/error.hpp"
#include "kmp/lattice.hpp"
#include "kmp/weyl_enum.hpp"

using namespace kmp;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::ParseError;
}

WeightVector wv(std::vector<Coord> c) { return WeightVector{std::move(c)}; }

}  // namespace

TEST(ValidateGcm, AcceptsPaperH) {
  const auto h = validate_gcm({{2, -1, 0, 0, 0, 0},
                               {-1, 2, -1, 0, 0, 0},
                               {0, -1, 2, -1, -1, -1},
                               {0, 0, -1, 2, 0, 0},
                               {0, 0, -1, 0, 2, 0},
                               {0, 0, -1, 0, 0, 2}});
  EXPECT_EQ(h.rank(), 6);
  EXPECT_EQ(h, paper_h());
}

TEST(ValidateGcm, RankOne) { EXPECT_EQ(validate_gcm({{2}}).rank(), 1); }

TEST(ValidateGcm, Errors) {
  EXPECT_EQ(code_of([] { validate_gcm({{2, -1}, {0, 2}}); }), ErrorCode::AsymmetricZeroPattern);
  EXPECT_EQ(code_of([] { validate_gcm({{2, 1}, {1, 2}}); }), ErrorCode::PositiveOffDiagonal);
  EXPECT_EQ(code_of([] { validate_gcm({{1}}); }), ErrorCode::NonTwoDiagonal);
  EXPECT_EQ(code_of([] { validate_gcm({{2, -1}}); }), ErrorCode::NotSquare);
  EXPECT_EQ(code_of([] { validate_gcm({}); }), ErrorCode::EmptyMatrix);
  // A globally negated matrix is rejected: the diagonal must be +2.
  EXPECT_EQ(code_of([] { validate_gcm({{-2, 1}, {1, -2}}); }), ErrorCode::NonTwoDiagonal);
}

TEST(ValidateGcm, InputUntouched) {
  const std::vector<std::vector<std::int64_t>> rows{{2, -2}, {-1, 2}};
  const auto copy = rows;
  validate_gcm(rows);
  EXPECT_EQ(rows, copy);
}

TEST(Reflect, Examples) {
  const auto a1 = validate_gcm({{2}});
  EXPECT_EQ(reflect(a1, wv({1}), 1), wv({-1}));
  EXPECT_EQ(reflect(paper_h(), weyl_vector(paper_h()), 1), wv({-1, 2, 1, 1, 1, 1}));
  EXPECT_EQ(reflect(builtin_algebra("A2"), wv({1, 1}), 1), wv({-1, 2}));
}

TEST(Reflect, IndexOutOfRange) {
  EXPECT_EQ(code_of([] { reflect(paper_h(), weyl_vector(paper_h()), 0); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { reflect(paper_h(), weyl_vector(paper_h()), 7); }), ErrorCode::IndexOutOfRange);
}

TEST(Reflect, OverflowIsLoud) {
  const auto a = validate_gcm({{2, -1}, {-1, 2}});
  EXPECT_EQ(code_of([&] { reflect(a, wv({2000000000, 2000000000}), 1); }), ErrorCode::Overflow);
}

TEST(Reflect, InvolutionProperty) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-50, 50);
  for (const auto& name : builtin_names()) {
    const auto a = builtin_algebra(name);
    for (int trial = 0; trial < 20; ++trial) {
      WeightVector x;
      for (int k = 0; k < a.rank(); ++k) x.coords.push_back(coord(rng));
      for (int i = 1; i <= a.rank(); ++i) EXPECT_EQ(reflect(a, reflect(a, x, i), i), x) << name;
    }
  }
}

TEST(WeylVector, AllOnes) {
  EXPECT_EQ(weyl_vector(paper_h()), wv({1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(weyl_vector(validate_gcm({{2}})), wv({1}));
  EXPECT_EQ(weyl_vector(builtin_algebra("A5")), wv({1, 1, 1, 1, 1}));
}

TEST(GammaOf, Examples) {
  const auto a1 = validate_gcm({{2}});
  EXPECT_EQ(gamma_of(a1, wv({1})).coords, std::vector<mpq_class>{0});
  EXPECT_EQ(gamma_of(a1, wv({-1})).coords, std::vector<mpq_class>{1});
  const auto h = paper_h();
  const auto g = gamma_of(h, reflect(h, weyl_vector(h), 1));
  EXPECT_EQ(g.coords, (std::vector<mpq_class>{1, 0, 0, 0, 0, 0}));
  EXPECT_TRUE(gamma_of(h, weyl_vector(h)).is_nonnegative_integral());
}

TEST(GammaOf, Errors) {
  // rho - (1,2) = (0,-1) = -(1/3, 2/3) in roots for A2.
  EXPECT_EQ(code_of([] { gamma_of(builtin_algebra("A2"), wv({1, 2})); }), ErrorCode::NotInPositiveRootLattice);
  EXPECT_EQ(code_of([] { gamma_of(builtin_algebra("affA1"), wv({-1, 3})); }), ErrorCode::SingularCartanMatrix);
}

TEST(GammaOf, NonnegativeIntegralOnOrbit) {
  const auto h = paper_h();
  EnumOptions o;
  o.max_level = 8;
  o.collect_elements = true;
  const auto levels = orbit_bfs(h, weyl_vector(h), o);
  const RootBasis basis(h);
  std::size_t checked = 0;
  for (std::size_t k = 0; k < levels.elements.size(); ++k) {
    for (const auto& rec : levels.elements[k]) {
      WeightVector diff;
      for (Coord c : rec.image.coords) diff.coords.push_back(1 - c);
      EXPECT_TRUE(basis.to_roots(diff).is_nonnegative_integral());
      ++checked;
    }
  }
  EXPECT_EQ(checked, 1u + 6 + 20 + 52 + 117 + 237 + 445 + 791 + 1347);
}

TEST(SubGcm, PaperHSubdiagrams) {
  const auto h = paper_h();
  EXPECT_EQ(sub_gcm(h, SubsetJ::make({1, 2, 3, 4}, 6)), builtin_algebra("A4"));
  const auto d5 = sub_gcm(h, SubsetJ::make({1, 2, 3, 4, 5}, 6));
  ASSERT_TRUE(recognize(d5));
  EXPECT_EQ(recognize(d5)->name(), "D5");
  const auto affd4 = sub_gcm(h, SubsetJ::make({2, 3, 4, 5, 6}, 6));
  ASSERT_TRUE(recognize(affd4));
  EXPECT_EQ(recognize(affd4)->name(), "affD4");
  // Center node with four neighbours.
  int neighbours = 0;
  for (int c = 0; c < 5; ++c) neighbours += (c != 1 && affd4.at(1, c) != 0);
  EXPECT_EQ(neighbours, 4);
  EXPECT_EQ(code_of([&] { sub_gcm(h, SubsetJ{}); }), ErrorCode::EmptySubset);
}

TEST(SubGcm, AlwaysValid) {
  const auto h = paper_h();
  for (unsigned mask = 1; mask < 64; ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < 6; ++i) {
      if (mask & (1U << i)) idx.push_back(i + 1);
    }
    const auto sub = sub_gcm(h, SubsetJ::make(idx, 6));
    EXPECT_NO_THROW(validate_gcm(sub.rows()));
  }
}

TEST(SubsetJ, Validation) {
  EXPECT_EQ(SubsetJ::make({3, 1, 2}, 4).indices(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(code_of([] { SubsetJ::make({1, 1}, 4); }), ErrorCode::InvalidSubset);
  EXPECT_EQ(code_of([] { SubsetJ::make({0}, 4); }), ErrorCode::InvalidSubset);
  EXPECT_EQ(code_of([] { SubsetJ::make({5}, 4); }), ErrorCode::InvalidSubset);
}

TEST(WeightToRootBasis, Examples) {
  EXPECT_EQ(weight_to_root_basis(validate_gcm({{2}}), wv({1})).coords, std::vector<mpq_class>{mpq_class(1, 2)});
  EXPECT_EQ(weight_to_root_basis(builtin_algebra("A2"), wv({1, 0})).coords,
            (std::vector<mpq_class>{mpq_class(2, 3), mpq_class(1, 3)}));
  const auto zero = weight_to_root_basis(paper_h(), wv({0, 0, 0, 0, 0, 0}));
  for (const auto& q : zero.coords) EXPECT_EQ(q, 0);
}

TEST(WeightToRootBasis, RoundTrip) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(-9, 9);
  for (const char* name : {"paperH", "B4", "G2", "F4", "C3"}) {
    const auto a = builtin_algebra(name);
    const RootBasis basis(a);
    for (int trial = 0; trial < 25; ++trial) {
      WeightVector x;
      for (int k = 0; k < a.rank(); ++k) x.coords.push_back(coord(rng));
      EXPECT_EQ(basis.to_weights(basis.to_roots(x)), x) << name;
    }
  }
}

TEST(ParabolicSeed, ComplementIndicator) {
  EXPECT_EQ(parabolic_seed(paper_h(), SubsetJ::make({1, 2, 3, 4}, 6)), wv({0, 0, 0, 0, 1, 1}));
  EXPECT_EQ(parabolic_seed(paper_h(), SubsetJ{}), weyl_vector(paper_h()));
}

TEST(Relabel, Permutes) {
  const auto h = paper_h();
  const auto r = relabel(h, {6, 5, 4, 3, 2, 1});
  EXPECT_EQ(r.at(0, 3), h.at(5, 2));
  EXPECT_EQ(relabel(r, {6, 5, 4, 3, 2, 1}), h);
}
