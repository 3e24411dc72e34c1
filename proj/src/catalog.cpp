#include "kmp/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "kmp/error.hpp"

namespace kmp {

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Rows identity_rows(int n) {
  Rows m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  return m;
}

// 1-based simple bond between i and j.
void bond(Rows& m, int i, int j) {
  m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = -1;
  m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = -1;
}

void set(Rows& m, int i, int j, std::int64_t v) {
  m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
}

}  // namespace

FiniteType FiniteType::make(Family family, int rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) {
    throw Error(ErrorCode::InvalidRankForFamily,
                std::string(1, family_letter(family)) + std::to_string(rank));
  }
  return FiniteType{family, rank};
}

FiniteType FiniteType::parse(std::string_view name) {
  static const std::string letters = "ABCDEFG";
  if (name.size() < 2 || letters.find(name[0]) == std::string::npos) {
    throw Error(ErrorCode::UnknownAlgebra, std::string(name));
  }
  int rank = 0;
  const char* first = name.data() + 1;
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, rank);
  if (ec != std::errc{} || ptr != last) throw Error(ErrorCode::UnknownAlgebra, std::string(name));
  return make(static_cast<Family>(letters.find(name[0])), rank);
}

std::string FiniteType::name() const { return family_letter(family) + std::to_string(rank); }

DegreeTable degrees(const FiniteType& t) {
  std::vector<int> d;
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::G: d = {2, 6}; break;
  }
  std::sort(d.begin(), d.end());
  return DegreeTable{d};
}

IntPolynomial finite_poincare(const FiniteType& t) {
  IntPolynomial p{1};
  for (int nu : degrees(t).degrees) p = p * q_integer(nu);
  return p;
}

std::int64_t group_order(const FiniteType& t) { return finite_poincare(t).eval(1); }

TruncatedSeries bott_series(const FiniteType& t, int order) {
  TruncatedSeries s = TruncatedSeries::from_polynomial(finite_poincare(t), order);
  for (int nu : degrees(t).degrees) {
    // 1 - t^(nu-1)
    const IntPolynomial factor = IntPolynomial{1} - IntPolynomial::monomial(1, nu - 1);
    s = mul(s, inverse(factor, order), order);
  }
  return s;
}

CartanMatrix cartan_matrix(const FiniteType& t) {
  const int n = t.rank;
  Rows m = identity_rows(n);
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(m, i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) bond(m, i, i + 1);
      set(m, n, n - 1, -2);  // alpha_n short
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) bond(m, i, i + 1);
      set(m, n - 1, n, -2);  // alpha_n long
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) bond(m, i, i + 1);
      bond(m, n - 2, n);
      break;
    case Family::E:
      bond(m, 1, 3);
      bond(m, 2, 4);
      for (int i = 3; i < n; ++i) bond(m, i, i + 1);
      break;
    case Family::F:
      bond(m, 1, 2);
      bond(m, 2, 3);
      bond(m, 3, 4);
      set(m, 3, 2, -2);
      break;
    case Family::G:
      bond(m, 1, 2);
      set(m, 1, 2, -3);
      break;
  }
  return CartanMatrix::validate(m, t.name());
}

namespace {

// Positive roots paired with their coroots, both in simple coordinates.
// The orbit of each simple (root, coroot) pair under the simple reflections.
std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> root_coroot_pairs(
    const CartanMatrix& a) {
  const int n = a.rank();
  using Vec = std::vector<std::int64_t>;
  std::map<Vec, Vec> seen;
  std::vector<Vec> stack;
  for (int i = 0; i < n; ++i) {
    Vec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    seen.emplace(e, e);
    stack.push_back(e);
  }
  while (!stack.empty()) {
    const Vec root = stack.back();
    stack.pop_back();
    const Vec coroot = seen.at(root);
    for (int k = 0; k < n; ++k) {
      // <beta, alpha_k^vee> = sum_j beta_j A(k, j); <alpha_k, beta^vee> = sum_j b_j A(j, k).
      std::int64_t pair_r = 0;
      std::int64_t pair_c = 0;
      for (int j = 0; j < n; ++j) {
        pair_r += root[static_cast<std::size_t>(j)] * a.at(k, j);
        pair_c += coroot[static_cast<std::size_t>(j)] * a.at(j, k);
      }
      Vec r2 = root;
      Vec c2 = coroot;
      r2[static_cast<std::size_t>(k)] -= pair_r;
      c2[static_cast<std::size_t>(k)] -= pair_c;
      const bool positive = std::all_of(r2.begin(), r2.end(), [](std::int64_t v) { return v >= 0; });
      if (!positive) continue;
      if (seen.emplace(r2, c2).second) stack.push_back(r2);
    }
  }
  return {seen.begin(), seen.end()};
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> highest_pair(const FiniteType& t) {
  const auto pairs = root_coroot_pairs(cartan_matrix(t));
  auto height = [](const std::vector<std::int64_t>& v) {
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
  };
  return *std::max_element(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
    return height(x.first) < height(y.first);
  });
}

}  // namespace

std::vector<std::int64_t> highest_root(const FiniteType& t) { return highest_pair(t).first; }

CartanMatrix affine_cartan_matrix(const FiniteType& t) {
  const CartanMatrix fin = cartan_matrix(t);
  const auto [theta, theta_vee] = highest_pair(t);
  const int n = t.rank;
  Rows m = identity_rows(n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)] = fin.at(i, j);
    }
  }
  for (int k = 0; k < n; ++k) {
    std::int64_t to_zero = 0;    // <alpha_0, alpha_k^vee> = -<theta, alpha_k^vee>
    std::int64_t from_zero = 0;  // <alpha_k, alpha_0^vee> = -<alpha_k, theta^vee>
    for (int j = 0; j < n; ++j) {
      to_zero -= theta[static_cast<std::size_t>(j)] * fin.at(k, j);
      from_zero -= theta_vee[static_cast<std::size_t>(j)] * fin.at(j, k);
    }
    m[static_cast<std::size_t>(k + 1)][0] = to_zero;
    m[0][static_cast<std::size_t>(k + 1)] = from_zero;
  }
  return CartanMatrix::validate(m, "aff" + t.name());
}

CartanMatrix paper_h() {
  Rows m = identity_rows(6);
  bond(m, 1, 2);
  bond(m, 2, 3);
  bond(m, 3, 4);
  bond(m, 3, 5);
  bond(m, 3, 6);
  return CartanMatrix::validate(m, "paperH");
}

CartanMatrix builtin_algebra(std::string_view name) {
  if (name == "paperH") return paper_h();
  if (name.substr(0, 3) == "aff") return affine_cartan_matrix(FiniteType::parse(name.substr(3)));
  return cartan_matrix(FiniteType::parse(name));
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (int n = 1; n <= 8; ++n) names.push_back("A" + std::to_string(n));
  for (int n = 2; n <= 5; ++n) names.push_back("B" + std::to_string(n));
  for (int n = 3; n <= 5; ++n) names.push_back("C" + std::to_string(n));
  names.insert(names.end(), {"D4", "D5", "G2", "F4", "paperH", "affD4"});
  return names;
}

namespace {

// Finds a relabeling perm with a(perm[r], perm[c]) == b(r, c).
bool isomorphic(const CartanMatrix& a, const CartanMatrix& b) {
  const int n = a.rank();
  if (b.rank() != n) return false;
  auto signature = [n](const CartanMatrix& m, int i) {
    std::vector<std::pair<Coord, Coord>> s;
    for (int j = 0; j < n; ++j) {
      if (j != i && m.at(i, j) != 0) s.emplace_back(m.at(i, j), m.at(j, i));
    }
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(int)> place = [&](int r) -> bool {
    if (r == n) return true;
    const auto want = signature(b, r);
    for (int cand = 0; cand < n; ++cand) {
      if (used[static_cast<std::size_t>(cand)] || signature(a, cand) != want) continue;
      bool ok = true;
      for (int q = 0; q < r && ok; ++q) {
        const int pq = perm[static_cast<std::size_t>(q)];
        ok = a.at(cand, pq) == b.at(r, q) && a.at(pq, cand) == b.at(q, r);
      }
      if (!ok) continue;
      perm[static_cast<std::size_t>(r)] = cand;
      used[static_cast<std::size_t>(cand)] = true;
      if (place(r + 1)) return true;
      used[static_cast<std::size_t>(cand)] = false;
    }
    return false;
  };
  return place(0);
}

std::vector<FiniteType> types_of_rank(int n) {
  std::vector<FiniteType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
    try {
      out.push_back(FiniteType::make(f, n));
    } catch (const Error&) {
    }
  }
  return out;
}

}  // namespace

std::optional<Recognized> recognize(const CartanMatrix& a) {
  for (const FiniteType& t : types_of_rank(a.rank())) {
    if (isomorphic(a, cartan_matrix(t))) return Recognized{false, t};
  }
  if (a.rank() >= 2) {
    for (const FiniteType& t : types_of_rank(a.rank() - 1)) {
      if (isomorphic(a, affine_cartan_matrix(t))) return Recognized{true, t};
    }
  }
  return std::nullopt;
}

}  // namespace kmp
