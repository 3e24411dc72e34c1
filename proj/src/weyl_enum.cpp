#include "kmp/weyl_enum.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <thread>
#include <unordered_map>

#include "kmp/catalog.hpp"
#include "kmp/error.hpp"
#include "kmp/kernels.hpp"

namespace kmp {

std::string ReducedWord::to_string() const {
  std::string s = "Sigma(";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(letters[i]);
  }
  return s + ")";
}

std::int64_t OrbitLevels::total() const { return std::accumulate(counts.begin(), counts.end(), std::int64_t{0}); }

namespace {

// Images of one level, packed at a fixed stride and sorted lexicographically
// on the first `rank` lanes.
struct Level {
  std::vector<Coord> data;
  std::size_t count = 0;
};

class Packed {
 public:
  Packed(int rank, std::size_t stride) : rank_(rank), stride_(stride) {}

  const Coord* row(const Level& l, std::size_t i) const { return l.data.data() + i * stride_; }

  bool less(const Coord* a, const Coord* b) const {
    return std::lexicographical_compare(a, a + rank_, b, b + rank_);
  }
  bool equal(const Coord* a, const Coord* b) const { return std::equal(a, a + rank_, b); }

  // Sorts and removes duplicates in place.
  void sort_unique(Level& l) const {
    std::vector<std::uint32_t> idx(l.count);
    std::iota(idx.begin(), idx.end(), 0U);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t x, std::uint32_t y) {
      return less(row(l, x), row(l, y));
    });
    std::vector<Coord> out;
    out.reserve(l.data.size());
    std::size_t n = 0;
    for (std::uint32_t i : idx) {
      const Coord* r = row(l, i);
      if (n > 0 && equal(out.data() + (n - 1) * stride_, r)) continue;
      out.insert(out.end(), r, r + stride_);
      ++n;
    }
    l.data = std::move(out);
    l.count = n;
  }

  // Merges sorted, duplicate-free levels into one.
  Level merge(std::vector<Level>& parts) const {
    Level out;
    std::size_t total = 0;
    for (const auto& p : parts) total += p.count;
    out.data.reserve(total * stride_);
    using Cursor = std::pair<std::size_t, std::size_t>;  // (part, row)
    auto greater = [&](const Cursor& x, const Cursor& y) {
      return less(row(parts[y.first], y.second), row(parts[x.first], x.second));
    };
    std::priority_queue<Cursor, std::vector<Cursor>, decltype(greater)> heap(greater);
    for (std::size_t p = 0; p < parts.size(); ++p) {
      if (parts[p].count > 0) heap.emplace(p, 0);
    }
    while (!heap.empty()) {
      const auto [p, i] = heap.top();
      heap.pop();
      const Coord* r = row(parts[p], i);
      if (out.count == 0 || !equal(out.data.data() + (out.count - 1) * stride_, r)) {
        out.data.insert(out.data.end(), r, r + stride_);
        ++out.count;
      }
      if (i + 1 < parts[p].count) heap.emplace(p, i + 1);
    }
    return out;
  }

  // Index of r in a sorted level, or count if absent.
  std::size_t find(const Level& l, const Coord* r) const {
    std::size_t lo = 0;
    std::size_t hi = l.count;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (less(row(l, mid), r)) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo < l.count && equal(row(l, lo), r) ? lo : l.count;
  }

  WeightVector unpack(const Coord* r) const { return WeightVector{{r, r + rank_}}; }

  int rank() const { return rank_; }
  std::size_t stride() const { return stride_; }

 private:
  int rank_;
  std::size_t stride_;
};

struct VectorHash {
  std::size_t operator()(const std::vector<Coord>& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (Coord c : v) {
      h ^= static_cast<std::uint32_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

class Enumerator {
 public:
  Enumerator(const CartanMatrix& a, const WeightVector& seed, const EnumOptions& opt)
      : opt_(opt),
        packed_(a.rank(), kernels::padded_stride(a.rank())),
        columns_(kernels::pack_columns(a)),
        kernel_(kernels::active()),
        regular_(seed.is_strictly_dominant()) {
    if (a.rank() > kernels::kMaxRank) {
      throw Error(ErrorCode::RankTooLarge, "orbit enumeration supports rank <= 64");
    }
    if (seed.size() != static_cast<std::size_t>(a.rank())) {
      throw Error(ErrorCode::DimensionMismatch, "seed length does not match the rank");
    }
    if (!seed.is_dominant()) throw Error(ErrorCode::NonDominantSeed, "seed has a negative coordinate");
    cap_ = opt.max_frontier;
    if (cap_ == 0) {
      const std::size_t per_element = packed_.stride() * sizeof(Coord) * 3 + sizeof(std::uint32_t);
      cap_ = std::max<std::size_t>(1, opt.memory_budget_bytes / per_element);
    }
    result_.seed = seed;
    result_.truncation = opt.max_level;
  }

  OrbitLevels run() {
    Level current;
    current.data.assign(packed_.stride(), 0);
    std::copy(result_.seed.coords.begin(), result_.seed.coords.end(), current.data.begin());
    current.count = 1;
    record_level(current, nullptr);
    if (opt_.strategy == Strategy::GlobalDedup) remember(current, 0);

    for (int k = 0; opt_.max_level < 0 || k < opt_.max_level; ++k) {
      Level next = opt_.strategy == Strategy::FrontierSign ? expand_frontier(current) : expand_global(current, k);
      if (next.count == 0) break;
      record_level(next, &current);
      current = std::move(next);
    }
    result_.terminated = !has_ascent(current);
    return std::move(result_);
  }

 private:
  void check_cap(std::size_t candidates) const {
    if (candidates > cap_) {
      throw Error(ErrorCode::MemoryBudgetExceeded,
                  std::to_string(candidates) + " candidate images exceed the cap of " + std::to_string(cap_));
    }
  }

  void check_regular(const kernels::ExpandResult& r) const {
    if (regular_ && r.zeros != 0) {
      throw Error(ErrorCode::RegularityViolation, "orbit point of a regular seed has a zero coordinate");
    }
  }

  // Also checks regularity, since the last level is never expanded.
  bool has_ascent(const Level& l) const {
    bool ascent = false;
    for (std::size_t i = 0; i < l.count; ++i) {
      const Coord* r = packed_.row(l, i);
      if (regular_ && std::find(r, r + packed_.rank(), 0) != r + packed_.rank()) {
        throw Error(ErrorCode::RegularityViolation, "orbit point of a regular seed has a zero coordinate");
      }
      ascent = ascent || std::any_of(r, r + packed_.rank(), [](Coord c) { return c > 0; });
    }
    return ascent;
  }

  // Ascent images of rows [begin, end), sorted and unique.
  Level expand_range(const Level& src, std::size_t begin, std::size_t end, std::size_t budget) const {
    const std::size_t stride = packed_.stride();
    const int rank = packed_.rank();
    std::vector<Coord> scratch(static_cast<std::size_t>(rank) * stride);
    Level out;
    for (std::size_t i = begin; i < end; ++i) {
      const auto r = kernel_.expand(packed_.row(src, i), columns_.data(), rank, stride, true, scratch.data());
      check_regular(r);
      if (r.overflow) throw Error(ErrorCode::Overflow, "reflected coordinate exceeds 32 bits");
      for (int g = 0; g < rank; ++g) {
        if (!((r.ascents >> g) & 1U)) continue;
        const Coord* img = scratch.data() + static_cast<std::size_t>(g) * stride;
        out.data.insert(out.data.end(), img, img + stride);
        ++out.count;
      }
      check_cap(out.count + budget);
    }
    packed_.sort_unique(out);
    return out;
  }

  Level expand_frontier(const Level& src) const {
    const std::size_t threads = std::max(1, opt_.threads);
    if (threads == 1 || src.count < 4096) return expand_range(src, 0, src.count, 0);

    std::vector<Level> parts(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    const std::size_t chunk = (src.count + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        const std::size_t b = std::min(src.count, t * chunk);
        const std::size_t e = std::min(src.count, b + chunk);
        try {
          // Each worker gets an equal share of the cap.
          parts[t] = expand_range(src, b, e, cap_ - cap_ / threads);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    return packed_.merge(parts);
  }

  void remember(const Level& l, int level) {
    for (std::size_t i = 0; i < l.count; ++i) {
      const Coord* r = packed_.row(l, i);
      seen_.emplace(std::vector<Coord>(r, r + packed_.rank()), level);
    }
  }

  Level expand_global(const Level& src, int k) {
    const std::size_t stride = packed_.stride();
    const int rank = packed_.rank();
    std::vector<Coord> scratch(static_cast<std::size_t>(rank) * stride);
    Level out;
    std::vector<Coord> key(static_cast<std::size_t>(rank));
    for (std::size_t i = 0; i < src.count; ++i) {
      const Coord* x = packed_.row(src, i);
      const auto r = kernel_.expand(x, columns_.data(), rank, stride, false, scratch.data());
      check_regular(r);
      if (r.overflow) throw Error(ErrorCode::Overflow, "reflected coordinate exceeds 32 bits");
      for (int g = 0; g < rank; ++g) {
        if ((r.zeros >> g) & 1U) continue;  // sigma_g fixes x
        const Coord* img = scratch.data() + static_cast<std::size_t>(g) * stride;
        std::copy(img, img + rank, key.begin());
        const auto [it, inserted] = seen_.emplace(key, k + 1);
        if (!inserted) {
          // Depth differs by exactly one along an edge.
          if (it->second != k - 1 && it->second != k + 1) {
            throw Error(ErrorCode::ImageRecurrence, "orbit image reached at levels " +
                                                        std::to_string(it->second) + " and " +
                                                        std::to_string(k + 1));
          }
          continue;
        }
        out.data.insert(out.data.end(), img, img + stride);
        ++out.count;
        check_cap(out.count);
      }
    }
    packed_.sort_unique(out);
    return out;
  }

  void record_level(const Level& level, const Level* previous) {
    result_.counts.push_back(static_cast<std::int64_t>(level.count));
    if (!opt_.collect_elements) return;

    std::vector<ReducedWord> words(level.count);
    std::vector<ElementRecord> records(level.count);
    const std::size_t stride = packed_.stride();
    std::vector<Coord> parent(stride);
    for (std::size_t i = 0; i < level.count; ++i) {
      const Coord* x = packed_.row(level, i);
      if (previous != nullptr) {
        // The least left descent starts the lexicographically least word.
        int g = 0;
        while (x[g] >= 0) ++g;
        const Coord* col = columns_.data() + static_cast<std::size_t>(g) * stride;
        for (std::size_t k = 0; k < stride; ++k) {
          parent[k] = static_cast<Coord>(static_cast<std::int64_t>(x[k]) - static_cast<std::int64_t>(x[g]) * col[k]);
        }
        const std::size_t p = packed_.find(*previous, parent.data());
        if (p == previous->count) {
          throw Error(ErrorCode::NotInOrbit, "descent of an orbit point missing from the previous level");
        }
        words[i].letters.push_back(g + 1);
        const auto& tail = prev_words_[p].letters;
        words[i].letters.insert(words[i].letters.end(), tail.begin(), tail.end());
      }
      records[i] = ElementRecord{packed_.unpack(x), words[i]};
    }
    std::sort(records.begin(), records.end(),
              [](const ElementRecord& l, const ElementRecord& r) { return l.word < r.word; });
    result_.elements.push_back(std::move(records));
    prev_words_ = std::move(words);
  }

  EnumOptions opt_;
  Packed packed_;
  std::vector<Coord> columns_;
  const kernels::KernelTable& kernel_;
  bool regular_;
  std::size_t cap_ = 0;
  std::unordered_map<std::vector<Coord>, int, VectorHash> seen_;
  std::vector<ReducedWord> prev_words_;  // aligned with the previous level's sorted rows
  OrbitLevels result_;
};

GrowthSeries to_series(const OrbitLevels& levels, int max_degree) {
  const int order = max_degree >= 0 ? max_degree : static_cast<int>(levels.counts.size()) - 1;
  TruncatedSeries s(order);
  for (int k = 0; k <= order && k < static_cast<int>(levels.counts.size()); ++k) {
    s.coeff(k) = levels.counts[static_cast<std::size_t>(k)];
  }
  return GrowthSeries{s, levels.terminated};
}

}  // namespace

OrbitLevels orbit_bfs(const CartanMatrix& a, const WeightVector& seed, const EnumOptions& options) {
  return Enumerator(a, seed, options).run();
}

GrowthSeries poincare_series(const CartanMatrix& a, int max_degree, EnumOptions options) {
  options.max_level = max_degree;
  return to_series(orbit_bfs(a, weyl_vector(a), options), max_degree);
}

GrowthSeries coset_series(const CartanMatrix& a, const SubsetJ& j, int max_degree, EnumOptions options) {
  options.max_level = max_degree;
  return to_series(orbit_bfs(a, parabolic_seed(a, j), options), max_degree);
}

ReducedWord canonical_word(const CartanMatrix& a, const WeightVector& image, const WeightVector& seed,
                           std::size_t max_steps) {
  if (image.size() != static_cast<std::size_t>(a.rank()) || seed.size() != image.size()) {
    throw Error(ErrorCode::DimensionMismatch, "image and seed must match the rank");
  }
  ReducedWord word;
  WeightVector x = image;
  for (std::size_t step = 0; x != seed; ++step) {
    if (step == max_steps) throw Error(ErrorCode::NotInOrbit, "descent walk exceeded its step budget");
    const auto it = std::find_if(x.coords.begin(), x.coords.end(), [](Coord c) { return c < 0; });
    if (it == x.coords.end()) {
      throw Error(ErrorCode::NotInOrbit, "walk reached a dominant weight other than the seed");
    }
    const int g = static_cast<int>(it - x.coords.begin()) + 1;
    word.letters.push_back(g);
    x = reflect(a, x, g);
  }
  return word;
}

WeightVector apply_word(const CartanMatrix& a, const ReducedWord& word, const WeightVector& x) {
  WeightVector y = x;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) y = reflect(a, y, *it);
  return y;
}

FactorizationReport factorization_report(const CartanMatrix& a, const SubsetJ& j, int max_degree,
                                         EnumOptions options) {
  if (max_degree < 0) throw Error(ErrorCode::DimensionMismatch, "factorization needs a finite order");
  FactorizationReport rep;
  rep.full = poincare_series(a, max_degree, options).series;
  rep.cosets = coset_series(a, j, max_degree, options).series;
  if (j.empty()) {
    rep.parabolic = TruncatedSeries::from_polynomial(IntPolynomial{1}, max_degree);
    rep.parabolic_source = "trivial";
  } else {
    const CartanMatrix sub = sub_gcm(a, j);
    const auto kind = recognize(sub);
    if (kind && !kind->affine) {
      rep.parabolic = TruncatedSeries::from_polynomial(finite_poincare(kind->type), max_degree);
      rep.parabolic_source = "finite " + kind->type.name();
    } else if (kind) {
      rep.parabolic = bott_series(kind->type, max_degree);
      rep.parabolic_source = "affine " + kind->type.name();
    } else {
      rep.parabolic = poincare_series(sub, max_degree, options).series;
      rep.parabolic_source = "bfs";
    }
  }
  rep.check = convolution_check(rep.full, rep.parabolic, rep.cosets);
  return rep;
}

}  // namespace kmp
