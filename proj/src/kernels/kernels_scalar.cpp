#include <limits>

#include "kmp/kernels.hpp"

namespace kmp::kernels::detail {

ExpandResult expand_scalar(const Coord* x, const Coord* columns, int rank, std::size_t stride,
                           bool only_ascents, Coord* out) {
  ExpandResult res;
  constexpr std::int64_t lo = std::numeric_limits<Coord>::min();
  constexpr std::int64_t hi = std::numeric_limits<Coord>::max();
  for (int g = 0; g < rank; ++g) {
    const std::int64_t xg = x[g];
    if (xg > 0) res.ascents |= std::uint64_t{1} << g;
    if (xg == 0) res.zeros |= std::uint64_t{1} << g;
    if (only_ascents && xg <= 0) continue;
    const Coord* col = columns + static_cast<std::size_t>(g) * stride;
    Coord* dst = out + static_cast<std::size_t>(g) * stride;
    for (std::size_t k = 0; k < stride; ++k) {
      const std::int64_t v = static_cast<std::int64_t>(x[k]) - xg * col[k];
      if (v < lo || v > hi) res.overflow = true;
      dst[k] = static_cast<Coord>(v);
    }
  }
  return res;
}

}  // namespace kmp::kernels::detail
