#pragma once

// Data-parallel inner loop of the orbit enumeration: applying every simple
// reflection to one packed weight vector.
//
// Packed layout: a weight of rank n occupies `stride` int32 lanes
// (stride = n rounded up to kLaneBlock), padding lanes are zero. The Cartan
// columns use the same layout, column g at columns + g * stride.
//
// A scalar reference implementation is always built; an AVX2 variant is
// compiled on x86-64 and chosen at runtime when the CPU supports it.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "kmp/lattice.hpp"

namespace kmp::kernels {

inline constexpr std::size_t kLaneBlock = 8;
inline constexpr int kMaxRank = 64;

inline std::size_t padded_stride(int rank) {
  return (static_cast<std::size_t>(rank) + kLaneBlock - 1) / kLaneBlock * kLaneBlock;
}

struct ExpandResult {
  std::uint64_t ascents = 0;  // bit g set iff x_g > 0
  std::uint64_t zeros = 0;    // bit g set iff x_g == 0
  bool overflow = false;      // some reflected coordinate left the int32 range
};

// out[g * stride + k] = x[k] - x[g] * columns[g * stride + k] for g < rank.
// When only_ascents is set, rows for generators with x_g <= 0 are left
// untouched.
using ExpandFn = ExpandResult (*)(const Coord* x, const Coord* columns, int rank, std::size_t stride,
                                  bool only_ascents, Coord* out);

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  std::string_view name;
  ExpandFn expand;
};

const KernelTable& scalar_table();
// nullptr when the AVX2 variant was not built or the CPU lacks AVX2.
const KernelTable* avx2_table();

// Best table for this CPU, unless overridden.
const KernelTable& active();
// Returns false if the requested ISA is unavailable; the selection is unchanged.
bool select(Isa isa);
void select_auto();

std::vector<Isa> available();
std::string_view isa_name(Isa isa);

// Packs the Cartan columns into the kernel layout.
std::vector<Coord> pack_columns(const CartanMatrix& a);

namespace detail {
ExpandResult expand_scalar(const Coord* x, const Coord* columns, int rank, std::size_t stride,
                           bool only_ascents, Coord* out);
#if defined(KMP_HAVE_AVX2)
ExpandResult expand_avx2(const Coord* x, const Coord* columns, int rank, std::size_t stride,
                         bool only_ascents, Coord* out);
#endif
}  // namespace detail

}  // namespace kmp::kernels
