#include <atomic>

#include "kmp/kernels.hpp"

namespace kmp::kernels {

namespace {

const KernelTable kScalar{Isa::Scalar, "scalar", &detail::expand_scalar};
#if defined(KMP_HAVE_AVX2)
const KernelTable kAvx2{Isa::Avx2, "avx2", &detail::expand_avx2};
#endif

bool cpu_has_avx2() {
#if defined(KMP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* best() {
  if (const KernelTable* t = avx2_table()) return t;
  return &kScalar;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{best()};
  return table;
}

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

const KernelTable* avx2_table() {
#if defined(KMP_HAVE_AVX2)
  static const bool ok = cpu_has_avx2();
  return ok ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

bool select(Isa isa) {
  const KernelTable* t = isa == Isa::Scalar ? &kScalar : avx2_table();
  if (t == nullptr) return false;
  current().store(t, std::memory_order_release);
  return true;
}

void select_auto() { current().store(best(), std::memory_order_release); }

std::vector<Isa> available() {
  std::vector<Isa> out{Isa::Scalar};
  if (avx2_table() != nullptr) out.push_back(Isa::Avx2);
  return out;
}

std::string_view isa_name(Isa isa) { return isa == Isa::Scalar ? "scalar" : "avx2"; }

std::vector<Coord> pack_columns(const CartanMatrix& a) {
  const std::size_t stride = padded_stride(a.rank());
  std::vector<Coord> packed(static_cast<std::size_t>(a.rank()) * stride, 0);
  for (int g = 0; g < a.rank(); ++g) {
    const auto col = a.column(g);
    for (int k = 0; k < a.rank(); ++k) {
      packed[static_cast<std::size_t>(g) * stride + static_cast<std::size_t>(k)] = col[static_cast<std::size_t>(k)];
    }
  }
  return packed;
}

}  // namespace kmp::kernels
