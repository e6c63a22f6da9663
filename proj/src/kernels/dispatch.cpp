#include <atomic>

#include "cointersect/kernels.hpp"

namespace coint::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(COINTERSECT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2: {
      static const bool has = cpu_has_avx2();
      return has;
    }
  }
  return false;
}

Isa detected_isa() { return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

Isa active_isa() { return active().load(std::memory_order_relaxed); }

Isa set_active_isa(Isa isa) {
  if (!isa_supported(isa)) isa = Isa::scalar;
  active().store(isa, std::memory_order_relaxed);
  return isa;
}

std::size_t count_row_matches(std::span<const std::uint64_t> a_masks, std::span<const std::uint64_t> b_masks,
                              std::span<const std::uint8_t> adj_row, std::uint64_t qa, std::uint64_t qb) {
#if defined(COINTERSECT_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return avx2::count_row_matches(a_masks, b_masks, adj_row, qa, qb);
#endif
  return scalar::count_row_matches(a_masks, b_masks, adj_row, qa, qb);
}

}  // namespace coint::kernels
