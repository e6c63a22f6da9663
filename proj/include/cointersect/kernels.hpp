#pragma once

// Row-match kernels used by scoring and annealing. Each vertex carries its
// A- and B-features as 64-bit masks; the adjacency row of the probe vertex is
// one byte per vertex (0 or 1).
//
// count_row_matches returns the number of vertices v in [0, n) for which
//   ((a_masks[v] & qa) != 0 && (b_masks[v] & qb) != 0) == (adj_row[v] != 0).
// The caller handles the probe vertex itself (see row_matches_excluding).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace coint::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Best variant supported by this build and this CPU.
Isa detected_isa();
/// Variant currently used by the dispatching entry points.
Isa active_isa();
/// Overrides dispatch (tests and benchmarks). Requesting an unsupported ISA
/// falls back to scalar; the ISA actually selected is returned.
Isa set_active_isa(Isa isa);
bool isa_supported(Isa isa);

namespace scalar {
std::size_t count_row_matches(std::span<const std::uint64_t> a_masks, std::span<const std::uint64_t> b_masks,
                              std::span<const std::uint8_t> adj_row, std::uint64_t qa, std::uint64_t qb);
}

#if defined(COINTERSECT_HAVE_AVX2)
namespace avx2 {
std::size_t count_row_matches(std::span<const std::uint64_t> a_masks, std::span<const std::uint64_t> b_masks,
                              std::span<const std::uint8_t> adj_row, std::uint64_t qa, std::uint64_t qb);
}
#endif

/// Dispatches to the active variant.
std::size_t count_row_matches(std::span<const std::uint64_t> a_masks, std::span<const std::uint64_t> b_masks,
                              std::span<const std::uint8_t> adj_row, std::uint64_t qa, std::uint64_t qb);

/// Matches between `self` (carrying qa, qb) and every other vertex.
inline std::size_t row_matches_excluding(std::span<const std::uint64_t> a_masks,
                                         std::span<const std::uint64_t> b_masks,
                                         std::span<const std::uint8_t> adj_row, std::uint64_t qa, std::uint64_t qb,
                                         std::size_t self) {
  std::size_t count = count_row_matches(a_masks, b_masks, adj_row, qa, qb);
  const bool linked = (a_masks[self] & qa) != 0 && (b_masks[self] & qb) != 0;
  if (linked == (adj_row[self] != 0)) --count;
  return count;
}

}  // namespace coint::kernels
