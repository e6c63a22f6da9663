#include "cointersect/kernels.hpp"

namespace coint::kernels::scalar {

std::size_t count_row_matches(std::span<const std::uint64_t> a_masks, std::span<const std::uint64_t> b_masks,
                              std::span<const std::uint8_t> adj_row, std::uint64_t qa, std::uint64_t qb) {
  const std::size_t n = adj_row.size();
  std::size_t count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const bool linked = (a_masks[v] & qa) != 0 && (b_masks[v] & qb) != 0;
    count += static_cast<std::size_t>(linked == (adj_row[v] != 0));
  }
  return count;
}

}  // namespace coint::kernels::scalar
