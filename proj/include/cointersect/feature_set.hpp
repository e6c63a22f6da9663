#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace coint {

/// Subset of a feature alphabet {0, ..., universe-1}, stored as a bitset.
class FeatureSet {
 public:
  FeatureSet() = default;
  explicit FeatureSet(std::size_t universe);
  FeatureSet(std::size_t universe, std::initializer_list<int> members);

  static FeatureSet from_members(std::size_t universe, std::span<const int> members);
  static FeatureSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return universe_; }

  void insert(int feature);
  void erase(int feature);
  bool contains(int feature) const;

  std::size_t size() const;
  bool empty() const;

  bool intersects(const FeatureSet& other) const;
  std::size_t intersection_size(const FeatureSet& other) const;

  /// Members in increasing order.
  std::vector<int> members() const;

  /// The first 64 features as a mask. Only meaningful when universe() <= 64.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  /// Relabels feature f to mapping[f] inside an alphabet of size new_universe.
  FeatureSet remapped(std::span<const int> mapping, std::size_t new_universe) const;

  friend bool operator==(const FeatureSet& lhs, const FeatureSet& rhs);
  friend std::strong_ordering operator<=>(const FeatureSet& lhs, const FeatureSet& rhs);

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace coint
