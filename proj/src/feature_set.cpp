#include "cointersect/feature_set.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "cointersect/error.hpp"

namespace coint {
namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

FeatureSet::FeatureSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

FeatureSet::FeatureSet(std::size_t universe, std::initializer_list<int> members) : FeatureSet(universe) {
  for (int f : members) insert(f);
}

FeatureSet FeatureSet::from_members(std::size_t universe, std::span<const int> members) {
  FeatureSet s(universe);
  for (int f : members) s.insert(f);
  return s;
}

FeatureSet FeatureSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw DomainError("feature mask needs an alphabet of at most 64 features");
  FeatureSet s(universe);
  if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

void FeatureSet::insert(int feature) {
  if (feature < 0 || static_cast<std::size_t>(feature) >= universe_) {
    throw DomainError("feature " + std::to_string(feature) + " outside alphabet of size " +
                      std::to_string(universe_));
  }
  words_[feature / 64] |= std::uint64_t{1} << (feature % 64);
}

void FeatureSet::erase(int feature) {
  if (feature < 0 || static_cast<std::size_t>(feature) >= universe_) return;
  words_[feature / 64] &= ~(std::uint64_t{1} << (feature % 64));
}

bool FeatureSet::contains(int feature) const {
  if (feature < 0 || static_cast<std::size_t>(feature) >= universe_) return false;
  return (words_[feature / 64] >> (feature % 64)) & 1U;
}

std::size_t FeatureSet::size() const {
  std::size_t count = 0;
  for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

bool FeatureSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool FeatureSet::intersects(const FeatureSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

std::size_t FeatureSet::intersection_size(const FeatureSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return count;
}

std::vector<int> FeatureSet::members() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<int>(w * 64) + b);
      bits &= bits - 1;
    }
  }
  return out;
}

FeatureSet FeatureSet::remapped(std::span<const int> mapping, std::size_t new_universe) const {
  FeatureSet out(new_universe);
  for (int f : members()) {
    if (static_cast<std::size_t>(f) >= mapping.size()) throw DomainError("feature mapping too short");
    out.insert(mapping[f]);
  }
  return out;
}

bool operator==(const FeatureSet& lhs, const FeatureSet& rhs) {
  return lhs.universe_ == rhs.universe_ && lhs.words_ == rhs.words_;
}

std::strong_ordering operator<=>(const FeatureSet& lhs, const FeatureSet& rhs) {
  if (auto c = lhs.universe_ <=> rhs.universe_; c != 0) return c;
  // Compare as big integers, most significant word first.
  for (std::size_t i = lhs.words_.size(); i-- > 0;) {
    if (auto c = lhs.words_[i] <=> rhs.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace coint
