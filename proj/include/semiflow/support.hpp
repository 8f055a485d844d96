#pragma once

#include <cstdint>
#include <vector>

#include "semiflow/types.hpp"

namespace semiflow {

// Set of place indices, the nonzero coordinates of a semiflow. Fixed
// dimension, packed bits; subset tests dominate the Farkas pruning loop.
class Support {
 public:
  Support() = default;
  explicit Support(int dim) : dim_(dim), bits_((dim + 63) / 64, 0) {}

  static Support of(const IntVec& v) {
    Support s(static_cast<int>(v.size()));
    for (int i = 0; i < s.dim_; ++i)
      if (v[static_cast<std::size_t>(i)] != 0) s.add(i);
    return s;
  }

  int dim() const { return dim_; }

  void add(int i) { bits_[static_cast<std::size_t>(i) >> 6] |= 1ULL << (i & 63); }

  bool test(int i) const {
    return (bits_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1ULL;
  }

  int count() const {
    int n = 0;
    for (auto b : bits_) n += __builtin_popcountll(b);
    return n;
  }

  bool empty() const {
    for (auto b : bits_)
      if (b) return false;
    return true;
  }

  bool subset_of(const Support& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~o.bits_[i]) return false;
    return true;
  }

  bool strict_subset_of(const Support& o) const {
    return subset_of(o) && bits_ != o.bits_;
  }

  Support union_with(const Support& o) const {
    Support r = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] |= o.bits_[i];
    return r;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < dim_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  bool operator==(const Support& o) const {
    return dim_ == o.dim_ && bits_ == o.bits_;
  }
  bool operator!=(const Support& o) const { return !(*this == o); }

  // Order by ascending index sequence; used only for deterministic output.
  bool operator<(const Support& o) const { return indices() < o.indices(); }

 private:
  int dim_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace semiflow
