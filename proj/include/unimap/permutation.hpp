#pragma once

#include <vector>

namespace unimap {

// Permutation of {0, ..., m-1} stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless `image` is a bijection.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int m);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }

  // Cycles in order of their smallest element, each starting at that element.
  std::vector<std::vector<int>> cycles() const;
  // cycle_id[i] = index of the cycle containing i, in the order of cycles().
  std::vector<int> cycle_ids() const;
  int cycle_count() const;
  // Cycle lengths sorted in non-increasing order.
  std::vector<int> cycle_type() const;
  bool all_cycles_odd() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  std::vector<int> image_;
};

}  // namespace unimap
