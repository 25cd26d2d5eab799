#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace unimap {

// Finite count table over integer or string outcomes. Probabilities are the
// counts divided by the total, exactly (mpq_class) or as doubles.
template <class Key>
class DistTable {
 public:
  void add(const Key& key, std::uint64_t count = 1) {
    counts_[key] += count;
    total_ += count;
  }

  void merge(const DistTable& other) {
    for (const auto& [k, c] : other.counts_) add(k, c);
  }

  std::uint64_t count(const Key& key) const {
    auto it = counts_.find(key);
    return it == counts_.end() ? 0 : it->second;
  }
  std::uint64_t total() const { return total_; }
  bool empty() const { return total_ == 0; }
  const std::map<Key, std::uint64_t>& counts() const { return counts_; }

  mpq_class probability(const Key& key) const {
    if (total_ == 0) throw std::logic_error("probability of an empty table");
    mpq_class p(mpz_class(static_cast<unsigned long>(count(key))), mpz_class(static_cast<unsigned long>(total_)));
    p.canonicalize();
    return p;
  }
  double frequency(const Key& key) const {
    return total_ == 0 ? 0.0 : static_cast<double>(count(key)) / static_cast<double>(total_);
  }
  std::map<Key, double> frequencies() const {
    std::map<Key, double> out;
    for (const auto& [k, c] : counts_) out[k] = static_cast<double>(c) / static_cast<double>(total_);
    return out;
  }

  friend bool operator==(const DistTable&, const DistTable&) = default;

 private:
  std::map<Key, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

}  // namespace unimap
