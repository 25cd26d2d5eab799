#include "unimap/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace unimap {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> hit(image_.size(), 0);
  for (int x : image_) {
    if (x < 0 || x >= size() || hit[x]) throw std::invalid_argument("not a permutation");
    hit[x] = 1;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> id(m);
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(image_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    auto& cyc = out.emplace_back();
    for (int j = i; !seen[j]; j = image_[j]) {
      seen[j] = 1;
      cyc.push_back(j);
    }
  }
  return out;
}

std::vector<int> Permutation::cycle_ids() const {
  std::vector<int> id(image_.size(), -1);
  int next = 0;
  for (int i = 0; i < size(); ++i) {
    if (id[i] >= 0) continue;
    for (int j = i; id[j] < 0; j = image_[j]) id[j] = next;
    ++next;
  }
  return id;
}

int Permutation::cycle_count() const { return static_cast<int>(cycles().size()); }

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> type;
  for (const auto& c : cycles()) type.push_back(static_cast<int>(c.size()));
  std::sort(type.begin(), type.end(), std::greater<>());
  return type;
}

bool Permutation::all_cycles_odd() const {
  auto type = cycle_type();
  return std::all_of(type.begin(), type.end(), [](int len) { return len % 2 == 1; });
}

}  // namespace unimap
