#include "unimap/unicellular_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "unimap/asymptotics.hpp"

namespace unimap {

namespace {

void check_cycle_args(int m, int s) {
  if (m < 0 || s < 0) throw std::invalid_argument("odd-cycle permutation: negative size");
  if (s > m) throw std::invalid_argument("odd-cycle permutation: more cycles than elements");
  if ((m - s) % 2 != 0) throw std::invalid_argument("odd-cycle permutation: m and s differ in parity");
  if (s == 0 && m > 0) throw std::invalid_argument("odd-cycle permutation: zero cycles");
}

// Uniform labelling cut into consecutive blocks, each closed into a cycle.
// The shuffled order inside a block is already a uniform cyclic order.
Permutation blocks_to_permutation(int m, const std::vector<int>& sizes, Rng& rng) {
  std::vector<int> labels(m);
  std::iota(labels.begin(), labels.end(), 0);
  std::shuffle(labels.begin(), labels.end(), rng);
  std::vector<int> image(m);
  std::size_t pos = 0;
  for (int k : sizes) {
    for (int i = 0; i < k; ++i) image[labels[pos + i]] = labels[pos + (i + 1) % k];
    pos += static_cast<std::size_t>(k);
  }
  return Permutation(std::move(image));
}

}  // namespace

OddCyclePermutationSampler::OddCyclePermutationSampler(int m, int s, double beta_hint, Method method)
    : m_(m), s_(s), beta_(0.0), method_(method) {
  check_cycle_args(m, s);
  if (m == s) return;
  if (method == Method::exact_table) {
    if (m > 200) throw std::invalid_argument("exact odd-cycle sampling is limited to m <= 200");
    table_.emplace(s, (m - s) / 2);
    return;
  }
  beta_ = beta_hint > 0.0 ? beta_hint : solve_beta_n(m - 1, s);
  law_.emplace(beta_);
}

std::vector<int> OddCyclePermutationSampler::sample_sizes(Rng& rng) const {
  if (m_ == s_) return std::vector<int>(s_, 1);
  if (method_ == Method::exact_table) {
    auto type = sample_exact(rng).cycles();
    std::vector<int> sizes;
    for (const auto& c : type) sizes.push_back(static_cast<int>(c.size()));
    // The ordered-size law is exchangeable: a uniform order of the cycles
    // of a uniform permutation has it.
    std::shuffle(sizes.begin(), sizes.end(), rng);
    return sizes;
  }
  std::vector<int> sizes(s_);
  const double log_beta = std::log(beta_);
  for (;;) {
    long sum = 0;
    bool overflow = false;
    for (int i = 0; i + 1 < s_; ++i) {
      const long k = law_->sample(rng);
      sum += k;
      if (sum > m_ - 1) {
        overflow = true;
        break;
      }
      sizes[i] = static_cast<int>(k);
    }
    if (overflow) continue;
    const long last = m_ - sum;
    // P(X = last) / P(X = 1) = beta^{last-1} / last.
    const double accept = std::exp(static_cast<double>(last - 1) * log_beta) / static_cast<double>(last);
    if (uniform01(rng) < accept) {
      sizes[s_ - 1] = static_cast<int>(last);
      return sizes;
    }
  }
}

Permutation OddCyclePermutationSampler::sample_exact(Rng& rng) const {
  // Cycle through the smallest unplaced element has length k with
  // probability (m'-1)!/(m'-k)! a(m'-k, j-1) / a(m', j); its other members
  // are a uniform ordered (k-1)-subset of the rest.
  std::vector<int> rest(m_);
  std::iota(rest.begin(), rest.end(), 0);
  std::vector<int> image(m_);
  int remaining = m_, cycles = s_;
  std::size_t front = 0;
  while (remaining > 0) {
    const mpz_class& total = table_->at(remaining, cycles);
    mpz_class falling = 1;
    const double u = uniform01(rng);
    mpq_class cum = 0;
    int chosen = 1;
    for (int k = 1; k <= remaining - cycles + 1; k += 2) {
      if (k > 1) {
        falling *= remaining - k + 2;
        falling *= remaining - k + 1;
      }
      const mpz_class& sub = table_->at(remaining - k, cycles - 1);
      if (sub == 0) continue;
      cum += mpq_class(falling * sub, total);
      chosen = k;
      if (u < cum.get_d()) break;
    }
    const int head = rest[front];
    std::vector<int> members{head};
    for (int i = 1; i < chosen; ++i) {
      const std::size_t j = front + static_cast<std::size_t>(i) +
                            uniform_below(rng, static_cast<std::uint64_t>(remaining - i));
      std::swap(rest[front + static_cast<std::size_t>(i)], rest[j]);
      members.push_back(rest[front + static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < chosen; ++i) image[members[i]] = members[(i + 1) % chosen];
    front += static_cast<std::size_t>(chosen);
    remaining -= chosen;
    --cycles;
  }
  return Permutation(std::move(image));
}

Permutation OddCyclePermutationSampler::sample(Rng& rng) const {
  if (m_ == s_) return Permutation::identity(m_);
  if (method_ == Method::exact_table) return sample_exact(rng);
  return blocks_to_permutation(m_, sample_sizes(rng), rng);
}

Permutation sample_odd_cycle_permutation(int m, int s, double beta_hint, Rng& rng) {
  return OddCyclePermutationSampler(m, s, beta_hint).sample(rng);
}

namespace {

int checked_cycles(int n, int g) {
  if (n < 0 || g < 0) throw std::invalid_argument("sample_unicellular: negative argument");
  if (2 * g > n) throw std::invalid_argument("sample_unicellular: U_{g,n} is empty when 2g > n");
  return n + 1 - 2 * g;
}

}  // namespace

UnicellularSampler::UnicellularSampler(int n, int g) : n_(n), g_(g), perms_(n + 1, checked_cycles(n, g)) {}

UnicellularSample quotient(CDecoratedTree cdt) {
  UnicellularSample out;
  const PlaneTree& t = cdt.tree;
  const int nv = t.vertex_count();
  const auto cycle_id = cdt.perm.cycle_ids();
  std::vector<int> cycle_len(nv, 0);
  for (int v = 0; v < nv; ++v) ++cycle_len[cycle_id[v]];

  std::vector<int> relabel(nv, -1);
  out.vertex_class.resize(nv);
  out.fixed_point_mask.resize(nv);
  int next = 0;
  for (int v = 0; v < nv; ++v) {
    int& cls = relabel[cycle_id[v]];
    if (cls < 0) {
      cls = next++;
      out.class_size.push_back(cycle_len[cycle_id[v]]);
    }
    out.vertex_class[v] = cls;
    out.fixed_point_mask[v] = cdt.perm(v) == v;
  }
  out.graph.v = next;
  out.graph.root_vertex = 0;
  out.graph.edges.reserve(t.edge_count());
  for (int c = 1; c < nv; ++c) out.graph.edges.emplace_back(out.vertex_class[t.parent(c)], out.vertex_class[c]);
  out.graph.root_edge = t.edge_count() > 0 ? 0 : -1;
  out.source = std::move(cdt);
  return out;
}

UnicellularSample UnicellularSampler::sample(Rng& rng) const {
  CDecoratedTree cdt;
  cdt.tree = sample_plane_tree(n_, rng);
  cdt.perm = perms_.sample(rng);
  const int s = n_ + 1 - 2 * g_;
  cdt.signs.resize(s);
  for (int& sign : cdt.signs) sign = (rng() & 1ULL) ? 1 : -1;
  return quotient(std::move(cdt));
}

UnicellularSample sample_unicellular(int n, int g, Rng& rng) { return UnicellularSampler(n, g).sample(rng); }

int root_degree(const UnicellularSample& sample) { return sample.graph.degree(sample.graph.root_vertex); }

BallView ball_as_tree(const UnicellularSample& sample, int r) {
  if (r < 0) throw std::invalid_argument("negative radius");
  BallView view;
  const RootedGraph& g = sample.graph;
  const auto dist = g.distances();
  for (int x = 0; x < g.v; ++x) {
    if (dist[x] < 0 || dist[x] > r) continue;
    ++view.vertex_count;
    view.height = std::max(view.height, dist[x]);
    if (sample.class_size[x] > 1) ++view.merged_vertices;
  }
  const RootedGraph b = ball(g, r);
  view.is_tree = b.is_tree();
  if (!view.is_tree) return view;
  view.unordered_code = unordered_code(b);
  if (view.merged_vertices == 0) {
    // All ball vertices are fixed points: the ball is the tree's own
    // height-r truncation with the same cyclic orders.
    view.plane_recovered = true;
    view.plane = sample.source.tree.truncate(r);
  }
  return view;
}

nlohmann::json sample_to_json(const UnicellularSample& sample, bool with_cdt) {
  nlohmann::json j = sample.graph;
  if (with_cdt) {
    j["cdt"] = {{"tree", sample.source.tree.code()},
                {"perm", sample.source.perm.image()},
                {"signs", sample.source.signs}};
  }
  return j;
}

}  // namespace unimap
