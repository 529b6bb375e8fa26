#include "prym/permutation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "prym/error.hpp"

namespace prym {

Permutation::Permutation(const std::vector<int>& images_one_based) {
  const auto n = images_one_based.size();
  if (n == 0) throw ValidationError("permutation must have positive degree");
  std::vector<bool> seen(n, false);
  map_.reserve(n);
  for (int image : images_one_based) {
    if (image < 1 || static_cast<std::size_t>(image) > n || seen[image - 1]) {
      throw ValidationError("permutation images are not a bijection of 1.." + std::to_string(n));
    }
    seen[image - 1] = true;
    map_.push_back(image - 1);
  }
}

Permutation Permutation::from_zero_based(std::vector<int> map) {
  Permutation p;
  p.map_ = std::move(map);
  return p;
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw ValidationError("permutation must have positive degree");
  std::vector<int> map(static_cast<std::size_t>(degree));
  std::iota(map.begin(), map.end(), 0);
  return from_zero_based(std::move(map));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycle_list) {
  Permutation p = identity(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& cycle : cycle_list) {
    for (int label : cycle) {
      if (label < 1 || label > degree || used[label - 1]) {
        throw ValidationError("cycles must be disjoint and use labels 1.." + std::to_string(degree));
      }
      used[label - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      p.map_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
    }
  }
  return p;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(map_.size());
  std::transform(map_.begin(), map_.end(), out.begin(), [](int x) { return x + 1; });
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = static_cast<int>(i);
  return from_zero_based(std::move(inv));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  bool any = false;
  for (const auto& cycle : cycles(*this)) {
    if (cycle.size() < 2) continue;
    any = true;
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? " " : "") << cycle[i] + 1;
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw ValidationError("cannot compose permutations of degree " + std::to_string(a.degree()) +
                          " and " + std::to_string(b.degree()));
  }
  std::vector<int> images(static_cast<std::size_t>(a.degree()));
  for (int x = 0; x < a.degree(); ++x) images[x] = a(b(x)) + 1;
  return Permutation(images);
}

int CycleType::degree() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::int64_t CycleType::ramification() const {
  std::int64_t w = 0;
  for (int part : parts) w += part - 1;
  return w;
}

bool CycleType::is_trivial() const {
  return std::all_of(parts.begin(), parts.end(), [](int part) { return part == 1; });
}

CycleType make_cycle_type(std::vector<int> parts) {
  if (parts.empty()) throw ValidationError("cycle type must have at least one part");
  for (int part : parts) {
    if (part < 1) throw ValidationError("cycle type parts must be positive");
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return CycleType{std::move(parts)};
}

std::vector<std::vector<int>> cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

CycleType cycle_type(const Permutation& p) {
  std::vector<int> parts;
  for (const auto& cycle : cycles(p)) parts.push_back(static_cast<int>(cycle.size()));
  return make_cycle_type(std::move(parts));
}

std::vector<std::vector<int>> orbits(int degree, std::span<const Permutation> generators) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw ValidationError("generator of degree " + std::to_string(g.degree()) +
                            " acting on " + std::to_string(degree) + " points");
    }
  }
  std::vector<int> orbit_of(static_cast<std::size_t>(degree), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < degree; ++start) {
    if (orbit_of[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> orbit{start};
    orbit_of[start] = id;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (const auto& g : generators) {
        const int y = g(x);
        if (orbit_of[y] < 0) {
          orbit_of[y] = id;
          orbit.push_back(y);
          queue.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive(int degree, std::span<const Permutation> generators) {
  return orbits(degree, generators).size() == 1;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // exact at every step: result * (n - k + i) is divisible by i
    result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

SubsetIndex rank_subset(int universe, std::span<const int> elements) {
  if (universe < 1 || universe > kMaxUniverse) {
    throw ValidationError("subset universe must be in 1.." + std::to_string(kMaxUniverse));
  }
  std::vector<int> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("subset has repeated elements");
  }
  SubsetIndex index{static_cast<int>(sorted.size()), universe, 0};
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= universe) {
      throw ValidationError("subset element outside 0.." + std::to_string(universe - 1));
    }
    index.rank += binomial(sorted[i], static_cast<int>(i) + 1);
  }
  return index;
}

std::vector<int> unrank_subset(const SubsetIndex& index) {
  if (index.size < 0 || index.size > index.universe || index.universe > kMaxUniverse ||
      index.rank >= binomial(index.universe, index.size)) {
    throw ValidationError("subset rank out of range");
  }
  std::vector<int> out(static_cast<std::size_t>(index.size));
  std::uint64_t rank = index.rank;
  int candidate = index.universe - 1;
  for (int i = index.size; i >= 1; --i) {
    while (binomial(candidate, i) > rank) --candidate;
    out[i - 1] = candidate;
    rank -= binomial(candidate, i);
    --candidate;
  }
  return out;
}

SubsetMask to_mask(std::span<const int> elements) {
  SubsetMask mask = 0;
  for (int e : elements) mask |= SubsetMask{1} << e;
  return mask;
}

std::vector<int> from_mask(SubsetMask mask) {
  std::vector<int> out;
  for (int e = 0; mask != 0; ++e, mask >>= 1) {
    if (mask & 1u) out.push_back(e);
  }
  return out;
}

std::vector<SubsetMask> all_subsets(int universe, int k) {
  if (universe < 0 || universe > kMaxUniverse || k < 0 || k > universe) {
    throw ValidationError("subset size out of range");
  }
  std::vector<SubsetMask> out;
  out.reserve(binomial(universe, k));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  // Equal-size subsets in colex order are exactly their masks in increasing
  // numeric order; step with Gosper's hack.
  const std::uint64_t limit = std::uint64_t{1} << universe;
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  while (mask < limit) {
    out.push_back(static_cast<SubsetMask>(mask));
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return out;
}

Permutation induced_subset_action(const Permutation& p, int k) {
  if (k < 1 || k > p.degree()) {
    throw ValidationError("subset size " + std::to_string(k) + " outside 1.." +
                          std::to_string(p.degree()));
  }
  const auto subsets = all_subsets(p.degree(), k);
  std::vector<int> images(subsets.size());
  for (std::size_t r = 0; r < subsets.size(); ++r) {
    std::vector<int> image;
    for (int e : from_mask(subsets[r])) image.push_back(p(e));
    images[r] = static_cast<int>(rank_subset(p.degree(), image).rank) + 1;
  }
  return Permutation(images);
}

}  // namespace prym
