#include "gha/repunit.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "gha/error.hpp"
#include "gha/exact.hpp"
#include "gha/families.hpp"

namespace gha {
namespace {

std::int64_t repunit(int a) { return (std::int64_t{1} << a) - 1; }

int bitlen(std::int64_t m) { return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(m))); }

/// BFS over partial sums in [-radius, radius] from 0. dist = -1 when
/// unreached; via[s] is the signed term that first reached s.
struct RepunitSearch {
  std::int64_t radius = 0;
  std::vector<std::int8_t> dist;
  std::vector<std::int8_t> via;

  RepunitSearch(std::int64_t r, int max_term, std::int64_t stop_at) : radius(r) {
    const std::size_t size = static_cast<std::size_t>(2 * r + 1);
    dist.assign(size, -1);
    via.assign(size, 0);
    std::vector<std::int64_t> frontier{0};
    dist[index(0)] = 0;
    for (int depth = 1; !frontier.empty(); ++depth) {
      std::vector<std::int64_t> next;
      for (std::int64_t s : frontier) {
        for (int a = 1; a <= max_term; ++a) {
          for (int sign : {1, -1}) {
            const std::int64_t t = s + sign * repunit(a);
            if (t < -r || t > r) continue;
            auto& d = dist[index(t)];
            if (d != -1) continue;
            d = static_cast<std::int8_t>(depth);
            via[index(t)] = static_cast<std::int8_t>(sign * a);
            if (t == stop_at) return;
            next.push_back(t);
          }
        }
      }
      frontier = std::move(next);
    }
  }

  std::size_t index(std::int64_t s) const { return static_cast<std::size_t>(s + radius); }

  EleganceRecord record(std::int64_t m) const {
    EleganceRecord rec;
    rec.m = m;
    rec.elegance = dist[index(m)];
    std::int64_t s = m;
    while (s != 0) {
      const int t = via[index(s)];
      rec.witness.terms.push_back(t);
      s -= t > 0 ? repunit(t) : -repunit(-t);
    }
    std::reverse(rec.witness.terms.begin(), rec.witness.terms.end());
    return rec;
  }
};

constexpr std::int64_t kMaxSingleM = std::int64_t{1} << 22;
constexpr std::int64_t kMaxTable = std::int64_t{1} << 24;

std::shared_mutex single_mutex;
std::map<std::int64_t, EleganceRecord> single_cache;

struct TableCache {
  std::shared_mutex mutex;
  std::int64_t upto = 0;
  std::unique_ptr<RepunitSearch> search;
  std::shared_ptr<const std::vector<std::uint8_t>> values =
      std::make_shared<const std::vector<std::uint8_t>>(1, 0);
};
TableCache table_cache;

void ensure_table(std::int64_t upto) {
  if (upto > kMaxTable) {
    throw Error(ErrorKind::TooLarge, "elegance table capped at 2^24", upto);
  }
  {
    std::shared_lock lock(table_cache.mutex);
    if (table_cache.upto >= upto) return;
  }
  std::unique_lock lock(table_cache.mutex);
  if (table_cache.upto >= upto) return;
  // Grow geometrically so repeated requests stay cheap.
  const std::int64_t target = std::max<std::int64_t>(upto, std::min<std::int64_t>(2 * table_cache.upto, kMaxTable));
  auto search = std::make_unique<RepunitSearch>(4 * target, bitlen(target) + 2, 4 * target + 1);
  std::vector<std::uint8_t> values(static_cast<std::size_t>(target) + 1, 0);
  for (std::int64_t m = 1; m <= target; ++m) values[m] = static_cast<std::uint8_t>(search->dist[search->index(m)]);
  table_cache.search = std::move(search);
  table_cache.values = std::make_shared<const std::vector<std::uint8_t>>(std::move(values));
  table_cache.upto = target;
}

std::shared_mutex delta_mutex;
std::map<int, std::vector<std::int64_t>> delta_cache;

int node_depth(std::int64_t v) { return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(v + 1))) - 1; }

bool is_proper_ancestor(std::int64_t a, std::int64_t b) {
  const int da = node_depth(a), db = node_depth(b);
  return da < db && ((b + 1) >> (db - da)) == a + 1;
}

}  // namespace

std::int64_t RepunitRepresentation::value() const {
  std::int64_t total = 0;
  for (int t : terms) total += t > 0 ? repunit(t) : -repunit(-t);
  return total;
}

EleganceRecord elegance(std::int64_t m) {
  if (m < 1 || m > kMaxSingleM) {
    throw Error(ErrorKind::OutOfRange, "elegance is computed for 1 <= m <= 2^22", m);
  }
  {
    std::shared_lock lock(single_mutex);
    auto it = single_cache.find(m);
    if (it != single_cache.end()) return it->second;
  }
  RepunitSearch search(4 * m, bitlen(m) + 2, m);
  EleganceRecord rec = search.record(m);
  std::unique_lock lock(single_mutex);
  single_cache.emplace(m, rec);
  return rec;
}

std::vector<EleganceRecord> elegance_table(std::int64_t upto) {
  std::vector<EleganceRecord> out;
  if (upto < 1) return out;
  ensure_table(upto);
  std::shared_lock lock(table_cache.mutex);
  out.reserve(static_cast<std::size_t>(upto));
  for (std::int64_t m = 1; m <= upto; ++m) out.push_back(table_cache.search->record(m));
  return out;
}

std::shared_ptr<const std::vector<std::uint8_t>> elegance_values(std::int64_t upto) {
  ensure_table(std::max<std::int64_t>(upto, 1));
  std::shared_lock lock(table_cache.mutex);
  return table_cache.values;
}

int runs(std::uint64_t i) {
  if (i == 0) throw Error(ErrorKind::OutOfRange, "runs needs i >= 1", 0);
  const int width = static_cast<int>(std::bit_width(i));
  // Each position where adjacent bits differ starts a new block.
  const std::uint64_t changes = (i ^ (i >> 1)) & ((std::uint64_t{1} << (width - 1)) - 1);
  return 1 + std::popcount(changes);
}

const std::vector<std::int64_t>& delta_profile_complete_binary(int depth) {
  {
    std::shared_lock lock(delta_mutex);
    auto it = delta_cache.find(depth);
    if (it != delta_cache.end()) return it->second;
  }
  auto profile = tree_min_cut_profile(families::complete_binary_tree(depth));
  std::unique_lock lock(delta_mutex);
  return delta_cache.emplace(depth, std::move(profile)).first->second;
}

std::int64_t delta_complete_binary(int depth, std::int64_t i) {
  if (depth < 0 || depth > 16) throw Error(ErrorKind::OutOfRange, "depth must lie in [0, 16]", depth);
  const std::int64_t n = (std::int64_t{1} << (depth + 1)) - 1;
  if (i < 1 || i > n - 1) throw Error(ErrorKind::OutOfRange, "i must lie in [1, n-1]", i);
  return delta_profile_complete_binary(depth)[i];
}

std::pair<Instance, Instance> value_agnostic_gap_instances(int depth) {
  if (depth < 7) {
    throw Error(ErrorKind::TooShallow, "the 89/94 instances need at least 128 vertices", depth);
  }
  Graph tree = families::complete_binary_tree(depth);
  const int n = tree.n();
  auto two_valued = [n](int zeros) {
    std::vector<BigInt> values(n, BigInt(1));
    std::fill(values.begin(), values.begin() + zeros, BigInt(0));
    return HouseValues(std::move(values));
  };
  return {Instance(tree, two_valued(89)), Instance(tree, two_valued(94))};
}

CutSetCensus census_cut_sets(int depth, int size, int cut) {
  if (depth < 1 || depth > 12 || cut < 1 || cut > 4) {
    throw Error(ErrorKind::BadParameters, "census needs 1 <= depth <= 12 and 1 <= cut <= 4");
  }
  const std::int64_t n = (std::int64_t{1} << (depth + 1)) - 1;
  auto subtree = [depth](std::int64_t v) {
    return (std::int64_t{1} << (depth - node_depth(v) + 1)) - 1;
  };
  CutSetCensus census;
  std::vector<std::int64_t> chosen(cut);
  // Component j < cut hangs below chosen[j]; component `cut` holds the root.
  auto evaluate = [&] {
    std::vector<int> owner(cut, cut);  // nearest chosen proper ancestor
    std::vector<std::int64_t> piece(cut + 1);
    piece[cut] = n;
    for (int j = 0; j < cut; ++j) {
      piece[j] = subtree(chosen[j]);
      int best = cut;
      for (int i = 0; i < cut; ++i) {
        if (is_proper_ancestor(chosen[i], chosen[j]) &&
            (best == cut || is_proper_ancestor(chosen[best], chosen[i]))) {
          best = i;
        }
      }
      owner[j] = best;
    }
    for (int j = 0; j < cut; ++j) piece[owner[j]] -= subtree(chosen[j]);
    auto component_of = [&](std::int64_t v) {
      int best = cut;
      for (int i = 0; i < cut; ++i) {
        if ((chosen[i] == v || is_proper_ancestor(chosen[i], v)) &&
            (best == cut || is_proper_ancestor(chosen[best], chosen[i]))) {
          best = i;
        }
      }
      return best;
    };
    const int left = component_of(1), right = component_of(2);
    for (int mask = 0; mask < (1 << (cut + 1)); ++mask) {
      std::int64_t total = 0;
      for (int j = 0; j <= cut; ++j) {
        if (mask >> j & 1) total += piece[j];
      }
      if (total != size) continue;
      int crossing = 0;
      for (int j = 0; j < cut; ++j) crossing += ((mask >> j) & 1) != ((mask >> owner[j]) & 1);
      if (crossing != cut) continue;
      ++census.sets;
      if ((mask >> left & 1) || (mask >> right & 1)) ++census.containing_root_child;
    }
  };
  auto choose = [&](auto&& self, int slot, std::int64_t from) -> void {
    if (slot == cut) {
      evaluate();
      return;
    }
    for (std::int64_t c = from; c < n; ++c) {
      chosen[slot] = c;
      self(self, slot + 1, c + 1);
    }
  };
  choose(choose, 0, 1);
  return census;
}

bool has_global_median_property(int depth, const Instance& instance, const Allocation& alloc) {
  const int n = (1 << (depth + 1)) - 1;
  if (instance.n() != n) {
    throw Error(ErrorKind::NotCompleteTreeSize, "instance is not B_" + std::to_string(depth), instance.n());
  }
  check_allocation(alloc, n);
  std::vector<BigInt> lo(n), hi(n);
  for (int v = n - 1; v >= 0; --v) {
    lo[v] = hi[v] = instance.houses[alloc.assignment[v]];
    for (int c : {2 * v + 1, 2 * v + 2}) {
      if (c < n) {
        lo[v] = std::min(lo[v], lo[c]);
        hi[v] = std::max(hi[v], hi[c]);
      }
    }
  }
  for (int v = 0; 2 * v + 2 < n; ++v) {
    const BigInt& x = instance.houses[alloc.assignment[v]];
    const int l = 2 * v + 1, r = 2 * v + 2;
    const bool left_low = hi[l] <= x && x <= lo[r];
    const bool right_low = hi[r] <= x && x <= lo[l];
    if (!left_low && !right_low) return false;
  }
  return true;
}

}  // namespace gha
