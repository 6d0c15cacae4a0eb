#include "simdim/subset_search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

namespace simdim {

uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is always integral at this point
    uint64_t num = uint64_t(n - k + i);
    if (r > UINT64_MAX / num) return UINT64_MAX;
    r = r * num / uint64_t(i);
  }
  return r;
}

void reduce_masks(std::vector<uint64_t>& masks) {
  std::sort(masks.begin(), masks.end(), [](uint64_t a, uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<uint64_t> keep;
  for (uint64_t m : masks) {
    bool dominated = false;
    for (uint64_t s : keep) {
      if ((s & m) == s) {  // s subset of m, popcount(s) <= popcount(m)
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(m);
  }
  masks = std::move(keep);
}

int hitting_lower_bound(const HittingProblem& p) {
  uint64_t used = 0;
  int bound = 0;
  // Class constraints first: they demand more hits per unit of support.
  for (auto [mask, need] : p.at_least) {
    if ((mask & used) == 0 && need > 0) {
      used |= mask;
      bound += need;
    }
  }
  for (uint64_t m : p.masks) {
    if ((m & used) == 0) {
      used |= m;
      bound += 1;
    }
  }
  return bound;
}

namespace {

inline bool feasible(uint64_t s, const HittingProblem& p) {
  for (uint64_t m : p.masks)
    if ((s & m) == 0) return false;
  for (auto [mask, need] : p.at_least)
    if (std::popcount(s & mask) < need) return false;
  return true;
}

// Enumerates the k-subsets with fixed leading element `lead` in lexicographic
// order and reports the first feasible one.  `stop` lets other blocks cancel
// this one once a smaller leading element has already produced a witness.
std::optional<uint64_t> scan_block(const HittingProblem& p, int k, int lead,
                                   const std::atomic<int>* stop) {
  int n = p.n;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = lead + i;
  uint64_t fixed = bit(lead);
  uint64_t tick = 0;
  while (true) {
    uint64_t s = fixed;
    for (int i = 1; i < k; ++i) s |= bit(idx[i]);
    if (feasible(s, p)) return s;
    if (stop && (++tick & 1023) == 0 && stop->load(std::memory_order_relaxed) < lead)
      return std::nullopt;
    int j = k - 1;
    while (j >= 1 && idx[j] == n - k + j) --j;
    if (j < 1) return std::nullopt;
    ++idx[j];
    for (int l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
  }
}

std::optional<uint64_t> scan_level(const HittingProblem& p, int k) {
  int n = p.n;
  if (k == 0) return feasible(0, p) ? std::optional<uint64_t>(0) : std::nullopt;
  int blocks = n - k + 1;
  std::vector<uint64_t> found(blocks, 0);
  std::atomic<int> best{blocks};
#pragma omp parallel for schedule(dynamic, 1)
  for (int a = 0; a < blocks; ++a) {
    if (best.load(std::memory_order_relaxed) < a) continue;
    if (auto w = scan_block(p, k, a, &best)) {
      found[a] = *w;
      int cur = best.load(std::memory_order_relaxed);
      while (a < cur && !best.compare_exchange_weak(cur, a)) {
      }
    }
  }
  // Blocks are ordered by leading element, which is also lexicographic order
  // across blocks, so the first non-empty slot holds the global witness.
  for (int a = 0; a < blocks; ++a)
    if (found[a]) return found[a];
  return std::nullopt;
}

void charge(uint64_t& used, uint64_t amount, uint64_t budget, int n, int k) {
  uint64_t next = used > UINT64_MAX - amount ? UINT64_MAX : used + amount;
  if (next > budget)
    throw Error(Error::budget_exceeded,
                "level k=" + std::to_string(k) + " of an order-" + std::to_string(n) +
                    " search needs " + std::to_string(amount) +
                    " candidate checks; budget has " + std::to_string(budget - used) + " left");
  used = next;
}

}  // namespace

HitResult solve_min_hitting(const HittingProblem& p, uint64_t budget) {
  for (uint64_t m : p.masks)
    if (m == 0) throw Error(Error::invalid_parameter, "empty requirement mask is unsatisfiable");
  uint64_t used = 0;
  int lb = hitting_lower_bound(p);
  for (int k = lb; k <= p.n; ++k) {
    charge(used, binomial(p.n, k), budget, p.n, k);
    if (auto w = scan_level(p, k)) return {k, *w};
  }
  throw Error(Error::invalid_parameter, "hitting problem infeasible within the vertex set");
}

std::vector<uint64_t> all_min_hitting(const HittingProblem& p, int k, uint64_t budget) {
  uint64_t used = 0;
  charge(used, binomial(p.n, k), budget, p.n, k);
  if (k == 0) return feasible(0, p) ? std::vector<uint64_t>{0} : std::vector<uint64_t>{};
  int blocks = p.n - k + 1;
  std::vector<std::vector<uint64_t>> per_block(blocks);
#pragma omp parallel for schedule(dynamic, 1)
  for (int a = 0; a < blocks; ++a) {
    // Re-walk the block, keeping every feasible subset in enumeration order.
    int n = p.n;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = a + i;
    while (true) {
      uint64_t s = 0;
      for (int i = 0; i < k; ++i) s |= bit(idx[i]);
      if (feasible(s, p)) per_block[a].push_back(s);
      int j = k - 1;
      while (j >= 1 && idx[j] == n - k + j) --j;
      if (j < 1) break;
      ++idx[j];
      for (int l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
    }
  }
  std::vector<uint64_t> out;
  for (auto& v : per_block) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace simdim
