#include "efp/knapsack.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "efp/errors.hpp"

namespace efp {

namespace {

KnapsackSolution infeasible_solution(size_t n_classes) {
  KnapsackSolution s;
  s.feasible = false;
  s.value = 0;
  s.weight = 0;
  s.choice.assign(n_classes, -1);
  return s;
}

}  // namespace

KnapsackSolution multichoice_knapsack_exact(const KnapsackInstance& kp) {
  const size_t n = kp.classes.size();
  const long long cap = kp.capacity;
  if (cap < 0) return infeasible_solution(n);

  // dp[w]: best value at total weight exactly w; nullopt = unreachable.
  std::vector<std::optional<Rat>> dp(static_cast<size_t>(cap) + 1);
  dp[0] = Rat(0);
  // pick[c][w]: item chosen for class c at state w (-1 = nothing).
  std::vector<std::vector<int>> pick(n);

  for (size_t c = 0; c < n; ++c) {
    const KnapsackClass& cls = kp.classes[c];
    std::vector<std::optional<Rat>> next(dp.size());
    pick[c].assign(dp.size(), -1);
    if (!cls.required) next = dp;  // implicit (0, 0) item
    for (size_t j = 0; j < cls.items.size(); ++j) {
      const KnapsackItem& item = cls.items[j];
      if (item.weight < 0 || item.weight > cap) continue;
      for (long long w = item.weight; w <= cap; ++w) {
        const auto& from = dp[w - item.weight];
        if (!from) continue;
        Rat cand = *from + item.value;
        if (!next[w] || cand > *next[w]) {
          next[w] = cand;
          pick[c][w] = static_cast<int>(j);
        }
      }
    }
    dp = std::move(next);
  }

  long long best_w = -1;
  for (long long w = 0; w <= cap; ++w)
    if (dp[w] && (best_w < 0 || *dp[w] > *dp[best_w])) best_w = w;
  if (best_w < 0) return infeasible_solution(n);

  KnapsackSolution s;
  s.feasible = true;
  s.value = *dp[best_w];
  s.weight = best_w;
  s.choice.assign(n, -1);
  long long w = best_w;
  for (size_t c = n; c-- > 0;) {
    int j = pick[c][w];
    s.choice[c] = j;
    if (j >= 0) w -= kp.classes[c].items[j].weight;
  }
  return s;
}

KnapsackSolution multichoice_knapsack_fptas(const KnapsackInstance& kp,
                                            const Rat& eps) {
  if (eps <= 0 || eps >= 1)
    throw InvalidEpsilon("multichoice_knapsack_fptas: eps must lie in (0, 1)");
  const size_t n = kp.classes.size();
  const long long cap = kp.capacity;
  if (cap < 0) return infeasible_solution(n);

  Rat vmax = 0;
  for (const KnapsackClass& cls : kp.classes)
    for (const KnapsackItem& item : cls.items)
      if (item.weight <= cap && item.value > vmax) vmax = item.value;

  // All usable values are zero: take the lightest item of each required
  // class and nothing elsewhere.
  if (vmax == 0) {
    KnapsackSolution s;
    s.feasible = true;
    s.value = 0;
    s.weight = 0;
    s.choice.assign(n, -1);
    for (size_t c = 0; c < n; ++c) {
      const KnapsackClass& cls = kp.classes[c];
      if (!cls.required) continue;
      int lightest = -1;
      for (size_t j = 0; j < cls.items.size(); ++j) {
        if (cls.items[j].weight > cap) continue;
        if (lightest < 0 || cls.items[j].weight < cls.items[lightest].weight)
          lightest = static_cast<int>(j);
      }
      if (lightest < 0) return infeasible_solution(n);
      s.choice[c] = lightest;
      s.weight += cls.items[lightest].weight;
      s.value += cls.items[lightest].value;
    }
    if (s.weight > cap) return infeasible_solution(n);
    return s;
  }

  const Rat scale = eps * vmax / static_cast<long long>(n);
  auto scaled = [&](const Rat& v) {
    return floor_rat(v / scale).convert_to<long long>();
  };

  long long vbound = 0;
  for (const KnapsackClass& cls : kp.classes) {
    long long cls_max = 0;
    for (const KnapsackItem& item : cls.items)
      if (item.weight <= cap) cls_max = std::max(cls_max, scaled(item.value));
    vbound += cls_max;
  }

  // dp[v]: minimum weight achieving scaled value exactly v; -1 = unreachable.
  std::vector<long long> dp(static_cast<size_t>(vbound) + 1, -1);
  dp[0] = 0;
  std::vector<std::vector<int>> pick(n);

  for (size_t c = 0; c < n; ++c) {
    const KnapsackClass& cls = kp.classes[c];
    std::vector<long long> next(dp.size(), -1);
    pick[c].assign(dp.size(), -1);
    if (!cls.required) next = dp;
    for (size_t j = 0; j < cls.items.size(); ++j) {
      const KnapsackItem& item = cls.items[j];
      if (item.weight < 0 || item.weight > cap) continue;
      long long sv = scaled(item.value);
      for (long long v = sv; v <= vbound; ++v) {
        if (dp[v - sv] < 0) continue;
        long long cand = dp[v - sv] + item.weight;
        if (cand > cap) continue;
        if (next[v] < 0 || cand < next[v]) {
          next[v] = cand;
          pick[c][v] = static_cast<int>(j);
        }
      }
    }
    dp = std::move(next);
  }

  long long best_v = -1;
  for (long long v = 0; v <= vbound; ++v)
    if (dp[v] >= 0) best_v = v;
  if (best_v < 0) return infeasible_solution(n);

  KnapsackSolution s;
  s.feasible = true;
  s.value = 0;
  s.weight = dp[best_v];
  s.choice.assign(n, -1);
  long long v = best_v;
  for (size_t c = n; c-- > 0;) {
    int j = pick[c][v];
    s.choice[c] = j;
    if (j >= 0) {
      s.value += kp.classes[c].items[j].value;
      v -= scaled(kp.classes[c].items[j].value);
    }
  }
  return s;
}

}  // namespace efp
