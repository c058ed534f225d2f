#include <algorithm>
#include <string>
#include <vector>

#include "efp/errors.hpp"
#include "efp/optimizers.hpp"

namespace efp {

void GeneralInstance::validate() const {
  if (budgets.empty())
    throw std::invalid_argument("general instance has no buyers");
  if (units < 1)
    throw std::invalid_argument("general instance must have m >= 1 units");
  if (valuations.size() != budgets.size())
    throw MalformedValuationVector(
        "valuation and budget lists differ in length");
  for (size_t i = 0; i < valuations.size(); ++i) {
    std::string who = "buyer " + std::to_string(i);
    const auto& v = valuations[i];
    if (v.size() != static_cast<size_t>(units) + 1)
      throw MalformedValuationVector(who + ": expected m + 1 valuation entries");
    if (v[0] != 0)
      throw MalformedValuationVector(who + ": valuation of the empty bundle must be 0");
    for (const Rat& entry : v)
      if (entry < 0)
        throw MalformedValuationVector(who + ": valuations must be nonnegative");
    if (budgets[i] <= 0)
      throw std::invalid_argument(who + ": budget must be positive");
  }
}

namespace {

// Bundle sizes maximizing utility among the affordable ones. y = 0 is always
// affordable with utility 0, so the set is never empty.
std::vector<long long> demand_sizes(const GeneralInstance& instance, int buyer,
                                    const Rat& price) {
  const auto& v = instance.valuations[buyer];
  const Rat& budget = instance.budgets[buyer];
  Rat best = 0;
  for (long long y = 1; y <= instance.units; ++y) {
    if (price * y > budget) break;
    Rat u = v[y] - price * y;
    if (u > best) best = u;
  }
  std::vector<long long> sizes;
  for (long long y = 0; y <= instance.units; ++y) {
    if (price * y > budget) break;
    if (v[y] - price * y == best) sizes.push_back(y);
  }
  return sizes;
}

bool has_demand_mismatch(const GeneralInstance& instance, const Rat& price) {
  for (int i = 0; i < instance.n(); ++i) {
    std::vector<long long> demand = demand_sizes(instance, i, price);
    for (long long y = 0; y <= instance.units; ++y) {
      if (price * y > instance.budgets[i]) break;
      if (instance.valuations[i][y] - price * y < 0) continue;
      if (!std::binary_search(demand.begin(), demand.end(), y)) return true;
    }
  }
  return false;
}

}  // namespace

GeneralOptResult general_opt(const GeneralInstance& instance,
                             Objective objective, KnapsackMode mode,
                             const Rat& eps) {
  instance.validate();
  if (mode == KnapsackMode::Fptas && (eps <= 0 || eps >= 1))
    throw InvalidEpsilon("general_opt: eps must lie in (0, 1)");

  const long long m = instance.units;
  std::vector<Rat> prices;
  prices.push_back(Rat(0));
  for (int i = 0; i < instance.n(); ++i) {
    for (long long k = 1; k <= m; ++k) {
      prices.push_back(instance.budgets[i] / k);
      if (instance.valuations[i][k] > 0)
        prices.push_back(instance.valuations[i][k] / k);
    }
  }
  std::sort(prices.begin(), prices.end());
  prices.erase(std::unique(prices.begin(), prices.end()), prices.end());

  bool have = false;
  GeneralOptResult best;
  for (const Rat& p : prices) {
    std::vector<std::vector<long long>> demands(instance.n());
    long long min_total = 0;
    for (int i = 0; i < instance.n(); ++i) {
      demands[i] = demand_sizes(instance, i, p);
      min_total += demands[i].front();
    }
    if (min_total > m) continue;  // no envy-free allocation at this price

    KnapsackInstance kp;
    kp.capacity = m;
    kp.classes.resize(instance.n());
    for (int i = 0; i < instance.n(); ++i) {
      kp.classes[i].required = true;
      for (long long y : demands[i]) {
        Rat value =
            objective == Objective::Revenue ? p * y : instance.valuations[i][y];
        kp.classes[i].items.push_back(KnapsackItem{y, value});
      }
    }
    KnapsackSolution solution = mode == KnapsackMode::Exact
                                    ? multichoice_knapsack_exact(kp)
                                    : multichoice_knapsack_fptas(kp, eps);
    if (!solution.feasible) continue;

    Outcome outcome;
    outcome.price = p;
    for (int i = 0; i < instance.n(); ++i)
      outcome.allocation.units.push_back(
          kp.classes[i].items[solution.choice[i]].weight);

    Rat value = 0;
    if (objective == Objective::Revenue) {
      value = p * outcome.allocation.total();
    } else {
      for (int i = 0; i < instance.n(); ++i)
        value += instance.valuations[i][outcome.allocation.units[i]];
    }
    if (!have || value > best.objective) {  // ties keep the lower price
      best.outcome = std::move(outcome);
      best.objective = value;
      have = true;
    }
  }

  best.demand_class_mismatch = has_demand_mismatch(instance, best.outcome.price);
  return best;
}

}  // namespace efp
