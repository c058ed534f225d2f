#include "efp/optimizers.hpp"

#include <algorithm>

#include "efp/errors.hpp"

namespace efp {

namespace {

// Smallest envy-free price in the candidate set. Always exists: the highest
// valuation is a candidate and is envy-free.
Rat min_envy_free_candidate(const AuctionInstance& instance,
                            const CandidatePriceSet& candidates) {
  for (const Rat& p : candidates.prices)
    if (is_envy_free(instance, p)) return p;
  return candidates.prices.back();
}

}  // namespace

OptResult welfare_opt(const AuctionInstance& instance) {
  CandidatePriceSet candidates = candidate_prices(instance);
  Rat p = min_envy_free_candidate(instance, candidates);
  Outcome outcome{p, max_allocation_at_price(instance, p)};
  OptResult result;
  result.trivial = outcome.allocation.total() == 0;
  result.objective = social_welfare(instance, outcome);
  result.outcome = std::move(outcome);
  return result;
}

OptResult revenue_exact_scan(const AuctionInstance& instance) {
  CandidatePriceSet candidates = candidate_prices(instance);
  OptResult best;
  bool have = false;
  for (const Rat& p : candidates.prices) {
    if (!is_envy_free(instance, p)) continue;
    Outcome outcome{p, max_allocation_at_price(instance, p)};
    Rat rev = revenue(outcome);
    if (!have || rev > best.objective) {  // ties keep the lower price
      best.outcome = std::move(outcome);
      best.objective = rev;
      have = true;
    }
  }
  best.trivial = best.objective == 0;
  if (best.trivial) {
    // Report the lowest envy-free candidate with its (empty) allocation.
    Rat p = min_envy_free_candidate(instance, candidates);
    best.outcome = Outcome{p, max_allocation_at_price(instance, p)};
  }
  return best;
}

ContinuousSolution continuous_revenue_opt(const AuctionInstance& instance) {
  const long long m = instance.units;

  // Candidate prices are the valuations; pick the envy-free one with the
  // highest revenue when interested buyers exhaust their budgets.
  Rat best_revenue = 0;
  for (const Buyer& anchor : instance.buyers) {
    const Rat& p = anchor.valuation;
    Rat hungry_demand = 0;
    Rat semi_demand = 0;
    for (const Buyer& b : instance.buyers) {
      Rat want = b.budget / p;
      if (want > m) want = m;
      if (b.valuation > p)
        hungry_demand += want;
      else if (b.valuation == p)
        semi_demand += want;
    }
    if (hungry_demand > m) continue;  // over-demand, not envy-free
    Rat sold = hungry_demand + semi_demand;
    if (sold > m) sold = m;
    Rat rev = p * sold;
    if (rev > best_revenue) best_revenue = rev;
  }

  // Re-price so the whole resource is sold at the same revenue.
  ContinuousSolution solution;
  solution.revenue = best_revenue;
  solution.price = best_revenue / m;
  solution.allocation.assign(instance.buyers.size(), Rat(0));

  // Budgets of the top-valuation buyers fill the resource exactly.
  std::vector<int> order(instance.buyers.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return instance.buyers[a].valuation > instance.buyers[b].valuation;
  });
  Rat remaining = m;
  for (int i : order) {
    if (remaining == 0) break;
    const Buyer& b = instance.buyers[i];
    if (b.valuation < solution.price) break;
    Rat want = b.budget / solution.price;
    if (want > remaining) want = remaining;
    solution.allocation[i] = want;
    remaining -= want;
  }
  return solution;
}

OptResult revenue_fptas(const AuctionInstance& instance, const Rat& eps) {
  if (eps <= 0 || eps >= 1)
    throw InvalidEpsilon("revenue_fptas: eps must lie in (0, 1)");
  if (Rat(instance.units) <= Rat(instance.n()) / eps)
    return revenue_exact_scan(instance);

  ContinuousSolution continuous = continuous_revenue_opt(instance);
  Outcome outcome;
  outcome.price = continuous.price;
  outcome.allocation.units.reserve(continuous.allocation.size());
  for (const Rat& x : continuous.allocation)
    outcome.allocation.units.push_back(floor_rat(x).convert_to<long long>());
  OptResult result;
  result.objective = revenue(outcome);
  result.trivial = false;  // the continuous optimum is always positive
  result.outcome = std::move(outcome);
  return result;
}

}  // namespace efp
