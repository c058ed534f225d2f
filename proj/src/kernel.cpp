#include "efp/kernel.hpp"

#include <algorithm>
#include <stdexcept>

#include "efp/errors.hpp"

namespace efp {

namespace {

// min(floor(B/p), m) as a long long; p = 0 means the budget cap is vacuous.
long long affordable_units(const Buyer& buyer, const Rat& price, long long m) {
  if (price == 0) return m;
  Int q = floor_div(buyer.budget, price);
  if (q > m) return m;
  return q.convert_to<long long>();
}

}  // namespace

DemandSet demand(const Buyer& buyer, const Rat& price, long long m) {
  if (price < 0) throw std::invalid_argument("demand: price must be >= 0");
  if (price < buyer.valuation)
    return DemandSet{DemandKind::Hungry, affordable_units(buyer, price, m)};
  if (price == buyer.valuation)
    return DemandSet{DemandKind::SemiHungry, affordable_units(buyer, price, m)};
  return DemandSet{DemandKind::Zero, 0};
}

bool is_envy_free(const AuctionInstance& instance, const Rat& price) {
  long long hungry_total = 0;
  for (const Buyer& b : instance.buyers) {
    if (price < b.valuation) {
      hungry_total += affordable_units(b, price, instance.units);
      if (hungry_total > instance.units) return false;
    }
  }
  return true;
}

Rat min_envy_free_price_grid(const AuctionInstance& instance) {
  const Rat& delta = instance.grid.output_spacing;
  // max v_i lies on the grid and is always envy-free.
  Int hi = ceil_rat(instance.max_valuation() / delta);
  Int lo = 0;
  if (is_envy_free(instance, Rat(0))) return Rat(0);
  // invariant: lo not envy-free, hi envy-free
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (is_envy_free(instance, Rat(mid) * delta))
      hi = mid;
    else
      lo = mid;
  }
  return Rat(hi) * delta;
}

CandidatePriceSet candidate_prices(const AuctionInstance& instance) {
  std::vector<Rat> prices;
  prices.reserve(instance.buyers.size() * (1 + instance.units));
  for (const Buyer& b : instance.buyers) {
    prices.push_back(b.valuation);
    for (long long k = 1; k <= instance.units; ++k)
      prices.push_back(b.budget / k);
  }
  std::sort(prices.begin(), prices.end());
  prices.erase(std::unique(prices.begin(), prices.end()), prices.end());
  return CandidatePriceSet{std::move(prices)};
}

Allocation max_allocation_at_price(const AuctionInstance& instance,
                                   const Rat& price) {
  if (!is_envy_free(instance, price))
    throw NotEnvyFree("max_allocation_at_price: price is not envy-free");
  Allocation alloc{std::vector<long long>(instance.buyers.size(), 0)};
  long long remaining = instance.units;
  for (int i = 0; i < instance.n(); ++i) {
    DemandSet d = demand(instance.buyers[i], price, instance.units);
    if (d.kind == DemandKind::Hungry) {
      alloc.units[i] = d.quantity;
      remaining -= d.quantity;
    }
  }
  for (int i = 0; i < instance.n() && remaining > 0; ++i) {
    DemandSet d = demand(instance.buyers[i], price, instance.units);
    if (d.kind == DemandKind::SemiHungry) {
      long long take = std::min(d.quantity, remaining);
      alloc.units[i] = take;
      remaining -= take;
    }
  }
  return alloc;
}

bool is_trivial_profile(const AuctionInstance& instance) {
  Rat p_min = min_envy_free_price_grid(instance);
  for (const Buyer& b : instance.buyers) {
    if (b.valuation >= p_min && affordable_units(b, p_min, instance.units) >= 1)
      return false;
  }
  return true;
}

MarketShareReport market_share(const AuctionInstance& instance) {
  Rat p_min = min_envy_free_price_grid(instance);
  Allocation base = max_allocation_at_price(instance, p_min);
  long long total = base.total();
  if (total == 0)
    throw TrivialInstance("market_share: nothing sells at the minimum price");

  long long hungry_total = 0;
  for (int i = 0; i < instance.n(); ++i) {
    DemandSet d = demand(instance.buyers[i], p_min, instance.units);
    if (d.kind == DemandKind::Hungry) hungry_total += d.quantity;
  }

  MarketShareReport report;
  report.min_price = p_min;
  report.units_sold = total;
  report.market_share = 0;
  for (int i = 0; i < instance.n(); ++i) {
    DemandSet d = demand(instance.buyers[i], p_min, instance.units);
    long long best;
    switch (d.kind) {
      case DemandKind::Hungry:
        best = d.quantity;
        break;
      case DemandKind::SemiHungry:
        // served first among the semi-hungry buyers
        best = std::min(d.quantity, instance.units - hungry_total);
        break;
      default:
        best = 0;
    }
    Rat share = Rat(best) / total;
    report.shares.push_back(share);
    if (share > report.market_share) report.market_share = share;
  }
  return report;
}

}  // namespace efp
