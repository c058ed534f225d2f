#include "efp/mechanism.hpp"

#include <algorithm>

#include "efp/kernel.hpp"

namespace efp {

MechanismResult all_or_nothing(const AuctionInstance& instance) {
  Rat price = min_envy_free_price_grid(instance);
  MechanismResult result;
  result.outcome.price = price;
  result.outcome.allocation.units.assign(instance.buyers.size(), 0);
  result.statuses.assign(instance.buyers.size(), BuyerStatus::PricedOut);

  long long remaining = instance.units;
  for (int i = 0; i < instance.n(); ++i) {
    DemandSet d = demand(instance.buyers[i], price, instance.units);
    if (d.kind == DemandKind::Hungry) {
      result.outcome.allocation.units[i] = d.quantity;
      result.statuses[i] = BuyerStatus::Hungry;
      remaining -= d.quantity;
    }
  }
  // Semi-hungry buyers in index order: the full affordable bundle or nothing.
  for (int i = 0; i < instance.n(); ++i) {
    DemandSet d = demand(instance.buyers[i], price, instance.units);
    if (d.kind != DemandKind::SemiHungry) continue;
    if (d.quantity <= remaining) {
      result.outcome.allocation.units[i] = d.quantity;
      result.statuses[i] = BuyerStatus::SemiHungryServed;
      remaining -= d.quantity;
    } else {
      result.statuses[i] = BuyerStatus::SemiHungryZeroed;
    }
  }
  return result;
}

}  // namespace efp
