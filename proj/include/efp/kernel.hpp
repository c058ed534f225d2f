#pragma once

#include <vector>

#include "efp/model.hpp"

namespace efp {

enum class DemandKind { Hungry, SemiHungry, Zero };

/// A buyer's demand set at a price: a singleton quantity when the buyer is
/// hungry (p < v), the full range 0..cap when semi-hungry (p = v), and {0}
/// otherwise.
struct DemandSet {
  DemandKind kind = DemandKind::Zero;
  long long quantity = 0;  // singleton for Hungry, cap for SemiHungry

  long long max_units() const { return quantity; }
  bool contains(long long x) const {
    switch (kind) {
      case DemandKind::Hungry:
        return x == quantity;
      case DemandKind::SemiHungry:
        return 0 <= x && x <= quantity;
      case DemandKind::Zero:
        return x == 0;
    }
    return false;
  }
};

/// At p = 0 the budget cap is vacuous and an interested buyer demands m.
DemandSet demand(const Buyer& buyer, const Rat& price, long long m);

/// True iff the hungry buyers' singleton demands fit in m units
/// (semi-hungry buyers may always receive 0).
bool is_envy_free(const AuctionInstance& instance, const Rat& price);

/// Smallest envy-free price on the output grid, by binary search over grid
/// indices (envy-freeness is monotone in the price).
Rat min_envy_free_price_grid(const AuctionInstance& instance);

/// The candidate set {v_i} union {B_i / k : i in N, k in [m]}, sorted
/// ascending with duplicates removed. Contains an optimal envy-free price
/// for both objectives.
struct CandidatePriceSet {
  std::vector<Rat> prices;
};

CandidatePriceSet candidate_prices(const AuctionInstance& instance);

/// Maximal envy-free allocation at an envy-free price: hungry buyers get
/// their singleton demand, remaining units go to semi-hungry buyers greedily
/// in index order. Throws NotEnvyFree if the price is not envy-free.
Allocation max_allocation_at_price(const AuctionInstance& instance,
                                   const Rat& price);

/// True iff at the minimum envy-free grid price no hungry or semi-hungry
/// buyer can afford a single unit (so every envy-free price sells nothing).
bool is_trivial_profile(const AuctionInstance& instance);

struct MarketShareReport {
  std::vector<Rat> shares;  // s_i, one per buyer
  Rat market_share;         // s* = max_i s_i
  Rat min_price;            // p_min on the output grid
  long long units_sold = 0; // T, identical across maximal allocations
};

/// Market share at the minimum envy-free grid price. Each buyer's maximum
/// take is computed by serving it first among the semi-hungry buyers.
/// Throws TrivialInstance when nothing sells at p_min.
MarketShareReport market_share(const AuctionInstance& instance);

}  // namespace efp
