#pragma once

#include <vector>

#include "efp/model.hpp"

namespace efp {

enum class BuyerStatus { Hungry, SemiHungryServed, SemiHungryZeroed, PricedOut };

struct MechanismResult {
  Outcome outcome;
  std::vector<BuyerStatus> statuses;  // one per buyer
};

/// The truthful All-or-Nothing mechanism: output the minimum envy-free price
/// on the output grid; hungry buyers get their demand; each semi-hungry
/// buyer, in ascending index order, gets its full affordable bundle if it
/// still fits, otherwise exactly 0.
MechanismResult all_or_nothing(const AuctionInstance& instance);

}  // namespace efp
