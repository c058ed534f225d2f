#pragma once

#include <string>
#include <vector>

#include "efp/kernel.hpp"
#include "efp/model.hpp"
#include "efp/rational.hpp"

namespace helpers {

// Builds a linear instance from rational strings; epsilon defaults to 1/100.
inline efp::AuctionInstance make(const std::vector<std::string>& valuations,
                                 const std::vector<std::string>& budgets,
                                 long long m,
                                 const std::string& epsilon = "1/100") {
  efp::AuctionInstance instance;
  instance.units = m;
  instance.grid = efp::PriceGrid::with_epsilon(efp::parse_rat(epsilon));
  for (size_t i = 0; i < valuations.size(); ++i)
    instance.buyers.push_back(
        efp::Buyer{efp::parse_rat(valuations[i]), efp::parse_rat(budgets[i])});
  return instance;
}

// Reference minimum envy-free grid price: plain left-to-right scan.
inline efp::Rat min_price_linear_scan(const efp::AuctionInstance& instance) {
  const efp::Rat& delta = instance.grid.output_spacing;
  efp::Int top = efp::ceil_rat(instance.max_valuation() / delta);
  for (efp::Int k = 0; k <= top; ++k) {
    efp::Rat p = efp::Rat(k) * delta;
    if (efp::is_envy_free(instance, p)) return p;
  }
  return efp::Rat(top) * delta;
}

}  // namespace helpers
