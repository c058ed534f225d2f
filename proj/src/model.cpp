#include "efp/model.hpp"

#include <stdexcept>

namespace efp {

PriceGrid PriceGrid::with_epsilon(const Rat& epsilon) {
  if (epsilon <= 0)
    throw std::invalid_argument("grid spacing must be positive");
  return PriceGrid{epsilon, epsilon / 2};
}

PriceGrid default_grid() { return PriceGrid::with_epsilon(Rat(1, 100)); }

Rat AuctionInstance::max_valuation() const {
  Rat best = buyers.front().valuation;
  for (const Buyer& b : buyers)
    if (b.valuation > best) best = b.valuation;
  return best;
}

void AuctionInstance::validate() const {
  if (buyers.empty()) throw std::invalid_argument("instance has no buyers");
  if (units < 1) throw std::invalid_argument("instance must have m >= 1 units");
  if (grid.output_spacing * 2 != grid.input_spacing)
    throw std::invalid_argument("output grid spacing must be epsilon/2");
  for (size_t i = 0; i < buyers.size(); ++i) {
    const Buyer& b = buyers[i];
    std::string who = "buyer " + std::to_string(i);
    if (b.valuation <= 0)
      throw std::invalid_argument(who + ": valuation must be positive");
    if (b.budget <= 0)
      throw std::invalid_argument(who + ": budget must be positive");
    if (!grid.on_input_grid(b.valuation))
      throw std::invalid_argument(who + ": valuation is off the input grid");
    if (!grid.on_input_grid(b.budget))
      throw std::invalid_argument(who + ": budget is off the input grid");
  }
}

long long Allocation::total() const {
  long long t = 0;
  for (long long x : units) t += x;
  return t;
}

Utility utility(const Buyer& buyer, const Rat& price, long long units) {
  Rat spend = price * units;
  if (spend > buyer.budget) return Utility::neg_infinity();
  return Utility::of(buyer.valuation * units - spend);
}

Rat social_welfare(const AuctionInstance& instance, const Outcome& outcome) {
  Rat total = 0;
  for (int i = 0; i < instance.n(); ++i)
    total += instance.buyers[i].valuation * outcome.allocation.units[i];
  return total;
}

Rat revenue(const Outcome& outcome) {
  return outcome.price * outcome.allocation.total();
}

}  // namespace efp
