#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "efp/errors.hpp"
#include "efp/optimizers.hpp"

namespace efp {

std::optional<long long> fixed_types_decision(const std::vector<Rat>& ratios,
                                              long long lo, long long hi,
                                              const Rat& c, const Rat& d) {
  std::optional<long long> witness;
  Rat best_objective;
  for (long long x = lo; x <= hi; ++x) {
    Int sum = 0;
    for (const Rat& alpha : ratios) sum += floor_rat(alpha * x);
    Rat total(sum);
    if (c * x <= total && total <= d * x) {
      Rat objective = total / x;
      if (!witness || objective > best_objective) {
        witness = x;
        best_objective = objective;
      }
    }
  }
  return witness;
}

FixedTypesSolution fixed_types_search(const FixedTypesProblem& problem) {
  if (problem.lo > problem.hi)
    throw BadParams("fixed_types_search: empty range");
  Rat lower = 0;
  Rat upper = 0;
  for (const Rat& alpha : problem.ratios) upper += alpha;
  Rat tolerance = Rat(1, problem.hi * problem.hi);

  std::optional<long long> best;
  while (upper - lower > tolerance) {
    Rat mid = (lower + upper) / 2;
    auto witness =
        fixed_types_decision(problem.ratios, problem.lo, problem.hi, mid, upper);
    if (witness) {
      best = witness;
      lower = mid;
    } else {
      upper = mid;
    }
  }
  if (!best) {
    // Objective 0 everywhere in range; any x attains it.
    best = fixed_types_decision(problem.ratios, problem.lo, problem.hi,
                                Rat(0), upper);
  }
  FixedTypesSolution solution;
  solution.x = *best;
  Int sum = 0;
  for (const Rat& alpha : problem.ratios) sum += floor_rat(alpha * solution.x);
  solution.objective = Rat(sum) / solution.x;
  return solution;
}

namespace {

struct Candidate {
  Rat price;
  Outcome outcome;
  Rat revenue_value;
};

void consider(const AuctionInstance& instance, const Rat& price,
              std::optional<Candidate>& best) {
  if (price <= 0 || !is_envy_free(instance, price)) return;
  Outcome outcome{price, max_allocation_at_price(instance, price)};
  Rat rev = revenue(outcome);
  if (!best || rev > best->revenue_value ||
      (rev == best->revenue_value && price < best->price)) {
    best = Candidate{price, std::move(outcome), rev};
  }
}

}  // namespace

OptResult revenue_exact_fixed_types(const AuctionInstance& instance) {
  std::set<std::pair<Rat, Rat>> types;
  for (const Buyer& b : instance.buyers) types.insert({b.valuation, b.budget});
  if (types.size() > 4)
    throw TooManyTypes("revenue_exact_fixed_types: more than 4 buyer types");

  const long long m = instance.units;
  CandidatePriceSet candidates = candidate_prices(instance);
  Rat min_ef;
  {
    min_ef = candidates.prices.back();
    for (const Rat& p : candidates.prices)
      if (is_envy_free(instance, p)) {
        min_ef = p;
        break;
      }
  }

  std::optional<Candidate> best;

  // Valuation prices.
  std::vector<Rat> valuations;
  for (const Buyer& b : instance.buyers) valuations.push_back(b.valuation);
  std::sort(valuations.begin(), valuations.end(), std::greater<Rat>());
  valuations.erase(std::unique(valuations.begin(), valuations.end()),
                   valuations.end());
  for (const Rat& v : valuations) consider(instance, v, best);

  // Budget-exhaustion prices where a single buyer takes the whole supply.
  for (const Buyer& b : instance.buyers)
    consider(instance, b.budget / m, best);

  // Open intervals between consecutive valuations (the lowest interval is
  // bounded below by zero). In each, the optimal price exhausts the budget
  // of some hungry buyer.
  for (size_t k = 0; k < valuations.size(); ++k) {
    const Rat& v_hi = valuations[k];
    Rat v_lo = k + 1 < valuations.size() ? valuations[k + 1] : Rat(0);

    // Price bounds restricted to the candidate set and envy-freeness.
    Rat c_bound, d_bound;
    bool have_c = false, have_d = false;
    for (const Rat& p : candidates.prices) {
      if (p > v_lo && p < v_hi) {
        if (!have_c) {
          c_bound = p;
          have_c = true;
        }
        d_bound = p;
        have_d = true;
      }
    }
    if (!have_c || !have_d) continue;
    if (c_bound < min_ef) c_bound = min_ef;
    if (c_bound > d_bound || c_bound >= v_hi) continue;

    // Hungry set and distinct anchor budgets in this interval.
    std::vector<const Buyer*> hungry;
    std::set<Rat> anchor_budgets;
    for (const Buyer& b : instance.buyers)
      if (b.valuation >= v_hi) {
        hungry.push_back(&b);
        anchor_budgets.insert(b.budget);
      }
    if (hungry.empty()) continue;

    for (const Rat& anchor : anchor_budgets) {
      long long lo =
          std::max<long long>(1, ceil_rat(anchor / d_bound).convert_to<long long>());
      long long hi =
          std::min<long long>(m, floor_div(anchor, c_bound).convert_to<long long>());
      if (lo > hi) continue;
      FixedTypesProblem problem;
      problem.lo = lo;
      problem.hi = hi;
      for (const Buyer* b : hungry) problem.ratios.push_back(b->budget / anchor);
      FixedTypesSolution solution = fixed_types_search(problem);
      consider(instance, anchor / solution.x, best);
    }
  }

  OptResult result;
  if (best && best->revenue_value > 0) {
    result.outcome = std::move(best->outcome);
    result.objective = best->revenue_value;
    result.trivial = false;
  } else {
    result.outcome = Outcome{min_ef, max_allocation_at_price(instance, min_ef)};
    result.objective = revenue(result.outcome);
    result.trivial = result.objective == 0;
  }
  return result;
}

}  // namespace efp
