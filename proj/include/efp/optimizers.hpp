#pragma once

#include <optional>
#include <vector>

#include "efp/kernel.hpp"
#include "efp/knapsack.hpp"
#include "efp/model.hpp"

namespace efp {

struct OptResult {
  Outcome outcome;
  Rat objective;
  bool trivial = false;  // nothing sells at any envy-free price
};

/// Welfare-optimal envy-free pricing: the minimum envy-free candidate price
/// with a maximal allocation.
OptResult welfare_opt(const AuctionInstance& instance);

/// Revenue-optimal envy-free pricing by exhaustive scan of the candidate
/// set. Ties broken toward the lower price.
OptResult revenue_exact_scan(const AuctionInstance& instance);

/// Solution of the continuous relaxation (divisible resource): price R/m at
/// which the whole resource is sold, with budget-exhausting fractional
/// allocations for the top buyers.
struct ContinuousSolution {
  Rat price;
  std::vector<Rat> allocation;
  Rat revenue;
};

ContinuousSolution continuous_revenue_opt(const AuctionInstance& instance);

/// Revenue FPTAS: exact candidate scan when m <= n/eps, otherwise the
/// continuous optimum with allocations rounded down. Guarantees revenue
/// >= (1 - eps) * optimum. Throws InvalidEpsilon unless eps is in (0, 1).
OptResult revenue_fptas(const AuctionInstance& instance, const Rat& eps);

/// Revenue maximization restricted to an anchor buyer's budget-exhaustion
/// prices p = B/x: maximize sum_i floor(ratios_i * x) / x over integers
/// x in [lo, hi].
struct FixedTypesProblem {
  std::vector<Rat> ratios;  // alpha_i = B_i / B_anchor
  long long lo = 1;
  long long hi = 1;
};

struct FixedTypesSolution {
  long long x = 0;
  Rat objective;
};

/// Decision form: is there an x in [lo, hi] with
/// c * x <= sum_i floor(ratios_i * x) <= d * x? Solved by bounded
/// enumeration; returns a witness maximizing the sum when feasible.
std::optional<long long> fixed_types_decision(const std::vector<Rat>& ratios,
                                              long long lo, long long hi,
                                              const Rat& c, const Rat& d);

/// Binary search on the objective value over [0, sum ratios], terminating
/// when the bracket is narrower than 1/hi^2; each probe is one decision
/// call. Requires lo <= hi.
FixedTypesSolution fixed_types_search(const FixedTypesProblem& problem);

/// Exact revenue maximization for instances with at most 4 distinct
/// (valuation, budget) types: valuation prices and budget-exhaustion prices
/// found through fixed_types_search over each inter-valuation interval.
/// Throws TooManyTypes above the type bound.
OptResult revenue_exact_fixed_types(const AuctionInstance& instance);

/// Multi-unit market with general (per-bundle-size) valuations.
struct GeneralInstance {
  std::vector<std::vector<Rat>> valuations;  // per buyer, size m+1, v[0] = 0
  std::vector<Rat> budgets;
  long long units = 0;  // m

  int n() const { return static_cast<int>(budgets.size()); }

  /// Throws MalformedValuationVector / std::invalid_argument.
  void validate() const;
};

enum class KnapsackMode { Exact, Fptas };

struct GeneralOptResult {
  Outcome outcome;
  Rat objective;
  /// Set when, at the chosen price, some buyer has a nonnegative-utility
  /// bundle size outside its demand set (the two class constructions
  /// disagree on such instances).
  bool demand_class_mismatch = false;
};

/// Welfare or revenue maximization under general valuations: per candidate
/// price, a multi-choice knapsack over each buyer's demand-set bundle sizes.
/// eps is only consulted in Fptas mode and must then lie in (0, 1).
GeneralOptResult general_opt(const GeneralInstance& instance,
                             Objective objective, KnapsackMode mode,
                             const Rat& eps = Rat(1, 2));

}  // namespace efp
