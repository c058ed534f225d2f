#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "efp/kernel.hpp"
#include "efp/model.hpp"
#include "efp/optimizers.hpp"

namespace efp {

using Mechanism = std::function<Outcome(const AuctionInstance&)>;

/// Brute-force optimum over every envy-free candidate price with its
/// objective-maximizing allocation. Deliberately shares no search code with
/// the optimizers; equality between the two is a cross-check, not a
/// tautology. Throws InstanceTooLarge when m > 10^4.
struct OracleResult {
  Outcome outcome;
  Rat objective;
};

OracleResult oracle_optimum(const AuctionInstance& instance,
                            Objective objective);

struct DeviationWitness {
  int buyer = 0;
  Rat reported;       // the profitable misreport
  Utility truthful;   // utility under the true report
  Utility deviated;   // utility after misreporting, at the true valuation
};

struct TruthfulnessVerdict {
  bool truthful = false;
  std::optional<DeviationWitness> witness;
};

/// Exhaustive deviation scan: every buyer, every input-grid report in
/// [epsilon, v_max + 10 epsilon]. FAIL carries a witness that replays to a
/// strict utility increase.
TruthfulnessVerdict truthfulness_audit(const Mechanism& mechanism,
                                       const AuctionInstance& instance);

struct ParetoVerdict {
  bool efficient = false;
  std::optional<Outcome> dominator;
};

/// Searches all envy-free outcomes (candidate and output-grid prices, all
/// demand-respecting allocations) for one weakly improving every buyer's
/// utility and the seller's revenue, with at least one strict improvement.
/// Throws InstanceTooLarge beyond desk scale.
ParetoVerdict pareto_check(const AuctionInstance& instance,
                           const Outcome& outcome);

struct WastefulnessVerdict {
  bool wasteful = false;
  long long units_left = 0;
  int eligible_buyer = -1;
};

/// Wasteful iff some unsold unit could still go to a buyer within its
/// demand set and budget at the outcome price. Requires an envy-free
/// outcome.
WastefulnessVerdict wastefulness_check(const AuctionInstance& instance,
                                       const Outcome& outcome);

/// True iff the price is at most the highest valuation among buyers that
/// can afford at least one unit at the minimum envy-free price.
bool in_range_check(const AuctionInstance& instance, const Rat& price);

struct MarketFlags {
  bool trivial = false;
  bool monotone = false;   // budgets sorted consistently with valuations:
                           // no pair with v_i > v_j and B_i < B_j
  bool monopsony = false;  // top buyer affords all m units at the second
                           // highest valuation
};

struct AnalysisReport {
  MarketFlags flags;
  std::optional<MarketShareReport> share;  // absent on trivial profiles
};

AnalysisReport analyze(const AuctionInstance& instance);

// ---- instance generators -------------------------------------------------

/// Two buyers with valuations 1.12 and 1.11 and a common budget chosen so
/// the top buyer affords exactly m/2 + 1 units at price 1.11. Requires even
/// m >= 4; throws BadParams otherwise. AON forfeits a 2 - 4/(m+2) revenue
/// factor on this family.
AuctionInstance make_lower_bound_instance(long long m);

/// Monopsony with revenue-ratio parameter ratio > 1: second valuation 1,
/// top valuation `ratio`, top budget ratio * m. Throws BadParams unless
/// ratio > 1 and m >= 1.
AuctionInstance make_monopsony_instance(const Rat& ratio, long long m);

/// Subset-sum market: m = target, budget s_i per buyer, step valuations
/// v_i(j) = s_i iff j >= s_i. Revenue `target` is attainable iff some
/// subset of the universe sums to it.
GeneralInstance make_subset_sum_instance(const std::vector<long long>& universe,
                                         long long target);

struct RandomInstanceParams {
  int n_min = 1, n_max = 4;
  long long m_min = 1, m_max = 20;
  Rat epsilon = Rat(1, 100);
  long long valuation_grid_max = 60;  // v_i = k * epsilon, k in [1, max]
  long long budget_grid_max = 200;
  bool monotone = false;         // sort budgets consistently with valuations
  bool reject_monopsony = false;
  bool budget_covers_valuation = false;  // draw B_i >= v_i
};

/// Seeded, deterministic uniform draw on the grid; trivial profiles (and
/// optionally monopsonies) are rejected and redrawn.
AuctionInstance random_instance(std::uint64_t seed,
                                const RandomInstanceParams& params);

/// FNV-1a hash of the canonical serialization, for audit reports.
std::string instance_digest(const AuctionInstance& instance);

}  // namespace efp
