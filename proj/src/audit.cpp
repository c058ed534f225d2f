#include "efp/audit.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "efp/errors.hpp"

namespace efp {

namespace {

// Demand interval [lo, hi] at a price, derived directly from the definitions
// rather than through the kernel, so the oracle stays an independent check.
struct Interval {
  long long lo = 0;
  long long hi = 0;
};

long long cap_at(const Rat& budget, const Rat& price, long long m) {
  if (price == 0) return m;
  Int q = floor_div(budget, price);
  return q > m ? m : q.convert_to<long long>();
}

Interval interval_at(const Buyer& b, const Rat& price, long long m) {
  long long cap = cap_at(b.budget, price, m);
  if (b.valuation > price) return Interval{cap, cap};
  if (b.valuation == price) return Interval{0, cap};
  return Interval{0, 0};
}

}  // namespace

OracleResult oracle_optimum(const AuctionInstance& instance,
                            Objective objective) {
  if (instance.units > 10000)
    throw InstanceTooLarge("oracle_optimum: m > 10^4");
  const long long m = instance.units;

  std::set<Rat> prices;
  for (const Buyer& b : instance.buyers) {
    prices.insert(b.valuation);
    for (long long k = 1; k <= m; ++k) prices.insert(b.budget / k);
  }

  bool have = false;
  OracleResult best;
  for (const Rat& p : prices) {
    std::vector<Interval> intervals;
    long long floor_total = 0;
    long long slack = 0;
    for (const Buyer& b : instance.buyers) {
      intervals.push_back(interval_at(b, p, m));
      floor_total += intervals.back().lo;
      slack += intervals.back().hi - intervals.back().lo;
    }
    if (floor_total > m) continue;  // not envy-free

    // All slack lies with buyers valuing a unit at exactly p, so both
    // objectives gain p per extra unit: sell as much slack as fits.
    long long extra = std::min(slack, m - floor_total);
    Rat value;
    if (objective == Objective::Revenue) {
      value = p * (floor_total + extra);
    } else {
      value = p * extra;
      for (int i = 0; i < instance.n(); ++i)
        value += instance.buyers[i].valuation * intervals[i].lo;
    }
    if (have && value <= best.objective) continue;

    Outcome outcome;
    outcome.price = p;
    long long pool = extra;
    for (const Interval& iv : intervals) {
      long long take = iv.lo + std::min(pool, iv.hi - iv.lo);
      pool -= take - iv.lo;
      outcome.allocation.units.push_back(take);
    }
    best.outcome = std::move(outcome);
    best.objective = value;
    have = true;
  }
  return best;
}

TruthfulnessVerdict truthfulness_audit(const Mechanism& mechanism,
                                       const AuctionInstance& instance) {
  const Rat& eps = instance.grid.input_spacing;
  Rat report_max = instance.max_valuation() + 10 * eps;
  Int k_max = floor_div(report_max, eps);

  std::vector<Utility> truthful(instance.n());
  {
    Outcome base = mechanism(instance);
    for (int i = 0; i < instance.n(); ++i)
      truthful[i] =
          utility(instance.buyers[i], base.price, base.allocation.units[i]);
  }

  for (int i = 0; i < instance.n(); ++i) {
    for (Int k = 1; k <= k_max; ++k) {
      Rat report = Rat(k) * eps;
      if (report == instance.buyers[i].valuation) continue;
      AuctionInstance deviated = instance;
      deviated.buyers[i].valuation = report;
      Outcome outcome = mechanism(deviated);
      Utility gained =
          utility(instance.buyers[i], outcome.price, outcome.allocation.units[i]);
      if (gained > truthful[i]) {
        TruthfulnessVerdict verdict;
        verdict.truthful = false;
        verdict.witness = DeviationWitness{i, report, truthful[i], gained};
        return verdict;
      }
    }
  }
  return TruthfulnessVerdict{true, std::nullopt};
}

namespace {

constexpr long long kParetoBudget = 500000;

bool dominates(const AuctionInstance& instance, const Outcome& candidate,
               const std::vector<Utility>& base_utilities,
               const Rat& base_revenue) {
  bool strict = revenue(candidate) > base_revenue;
  if (revenue(candidate) < base_revenue) return false;
  for (int i = 0; i < instance.n(); ++i) {
    Utility u = utility(instance.buyers[i], candidate.price,
                        candidate.allocation.units[i]);
    if (u < base_utilities[i]) return false;
    if (base_utilities[i] < u) strict = true;
  }
  return strict;
}

// Enumerates every demand-respecting allocation at the price, recursing over
// the semi-hungry buyers' ranges.
bool search_allocations(const AuctionInstance& instance, Outcome& candidate,
                        const std::vector<Interval>& intervals, size_t i,
                        long long remaining,
                        const std::vector<Utility>& base_utilities,
                        const Rat& base_revenue, long long& budget) {
  if (i == intervals.size())
    return dominates(instance, candidate, base_utilities, base_revenue);
  for (long long x = intervals[i].lo;
       x <= std::min(intervals[i].hi, intervals[i].lo + remaining); ++x) {
    if (--budget < 0)
      throw InstanceTooLarge("pareto_check: allocation space too large");
    candidate.allocation.units[i] = x;
    if (search_allocations(instance, candidate, intervals, i + 1,
                           remaining - (x - intervals[i].lo), base_utilities,
                           base_revenue, budget))
      return true;
  }
  return false;
}

}  // namespace

ParetoVerdict pareto_check(const AuctionInstance& instance,
                           const Outcome& outcome) {
  const long long m = instance.units;
  const Rat& delta = instance.grid.output_spacing;

  std::set<Rat> prices;
  for (const Buyer& b : instance.buyers) {
    prices.insert(b.valuation);
    for (long long k = 1; k <= m; ++k) prices.insert(b.budget / k);
  }
  Rat top = instance.max_valuation() + delta;
  Int steps = floor_div(top, delta);
  if (steps > 20000)
    throw InstanceTooLarge("pareto_check: output grid too fine to sweep");
  for (Int k = 0; k <= steps; ++k) prices.insert(Rat(k) * delta);

  std::vector<Utility> base_utilities;
  for (int i = 0; i < instance.n(); ++i)
    base_utilities.push_back(
        utility(instance.buyers[i], outcome.price, outcome.allocation.units[i]));
  Rat base_revenue = revenue(outcome);

  long long budget = kParetoBudget;
  for (const Rat& p : prices) {
    std::vector<Interval> intervals;
    long long floor_total = 0;
    for (const Buyer& b : instance.buyers) {
      intervals.push_back(interval_at(b, p, m));
      floor_total += intervals.back().lo;
    }
    if (floor_total > m) continue;

    Outcome candidate;
    candidate.price = p;
    candidate.allocation.units.assign(instance.buyers.size(), 0);
    if (search_allocations(instance, candidate, intervals, 0,
                           m - floor_total, base_utilities, base_revenue,
                           budget))
      return ParetoVerdict{false, candidate};
  }
  return ParetoVerdict{true, std::nullopt};
}

WastefulnessVerdict wastefulness_check(const AuctionInstance& instance,
                                       const Outcome& outcome) {
  if (!is_envy_free(instance, outcome.price))
    throw NotEnvyFree("wastefulness_check: outcome price is not envy-free");
  WastefulnessVerdict verdict;
  verdict.units_left = instance.units - outcome.allocation.total();
  if (verdict.units_left <= 0) return verdict;
  for (int i = 0; i < instance.n(); ++i) {
    const Buyer& b = instance.buyers[i];
    if (b.valuation < outcome.price) continue;
    long long cap = cap_at(b.budget, outcome.price, instance.units);
    if (outcome.allocation.units[i] < cap) {
      verdict.wasteful = true;
      verdict.eligible_buyer = i;
      return verdict;
    }
  }
  return verdict;
}

bool in_range_check(const AuctionInstance& instance, const Rat& price) {
  Rat p_min = min_envy_free_price_grid(instance);
  Rat v_top = 0;
  for (const Buyer& b : instance.buyers)
    if (cap_at(b.budget, p_min, instance.units) >= 1 && b.valuation > v_top)
      v_top = b.valuation;
  return price <= v_top;
}

AnalysisReport analyze(const AuctionInstance& instance) {
  AnalysisReport report;
  report.flags.trivial = is_trivial_profile(instance);

  report.flags.monotone = true;
  for (int i = 0; i < instance.n() && report.flags.monotone; ++i)
    for (int j = 0; j < instance.n(); ++j)
      if (instance.buyers[i].valuation > instance.buyers[j].valuation &&
          instance.buyers[i].budget < instance.buyers[j].budget) {
        report.flags.monotone = false;
        break;
      }

  if (instance.n() == 1) {
    report.flags.monopsony = true;
  } else {
    int top = 0;
    for (int i = 1; i < instance.n(); ++i)
      if (instance.buyers[i].valuation > instance.buyers[top].valuation)
        top = i;
    Rat second = 0;
    for (int i = 0; i < instance.n(); ++i)
      if (i != top && instance.buyers[i].valuation > second)
        second = instance.buyers[i].valuation;
    report.flags.monopsony =
        instance.buyers[top].budget >= second * instance.units;
  }

  if (!report.flags.trivial) report.share = market_share(instance);
  return report;
}

AuctionInstance make_lower_bound_instance(long long m) {
  if (m < 4 || m % 2 != 0)
    throw BadParams("make_lower_bound_instance: m must be even and >= 4");
  AuctionInstance instance;
  instance.units = m;
  instance.grid = default_grid();
  Rat budget(ceil_rat(Rat(111 * (m / 2 + 1), 100)));
  instance.buyers = {Buyer{Rat(112, 100), budget}, Buyer{Rat(111, 100), budget}};
  return instance;
}

AuctionInstance make_monopsony_instance(const Rat& ratio, long long m) {
  if (ratio <= 1 || m < 1)
    throw BadParams("make_monopsony_instance: need ratio > 1 and m >= 1");
  AuctionInstance instance;
  instance.units = m;
  instance.grid = PriceGrid::with_epsilon(Rat(Int(1), Int(100) * denominator(ratio)));
  instance.buyers = {Buyer{ratio, ratio * m}, Buyer{Rat(1), Rat(1)}};
  return instance;
}

GeneralInstance make_subset_sum_instance(const std::vector<long long>& universe,
                                         long long target) {
  if (universe.empty() || target < 1)
    throw BadParams("make_subset_sum_instance: need items and target >= 1");
  GeneralInstance instance;
  instance.units = target;
  for (long long s : universe) {
    if (s < 1)
      throw BadParams("make_subset_sum_instance: items must be >= 1");
    instance.budgets.push_back(Rat(s));
    std::vector<Rat> v(static_cast<size_t>(target) + 1, Rat(0));
    for (long long j = s; j <= target; ++j) v[j] = Rat(s);
    instance.valuations.push_back(std::move(v));
  }
  return instance;
}

AuctionInstance random_instance(std::uint64_t seed,
                                const RandomInstanceParams& params) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_dist(params.n_min, params.n_max);
  std::uniform_int_distribution<long long> m_dist(params.m_min, params.m_max);
  std::uniform_int_distribution<long long> v_dist(1, params.valuation_grid_max);
  std::uniform_int_distribution<long long> b_dist(1, params.budget_grid_max);

  for (int attempt = 0; attempt < 10000; ++attempt) {
    AuctionInstance instance;
    instance.grid = PriceGrid::with_epsilon(params.epsilon);
    instance.units = m_dist(rng);
    int n = n_dist(rng);
    std::vector<Rat> vals, buds;
    for (int i = 0; i < n; ++i) {
      long long v_mult = v_dist(rng);
      long long b_mult = b_dist(rng);
      if (params.budget_covers_valuation && b_mult < v_mult) b_mult = v_mult;
      vals.push_back(v_mult * params.epsilon);
      buds.push_back(b_mult * params.epsilon);
    }
    if (params.monotone) {
      std::sort(vals.rbegin(), vals.rend());
      std::sort(buds.rbegin(), buds.rend());
    }
    for (int i = 0; i < n; ++i) instance.buyers.push_back(Buyer{vals[i], buds[i]});

    if (is_trivial_profile(instance)) continue;
    if (params.reject_monopsony && analyze(instance).flags.monopsony) continue;
    return instance;
  }
  throw BadParams("random_instance: rejection sampling did not converge");
}

std::string instance_digest(const AuctionInstance& instance) {
  std::string canon = format_rat(instance.grid.input_spacing) + ";" +
                      std::to_string(instance.units);
  for (const Buyer& b : instance.buyers)
    canon += ";" + format_rat(b.valuation) + "," + format_rat(b.budget);

  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : canon) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

}  // namespace efp
