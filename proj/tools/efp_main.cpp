#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "efp/audit.hpp"
#include "efp/errors.hpp"
#include "efp/io.hpp"
#include "efp/mechanism.hpp"
#include "efp/optimizers.hpp"

namespace {

using efp::Json;
using efp::Rat;

constexpr int kExitParse = 2;
constexpr int kExitFlags = 3;
constexpr int kExitTooLarge = 4;

struct FlagError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string status_name(efp::BuyerStatus s) {
  switch (s) {
    case efp::BuyerStatus::Hungry: return "hungry";
    case efp::BuyerStatus::SemiHungryServed: return "semi_hungry_served";
    case efp::BuyerStatus::SemiHungryZeroed: return "semi_hungry_zeroed";
    default: return "priced_out";
  }
}

Json outcome_to_json(const efp::Outcome& outcome) {
  Json j;
  j["price"] = efp::format_rat(outcome.price);
  j["allocation"] = efp::allocation_to_json(outcome.allocation);
  j["units_sold"] = outcome.allocation.total();
  return j;
}

efp::Mechanism pick_rule(const std::string& rule) {
  if (rule == "aon")
    return [](const efp::AuctionInstance& i) { return efp::all_or_nothing(i).outcome; };
  if (rule == "welfare-opt")
    return [](const efp::AuctionInstance& i) { return efp::welfare_opt(i).outcome; };
  throw FlagError("unknown rule: " + rule);
}

std::vector<long long> parse_universe(const std::string& csv) {
  std::vector<long long> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ','))
    out.push_back(std::stoll(tok));
  return out;
}

int run_solve(const std::string& file, const std::string& mechanism,
              const std::string& objective, const std::string& method,
              const std::string& epsilon, const std::string& knapsack,
              const std::string& out) {
  efp::ParsedInstance parsed = efp::load_instance(file);
  Json report;
  report["command"] = "solve";

  if (std::holds_alternative<efp::GeneralInstance>(parsed)) {
    if (!mechanism.empty() || method == "fixed-types")
      throw FlagError("mechanisms and fixed-types apply to the linear model only");
    const auto& instance = std::get<efp::GeneralInstance>(parsed);
    efp::Objective obj = objective == "revenue" ? efp::Objective::Revenue
                                                : efp::Objective::Welfare;
    efp::KnapsackMode mode = knapsack == "fptas" ? efp::KnapsackMode::Fptas
                                                 : efp::KnapsackMode::Exact;
    efp::GeneralOptResult result =
        mode == efp::KnapsackMode::Fptas
            ? efp::general_opt(instance, obj, mode, efp::parse_rat(epsilon))
            : efp::general_opt(instance, obj, mode);
    report["model"] = "general";
    report["objective"] = objective;
    report["outcome"] = outcome_to_json(result.outcome);
    report["objective_value"] = efp::format_rat(result.objective);
    report["demand_class_mismatch"] = result.demand_class_mismatch;
    efp::write_json(report, out);
    return 0;
  }

  const auto& instance = std::get<efp::AuctionInstance>(parsed);
  report["model"] = "linear";
  report["instance_digest"] = efp::instance_digest(instance);

  if (!mechanism.empty()) {
    if (mechanism != "aon") throw FlagError("unknown mechanism: " + mechanism);
    efp::MechanismResult result = efp::all_or_nothing(instance);
    report["mechanism"] = "aon";
    report["outcome"] = outcome_to_json(result.outcome);
    report["revenue"] = efp::format_rat(efp::revenue(result.outcome));
    report["welfare"] =
        efp::format_rat(efp::social_welfare(instance, result.outcome));
    Json statuses = Json::array();
    for (efp::BuyerStatus s : result.statuses) statuses.push_back(status_name(s));
    report["statuses"] = statuses;
    efp::write_json(report, out);
    return 0;
  }

  efp::OptResult result;
  if (objective == "welfare") {
    if (method != "exact")
      throw FlagError("welfare optimization supports --method exact only");
    result = efp::welfare_opt(instance);
  } else if (method == "exact") {
    result = efp::revenue_exact_scan(instance);
  } else if (method == "fptas") {
    result = efp::revenue_fptas(instance, efp::parse_rat(epsilon));
  } else if (method == "fixed-types") {
    result = efp::revenue_exact_fixed_types(instance);
  } else {
    throw FlagError("unknown method: " + method);
  }
  report["objective"] = objective;
  report["method"] = method;
  report["outcome"] = outcome_to_json(result.outcome);
  report["objective_value"] = efp::format_rat(result.objective);
  report["trivial"] = result.trivial;
  efp::write_json(report, out);
  return 0;
}

int run_audit(const std::string& file, const std::string& check,
              const std::string& rule, const std::string& out) {
  efp::ParsedInstance parsed = efp::load_instance(file);
  if (!std::holds_alternative<efp::AuctionInstance>(parsed))
    throw FlagError("audits apply to the linear model only");
  const auto& instance = std::get<efp::AuctionInstance>(parsed);
  efp::Mechanism mech = pick_rule(rule);

  Json report;
  report["command"] = "audit";
  report["check"] = check;
  report["rule"] = rule;
  report["instance_digest"] = efp::instance_digest(instance);

  if (check == "truthfulness") {
    efp::TruthfulnessVerdict verdict = efp::truthfulness_audit(mech, instance);
    report["truthful"] = verdict.truthful;
    if (verdict.witness) {
      Json w;
      w["buyer"] = verdict.witness->buyer;
      w["reported"] = efp::format_rat(verdict.witness->reported);
      w["truthful_utility"] = verdict.witness->truthful.feasible()
                                  ? efp::format_rat(verdict.witness->truthful.value())
                                  : "-inf";
      w["deviated_utility"] = verdict.witness->deviated.feasible()
                                  ? efp::format_rat(verdict.witness->deviated.value())
                                  : "-inf";
      report["witness"] = w;
    }
  } else if (check == "pareto") {
    efp::Outcome outcome = mech(instance);
    report["outcome"] = outcome_to_json(outcome);
    efp::ParetoVerdict verdict = efp::pareto_check(instance, outcome);
    report["pareto_efficient"] = verdict.efficient;
    if (verdict.dominator) report["dominator"] = outcome_to_json(*verdict.dominator);
  } else if (check == "wastefulness") {
    efp::Outcome outcome = mech(instance);
    report["outcome"] = outcome_to_json(outcome);
    efp::WastefulnessVerdict verdict = efp::wastefulness_check(instance, outcome);
    report["wasteful"] = verdict.wasteful;
    report["units_left"] = verdict.units_left;
    if (verdict.wasteful) report["eligible_buyer"] = verdict.eligible_buyer;
  } else if (check == "ratios") {
    efp::Outcome outcome = mech(instance);
    report["outcome"] = outcome_to_json(outcome);
    efp::OracleResult rev_opt = efp::oracle_optimum(instance, efp::Objective::Revenue);
    efp::OracleResult wel_opt = efp::oracle_optimum(instance, efp::Objective::Welfare);
    Rat rev = efp::revenue(outcome);
    Rat wel = efp::social_welfare(instance, outcome);
    report["revenue"] = efp::format_rat(rev);
    report["welfare"] = efp::format_rat(wel);
    report["optimal_revenue"] = efp::format_rat(rev_opt.objective);
    report["optimal_welfare"] = efp::format_rat(wel_opt.objective);
    report["revenue_ratio"] =
        rev > 0 ? efp::format_rat(rev_opt.objective / rev) : "inf";
    report["welfare_ratio"] =
        wel > 0 ? efp::format_rat(wel_opt.objective / wel) : "inf";
    try {
      efp::MarketShareReport share = efp::market_share(instance);
      report["market_share"] = efp::format_rat(share.market_share);
    } catch (const efp::TrivialInstance&) {
      report["market_share"] = nullptr;
    }
  } else {
    throw FlagError("unknown check: " + check);
  }
  efp::write_json(report, out);
  return 0;
}

int run_gen(const std::string& family, long long m, const std::string& ratio,
            const std::string& universe, long long target,
            std::uint64_t seed, const std::string& out) {
  Json j;
  if (family == "lower_bound") {
    j = efp::instance_to_json(efp::make_lower_bound_instance(m));
  } else if (family == "monopsony") {
    j = efp::instance_to_json(
        efp::make_monopsony_instance(efp::parse_rat(ratio), m));
  } else if (family == "subset_sum") {
    j = efp::instance_to_json(
        efp::make_subset_sum_instance(parse_universe(universe), target));
  } else if (family == "random") {
    j = efp::instance_to_json(efp::random_instance(seed, {}));
  } else {
    throw FlagError("unknown family: " + family);
  }
  efp::write_json(j, out);
  return 0;
}

int run_analyze(const std::string& file, const std::string& out) {
  efp::ParsedInstance parsed = efp::load_instance(file);
  if (!std::holds_alternative<efp::AuctionInstance>(parsed))
    throw FlagError("analyze applies to the linear model only");
  const auto& instance = std::get<efp::AuctionInstance>(parsed);
  efp::AnalysisReport analysis = efp::analyze(instance);

  Json report;
  report["command"] = "analyze";
  report["instance_digest"] = efp::instance_digest(instance);
  report["trivial"] = analysis.flags.trivial;
  report["monotone"] = analysis.flags.monotone;
  report["monopsony"] = analysis.flags.monopsony;
  if (analysis.share) {
    Json s;
    s["min_envy_free_price"] = efp::format_rat(analysis.share->min_price);
    s["units_sold"] = analysis.share->units_sold;
    s["market_share"] = efp::format_rat(analysis.share->market_share);
    Json shares = Json::array();
    for (const Rat& r : analysis.share->shares) shares.push_back(efp::format_rat(r));
    s["shares"] = shares;
    report["market"] = s;
  } else {
    report["market"] = nullptr;
  }
  efp::write_json(report, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Envy-free pricing toolkit for multi-unit markets"};
  app.require_subcommand(1);

  std::string file, out = "-";
  std::string mechanism, objective = "revenue", method = "exact";
  std::string epsilon = "1/10", knapsack = "exact";
  auto* solve = app.add_subcommand("solve", "Compute an envy-free outcome");
  solve->add_option("file", file, "instance JSON")->required();
  solve->add_option("--mechanism", mechanism, "aon");
  solve->add_option("--objective", objective, "welfare|revenue");
  solve->add_option("--method", method, "exact|fptas|fixed-types");
  solve->add_option("--epsilon", epsilon, "approximation parameter");
  solve->add_option("--knapsack", knapsack, "exact|fptas (general model)");
  solve->add_option("--out", out, "output path, - for stdout");

  std::string check, rule = "aon";
  auto* audit = app.add_subcommand("audit", "Audit a pricing rule");
  audit->add_option("file", file, "instance JSON")->required();
  audit->add_option("--check", check, "truthfulness|pareto|wastefulness|ratios")
      ->required();
  audit->add_option("--rule", rule, "aon|welfare-opt");
  audit->add_option("--out", out, "output path, - for stdout");

  std::string family, ratio = "2", universe;
  long long m = 4, target = 1;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a named instance");
  gen->add_option("--family", family, "lower_bound|monopsony|subset_sum|random")
      ->required();
  gen->add_option("--m", m, "number of units");
  gen->add_option("--budget-ratio", ratio, "monopsony revenue ratio");
  gen->add_option("--universe", universe, "comma-separated item sizes");
  gen->add_option("--target", target, "subset-sum target");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--out", out, "output path, - for stdout");

  auto* analyze = app.add_subcommand("analyze", "Market profile flags");
  analyze->add_option("file", file, "instance JSON")->required();
  analyze->add_option("--out", out, "output path, - for stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return run_solve(file, mechanism, objective, method, epsilon, knapsack, out);
    if (audit->parsed()) return run_audit(file, check, rule, out);
    if (gen->parsed()) return run_gen(family, m, ratio, universe, target, seed, out);
    return run_analyze(file, out);
  } catch (const efp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const efp::TooManyTypes& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const efp::InstanceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const FlagError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFlags;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFlags;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
