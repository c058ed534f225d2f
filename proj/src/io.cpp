#include "efp/io.hpp"

#include <fstream>
#include <iostream>

#include "efp/errors.hpp"

namespace efp {

namespace {

Rat rat_field(const Json& j, const std::string& key) {
  if (!j.contains(key)) throw ParseError("missing field: " + key);
  const Json& v = j.at(key);
  try {
    if (v.is_string()) return parse_rat(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long long>());
  } catch (const std::invalid_argument& e) {
    throw ParseError("field " + key + ": " + e.what());
  }
  throw ParseError("field " + key + " must be a rational string or integer");
}

long long int_field(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw ParseError("missing or non-integer field: " + key);
  return j.at(key).get<long long>();
}

AuctionInstance parse_linear(const Json& j) {
  AuctionInstance instance;
  instance.units = int_field(j, "m");
  if (j.contains("grid")) {
    const Json& g = j.at("grid");
    Rat epsilon = rat_field(g, "epsilon");
    if (epsilon <= 0) throw ParseError("grid.epsilon must be positive");
    instance.grid = PriceGrid::with_epsilon(epsilon);
    if (g.contains("delta") && rat_field(g, "delta") != instance.grid.output_spacing)
      throw ParseError("grid.delta must equal epsilon/2");
  }
  if (!j.contains("buyers") || !j.at("buyers").is_array())
    throw ParseError("missing buyers array");
  for (const Json& b : j.at("buyers"))
    instance.buyers.push_back(
        Buyer{rat_field(b, "valuation"), rat_field(b, "budget")});
  try {
    instance.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return instance;
}

GeneralInstance parse_general(const Json& j) {
  GeneralInstance instance;
  instance.units = int_field(j, "m");
  if (!j.contains("buyers") || !j.at("buyers").is_array())
    throw ParseError("missing buyers array");
  for (const Json& b : j.at("buyers")) {
    instance.budgets.push_back(rat_field(b, "budget"));
    if (!b.contains("valuations") || !b.at("valuations").is_array())
      throw ParseError("missing valuations array for a buyer");
    std::vector<Rat> v;
    for (const Json& entry : b.at("valuations")) {
      if (entry.is_string())
        v.push_back(parse_rat(entry.get<std::string>()));
      else if (entry.is_number_integer())
        v.push_back(Rat(entry.get<long long>()));
      else
        throw ParseError("valuations entries must be rational strings or integers");
    }
    instance.valuations.push_back(std::move(v));
  }
  try {
    instance.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return instance;
}

}  // namespace

ParsedInstance parse_instance(const Json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  std::string model = j.value("model", "linear");
  if (model == "linear") return parse_linear(j);
  if (model == "general") return parse_general(j);
  throw ParseError("unknown model: " + model);
}

ParsedInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_instance(j);
}

Json instance_to_json(const AuctionInstance& instance) {
  Json j;
  j["schema_version"] = 1;
  j["model"] = "linear";
  j["grid"] = {{"epsilon", format_rat(instance.grid.input_spacing)},
               {"delta", format_rat(instance.grid.output_spacing)}};
  j["m"] = instance.units;
  j["buyers"] = Json::array();
  for (const Buyer& b : instance.buyers)
    j["buyers"].push_back({{"valuation", format_rat(b.valuation)},
                           {"budget", format_rat(b.budget)}});
  return j;
}

Json instance_to_json(const GeneralInstance& instance) {
  Json j;
  j["schema_version"] = 1;
  j["model"] = "general";
  j["m"] = instance.units;
  j["buyers"] = Json::array();
  for (int i = 0; i < instance.n(); ++i) {
    Json vals = Json::array();
    for (const Rat& v : instance.valuations[i]) vals.push_back(format_rat(v));
    j["buyers"].push_back(
        {{"valuations", vals}, {"budget", format_rat(instance.budgets[i])}});
  }
  return j;
}

Json allocation_to_json(const Allocation& allocation) {
  Json j = Json::array();
  for (long long x : allocation.units) j.push_back(x);
  return j;
}

void write_json(const Json& j, const std::string& path_or_dash) {
  if (path_or_dash == "-" || path_or_dash.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path_or_dash);
  if (!out) throw ParseError("cannot open " + path_or_dash + " for writing");
  out << j.dump(2) << "\n";
}

}  // namespace efp
