#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "efp/model.hpp"
#include "efp/optimizers.hpp"

namespace efp {

using Json = nlohmann::ordered_json;

using ParsedInstance = std::variant<AuctionInstance, GeneralInstance>;

/// Parses an instance file ({"model": "linear"|"general", ...}).
/// Rationals are strings, either "num/den" or decimal; valuations and
/// budgets must lie on the declared input grid. Throws ParseError.
ParsedInstance parse_instance(const Json& j);
ParsedInstance load_instance(const std::string& path);

Json instance_to_json(const AuctionInstance& instance);
Json instance_to_json(const GeneralInstance& instance);

Json allocation_to_json(const Allocation& allocation);

void write_json(const Json& j, const std::string& path_or_dash);

}  // namespace efp
