#ifndef BEI_IO_HPP
#define BEI_IO_HPP

#include "bei/families.hpp"
#include "bei/fsplit.hpp"
#include "bei/monomial_ideal.hpp"
#include "bei/symbolic.hpp"

#include <json.hpp>

#include <string>

namespace bei {

using Json = nlohmann::json;

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json recipe_to_json(const GraphRecipe& r);
GraphRecipe recipe_from_json(const Json& j);

Json monomial_ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal monomial_ideal_from_json(const Json& j);

std::string to_dot(const Graph& g);

// report payloads
Json gbasis_report(const Graph& g);
Json primes_report(const Graph& g);
Json socp_report(const MonomialIdeal& ideal);
Json powers_report(const PowerPipelineReport& rep);
Json fsplit_report_to_json(const FsplitReport& rep);
Json sfr_report_to_json(const SfrReport& rep);

std::string fnv1a_hex(const std::string& data);

// canonical envelope: command, input hash, payload; timing only on request
Json run_report(const std::string& command, const std::string& input_bytes, Json payload,
                long long timing_ms = -1);

}  // namespace bei

#endif
