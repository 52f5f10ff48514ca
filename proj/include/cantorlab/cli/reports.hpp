#pragma once

#include <string>

#include <json.hpp>

#include "cantorlab/covers/profile.hpp"
#include "cantorlab/dims/assouad.hpp"
#include "cantorlab/dims/estimates.hpp"
#include "cantorlab/dims/product.hpp"

namespace cantorlab::cli {

using Json = nlohmann::json;

/// Statement checked by a verify subcommand, printed in the report header.
std::string claim_for(const std::string& check);

/// {"check", "claim", "params", "entries", "pass"} plus any extra top-level fields.
Json make_report(const std::string& check, const Json& params, Json entries, bool pass);

Json to_json(const dims::DimEstimate& est);
Json to_json(const covers::ProfileEntry& e);
Json to_json(const covers::ChainEntry& e);
Json to_json(const covers::WindowStat& w);
Json to_json(const dims::WindowSlope& w);
Json to_json(const dims::WitnessEntry& w);
Json to_json(const dims::ProductTheoremEntry& e);
Json to_json(const dims::ExponentBlock& b);

/// Two-space indented JSON with a trailing newline.
std::string serialize(const Json& report);

}  // namespace cantorlab::cli
