#pragma once

#include "bchlab/series.h"

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace bchlab {

struct Claim
{
	std::string claim_text;
	std::string paper_anchor;
	bool pass = false;
	nlohmann::json evidence;
};

struct ScenarioReport
{
	std::string scenario_id;
	std::vector<Claim> claims;
	long runtime_ms = 0;
	DiagnosisConfig config;

	bool all_passed() const;
};

/// Keys come out sorted. runtime_ms is only written when include_timing is
/// set, so that reruns produce byte-identical JSON.
nlohmann::json to_json(ScenarioReport const &r, bool include_timing = false);

std::vector<std::string> scenario_ids();

/// Runs every claim of a registered scenario; a failing or throwing claim
/// is recorded as fail, never propagated. Throws std::invalid_argument for
/// an unknown id.
ScenarioReport run_scenario(std::string_view id,
                            DiagnosisConfig const &config = {});

std::vector<ScenarioReport> run_all_scenarios(DiagnosisConfig const &config = {});

} // namespace bchlab
