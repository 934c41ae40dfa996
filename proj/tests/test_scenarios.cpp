#include "bchlab/scenarios.h"

#include <gtest/gtest.h>

using namespace bchlab;

TEST(Scenarios, Registry)
{
	auto ids = scenario_ids();
	for (auto id : {"examBiagi", "prop24", "prolongation-singular", "eggert",
	                "mercator-pi-domain", "bernoulli-boundary", "small-norm-regime"})
		EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
	EXPECT_THROW(run_scenario("no-such-scenario"), std::invalid_argument);
}

TEST(Scenarios, FullCorpusGreen)
{
	for (auto const &r : run_all_scenarios())
	{
		EXPECT_FALSE(r.claims.empty()) << r.scenario_id;
		for (auto const &c : r.claims)
		{
			EXPECT_TRUE(c.pass) << r.scenario_id << " :: " << c.paper_anchor << "\n"
			                    << c.evidence.dump(1);
			EXPECT_FALSE(c.paper_anchor.empty());
			EXPECT_FALSE(c.claim_text.empty());
		}
		EXPECT_TRUE(r.all_passed());
	}
}

TEST(Scenarios, DeterministicJson)
{
	for (auto id : {"examBiagi", "prop24", "eggert"})
	{
		auto a = to_json(run_scenario(id)).dump(2);
		auto b = to_json(run_scenario(id)).dump(2);
		EXPECT_EQ(a, b) << id;
	}
}

TEST(Scenarios, JsonSchema)
{
	auto r = run_scenario("mercator-pi-domain");
	auto j = to_json(r);
	EXPECT_FALSE(j.contains("runtime_ms"));
	EXPECT_TRUE(to_json(r, true).contains("runtime_ms"));
	EXPECT_EQ(j["scenario_id"], "mercator-pi-domain");
	EXPECT_EQ(j["config_echo"]["window"], 50);
	ASSERT_EQ(j["claims"].size(), 1u);
	EXPECT_EQ(j["claims"][0]["verdict"], "pass");
	// keys are emitted in sorted order
	auto text = j.dump();
	EXPECT_LT(text.find("\"claims\""), text.find("\"config_echo\""));
	EXPECT_LT(text.find("\"config_echo\""), text.find("\"scenario_id\""));
}

TEST(Scenarios, FailingClaimsAreRecordedNotThrown)
{
	DiagnosisConfig starved;
	starved.n_max = 5;
	starved.window = 3;
	ScenarioReport r;
	ASSERT_NO_THROW(r = run_scenario("prop24", starved));
	EXPECT_EQ(r.claims.size(), 5u);
	EXPECT_FALSE(r.all_passed());
	EXPECT_EQ(to_json(r)["config_echo"]["n_max"], 5);
}
