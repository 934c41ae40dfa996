#include "bchlab/bch_terms.h"
#include "bchlab/scenarios.h"
#include "bchlab/sweep.h"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fstream>
#include <iostream>

using namespace bchlab;

namespace {

int cmd_terms(int max_degree, std::string const &presentation,
              std::string const &format)
{
	auto set = make_term_set(max_degree, parse_presentation(presentation));
	if (format == "json")
	{
		auto out = nlohmann::json::array();
		for (int n = 1; n <= set.max_degree; ++n)
			out.push_back({{"degree", n}, {"terms", to_json(set.z(n))}});
		std::cout << out.dump(2) << "\n";
	}
	else
	{
		for (int n = 1; n <= set.max_degree; ++n)
			std::cout << fmt::format("Z_{} = {}\n", n, set.z(n).str());
	}
	return 0;
}

int report(std::vector<ScenarioReport> const &reports, std::string const &path,
           bool timing)
{
	bool ok = true;
	for (auto const &r : reports)
	{
		for (auto const &c : r.claims)
		{
			std::cout << fmt::format("[{}] {} :: {}\n", c.pass ? "pass" : "FAIL",
			                         r.scenario_id, c.paper_anchor);
			ok = ok && c.pass;
		}
	}
	if (!path.empty())
	{
		nlohmann::json j;
		if (reports.size() == 1)
			j = to_json(reports.front(), timing);
		else
		{
			j = nlohmann::json::array();
			for (auto const &r : reports)
				j.push_back(to_json(r, timing));
		}
		std::ofstream f(path, std::ios::binary);
		if (!f)
			throw std::runtime_error(fmt::format("cannot write '{}'", path));
		f << j.dump(2) << "\n";
	}
	return ok ? 0 : 1;
}

std::vector<std::string> split(std::string const &s, char sep)
{
	std::vector<std::string> out;
	size_t start = 0;
	while (start <= s.size())
	{
		size_t end = s.find(sep, start);
		if (end == std::string::npos)
			end = s.size();
		if (end > start)
			out.push_back(s.substr(start, end - start));
		start = end + 1;
	}
	return out;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"BCH and Mercator series: exact terms, convergence "
	             "diagnosis, scenario reports and sweeps"};
	app.require_subcommand(1);

	auto *terms = app.add_subcommand("terms", "print homogeneous BCH terms");
	int max_degree = 4;
	std::string presentation = "log", format = "text";
	terms->add_option("--max-degree", max_degree, "highest degree N")
	    ->required()
	    ->check(CLI::Range(1, kMaxTruncationDegree));
	terms->add_option("--presentation", presentation)
	    ->check(CLI::IsMember({"log", "dynkin"}));
	terms->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

	auto *scenario = app.add_subcommand("scenario", "run scenario reports");
	std::string scenario_id, json_path;
	bool all = false, timing = false;
	DiagnosisConfig cfg;
	scenario->add_option("id", scenario_id, "scenario id")
	    ->check(CLI::IsMember(scenario_ids()));
	scenario->add_flag("--all", all, "run every registered scenario");
	scenario->add_option("--json", json_path, "write the report as JSON");
	scenario->add_option("--nmax", cfg.n_max, "maximum terms per series")
	    ->check(CLI::PositiveNumber);
	scenario->add_option("--tol", cfg.eps_abs, "term-norm tolerance")
	    ->check(CLI::PositiveNumber);
	scenario->add_flag("--timing", timing, "include runtime_ms in JSON");

	auto *sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
	std::string family, classifiers, out_path;
	std::vector<std::string> params, fixed;
	std::vector<double> from, to;
	std::vector<int> steps;
	int threads = 0;
	sweep->add_option("--family", family)
	    ->required()
	    ->check(CLI::IsMember(sweep_families()));
	sweep->add_option("--param", params, "swept parameter (repeatable)")
	    ->required();
	sweep->add_option("--from", from)->required();
	sweep->add_option("--to", to)->required();
	sweep->add_option("--steps", steps)->required();
	sweep->add_option("--classifiers", classifiers, "comma-separated list");
	sweep->add_option("--set", fixed, "fixed parameter NAME=VALUE (repeatable)");
	sweep->add_option("--out", out_path)->required();
	sweep->add_option("--threads", threads)->check(CLI::NonNegativeNumber);
	sweep->add_option("--nmax", cfg.n_max)->check(CLI::PositiveNumber);

	CLI11_PARSE(app, argc, argv);

	try
	{
		if (*terms)
			return cmd_terms(max_degree, presentation, format);

		if (*scenario)
		{
			if (all == !scenario_id.empty())
				throw CLI::ValidationError("scenario",
				                           "give exactly one of <id> or --all");
			auto reports = all ? run_all_scenarios(cfg)
			                   : std::vector{run_scenario(scenario_id, cfg)};
			return report(reports, json_path, timing);
		}

		SweepSpec spec;
		spec.family = family;
		spec.config = cfg;
		spec.threads = threads;
		if (from.size() != params.size() || to.size() != params.size() ||
		    steps.size() != params.size())
			throw std::invalid_argument(
			    "each --param needs its own --from, --to and --steps");
		for (size_t i = 0; i < params.size(); ++i)
			spec.ranges.push_back({params[i], from[i], to[i], steps[i]});
		for (auto const &kv : fixed)
		{
			auto eq = kv.find('=');
			if (eq == std::string::npos)
				throw std::invalid_argument(
				    fmt::format("--set expects NAME=VALUE, got '{}'", kv));
			spec.fixed[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
		}
		spec.classifiers = split(classifiers, ',');
		auto result = run_sweep(spec);
		std::ofstream f(out_path, std::ios::binary);
		if (!f)
			throw std::runtime_error(fmt::format("cannot write '{}'", out_path));
		f << result.csv;
		std::cout << fmt::format("{} rows written to {}; {} contradiction(s)\n",
		                         result.rows, out_path, result.contradictions);
		return result.contradictions == 0 ? 0 : 1;
	}
	catch (CLI::Error const &e)
	{
		return app.exit(e);
	}
	catch (std::exception const &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
}
