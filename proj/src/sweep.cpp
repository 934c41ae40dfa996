#include "bchlab/sweep.h"

#include "bchlab/closed_forms.h"
#include "bchlab/linalg.h"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <future>
#include <numbers>
#include <set>
#include <thread>

namespace bchlab {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

struct Family
{
	std::vector<std::string> params;
	std::vector<double> thresholds;
	std::vector<std::string> default_classifiers;
};

Family const &family(std::string const &name)
{
	static const std::map<std::string, Family> families = {
	    {"examBiagi-v",
	     {{"v"},
	      {-0.5 * std::numbers::ln2, two_pi, -two_pi},
	      {"bch_exact", "mercator_exact"}}},
	    {"example26-alpha-beta",
	     {{"re_alpha", "im_alpha", "re_beta", "im_beta"},
	      {two_pi, -two_pi},
	      {"bch_exact", "prolongation_defined"}}},
	};
	auto it = families.find(name);
	if (it == families.end())
		throw std::invalid_argument(fmt::format("unknown sweep family '{}'", name));
	return it->second;
}

std::string format_complex(cplx z)
{
	return fmt::format("{:.12g}{:+.12g}i", z.real(), z.imag());
}

struct PointInput
{
	std::vector<double> values; // in family parameter order
};

struct PointOutput
{
	std::vector<std::string> cells;
	bool contradiction = false;
};

PointOutput evaluate_point(std::string const &fam,
                           std::vector<std::string> const &classifiers,
                           PointInput const &in, DiagnosisConfig const &cfg)
{
	std::vector<CMatrix> m;
	cplx v;
	ClosedSumResult closed;
	if (fam == "examBiagi-v")
	{
		v = in.values[0];
		m = corpus_matrices("examBiagi", {v});
		closed = closed_sum_adjoint(m[0], m[1], v);
	}
	else
	{
		cplx alpha{in.values[0], in.values[1]};
		cplx beta{in.values[2], in.values[3]};
		v = alpha;
		m = corpus_matrices("biagibello", {alpha, beta});
		closed = prolongation_P(alpha, beta);
	}
	CMatrix const &x = m[0];
	CMatrix const &y = m[1];
	std::optional<CMatrix> w;
	auto product = [&]() -> CMatrix const & {
		if (!w)
			w = matrix_exp(x) * matrix_exp(y);
		return *w;
	};

	PointOutput out;
	std::map<std::string, Verdict> verdicts;
	for (auto const &c : classifiers)
	{
		if (c == "bch_numeric")
			verdicts[c] = diagnose_series(bch_terms_recursive(x, y), cfg).verdict;
		else if (c == "bch_exact")
			verdicts[c] = bch_classify_adjoint_family(v, y.is_zero()).verdict;
		else if (c == "mercator_numeric")
			verdicts[c] = diagnose_series(mercator_terms(product()), cfg).verdict;
		else if (c == "mercator_exact")
			verdicts[c] = mercator_classify_exact(product()).verdict;

		if (auto it = verdicts.find(c); it != verdicts.end())
			out.cells.push_back(std::string(1, verdict_letter(it->second)));
		else if (c == "log_exists")
		{
			// every invertible complex matrix has a complex logarithm
			bool real = product().is_real(0.0);
			out.cells.push_back(!real || real_log_exists_2x2(product()) ? "true"
			                                                            : "false");
		}
		else if (c == "prolongation_defined")
			out.cells.push_back(closed.at_pole ? "false" : "true");
	}

	auto clash = [&](char const *a, char const *b) {
		auto ia = verdicts.find(a), ib = verdicts.find(b);
		return ia != verdicts.end() && ib != verdicts.end() &&
		       contradicts(ia->second, ib->second);
	};
	out.contradiction = clash("bch_numeric", "bch_exact") ||
	                    clash("mercator_numeric", "mercator_exact");

	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j)
			out.cells.push_back(closed.value ? format_complex((*closed.value)(i, j))
			                                 : "pole");
	return out;
}

} // namespace

std::vector<std::string> sweep_families()
{
	return {"examBiagi-v", "example26-alpha-beta"};
}

std::vector<std::string> sweep_classifiers()
{
	return {"bch_numeric",    "bch_exact",  "mercator_numeric",
	        "mercator_exact", "log_exists", "prolongation_defined"};
}

std::vector<double> sweep_axis(ParamRange const &r,
                               std::vector<double> const &thresholds)
{
	if (r.steps < 2)
		throw std::invalid_argument(
		    fmt::format("parameter '{}': steps must be >= 2", r.name));
	if (r.from == r.to)
		throw std::invalid_argument(
		    fmt::format("parameter '{}': from must differ from to", r.name));
	std::vector<double> axis;
	for (int k = 0; k < r.steps; ++k)
		axis.push_back(k == r.steps - 1
		                   ? r.to
		                   : r.from + (r.to - r.from) * k / (r.steps - 1));
	double lo = std::min(r.from, r.to), hi = std::max(r.from, r.to);
	for (double t : thresholds)
		if (t > lo && t < hi)
			axis.push_back(t);
	if (r.from < r.to)
		std::sort(axis.begin(), axis.end());
	else
		std::sort(axis.begin(), axis.end(), std::greater<>());
	axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
	return axis;
}

SweepResult run_sweep(SweepSpec const &spec)
{
	Family const &fam = family(spec.family);
	std::vector<std::string> classifiers =
	    spec.classifiers.empty() ? fam.default_classifiers : spec.classifiers;
	auto known = sweep_classifiers();
	for (auto const &c : classifiers)
		if (std::find(known.begin(), known.end(), c) == known.end())
			throw std::invalid_argument(fmt::format("unknown classifier '{}'", c));
	if (spec.ranges.empty())
		throw std::invalid_argument("sweep needs at least one parameter range");

	// axis per family parameter: swept ranges or a single fixed value
	std::vector<std::vector<double>> axes;
	std::set<std::string> swept;
	for (auto const &r : spec.ranges)
	{
		if (std::find(fam.params.begin(), fam.params.end(), r.name) ==
		    fam.params.end())
			throw std::invalid_argument(fmt::format(
			    "family '{}' has no parameter '{}'", spec.family, r.name));
		if (!swept.insert(r.name).second)
			throw std::invalid_argument(
			    fmt::format("parameter '{}' swept twice", r.name));
	}
	for (auto const &[name, value] : spec.fixed)
	{
		if (std::find(fam.params.begin(), fam.params.end(), name) ==
		    fam.params.end())
			throw std::invalid_argument(fmt::format(
			    "family '{}' has no parameter '{}'", spec.family, name));
		if (swept.contains(name))
			throw std::invalid_argument(
			    fmt::format("parameter '{}' both swept and fixed", name));
	}
	for (auto const &p : fam.params)
	{
		auto r = std::find_if(spec.ranges.begin(), spec.ranges.end(),
		                      [&](ParamRange const &x) { return x.name == p; });
		if (r != spec.ranges.end())
			axes.push_back(sweep_axis(*r, fam.thresholds));
		else
		{
			auto f = spec.fixed.find(p);
			axes.push_back({f == spec.fixed.end() ? 0.0 : f->second});
		}
	}

	// grid in row-major order over the family parameters
	std::vector<PointInput> grid(1);
	for (auto const &axis : axes)
	{
		std::vector<PointInput> next;
		for (auto const &g : grid)
			for (double a : axis)
			{
				auto p = g;
				p.values.push_back(a);
				next.push_back(std::move(p));
			}
		grid = std::move(next);
	}

	std::vector<PointOutput> results(grid.size());
	int threads = spec.threads > 0
	                  ? spec.threads
	                  : std::max(1u, std::thread::hardware_concurrency());
	threads = std::min<int>(threads, static_cast<int>(grid.size()));
	std::vector<std::future<void>> jobs;
	for (int t = 0; t < threads; ++t)
		jobs.push_back(std::async(std::launch::async, [&, t] {
			for (size_t i = t; i < grid.size(); i += threads)
				results[i] = evaluate_point(spec.family, classifiers, grid[i],
				                            spec.config);
		}));
	for (auto &j : jobs)
		j.get();

	SweepResult out;
	std::string header;
	for (auto const &p : fam.params)
		header += p + ",";
	for (auto const &c : classifiers)
		header += c + ",";
	header += "closed_00,closed_01,closed_10,closed_11\n";
	out.csv = header;
	for (size_t i = 0; i < grid.size(); ++i)
	{
		std::string line;
		for (double a : grid[i].values)
			line += fmt::format("{:.17g},", a);
		for (size_t k = 0; k < results[i].cells.size(); ++k)
			line += results[i].cells[k] +
			        (k + 1 < results[i].cells.size() ? "," : "\n");
		out.csv += line;
		out.contradictions += results[i].contradiction ? 1 : 0;
		++out.rows;
	}
	return out;
}

} // namespace bchlab
