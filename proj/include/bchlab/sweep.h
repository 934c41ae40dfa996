#pragma once

#include "bchlab/series.h"

#include <map>
#include <string>
#include <vector>

namespace bchlab {

struct ParamRange
{
	std::string name;
	double from = 0.0;
	double to = 0.0;
	int steps = 2;
};

/**
 * Families and their parameters:
 *   examBiagi-v           v                                   (real)
 *   example26-alpha-beta  re_alpha, im_alpha, re_beta, im_beta
 * Parameters not swept take their value from `fixed` (default 0).
 * Classifiers: bch_numeric, bch_exact, mercator_numeric, mercator_exact,
 * log_exists, prolongation_defined.
 */
struct SweepSpec
{
	std::string family;
	std::vector<ParamRange> ranges;
	std::map<std::string, double> fixed;
	std::vector<std::string> classifiers;
	DiagnosisConfig config;
	int threads = 0; // 0: hardware concurrency
};

std::vector<std::string> sweep_families();
std::vector<std::string> sweep_classifiers();

/// Uniform grid from..to in `steps` points, plus every threshold lying
/// strictly inside, sorted in the direction of the range.
std::vector<double> sweep_axis(ParamRange const &r,
                               std::vector<double> const &thresholds = {});

struct SweepResult
{
	std::string csv;
	int rows = 0;
	/// points where a numeric and an exact classifier of the same series
	/// returned Converged and Diverged
	int contradictions = 0;
};

/// Throws std::invalid_argument for a malformed spec.
SweepResult run_sweep(SweepSpec const &spec);

} // namespace bchlab
