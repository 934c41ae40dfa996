#pragma once

#include "bchlab/rational.h"

#include <stdexcept>

namespace bchlab {

inline constexpr int kDefaultBernoulliCap = 128;

struct DegreeCapExceeded : std::out_of_range
{
	using std::out_of_range::out_of_range;
};

/**
 * Exact Bernoulli number B_n defined by the generating function
 *
 *     z / (e^z - 1) = sum_n B_n z^n / n!
 *
 * so B_1 = -1/2 (NOT the +1/2 convention). Values are memoized in a
 * process-wide table; concurrent callers are safe. Throws DegreeCapExceeded
 * when n > cap. The cap only bounds the request, larger caps may be passed
 * explicitly by callers that need them.
 */
Rational bernoulli(int n, int cap = kDefaultBernoulliCap);

struct BoundaryRatio
{
	double value;     // |B_{2n}| (2 pi)^{2n} / (2n)!
	double minus_two; // value - 2, taken before rounding to double
};

/// Evaluated from the exact B_{2n} with `bits` of binary precision
/// (256 bits is about 77 decimal digits). Tends to 2 as n grows.
BoundaryRatio bernoulli_boundary_ratio(int n, int bits = 256);

} // namespace bchlab
