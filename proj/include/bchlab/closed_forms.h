#pragma once

#include "bchlab/cmatrix.h"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bchlab {

/// Inputs closer than this to a pole are refused rather than evaluated.
inline constexpr double kPoleRadius = 1e-8;

struct ScalarResult
{
	std::optional<cplx> value; // empty at a pole
	std::string pole_description;

	bool at_pole() const { return !value.has_value(); }
};

struct ClosedSumResult
{
	std::optional<CMatrix> value; // empty at a pole
	bool at_pole = false;
	std::string pole_description;
};

struct RelationViolated : std::runtime_error
{
	double residual;
	RelationViolated(std::string const &what, double r)
	    : std::runtime_error(what), residual(r)
	{}
};

/// e^z - 1 without cancellation for small |z|.
cplx expm1(cplx z);

/// Todd's function v / (1 - e^{-v}); psi(0) = 1, poles at 2 pi i k, k != 0.
ScalarResult todd(cplx v);

/**
 * f(u, v) = (u e^u (e^v - 1) - v e^v (e^u - 1)) / (u v (e^u - e^v)).
 * On u = 0 the limit (psi(v) - 1)/v is used (symmetric for v = 0), on
 * u = v the limit (e^u - 1 - u)/u^2. Points with e^u = e^v and u != v have
 * no finite limit established and are reported as poles.
 */
ScalarResult vbv_f(cplx u, cplx v);

/// ||[X, Y] - v Y||
double adjoint_relation_residual(CMatrix const &x, CMatrix const &y, cplx v);

/// X + psi(v) Y for a pair with [X, Y] = v Y. Throws RelationViolated if
/// the residual exceeds 1e-9 (|X| |Y| + 1).
ClosedSumResult closed_sum_adjoint(CMatrix const &x, CMatrix const &y, cplx v);

/// [[-a, a b (b - 2 pi i) / (1 - e^{-a})], [0, -2a]]
ClosedSumResult prolongation_P(cplx alpha, cplx beta);

/// (1,2) entry of P along (2 pi i + eps^2, 2 pi i + eps), written with
/// e^{-2 pi i} = 1 so small eps does not lose the denominator.
cplx prolongation_path_entry(double eps);

/// {|a| < 2 pi, b not in {0, 2 pi i}} union (C x {0, 2 pi i})
bool region_D_membership(cplx alpha, cplx beta);

/// Sum of the BCH series for (X(a), Y(b)) on the region D; empty outside.
std::optional<CMatrix> example26_series_sum(cplx alpha, cplx beta);

/// Element of the group R^3 with
/// x . y = (x1 + y1, x2 + e^{2 pi x1} y2, x3 + e^{x1} y3).
struct GroupElement
{
	std::array<double, 3> coords{};
	friend bool operator==(GroupElement const &, GroupElement const &) = default;
};

GroupElement group_mul(GroupElement const &a, GroupElement const &b);
GroupElement group_exp(std::array<double, 3> const &xi);
std::array<double, 3> group_log(GroupElement const &g);

/**
 * Named matrices of the worked examples:
 *   "examBiagi"    {v}        -> {x(v), y}
 *   "biagibello"   {a, b}     -> {X(a), Y(b)}
 *   "eggert"       {}         -> {A, B, C}   (commutator table checked)
 *   "wei"          {}         -> {W, Y}
 *   "prop24-item5" {}         -> {A, B = 0}
 *   "scalar"       {x, y}     -> 1x1 {x, y}
 */
std::vector<CMatrix> corpus_matrices(std::string_view name,
                                     std::vector<cplx> const &params = {});

std::vector<std::string> corpus_names();

} // namespace bchlab
