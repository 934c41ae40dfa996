#include "bchlab/closed_forms.h"

#include "bchlab/linalg.h"

#include <cmath>
#include <fmt/format.h>
#include <numbers>

namespace bchlab {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
const cplx two_pi_i{0.0, two_pi};

// nearest nonzero k with |z - 2 pi i k| < radius, or 0
long near_lattice(cplx z, double radius)
{
	long k = std::lround(z.imag() / two_pi);
	if (k == 0)
		return 0;
	return std::abs(z - cplx(0.0, two_pi * double(k))) < radius ? k : 0;
}

// (psi(v) - 1) / v, assuming psi(v) is finite
cplx todd_difference_quotient(cplx v)
{
	if (std::abs(v) < 1e-4)
	{
		cplx v2 = v * v;
		return 0.5 + v / 12.0 - v * v2 / 720.0 + v * v2 * v2 / 30240.0;
	}
	return (*todd(v).value - 1.0) / v;
}

// (e^u - 1 - u) / u^2
cplx diagonal_limit(cplx u)
{
	if (std::abs(u) < 1e-3)
	{
		cplx s = 0.0, term = 0.5;
		for (int k = 0; k < 8; ++k)
		{
			s += term;
			term *= u / double(k + 3);
		}
		return s;
	}
	return (expm1(u) - u) / (u * u);
}

} // namespace

cplx expm1(cplx z)
{
	double a = z.real(), b = z.imag();
	double s = std::sin(0.5 * b);
	return {std::expm1(a) * std::cos(b) - 2.0 * s * s, std::exp(a) * std::sin(b)};
}

ScalarResult todd(cplx v)
{
	if (long k = near_lattice(v, kPoleRadius); k != 0)
		return {std::nullopt, fmt::format("pole of psi at 2*pi*i*{}", k)};
	if (v == 0.0)
		return {cplx(1.0), {}};
	if (std::abs(v) < 1e-4)
	{
		cplx v2 = v * v;
		return {1.0 + v / 2.0 + v2 / 12.0 - v2 * v2 / 720.0 +
		            v2 * v2 * v2 / 30240.0,
		        {}};
	}
	return {v / -expm1(-v), {}};
}

ScalarResult vbv_f(cplx u, cplx v)
{
	bool u0 = std::abs(u) < kPoleRadius, v0 = std::abs(v) < kPoleRadius;
	if (u0 && v0)
		return {cplx(0.5), {}};
	if (u0 || v0)
	{
		cplx w = u0 ? v : u;
		if (todd(w).at_pole())
			return {std::nullopt,
			        fmt::format("f(0, w) has a pole at w = {}i", w.imag())};
		return {todd_difference_quotient(w), {}};
	}
	if (std::abs(u - v) < kPoleRadius)
		return {diagonal_limit(u), {}};
	if (long k = near_lattice(u - v, kPoleRadius); k != 0)
		return {std::nullopt,
		        fmt::format("degenerate set e^u = e^v with u - v = 2*pi*i*{}; "
		                    "no finite limit established",
		                    k)};

	cplx eu = std::exp(u), ev = std::exp(v);
	cplx num = u * eu * expm1(v) - v * ev * expm1(u);
	cplx den = u * v * (eu - ev);
	return {num / den, {}};
}

double adjoint_relation_residual(CMatrix const &x, CMatrix const &y, cplx v)
{
	return operator_norm(commutator(x, y) - y * v);
}

ClosedSumResult closed_sum_adjoint(CMatrix const &x, CMatrix const &y, cplx v)
{
	double residual = adjoint_relation_residual(x, y, v);
	double bound = 1e-9 * (operator_norm(x) * operator_norm(y) + 1.0);
	if (residual > bound)
		throw RelationViolated(
		    fmt::format("relation violated: |[X,Y] - vY| = {:.3e} > {:.3e}",
		                residual, bound),
		    residual);
	if (y.is_zero())
		return {x, false, {}};
	auto psi = todd(v);
	if (psi.at_pole())
		return {std::nullopt, true, psi.pole_description};
	return {x + y * *psi.value, false, {}};
}

ClosedSumResult prolongation_P(cplx alpha, cplx beta)
{
	cplx entry = 0.0;
	bool numerator_vanishes =
	    std::abs(beta) < 1e-12 || std::abs(beta - two_pi_i) < 1e-12;
	if (!numerator_vanishes)
	{
		auto psi = todd(alpha);
		if (psi.at_pole())
			return {std::nullopt, true,
			        "P singular: " + psi.pole_description +
			            " with beta outside {0, 2*pi*i}"};
		entry = *psi.value * beta * (beta - two_pi_i);
	}
	return {CMatrix{{-alpha, entry}, {0.0, -2.0 * alpha}}, false, {}};
}

cplx prolongation_path_entry(double eps)
{
	cplx alpha = two_pi_i + eps * eps;
	cplx beta = two_pi_i + eps;
	// 1 - e^{-alpha} = 1 - e^{-eps^2}
	return alpha * beta * eps / -std::expm1(-eps * eps);
}

bool region_D_membership(cplx alpha, cplx beta)
{
	bool beta_special =
	    std::abs(beta) < 1e-12 || std::abs(beta - two_pi_i) < 1e-12;
	return beta_special || std::abs(alpha) < two_pi;
}

std::optional<CMatrix> example26_series_sum(cplx alpha, cplx beta)
{
	if (!region_D_membership(alpha, beta))
		return std::nullopt;
	auto p = prolongation_P(alpha, beta);
	return p.value;
}

GroupElement group_mul(GroupElement const &a, GroupElement const &b)
{
	auto const &x = a.coords;
	auto const &y = b.coords;
	return {{x[0] + y[0], x[1] + std::exp(two_pi * x[0]) * y[1],
	         x[2] + std::exp(x[0]) * y[2]}};
}

namespace {

// (e^t - 1) / t, 1 at t = 0
double phi(double t) { return t == 0.0 ? 1.0 : std::expm1(t) / t; }

} // namespace

GroupElement group_exp(std::array<double, 3> const &xi)
{
	return {{xi[0], xi[1] * phi(two_pi * xi[0]), xi[2] * phi(xi[0])}};
}

std::array<double, 3> group_log(GroupElement const &g)
{
	auto const &c = g.coords;
	return {c[0], c[1] / phi(two_pi * c[0]), c[2] / phi(c[0])};
}

namespace {

void expect_params(std::string_view name, std::vector<cplx> const &params,
                   size_t n)
{
	if (params.size() != n)
		throw std::invalid_argument(fmt::format(
		    "corpus '{}' takes {} parameter(s), got {}", name, n, params.size()));
}

} // namespace

std::vector<CMatrix> corpus_matrices(std::string_view name,
                                     std::vector<cplx> const &params)
{
	using std::numbers::pi;
	if (name == "examBiagi")
	{
		expect_params(name, params, 1);
		cplx v = params[0];
		return {CMatrix{{-v, 0.0}, {0.0, -2.0 * v}},
		        CMatrix{{0.0, 1.0}, {0.0, 0.0}}};
	}
	if (name == "biagibello")
	{
		expect_params(name, params, 2);
		cplx a = params[0], b = params[1];
		return {CMatrix{{-a, 0.0}, {0.0, -2.0 * a}},
		        CMatrix{{0.0, b * (b - two_pi_i)}, {0.0, 0.0}}};
	}
	if (name == "eggert")
	{
		expect_params(name, params, 0);
		CMatrix a{{0.0, 0.0, 0.0}, {0.0, two_pi, 0.0}, {0.0, 0.0, 1.0}};
		CMatrix b{{0.0, 0.0, 0.0}, {-two_pi, 0.0, 0.0}, {0.0, 0.0, 0.0}};
		CMatrix c{{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {-1.0, 0.0, 0.0}};
		double r1 = operator_norm(commutator(a, b) - b * two_pi);
		double r2 = operator_norm(commutator(a, c) - c);
		double r3 = operator_norm(commutator(b, c));
		if (std::max({r1, r2, r3}) > 1e-12)
			throw std::logic_error("eggert matrices violate commutator table");
		return {a, b, c};
	}
	if (name == "wei")
	{
		expect_params(name, params, 0);
		return {CMatrix{{0.0, -5.0 * pi / 4.0}, {5.0 * pi / 4.0, 0.0}},
		        CMatrix{{0.0, 1.0}, {0.0, 0.0}}};
	}
	if (name == "prop24-item5")
	{
		expect_params(name, params, 0);
		double l2 = std::numbers::ln2;
		return {CMatrix{{l2, -two_pi}, {two_pi, l2}}, CMatrix::zero(2)};
	}
	if (name == "scalar")
	{
		expect_params(name, params, 2);
		return {CMatrix{{params[0]}}, CMatrix{{params[1]}}};
	}
	throw std::invalid_argument(fmt::format("unknown corpus entry '{}'", name));
}

std::vector<std::string> corpus_names()
{
	return {"examBiagi", "biagibello", "eggert", "wei", "prop24-item5",
	        "scalar"};
}

} // namespace bchlab
