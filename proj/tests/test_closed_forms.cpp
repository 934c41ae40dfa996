#include "bchlab/closed_forms.h"

#include "bchlab/linalg.h"
#include "bchlab/series.h"

#include <cmath>
#include <gtest/gtest.h>
#include <numbers>
#include <random>

using namespace bchlab;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
const cplx tpi{0.0, two_pi};

long double todd_oracle(long double v) { return v / -std::expm1(-v); }

// displayed formula in extended precision, away from the degenerate set
long double vbv_oracle(long double u, long double v)
{
	long double eu = std::exp(u), ev = std::exp(v);
	return (u * eu * (ev - 1) - v * ev * (eu - 1)) / (u * v * (eu - ev));
}

} // namespace

TEST(Todd, Examples)
{
	EXPECT_EQ(*todd(0.0).value, cplx(1.0));
	EXPECT_TRUE(todd(tpi).at_pole());
	EXPECT_TRUE(todd(-3.0 * tpi).at_pole());
	EXPECT_TRUE(todd(tpi + 1e-9).at_pole());
	EXPECT_FALSE(todd(tpi + 1e-6).at_pole());
	EXPECT_NEAR(todd(1.0).value->real(), 1.581976706869326, 1e-15);
}

TEST(Todd, MatchesExtendedPrecision)
{
	for (double v : {-20.0, -3.0, -1e-3, 1e-5, 1e-3, 0.3, 2.0, 6.2, 30.0})
		EXPECT_NEAR(todd(v).value->real(), double(todd_oracle(v)),
		            4e-16 * std::abs(double(todd_oracle(v))))
		    << v;
}

TEST(Todd, ComplexSatisfiesReflection)
{
	// psi(v) - psi(-v) = v
	for (cplx v : {cplx(0.3, 1.0), cplx(-2.0, 5.0), cplx(0.0, 3.0), cplx(1e-5, 2e-5)})
		EXPECT_LE(std::abs(*todd(v).value - *todd(-v).value - v), 1e-14);
}

TEST(VbvF, Examples)
{
	EXPECT_NEAR(std::abs(*vbv_f(0.0, 1.0).value - (*todd(1.0).value - 1.0)), 0.0,
	            1e-15);
	EXPECT_EQ(*vbv_f(0.0, 0.0).value, cplx(0.5));
	double e = std::exp(1.0);
	double expect = (e * (1.0 / e - 1.0) + (e - 1.0) / e) / -(e - 1.0 / e);
	EXPECT_NEAR(vbv_f(1.0, -1.0).value->real(), expect, 1e-15);
}

TEST(VbvF, ConsistentWithTodd)
{
	for (double v : {0.3, 1.0, 2.0, -1.0})
		EXPECT_LE(std::abs(1.0 + v * *vbv_f(0.0, v).value - *todd(v).value), 1e-12);
	// symmetric branch
	EXPECT_LE(std::abs(*vbv_f(0.7, 0.0).value - *vbv_f(0.0, 0.7).value), 1e-15);
}

TEST(VbvF, LimitsAreContinuous)
{
	for (auto [u, v] : {std::pair{1e-4, 0.8}, {0.5, 0.5 + 1e-5}, {1e-3, 2e-3},
	                    {-2.0, -2.0 + 1e-5}})
	{
		double near = double(vbv_oracle(u, v));
		EXPECT_NEAR(vbv_f(u, v).value->real(), near, 1e-6) << u << " " << v;
	}
	// explicit limit on the diagonal against the displayed formula nearby
	EXPECT_NEAR(vbv_f(1.3, 1.3).value->real(), double(vbv_oracle(1.3, 1.3 + 1e-7)),
	            1e-6);
	EXPECT_NEAR(vbv_f(0.0, 0.0).value->real(), double(vbv_oracle(1e-4, -2e-4)),
	            1e-4);
}

TEST(VbvF, DegenerateSetIsPole)
{
	auto r = vbv_f(1.0, cplx(1.0, two_pi));
	EXPECT_TRUE(r.at_pole());
	EXPECT_NE(r.pole_description.find("degenerate"), std::string::npos);
	EXPECT_TRUE(vbv_f(0.0, tpi).at_pole());
}

TEST(ClosedSum, Examples)
{
	auto m = corpus_matrices("examBiagi", {1.0});
	auto z = closed_sum_adjoint(m[0], m[1], 1.0);
	ASSERT_TRUE(z.value);
	CMatrix expect{{-1.0, *todd(1.0).value}, {0.0, -2.0}};
	EXPECT_LE(operator_norm(*z.value - expect), 1e-15);

	CMatrix a{{1.0, 2.0}, {0.0, 1.0}};
	EXPECT_EQ(*closed_sum_adjoint(a, a, 0.0).value, a + a);

	auto bb = corpus_matrices("biagibello", {tpi, tpi});
	EXPECT_TRUE(bb[1].is_zero());
	auto x = closed_sum_adjoint(bb[0], bb[1], tpi);
	ASSERT_TRUE(x.value);
	EXPECT_EQ(*x.value, bb[0]);
}

TEST(ClosedSum, PoleAndViolation)
{
	auto bb = corpus_matrices("biagibello", {tpi, 1.0});
	auto p = closed_sum_adjoint(bb[0], bb[1], tpi);
	EXPECT_TRUE(p.at_pole);
	EXPECT_FALSE(p.value);

	auto m = corpus_matrices("examBiagi", {1.0});
	try
	{
		closed_sum_adjoint(m[0], m[1], 2.0);
		FAIL();
	}
	catch (RelationViolated const &e)
	{
		EXPECT_NEAR(e.residual, 1.0, 1e-14);
		EXPECT_NE(std::string(e.what()).find("relation violated"), std::string::npos);
	}
}

TEST(ClosedSum, IsALogarithmEvenWhereSeriesDiverges)
{
	for (double v : {-3.0, -1.0, 0.5, 1.0, 6.2, 7.0})
	{
		auto m = corpus_matrices("examBiagi", {v});
		auto z = closed_sum_adjoint(m[0], m[1], v);
		CMatrix w = matrix_exp(m[0]) * matrix_exp(m[1]);
		EXPECT_LE(operator_norm(matrix_exp(*z.value) - w), 1e-8) << v;
	}
}

TEST(Prolongation, Examples)
{
	auto p = prolongation_P(1.0, 0.0);
	EXPECT_EQ(*p.value, (CMatrix{{-1.0, 0.0}, {0.0, -2.0}}));
	auto q = prolongation_P(tpi, tpi);
	ASSERT_TRUE(q.value);
	EXPECT_EQ(*q.value, (CMatrix{{-tpi, 0.0}, {0.0, -2.0 * tpi}}));
	EXPECT_TRUE(prolongation_P(tpi, 1.0).at_pole);
	// alpha = 0: entry beta (beta - 2 pi i)
	EXPECT_LE(std::abs((*prolongation_P(0.0, 2.0).value)(0, 1) - 2.0 * (2.0 - tpi)),
	          1e-14);
}

TEST(Prolongation, AgreesWithSeriesInsideD)
{
	std::mt19937 rng(4);
	std::uniform_real_distribution<double> u(-4.0, 4.0);
	int checked = 0;
	while (checked < 12)
	{
		cplx alpha(u(rng), u(rng)), beta(u(rng), u(rng));
		if (std::abs(alpha) > 5.5)
			continue;
		auto m = corpus_matrices("biagibello", {alpha, beta});
		auto d = diagnose_series(bch_terms_recursive(m[0], m[1]));
		ASSERT_EQ(d.verdict, Verdict::Converged);
		auto p = prolongation_P(alpha, beta);
		EXPECT_LE(operator_norm(*d.partial_sum - *p.value), 1e-6);
		++checked;
	}
}

TEST(Prolongation, PathWitness)
{
	std::vector<double> mags;
	for (double eps : {1e-2, 1e-3, 1e-4})
	{
		cplx e = prolongation_path_entry(eps);
		mags.push_back(std::abs(e));
		// leading behaviour -4 pi^2 / eps
		EXPECT_NEAR(e.real() * eps / (-4.0 * std::numbers::pi * std::numbers::pi), 1.0,
		            0.05);
		// cross-check against the generic formula slightly off the path
		cplx alpha = tpi + eps * eps, beta = tpi + eps;
		cplx generic = alpha * beta * (beta - tpi) / -expm1(-alpha);
		EXPECT_LE(std::abs(generic - e), 1e-6 * std::abs(e));
	}
	EXPECT_GT(std::abs(mags[0] - mags[1]), 0.1);
	EXPECT_GT(std::abs(mags[1] - mags[2]), 0.1);
	EXPECT_GT(std::abs(mags[0] - mags[2]), 0.1);
}

TEST(RegionD, Examples)
{
	EXPECT_TRUE(region_D_membership(tpi, tpi));
	EXPECT_FALSE(region_D_membership(7.0, 1.0));
	EXPECT_TRUE(region_D_membership(7.0, 0.0));
	EXPECT_TRUE(region_D_membership(1.0, 1.0));
	EXPECT_FALSE(region_D_membership(two_pi, 1.0));
	EXPECT_FALSE(example26_series_sum(7.0, 1.0));
	EXPECT_EQ(*example26_series_sum(tpi, tpi),
	          corpus_matrices("biagibello", {tpi, tpi})[0]);
}

TEST(Group, Examples)
{
	GroupElement zero{}, b{{0.3, -1.0, 2.0}};
	EXPECT_EQ(group_mul(zero, b), b);
	EXPECT_EQ(group_mul(b, zero), b);
	auto p = group_mul({{1.0, 0.0, 0.0}}, {{0.0, 1.0, 1.0}});
	EXPECT_DOUBLE_EQ(p.coords[1], std::exp(two_pi));
	EXPECT_DOUBLE_EQ(p.coords[2], std::exp(1.0));

	auto e = group_exp({1.0, 1.0, 1.0});
	EXPECT_DOUBLE_EQ(e.coords[1], std::expm1(two_pi) / two_pi);
	EXPECT_DOUBLE_EQ(e.coords[2], std::exp(1.0) - 1.0);
	EXPECT_EQ(group_exp({0.0, 2.0, 3.0}), (GroupElement{{0.0, 2.0, 3.0}}));
	EXPECT_EQ(group_exp({1.0, 0.0, 0.0}), (GroupElement{{1.0, 0.0, 0.0}}));
	auto l = group_log(e);
	for (int k = 0; k < 3; ++k)
		EXPECT_NEAR(l[k], 1.0, 1e-12);
}

TEST(Group, Axioms)
{
	std::mt19937 rng(8);
	std::uniform_real_distribution<double> u(-1.0, 1.0);
	for (int trial = 0; trial < 100; ++trial)
	{
		GroupElement a{{u(rng), u(rng), u(rng)}}, b{{u(rng), u(rng), u(rng)}},
		    c{{u(rng), u(rng), u(rng)}};
		auto l = group_mul(group_mul(a, b), c), r = group_mul(a, group_mul(b, c));
		for (int k = 0; k < 3; ++k)
			EXPECT_NEAR(l.coords[k], r.coords[k], 1e-12 * std::max(1.0, std::abs(l.coords[k])));
	}
	for (double x1 : {-1.0, 0.0, 1e-12, 0.5})
	{
		std::array<double, 3> xi{x1, 0.7, -1.3};
		auto back = group_log(group_exp(xi));
		GroupElement g{{x1, 0.7, -1.3}};
		auto again = group_exp(group_log(g));
		for (int k = 0; k < 3; ++k)
		{
			EXPECT_NEAR(back[k], xi[k], 1e-10);
			EXPECT_NEAR(again.coords[k], g.coords[k], 1e-10);
		}
	}
}

TEST(Corpus, Matrices)
{
	auto m = corpus_matrices("examBiagi", {1.0});
	EXPECT_EQ(m[0], (CMatrix{{-1.0, 0.0}, {0.0, -2.0}}));
	EXPECT_EQ(m[1], (CMatrix{{0.0, 1.0}, {0.0, 0.0}}));
	auto eg = corpus_matrices("eggert");
	ASSERT_EQ(eg.size(), 3u);
	EXPECT_EQ(eg[0](1, 1), cplx(two_pi));
	auto wei = corpus_matrices("wei");
	EXPECT_EQ(wei[0](0, 1), cplx(-5.0 * std::numbers::pi / 4.0));
	EXPECT_EQ(corpus_matrices("scalar", {1.0, 2.0})[1].dim(), 1);
	EXPECT_THROW(corpus_matrices("nope"), std::invalid_argument);
	EXPECT_THROW(corpus_matrices("examBiagi"), std::invalid_argument);
	EXPECT_EQ(corpus_names().size(), 6u);
}
