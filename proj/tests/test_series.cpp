#include "bchlab/series.h"

#include "bchlab/closed_forms.h"
#include "bchlab/linalg.h"

#include <cmath>
#include <gtest/gtest.h>
#include <numbers>
#include <random>

using namespace bchlab;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

CMatrix random_matrix(std::mt19937 &rng, int dim, double scale)
{
	std::normal_distribution<double> g;
	CMatrix m(dim);
	for (int i = 0; i < dim; ++i)
		for (int j = 0; j < dim; ++j)
			m(i, j) = cplx(g(rng), g(rng));
	return m * cplx(scale / operator_norm(m));
}

TermGenerator from_list(std::vector<CMatrix> terms)
{
	auto i = std::make_shared<size_t>(0);
	return [terms, i]() -> std::optional<CMatrix> {
		if (*i >= terms.size())
			return std::nullopt;
		return terms[(*i)++];
	};
}

// constant-magnitude terms where every other one vanishes
TermGenerator sparse_constant(double magnitude)
{
	auto n = std::make_shared<int>(0);
	return [magnitude, n]() -> std::optional<CMatrix> {
		++*n;
		return CMatrix{{*n % 2 ? cplx(magnitude) : cplx(0.0)}};
	};
}

std::vector<CMatrix> exam(double v) { return corpus_matrices("examBiagi", {v}); }

CMatrix exp_product(CMatrix const &x, CMatrix const &y)
{
	return matrix_exp(x) * matrix_exp(y);
}

} // namespace

TEST(MercatorPartial, Examples)
{
	EXPECT_TRUE(mercator_partial(CMatrix::identity(2), 7).is_zero());
	CMatrix y{{0.0, 1.0}, {0.0, 0.0}};
	for (int n : {1, 2, 10})
		EXPECT_EQ(mercator_partial(CMatrix::identity(2) + y, n), y);
	EXPECT_THROW(mercator_partial(CMatrix::identity(2), 0), std::invalid_argument);
}

TEST(MercatorPartial, AlternatingHarmonicOracle)
{
	double h = 0.0;
	for (int k = 1; k <= 200; ++k)
		h += (k % 2 ? 1.0 : -1.0) / k;
	CMatrix s = mercator_partial(CMatrix::identity(2) * cplx(2.0), 200);
	EXPECT_NEAR(s(0, 0).real(), h, 1e-14);
	EXPECT_NEAR(h, std::numbers::ln2, 1.0 / 200);
}

TEST(BchPartial, Examples)
{
	auto terms = make_term_set(10, Presentation::FormalLog);
	CMatrix x{{1.0, 2.0}, {3.0, 4.0}};
	for (int n : {1, 5, 10})
		EXPECT_LE(operator_norm(bch_partial(x, CMatrix::zero(2), n, terms) - x), 1e-14);

	auto m = exam(1.0);
	CMatrix expect{{-1.0, 1.0 / (1.0 - std::exp(-1.0))}, {0.0, -2.0}};
	EXPECT_LE(operator_norm(bch_partial(m[0], m[1], 10, terms) - expect), 1e-6);

	auto item5 = corpus_matrices("prop24-item5");
	EXPECT_LE(operator_norm(bch_partial(item5[0], item5[1], 10, terms) - item5[0]),
	          1e-14);
	EXPECT_THROW(bch_partial(x, x, 11, terms), std::out_of_range);
}

TEST(BchRecursive, MatchesSymbolicTerms)
{
	auto terms = make_term_set(10, Presentation::FormalLog);
	std::mt19937 rng(21);
	for (int trial = 0; trial < 5; ++trial)
	{
		CMatrix x = random_matrix(rng, 3, 0.7), y = random_matrix(rng, 3, 0.4);
		auto rec = bch_terms_recursive(x, y);
		for (int n = 1; n <= 10; ++n)
		{
			CMatrix sym = evaluate(terms.z(n), x, y);
			EXPECT_LE(operator_norm(*rec() - sym), 1e-13) << "n = " << n;
		}
	}
}

TEST(BchRecursive, MatchesAdjointFamilyToHighDegree)
{
	for (double v : {0.5, 3.0, -2.0})
	{
		auto m = exam(v);
		auto rec = bch_terms_recursive(m[0], m[1]);
		auto adj = bch_terms_adjoint(m[0], m[1], v);
		for (int n = 1; n <= 80; ++n)
		{
			CMatrix a = *rec(), b = *adj();
			EXPECT_LE(operator_norm(a - b), 1e-12 * std::max(1.0, operator_norm(b)))
			    << "v = " << v << ", n = " << n;
		}
	}
}

TEST(PartialSum, ExhaustedSource)
{
	EXPECT_THROW(partial_sum(from_list({CMatrix::identity(1)}), 2), std::out_of_range);
}

TEST(Diagnose, ConvergentAdjointFamily)
{
	auto m = exam(1.0);
	auto d = diagnose_series(bch_terms_recursive(m[0], m[1]));
	EXPECT_EQ(d.verdict, Verdict::Converged);
	EXPECT_EQ(d.classifier, Classifier::Numeric);
	ASSERT_TRUE(d.partial_sum);
	CMatrix expect = m[0] + m[1] * (1.0 / (1.0 - std::exp(-1.0)));
	EXPECT_LE(operator_norm(*d.partial_sum - expect), 1e-12);
	EXPECT_LE(*d.last_term_norm, DiagnosisConfig{}.eps_abs);
}

TEST(Diagnose, EggertPairDiverges)
{
	auto m = corpus_matrices("eggert");
	auto d = diagnose_series(bch_terms_recursive(m[0], m[1]));
	EXPECT_EQ(d.verdict, Verdict::Diverged);
	EXPECT_GE(*d.window_floor, DiagnosisConfig{}.delta_floor);
	EXPECT_FALSE(d.partial_sum);
}

TEST(Diagnose, IdentityMercator)
{
	auto d = diagnose_series(mercator_terms(CMatrix::identity(2)));
	EXPECT_EQ(d.verdict, Verdict::Converged);
	EXPECT_TRUE(d.partial_sum->is_zero());
	EXPECT_EQ(d.terms_used, DiagnosisConfig{}.window);
}

TEST(Diagnose, BoundaryMercatorLeftToExactClassifier)
{
	CMatrix two = CMatrix::identity(2) * cplx(2.0);
	EXPECT_EQ(diagnose_series(mercator_terms(two)).verdict, Verdict::Inconclusive);
	auto exact = mercator_classify_exact(two);
	EXPECT_EQ(exact.verdict, Verdict::Converged);
	EXPECT_LE(operator_norm(*exact.partial_sum -
	                        CMatrix::identity(2) * cplx(std::numbers::ln2)),
	          1e-15);
}

TEST(Diagnose, SparseNonVanishingTermsDiverge)
{
	auto d = diagnose_series(sparse_constant(1.0));
	EXPECT_EQ(d.verdict, Verdict::Diverged);
	EXPECT_EQ(d.terms_used, DiagnosisConfig{}.window);
}

TEST(Diagnose, OverflowGuard)
{
	auto d = diagnose_series(mercator_terms(CMatrix::identity(1) * cplx(4.0)));
	EXPECT_EQ(d.verdict, Verdict::Diverged);
	EXPECT_LT(d.terms_used, DiagnosisConfig{}.window);
	EXPECT_NE(d.note.find("overflow"), std::string::npos);
}

TEST(Diagnose, ExhaustedSourceIsInconclusive)
{
	auto d = diagnose_series(from_list({CMatrix::identity(2)}));
	EXPECT_EQ(d.verdict, Verdict::Inconclusive);
	EXPECT_EQ(d.terms_used, 1);
}

TEST(Diagnose, SlowDecayIsInconclusive)
{
	// 1/n^2 terms: decaying but far above tolerance after 400 terms
	auto n = std::make_shared<int>(0);
	TermGenerator g = [n]() -> std::optional<CMatrix> {
		++*n;
		return CMatrix{{cplx(1.0 / (double(*n) * *n))}};
	};
	EXPECT_EQ(diagnose_series(g).verdict, Verdict::Inconclusive);
}

TEST(Diagnose, DivergedOnlyWithStatedEvidence)
{
	DiagnosisConfig cfg;
	for (double v : {-3.0, -1.0, 0.5, 6.0, 6.2, 2 * std::numbers::pi, 7.0, 9.0})
	{
		auto m = exam(v);
		for (auto d : {diagnose_series(bch_terms_recursive(m[0], m[1]), cfg),
		               diagnose_series(mercator_terms(exp_product(m[0], m[1])), cfg)})
		{
			if (d.verdict == Verdict::Diverged)
				EXPECT_TRUE(d.note.find("overflow") != std::string::npos ||
				            *d.window_floor >= cfg.delta_floor);
			if (d.verdict == Verdict::Converged)
				EXPECT_LE(*d.last_term_norm, cfg.eps_abs);
		}
	}
}

TEST(MercatorExact, Examples)
{
	auto w = [](double v) {
		auto m = exam(v);
		return exp_product(m[0], m[1]);
	};
	EXPECT_EQ(mercator_classify_exact(w(-1.0)).verdict, Verdict::Diverged);
	EXPECT_EQ(mercator_classify_exact(w(-0.5 * std::numbers::ln2)).verdict,
	          Verdict::Converged);
	EXPECT_EQ(mercator_classify_exact(w(-0.35)).verdict, Verdict::Diverged);
	EXPECT_EQ(mercator_classify_exact(w(7.0)).verdict, Verdict::Converged);
	EXPECT_EQ(mercator_classify_exact(CMatrix::zero(2)).verdict, Verdict::Diverged);
}

TEST(MercatorExact, DefectiveBoundaryBlock)
{
	auto d = mercator_classify_exact(CMatrix{{2.0, 1.0}, {0.0, 2.0}});
	EXPECT_EQ(d.verdict, Verdict::Diverged);
	EXPECT_NE(d.note.find("extrapolat"), std::string::npos);
	// inside the disc a defective block is fine
	EXPECT_EQ(mercator_classify_exact(CMatrix{{1.5, 1.0}, {0.0, 1.5}}).verdict,
	          Verdict::Converged);
}

TEST(MercatorExact, AmbiguousBoundaryIsInconclusive)
{
	auto d = mercator_classify_exact(CMatrix{{2.0, 1e-8}, {0.0, 2.0}});
	EXPECT_EQ(d.verdict, Verdict::Inconclusive);
}

TEST(MercatorExact, SumIsALogarithm)
{
	for (double v : {-0.3, -0.2, 0.0, 0.5, 1.0, 3.0, 7.0})
	{
		auto m = exam(v);
		CMatrix w = exp_product(m[0], m[1]);
		auto d = mercator_classify_exact(w);
		ASSERT_EQ(d.verdict, Verdict::Converged) << v;
		EXPECT_LE(operator_norm(matrix_exp(*d.partial_sum) - w), 1e-8 * operator_norm(w));
	}
}

TEST(MercatorExact, NumericNeverContradicts)
{
	for (double v : {-1.0, -0.2, 0.5, 1.0, 6.0, 7.0})
	{
		auto m = exam(v);
		CMatrix w = exp_product(m[0], m[1]);
		auto exact = mercator_classify_exact(w);
		auto numeric = diagnose_series(mercator_terms(w));
		EXPECT_FALSE(contradicts(exact.verdict, numeric.verdict)) << v;
		if (numeric.verdict == Verdict::Converged)
			EXPECT_LE(operator_norm(*numeric.partial_sum - *exact.partial_sum), 1e-9);
	}
}

TEST(AdjointFamily, Examples)
{
	EXPECT_EQ(bch_classify_adjoint_family(1.0, false).verdict, Verdict::Converged);
	EXPECT_EQ(bch_classify_adjoint_family(two_pi, false).verdict, Verdict::Diverged);
	EXPECT_EQ(bch_classify_adjoint_family(cplx(0.0, two_pi), false).verdict,
	          Verdict::Diverged);
	EXPECT_EQ(bch_classify_adjoint_family(cplx(0.0, two_pi), true).verdict,
	          Verdict::Converged);
	EXPECT_EQ(bch_classify_adjoint_family(1.0, false).classifier,
	          Classifier::ExactAdjointFamily);

	auto m = exam(1.0);
	auto d = bch_classify_adjoint_family(m[0], m[1], 1.0);
	ASSERT_TRUE(d.partial_sum);
	EXPECT_NEAR((*d.partial_sum)(0, 1).real(), 1.0 / (1.0 - std::exp(-1.0)), 1e-14);
	EXPECT_THROW(bch_classify_adjoint_family(m[0], m[1], 2.0), RelationViolated);
}

TEST(RealLog, Examples)
{
	EXPECT_TRUE(real_log_exists_2x2(CMatrix::identity(2) * cplx(2.0)));
	EXPECT_TRUE(real_log_exists_2x2(-CMatrix::identity(2)));
	// the rotation generator is such a logarithm
	CMatrix rot{{0.0, -std::numbers::pi}, {std::numbers::pi, 0.0}};
	EXPECT_LE(operator_norm(matrix_exp(rot) + CMatrix::identity(2)), 1e-14);

	auto wei = corpus_matrices("wei");
	CMatrix w = exp_product(wei[0], wei[1]);
	EXPECT_LT(w.trace().real(), -2.0);
	EXPECT_FALSE(real_log_exists_2x2(w));

	EXPECT_FALSE(real_log_exists_2x2(CMatrix{{-1.0, 0.0}, {0.0, -2.0}}));
	EXPECT_FALSE(real_log_exists_2x2(CMatrix{{-1.0, 1.0}, {0.0, -1.0}}));
	EXPECT_TRUE(real_log_exists_2x2(CMatrix{{0.0, -1.0}, {1.0, 0.0}}));
	EXPECT_TRUE(real_log_exists_2x2(CMatrix{{1.0, 5.0}, {0.0, 3.0}}));
}

TEST(RealLog, Errors)
{
	try
	{
		real_log_exists_2x2(CMatrix{{1.0, 2.0}, {2.0, 4.0}});
		FAIL();
	}
	catch (std::domain_error const &e)
	{
		EXPECT_STREQ(e.what(), "no logarithm of singular element");
	}
	EXPECT_THROW(real_log_exists_2x2(CMatrix{{cplx(0, 1), 0.0}, {0.0, 1.0}}),
	             std::invalid_argument);
	EXPECT_THROW(real_log_exists_2x2(CMatrix::identity(3)), std::invalid_argument);
}

TEST(DiagnosisJson, Fields)
{
	auto m = exam(1.0);
	auto j = to_json(diagnose_series(bch_terms_recursive(m[0], m[1])));
	EXPECT_EQ(j["verdict"], "Converged");
	EXPECT_EQ(j["classifier"], "Numeric");
	EXPECT_TRUE(j.contains("last_term_norm"));
	EXPECT_TRUE(j.contains("tail_window_sum"));
	EXPECT_EQ(j["partial_sum"].size(), 2u);
	EXPECT_EQ(to_json(DiagnosisConfig{})["n_max"], 400);
	EXPECT_EQ(verdict_letter(Verdict::Inconclusive), 'I');
}

TEST(Diagnose, WindowShorterThanTrendBlock)
{
	DiagnosisConfig cfg;
	cfg.window = 3;
	cfg.n_max = 10;
	auto d = diagnose_series(sparse_constant(1.0), cfg);
	EXPECT_NE(d.verdict, Verdict::Converged);
	cfg.window = 0;
	EXPECT_THROW(diagnose_series(sparse_constant(1.0), cfg), std::invalid_argument);
}
