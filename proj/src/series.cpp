#include "bchlab/series.h"

#include "bchlab/bernoulli.h"
#include "bchlab/closed_forms.h"
#include "bchlab/linalg.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fmt/format.h>
#include <memory>
#include <numbers>

namespace bchlab {

TermGenerator mercator_terms(CMatrix const &w)
{
	auto u = std::make_shared<CMatrix>(w - CMatrix::identity(w.dim()));
	auto power = std::make_shared<CMatrix>(CMatrix::identity(w.dim()));
	auto n = std::make_shared<int>(0);
	return [u, power, n]() -> std::optional<CMatrix> {
		++*n;
		try
		{
			*power = *power * *u;
			double c = (*n % 2 == 1 ? 1.0 : -1.0) / *n;
			return *power * cplx(c);
		}
		catch (std::domain_error const &)
		{
			return std::nullopt;
		}
	};
}

TermGenerator bch_terms_symbolic(CMatrix const &x, CMatrix const &y,
                                 BchTermSet const &terms)
{
	auto n = std::make_shared<int>(0);
	return [x, y, &terms, n]() -> std::optional<CMatrix> {
		if (*n >= terms.max_degree)
			return std::nullopt;
		++*n;
		return evaluate(terms.z(*n), x, y);
	};
}

namespace {

// acc += [a, b] without temporaries
void add_commutator(CMatrix &acc, CMatrix const &a, CMatrix const &b)
{
	int n = acc.dim();
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
		{
			cplx s = 0.0;
			for (int k = 0; k < n; ++k)
				s += a(i, k) * b(k, j) - b(i, k) * a(k, j);
			acc(i, j) += s;
		}
}

class RecursiveBch
{
	CMatrix x_, y_, sum_, diff_;
	std::vector<CMatrix> z_;              // z_[k-1] = Z_k
	std::vector<std::vector<CMatrix>> s_; // s_[m][j], nested sums
	std::vector<double> kappa_;           // kappa_[p] = B_{2p}/(2p)!
	bool failed_ = false;

	double kappa(int p)
	{
		while (static_cast<int>(kappa_.size()) <= p)
		{
			int q = static_cast<int>(kappa_.size());
			kappa_.push_back(
			    q == 0 ? 1.0
			           : (bernoulli(2 * q, kAdjointBernoulliCap) / factorial(2 * q))
			                 .to_double());
		}
		return kappa_[p];
	}

	CMatrix const &s(int m, int j) const { return s_[m][j]; }

	// fills s_[m][n] for m = 0..n once Z_1..Z_n are known
	void extend_sums(int n)
	{
		int dim = x_.dim();
		if (s_.size() <= static_cast<size_t>(n))
			s_.resize(n + 1);
		for (int m = 0; m <= n; ++m)
			if (s_[m].size() <= static_cast<size_t>(n))
				s_[m].resize(n + 1, CMatrix::zero(dim));
		s_[0][n] = n == 0 ? sum_ : CMatrix::zero(dim);
		for (int m = 1; m <= n; ++m)
		{
			CMatrix acc = CMatrix::zero(dim);
			for (int k = 1; k <= n - m + 1; ++k)
			{
				CMatrix const &zk = z_[k - 1];
				CMatrix const &inner = s(m - 1, n - k);
				if (zk.is_zero() || inner.is_zero())
					continue;
				add_commutator(acc, zk, inner);
			}
			s_[m][n] = acc * cplx(1.0); // rejects non-finite entries
		}
	}

  public:
	RecursiveBch(CMatrix const &x, CMatrix const &y)
	    : x_(x), y_(y), sum_(x + y), diff_(x - y)
	{
		s_.resize(1);
		s_[0].push_back(sum_);
	}

	std::optional<CMatrix> next()
	{
		if (failed_)
			return std::nullopt;
		try
		{
			int n = static_cast<int>(z_.size());
			if (n == 0)
			{
				z_.push_back(sum_);
				return z_.back();
			}
			extend_sums(n);
			CMatrix acc = commutator(diff_, z_[n - 1]) * cplx(0.5);
			for (int p = 1; 2 * p <= n; ++p)
			{
				double k = kappa(p);
				if (k == 0.0 || s(2 * p, n).is_zero())
					continue;
				acc += s(2 * p, n) * cplx(k);
			}
			z_.push_back(acc * cplx(1.0 / (n + 1)));
			return z_.back();
		}
		catch (std::domain_error const &)
		{
			failed_ = true;
			return std::nullopt;
		}
	}
};

} // namespace

TermGenerator bch_terms_recursive(CMatrix const &x, CMatrix const &y)
{
	if (x.dim() != y.dim())
		throw std::invalid_argument("X and Y dimensions differ");
	auto state = std::make_shared<RecursiveBch>(x, y);
	return [state]() { return state->next(); };
}

TermGenerator bch_terms_adjoint(CMatrix const &x, CMatrix const &y,
                                std::complex<double> v)
{
	auto n = std::make_shared<int>(0);
	return [x, y, v, n]() -> std::optional<CMatrix> {
		++*n;
		if (*n == 1)
			return x + y;
		try
		{
			return y * zn_under_adjoint_relation(*n, v);
		}
		catch (std::domain_error const &)
		{
			return std::nullopt;
		}
	};
}

CMatrix partial_sum(TermGenerator next, int n_terms)
{
	std::optional<CMatrix> sum;
	for (int n = 1; n <= n_terms; ++n)
	{
		auto t = next();
		if (!t)
			throw std::out_of_range(
			    fmt::format("term source exhausted after {} terms", n - 1));
		sum = sum ? *sum + *t : *t;
	}
	if (!sum)
		throw std::invalid_argument("partial sum needs at least one term");
	return *sum;
}

CMatrix mercator_partial(CMatrix const &w, int n_terms)
{
	if (n_terms < 1)
		throw std::invalid_argument("mercator_partial needs N >= 1");
	return partial_sum(mercator_terms(w), n_terms);
}

CMatrix bch_partial(CMatrix const &x, CMatrix const &y, int n_terms,
                    BchTermSet const &terms)
{
	if (n_terms > terms.max_degree)
		throw std::out_of_range(
		    fmt::format("N = {} beyond available terms (max degree {})", n_terms,
		                terms.max_degree));
	return partial_sum(bch_terms_symbolic(x, y, terms), n_terms);
}

nlohmann::json to_json(DiagnosisConfig const &c)
{
	return {{"n_max", c.n_max},
	        {"window", c.window},
	        {"eps_abs", c.eps_abs},
	        {"eps_sum", c.eps_sum},
	        {"delta_floor", c.delta_floor},
	        {"overflow_guard", c.overflow_guard},
	        {"trend_block", c.trend_block},
	        {"trend_slack", c.trend_slack}};
}

std::string_view to_string(Verdict v)
{
	switch (v)
	{
	case Verdict::Converged:
		return "Converged";
	case Verdict::Diverged:
		return "Diverged";
	default:
		return "Inconclusive";
	}
}

std::string_view to_string(Classifier c)
{
	switch (c)
	{
	case Classifier::Numeric:
		return "Numeric";
	case Classifier::ExactEigen:
		return "ExactEigen";
	default:
		return "ExactAdjointFamily";
	}
}

char verdict_letter(Verdict v) { return to_string(v)[0]; }

bool contradicts(Verdict a, Verdict b)
{
	return (a == Verdict::Converged && b == Verdict::Diverged) ||
	       (a == Verdict::Diverged && b == Verdict::Converged);
}

nlohmann::json matrix_to_json(CMatrix const &m)
{
	auto rows = nlohmann::json::array();
	for (int i = 0; i < m.dim(); ++i)
	{
		auto row = nlohmann::json::array();
		for (int j = 0; j < m.dim(); ++j)
			row.push_back({m(i, j).real(), m(i, j).imag()});
		rows.push_back(row);
	}
	return rows;
}

nlohmann::json to_json(SeriesDiagnosis const &d)
{
	nlohmann::json j = {{"verdict", to_string(d.verdict)},
	                    {"classifier", to_string(d.classifier)},
	                    {"terms_used", d.terms_used}};
	if (d.last_term_norm)
		j["last_term_norm"] = *d.last_term_norm;
	if (d.tail_window_sum)
		j["tail_window_sum"] = *d.tail_window_sum;
	if (d.window_floor)
		j["window_floor"] = *d.window_floor;
	if (d.window_trend)
		j["window_trend"] = *d.window_trend;
	if (d.partial_sum)
		j["partial_sum"] = matrix_to_json(*d.partial_sum);
	if (!d.note.empty())
		j["note"] = d.note;
	return j;
}

SeriesDiagnosis diagnose_series(TermGenerator next, DiagnosisConfig const &cfg)
{
	if (cfg.n_max < 1 || cfg.window < 1)
		throw std::invalid_argument("diagnosis needs n_max >= 1 and window >= 1");
	SeriesDiagnosis d;
	d.classifier = Classifier::Numeric;

	std::deque<double> norms;
	std::deque<CMatrix> sums;
	std::optional<CMatrix> sum;
	auto finish = [&](Verdict v, std::string note) {
		d.verdict = v;
		d.note = std::move(note);
		if (!norms.empty())
		{
			d.last_term_norm = norms.back();
			double tail = 0.0;
			for (double x : norms)
				tail += x;
			d.tail_window_sum = tail;
		}
		if (v == Verdict::Converged)
			d.partial_sum = sum;
		return d;
	};

	for (int n = 1; n <= cfg.n_max; ++n)
	{
		auto t = next();
		if (!t)
			return finish(Verdict::Inconclusive,
			              fmt::format("term source exhausted after {} terms",
			                          n - 1));
		d.terms_used = n;
		double tn = operator_norm(*t);
		try
		{
			sum = sum ? *sum + *t : *t;
		}
		catch (std::domain_error const &)
		{
			norms.push_back(tn);
			return finish(Verdict::Diverged, "partial sum overflowed");
		}
		norms.push_back(tn);
		sums.push_back(*sum);
		if (static_cast<int>(norms.size()) > cfg.window)
		{
			norms.pop_front();
			sums.pop_front();
		}

		double sn = operator_norm(*sum);
		if (sn > cfg.overflow_guard || tn > cfg.overflow_guard)
			return finish(Verdict::Diverged,
			              fmt::format("norm exceeded overflow guard at n = {}",
			                          n));
		if (static_cast<int>(norms.size()) < cfg.window)
			continue;

		bool small = std::all_of(norms.begin(), norms.end(),
		                         [&](double x) { return x <= cfg.eps_abs; });
		if (small)
		{
			double spread = 0.0;
			for (auto const &s : sums)
				spread = std::max(spread, operator_norm(s - *sum));
			if (spread <= cfg.eps_sum)
				return finish(Verdict::Converged,
				              fmt::format("tail below {:g} over {} terms",
				                          cfg.eps_abs, cfg.window));
		}

		// block maxima over the trailing window
		int block = std::clamp(cfg.trend_block, 1, cfg.window);
		std::vector<double> maxima;
		for (int start = 0; start + block <= cfg.window; start += block)
			maxima.push_back(*std::max_element(norms.begin() + start,
			                                   norms.begin() + start + block));
		double floor = *std::min_element(maxima.begin(), maxima.end());
		double trend = maxima.front() > 0 ? maxima.back() / maxima.front() : 0.0;
		d.window_floor = floor;
		d.window_trend = trend;
		if (floor >= cfg.delta_floor && trend >= 1.0 - cfg.trend_slack)
			return finish(Verdict::Diverged,
			              fmt::format("term norms stay above {:g} without "
			                          "decaying over the last {} terms",
			                          cfg.delta_floor, cfg.window));
	}
	return finish(Verdict::Inconclusive,
	              fmt::format("undecided after {} terms", cfg.n_max));
}

SeriesDiagnosis mercator_classify_exact(CMatrix const &w)
{
	SeriesDiagnosis d;
	d.classifier = Classifier::ExactEigen;
	int n = w.dim();
	CMatrix u = w - CMatrix::identity(n);
	auto clusters = eigen_small(u);

	constexpr double boundary_tol = 1e-10;
	bool diverged = false, ambiguous = false, extrapolated = false;
	std::string why;
	for (auto const &c : clusters)
	{
		double r = std::abs(c.value);
		if (std::abs(c.value + 1.0) <= boundary_tol)
		{
			diverged = true;
			why += fmt::format("eigenvalue z = -1 of W - I; ");
		}
		else if (r > 1.0 + boundary_tol)
		{
			diverged = true;
			why += fmt::format("|z| = {:.6g} > 1; ", r);
		}
		else if (r >= 1.0 - boundary_tol)
		{
			if (c.ambiguous)
				ambiguous = true;
			else if (!c.diagonalizable)
			{
				diverged = true;
				extrapolated = true;
				why += fmt::format("defective block with |z| = 1 at z = {:.6g}"
				                   "{:+.6g}i; ",
				                   c.value.real(), c.value.imag());
			}
		}
	}

	if (diverged)
	{
		d.verdict = Verdict::Diverged;
		d.note = why;
		if (extrapolated)
			d.note += "boundary rule for defective blocks extrapolates the "
			          "scalar derivative series";
		return d;
	}
	if (ambiguous)
	{
		d.verdict = Verdict::Inconclusive;
		d.note = "diagonalizability of a boundary eigenvalue is ambiguous "
		         "within tolerance";
		return d;
	}
	d.verdict = Verdict::Converged;
	d.partial_sum = primary_function(w, log_jet);
	d.note = "sum is the principal logarithm of W";
	return d;
}

SeriesDiagnosis bch_classify_adjoint_family(std::complex<double> v,
                                            bool y_is_zero)
{
	SeriesDiagnosis d;
	d.classifier = Classifier::ExactAdjointFamily;
	if (y_is_zero)
	{
		d.verdict = Verdict::Converged;
		d.note = "Y = 0, series reduces to X";
		return d;
	}
	double r = std::abs(v);
	if (r < 2.0 * std::numbers::pi)
	{
		d.verdict = Verdict::Converged;
		d.note = fmt::format("|v| = {:.6g} < 2 pi", r);
	}
	else
	{
		d.verdict = Verdict::Diverged;
		d.note = fmt::format("|v| = {:.6g} >= 2 pi", r);
	}
	return d;
}

SeriesDiagnosis bch_classify_adjoint_family(CMatrix const &x, CMatrix const &y,
                                            std::complex<double> v)
{
	auto closed = closed_sum_adjoint(x, y, v);
	auto d = bch_classify_adjoint_family(v, y.is_zero());
	if (d.verdict == Verdict::Converged)
		d.partial_sum = closed.value;
	return d;
}

bool real_log_exists_2x2(CMatrix const &a)
{
	if (a.dim() != 2)
		throw std::invalid_argument("real_log_exists_2x2 needs a 2x2 matrix");
	double scale = a.max_abs();
	if (!a.is_real(1e-14 * std::max(1.0, scale)))
		throw std::invalid_argument("real_log_exists_2x2 needs real entries");
	double det = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)).real();
	if (std::abs(det) <= 1e-14 * std::max(1.0, scale * scale))
		throw std::domain_error("no logarithm of singular element");

	auto clusters = eigen_small(a);
	double imag_tol = 1e-12 * std::max(1.0, scale);
	for (auto const &c : clusters)
	{
		if (std::abs(c.value.imag()) > imag_tol || c.value.real() > 0)
			continue;
		// a negative real eigenvalue: only lambda I (lambda < 0) survives
		return c.multiplicity == 2 && c.diagonalizable;
	}
	return true;
}

} // namespace bchlab
